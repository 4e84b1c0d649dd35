use ncplane::coeffs::rat;
use ncplane::curvezoo::{classify_quadric, QuadricCoeffs, QuadricTag};
use ncplane::{Error, Result};

pub fn run_example() -> Result<()> {
    // (λ1, λ2, δ, e, f, g) for λ1 x² + λ2 y² + δ[x,y] + e x + f y + g
    let cases = [
        ([1, 1, 2, 0, 0, -1], QuadricTag::Smooth),
        ([1, 1, 1, 0, 0, 0], QuadricTag::QuantumPlane),
        ([1, 0, 1, 0, 0, -4], QuadricTag::TwoLines),
        ([0, 0, 1, 3, 0, 0], QuadricTag::SimpleLine),
        ([0, 0, 1, 0, 0, 1], QuadricTag::Weyl),
    ];
    for (c, expect) in cases {
        let coeffs = QuadricCoeffs::new(c.map(|v| rat(v, 1)));
        let class = classify_quadric(&coeffs)?;
        println!("{} : {} ~ {}", coeffs.polynomial(), class.tag, class.normal_form);
        if let Some(q) = class.quantum_parameter() {
            println!("  q = {q}");
        }
        if class.tag != expect {
            return Err(Error::Invariant(format!("expected {expect}, got {}", class.tag)));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quadric_classification");
}
