use ncplane::coeffs::rat;
use ncplane::curvezoo::{degenerate_ext_pairs, DegenerateCase};
use ncplane::Result;

pub fn run_example() -> Result<()> {
    let cases = [
        DegenerateCase::SimpleLine { delta: rat(1, 1) },
        DegenerateCase::TwoLines { e: rat(2, 1), delta: rat(1, 1) },
    ];
    for case in &cases {
        let out = degenerate_ext_pairs(case, &rat(3, 1))?;
        println!("{}", out.relation);
        for (p, q) in &out.verified {
            println!("  Ext1(k({p}), k({q})) != 0");
        }
        for r in &out.rejected {
            println!("  rejected ({}) -> ({}): {}", r.pair.0, r.pair.1, r.reason);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("degenerate_pairs");
}
