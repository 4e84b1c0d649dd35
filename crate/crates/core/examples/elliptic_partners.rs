use ncplane::coeffs::{rat, Rational};
use ncplane::curvezoo::{
    elliptic_add, elliptic_collinearity_check, elliptic_no_short_cycles, elliptic_partners, elliptic_sample_points,
    EllipticConfig, EllipticPoint,
};
use ncplane::freealg::Point;
use ncplane::{Error, Result};

/// `y² = x³ − x` with and without the commutator term.
pub fn run_example() -> Result<()> {
    let flat = EllipticConfig::new(rat(-1, 1), rat(0, 1), rat(0, 1))?;
    let p = Point::<Rational>::parse("0,0")?;
    let parts = elliptic_partners(&flat, &p)?;
    println!("partners of ({p}): ({}), ({}), D = {}", parts.q1, parts.q2, parts.d);
    let sum = elliptic_add(&flat, &EllipticPoint::Affine(parts.q1.clone()), &EllipticPoint::Affine(parts.q2.clone()))?;
    match &sum {
        EllipticPoint::Affine(r) => println!("Q1 + Q2 = ({r})"),
        EllipticPoint::Infinity => println!("Q1 + Q2 = O"),
    }
    if sum != EllipticPoint::Affine(p.clone()) {
        return Err(Error::Invariant("Q1 + Q2 differs from P".into()));
    }

    let bent = EllipticConfig::new(rat(-1, 1), rat(0, 1), rat(1, 2))?;
    println!("{}", bent.polynomial());
    let samples = elliptic_sample_points(&bent, 5);
    let mut collinear = true;
    for s in &samples {
        collinear &= elliptic_collinearity_check(&bent, s)?;
    }
    let no_cycles = elliptic_no_short_cycles(&bent, &samples)?;
    println!("collinearity on samples: {collinear}; no short cycles: {no_cycles}");
    if !(collinear && no_cycles) {
        return Err(Error::Invariant("elliptic checks failed".into()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("elliptic_partners");
}
