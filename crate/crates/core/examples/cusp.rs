// The cusp `y² = x³`: partner points, the versal family and its special fibre.

use ncplane::coeffs::{rat, Assignment, ComplexApprox};
use ncplane::curvezoo::{cusp_partner, cusp_special_fibre_simple, cusp_versal_check};
use ncplane::extcalc::relation_ideal;
use ncplane::freealg::{FreeAlgebra, Point};
use ncplane::{Error, Result};

pub fn run_example() -> Result<()> {
    let f = FreeAlgebra::plane(Vec::<String>::new()).parse("y^2 - x^3")?;
    let ideal = relation_ideal(&f)?;
    let p = Point::new(vec![ComplexApprox::real(4.0), ComplexApprox::real(8.0)]);
    for r in cusp_partner(&p)? {
        let ok = ideal.contains(&p, &r, &Assignment::new())?;
        println!("({p}) -> ({r}): {ok}");
        if !ok {
            return Err(Error::Invariant("partner outside the relation".into()));
        }
    }
    let versal = cusp_versal_check();
    let special = cusp_special_fibre_simple(&rat(0, 1))?;
    println!("versal family deforms the relation: {versal}; special fibre simple: {special}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cusp");
}
