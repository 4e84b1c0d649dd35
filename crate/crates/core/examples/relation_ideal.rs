use ncplane::coeffs::{Assignment, Rational};
use ncplane::extcalc::relation_ideal;
use ncplane::freealg::{FreeAlgebra, Point};
use ncplane::{Error, Result};

pub fn run_example() -> Result<()> {
    let f = FreeAlgebra::plane(Vec::<String>::new()).parse("x*y - 2*y*x")?;
    let r = relation_ideal(&f)?;
    println!("g1 = {}\ng2 = {}", r.gens[0], r.gens[1]);
    let p = Point::<Rational>::parse("0,1")?;
    let none = Assignment::new();
    for (q, expect) in [("0,1/2", true), ("0,2", false)] {
        let got = r.contains(&p, &Point::parse(q)?, &none)?;
        println!("((0,1), ({q})) in R: {got}");
        if got != expect {
            return Err(Error::Invariant(format!("pair with ({q}) misclassified")));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("relation_ideal");
}
