// Simples of the quantum plane at a cube root of unity and the relation-map orbit.

use ncplane::coeffs::{Assignment, ComplexApprox};
use ncplane::curvezoo::{quantum_orbit, quantum_simples};
use ncplane::freealg::{FreeAlgebra, Point};
use ncplane::rep2::simple_n_check;
use ncplane::{Error, Result};
use num_traits::Zero;

pub fn run_example() -> Result<()> {
    let q = ComplexApprox::root_of_unity(3, 1);
    let rep = quantum_simples(3, ComplexApprox::real(2.0), ComplexApprox::real(1.0))?;
    let f = FreeAlgebra::plane(["q"]).parse("x*y - q*y*x")?;
    let mut params = Assignment::new();
    params.insert("q".to_string(), q);
    let residual = f.eval_matrix(&rep, &params)?;
    println!("X =\n{}\nY =\n{}", rep.mats[0], rep.mats[1]);
    println!("relation holds: {}, simple: {}", residual.is_zero(), simple_n_check(&rep));

    let orbit = quantum_orbit(&q, &Point::new(vec![ComplexApprox::zero(), ComplexApprox::real(1.0)]), 12)?;
    for p in &orbit {
        println!("  {p}");
    }
    if orbit.len() != 3 || !residual.is_zero() {
        return Err(Error::Invariant("quantum plane checks failed".into()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("quantum_plane");
}
