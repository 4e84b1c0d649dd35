// Ext¹ between a 2-dimensional simple and point modules of `xy + yx`.

use ncplane::coeffs::{rat, Assignment};
use ncplane::curvezoo::quantum_simples_exact;
use ncplane::extcalc::{ext1_dim_points, ext1_general, ExtOptions};
use ncplane::freealg::{FreeAlgebra, MatrixRep, Point};
use ncplane::{Error, Result};

pub fn run_example() -> Result<()> {
    let f = FreeAlgebra::plane(Vec::<String>::new()).parse("x*y + y*x")?;
    let fs = [f];
    let none = Assignment::new();
    let opts = ExtOptions::default();
    let v = quantum_simples_exact(rat(1, 1), rat(1, 1))?;
    let p = Point::from_rationals(&[rat(0, 1), rat(1, 1)]);
    let q = Point::from_rationals(&[rat(0, 1), rat(-1, 1)]);

    let self_ext = ext1_general(&fs, &v, &v, &none, opts)?;
    let to_point = ext1_general(&fs, &v, &MatrixRep::from_point(&p), &none, opts)?;
    let points = ext1_general(&fs, &MatrixRep::from_point(&p), &MatrixRep::from_point(&q), &none, opts)?;
    println!("dim Ext1(V, V) = {self_ext}");
    println!("dim Ext1(V, k(p)) = {to_point}");
    println!("dim Ext1(k(p), k(q)) = {points} (point formula: {})", ext1_dim_points(&fs, &p, &q, &none, opts)?);
    if points != ext1_dim_points(&fs, &p, &q, &none, opts)? {
        return Err(Error::Invariant("general and point formulas disagree".into()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ext_between_modules");
}
