use ncplane::coeffs::{Assignment, Rational};
use ncplane::extcalc::{ext1_dim_points, jacobi_matrix, ExtOptions};
use ncplane::freealg::Point;
use ncplane::ncdiff::BasePoint;
use ncplane::{freealg::FreeAlgebra, Error, Result};

pub fn run_example() -> Result<()> {
    let alg = FreeAlgebra::plane(Vec::<String>::new());
    let f = alg.parse("x*y - 2*y*x")?;
    let fs = [f];
    let none = Assignment::new();
    let p = Point::<Rational>::parse("0,1")?;
    let j = jacobi_matrix(&fs, &alg, &BasePoint::Numeric(p.0.clone()))?;
    println!("J(p) = [{}, {}]", j.entries[0][0], j.entries[0][1]);

    let mut dims = Vec::new();
    for q in ["0,1/2", "0,2", "0,1", "0,0"] {
        let q = Point::<Rational>::parse(q)?;
        let d = ext1_dim_points(&fs, &p, &q, &none, ExtOptions::default())?;
        println!("dim Ext1(k({p}), k({q})) = {d}");
        dims.push(d);
    }
    if dims != [1, 0, 1, 0] {
        return Err(Error::Invariant(format!("unexpected dimensions {dims:?}")));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("ext_between_points");
}
