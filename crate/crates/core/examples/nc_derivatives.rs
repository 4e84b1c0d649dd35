// Left decomposition of a relation at a rational point and at a symbolic one.

use ncplane::coeffs::rat;
use ncplane::freealg::FreeAlgebra;
use ncplane::ncdiff::{left_decompose, BasePoint, SymbolicPoint};
use ncplane::{Error, Result};

pub fn run_example() -> Result<()> {
    let alg = FreeAlgebra::plane(Vec::<String>::new());
    let f = alg.parse("x^2*y - y")?;

    let at = BasePoint::Numeric(vec![rat(-1, 1), rat(2, 1)]);
    let dec = left_decompose(&f, &at)?;
    println!("f = {f}, f(p) = {}", dec.constant);
    for (name, d) in alg.gen_names().iter().zip(&dec.components) {
        println!("D_{name}(f; p) = {d}");
    }
    if dec.reconstruct()? != f.lift(dec.components[0].algebra())? {
        return Err(Error::Invariant("numeric decomposition does not reconstruct f".into()));
    }

    let sym = BasePoint::Symbolic(SymbolicPoint::fresh(&alg));
    let dec = left_decompose(&f, &sym)?;
    println!("at (u1, u2): D_x = {}, D_y = {}", dec.components[0], dec.components[1]);
    if dec.reconstruct()? != f.lift(dec.components[0].algebra())? {
        return Err(Error::Invariant("symbolic decomposition does not reconstruct f".into()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("nc_derivatives");
}
