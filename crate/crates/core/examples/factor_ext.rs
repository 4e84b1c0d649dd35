// Extensions across the factors of `f = g·h`, and the quasipolynomial criterion.

use ncplane::coeffs::{int, Assignment, CoefPoly, ParamCtx, Rational};
use ncplane::extcalc::{ext_quasipoly, factor_ext_check};
use ncplane::freealg::{FreeAlgebra, Point};
use ncplane::Result;

pub fn run_example() -> Result<()> {
    let alg = FreeAlgebra::plane(Vec::<String>::new());
    let g = alg.parse("x - 1")?;
    let h = alg.parse("y")?;
    let on_h: Vec<Point<Rational>> = ["0,0", "2,0", "-3,0"].iter().map(|p| Point::parse(p)).collect::<Result<_>>()?;
    let on_g: Vec<Point<Rational>> = ["1,1", "1,-2"].iter().map(|p| Point::parse(p)).collect::<Result<_>>()?;
    println!("Ext1 nonzero from C_h to C_g: {}", factor_ext_check(&g, &h, &on_h, &on_g, &Assignment::new())?);

    let ctx = ParamCtx::new(["z"]);
    let shift = [&CoefPoly::var(&ctx, "z")? + &CoefPoly::constant(&ctx, int(1))];
    for (p, q) in [(0, -1), (0, 1)] {
        println!("shift z+1, p = {p}, q = {q}: {}", ext_quasipoly(&shift, &[int(p)], &[int(q)], false)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("factor_ext");
}
