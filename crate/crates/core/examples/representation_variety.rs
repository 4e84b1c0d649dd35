use ncplane::freealg::FreeAlgebra;
use ncplane::rep2::rep_variety_ideal;
use ncplane::{Error, Result};

/// Commuting 2x2 matrices: the four entries of the generic commutator.
pub fn run_example() -> Result<()> {
    let f = FreeAlgebra::plane(Vec::<String>::new()).parse("x*y - y*x")?;
    let (ctx, eqs) = rep_variety_ideal(&[f], 2)?;
    println!("{} coordinates: {}", ctx.len(), ctx.names().join(", "));
    for e in &eqs {
        println!("{e} = 0");
    }
    if eqs.len() != 4 || ctx.len() != 8 {
        return Err(Error::Invariant("expected 4 equations in 8 unknowns".into()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("representation_variety");
}
