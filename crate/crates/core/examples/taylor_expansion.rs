use ncplane::freealg::FreeAlgebra;
use ncplane::ncdiff::{taylor_additive_check, taylor_expand_centered, taylor_sum, SymbolicPoint};
use ncplane::{Error, Result};

/// Centered expansion of `x*y*x + 2*y^2` with the sum and additivity checks.
pub fn run_example() -> Result<()> {
    let f = FreeAlgebra::plane(Vec::<String>::new()).parse("x*y*x + 2*y^2")?;
    let centre = SymbolicPoint::fresh(f.algebra());
    let terms = taylor_expand_centered(&f, &centre)?;
    for t in &terms {
        println!("D{:?} = {}", t.indices, t.coefficient);
    }
    let target = terms[0].term.algebra().clone();
    let sums = taylor_sum(&terms)? == f.lift(&target)?;
    let additive = taylor_additive_check(&f)?;
    println!("sum equals f: {sums}, additive: {additive}");
    if !(sums && additive) {
        return Err(Error::Invariant("taylor identities failed".into()));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("taylor_expansion");
}
