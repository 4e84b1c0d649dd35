// Cayley-Hamilton reduction of the δ-circle and its simple locus.

use ncplane::freealg::FreeAlgebra;
use ncplane::rep2::{simp2_system, Simp2Verdict};
use ncplane::Result;

pub fn run_example() -> Result<()> {
    let f = FreeAlgebra::plane(["d"]).parse("x^2 + y^2 - 1 + d*[x,y]")?;
    let sys = simp2_system(&f)?;
    for (i, c) in sys.equations.iter().enumerate() {
        println!("c{} = {c}", i + 1);
    }
    println!("formanek = {}", sys.formanek);

    let plain = FreeAlgebra::plane(Vec::<String>::new()).parse("x*y + y*x - 1")?;
    let restricted = simp2_system(&plain)?.restrict()?;
    for (name, value) in &restricted.solved {
        println!("{name} = {value}");
    }
    match restricted.verdict()? {
        Simp2Verdict::Empty { reason } => println!("no simples: {reason}"),
        Simp2Verdict::Locus { formanek, .. } => println!("simple where {formanek} != 0"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("trace_reduction");
}
