use ncplane::extcalc::ideal_membership_bounded;
use ncplane::freealg::FreeAlgebra;
use ncplane::Result;

pub fn run_example() -> Result<()> {
    let alg = FreeAlgebra::plane(Vec::<String>::new());
    for (text, square) in [
        ("x^2*y - y*x^2", false),
        ("x^2*y - y*x^2", true),
        ("[x,y]*[x,y]", true),
        ("x*[x,y]*y*[x,y]", true),
    ] {
        let f = alg.parse(text)?;
        let ideal = if square { "([x,y]^2)" } else { "([x,y])" };
        println!("{text} in {ideal}: {}", ideal_membership_bounded(&f, square, 6)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("commutator_membership");
}
