use ncplane::selftest::run_all;
use ncplane::{Error, Result};

pub fn run_example() -> Result<()> {
    let reports = run_all();
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed > 0 {
        return Err(Error::Invariant(format!("{failed} criteria failed")));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("acceptance_suite");
}
