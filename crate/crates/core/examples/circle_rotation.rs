use ncplane::coeffs::{rat, Rational};
use ncplane::curvezoo::quadric_rotation_map;
use ncplane::freealg::Point;
use ncplane::{Error, Result};
use num_traits::One;

/// Iterates the rotation of the δ-circle on a rational point and stays on the circle.
pub fn run_example() -> Result<()> {
    let delta = rat(1, 2);
    let mut u: Point<Rational> = Point::from_rationals(&[rat(3, 5), rat(4, 5)]);
    for step in 0..4 {
        let norm = &(&u.0[0] * &u.0[0]) + &(&u.0[1] * &u.0[1]);
        println!("step {step}: ({u}), |u|^2 = {norm}");
        if !norm.is_one() {
            return Err(Error::Invariant("left the circle".into()));
        }
        u = quadric_rotation_map(&delta, &u)?;
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("circle_rotation");
}
