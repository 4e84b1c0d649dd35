use crate::coeffs::{Assignment, CoefPoly, ComplexApprox, ParamCtx, Rational};
use crate::error::{Error, Result};
use crate::freealg::Point;
use crate::linalg::Matrix;
use crate::rep2::simple2_check;

/// 2×2 matrix over k[t, μ].
pub type PolyMatrix = [[CoefPoly; 2]; 2];

/// The two points (ωa, −b), (ω²a, −b) carrying extensions from (a, b) on y² = x³.
pub fn cusp_partner(p: &Point<ComplexApprox>) -> Result<[Point<ComplexApprox>; 2]> {
    if p.dim() != 2 {
        return Err(Error::Dimension("cusp points are 2-dimensional".into()));
    }
    let (a, b) = (p.0[0], p.0[1]);
    if b * b != a * a * a {
        return Err(Error::precondition(format!("{p} is not on y^2 = x^3")));
    }
    let w = ComplexApprox::root_of_unity(3, 1);
    Ok([Point::new(vec![w * a, -b]), Point::new(vec![w * w * a, -b])])
}

fn ctx() -> ParamCtx {
    ParamCtx::new(["t", "mu"])
}

/// ρ(x) = [[t, 1+μ], [0, t]], ρ(y) = [[0, 0], [1+μ, 0]] over k[t, μ].
pub fn cusp_versal_family() -> (PolyMatrix, PolyMatrix) {
    let c = ctx();
    let t = CoefPoly::var_at(&c, 0);
    let s = &CoefPoly::var_at(&c, 1) + &CoefPoly::one(&c);
    let z = CoefPoly::zero(&c);
    ([[t.clone(), s.clone()], [z.clone(), t]], [[z.clone(), z.clone()], [s, z]])
}

fn mat_mul(a: &PolyMatrix, b: &PolyMatrix) -> PolyMatrix {
    let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// ρ(y)² − ρ(x)³.
pub fn cusp_versal_residual(rx: &PolyMatrix, ry: &PolyMatrix) -> PolyMatrix {
    let y2 = mat_mul(ry, ry);
    let x3 = mat_mul(&mat_mul(rx, rx), rx);
    let e = |i: usize, j: usize| &y2[i][j] - &x3[i][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Whether `p ∈ k[t, μ]` lies in (t³, (μ+1)t²). In s = μ+1 the ideal is monomial.
fn in_versal_ideal(p: &CoefPoly) -> Result<bool> {
    let ts = ParamCtx::new(["t", "s"]);
    let images = [CoefPoly::var_at(&ts, 0), &CoefPoly::var_at(&ts, 1) - &CoefPoly::one(&ts)];
    let q = p.compose(&images, &ts)?;
    let ok = q.terms().all(|(m, _)| m.0[0] >= 3 || (m.0[0] >= 2 && m.0[1] >= 1));
    Ok(ok)
}

/// Checks that every residual entry of the family vanishes modulo (t³, (μ+1)t²).
pub fn cusp_versal_check_family(rx: &PolyMatrix, ry: &PolyMatrix) -> Result<bool> {
    for row in cusp_versal_residual(rx, ry) {
        for entry in row {
            if !in_versal_ideal(&entry)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn cusp_versal_check() -> bool {
    let (rx, ry) = cusp_versal_family();
    cusp_versal_check_family(&rx, &ry).expect("family lives in k[t, mu]")
}

/// simple2_check on the family at μ = −1 and the given t.
pub fn cusp_special_fibre_simple(t: &Rational) -> Result<bool> {
    let (rx, ry) = cusp_versal_family();
    let mut a = Assignment::new();
    a.insert("t".to_string(), t.clone());
    a.insert("mu".to_string(), Rational::from_integer((-1).into()));
    let eval = |m: &PolyMatrix| -> Result<Matrix<Rational>> {
        let rows = m.iter().map(|r| r.iter().map(|e| e.eval(&a)).collect()).collect::<Result<Vec<Vec<_>>>>()?;
        Matrix::from_rows(rows)
    };
    simple2_check(&eval(&rx)?, &eval(&ry)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{int, rat};
    use crate::extcalc::{ext1_dim_points, relation_ideal, ExtOptions};
    use crate::freealg::FreeAlgebra;

    #[test]
    fn versal_family_is_a_deformation() {
        assert!(cusp_versal_check());
    }

    #[test]
    fn perturbations() {
        let (rx, ry) = cusp_versal_family();
        let t = CoefPoly::var_at(&ctx(), 0);
        let mut by_t = rx.clone();
        by_t[1][0] = t.clone();
        assert!(!cusp_versal_check_family(&by_t, &ry).unwrap());
        // adding t² stays inside the ideal
        let mut by_t2 = rx;
        by_t2[1][0] = t.pow(2);
        assert!(cusp_versal_check_family(&by_t2, &ry).unwrap());
    }

    #[test]
    fn special_fibre_not_simple() {
        assert!(!cusp_special_fibre_simple(&int(0)).unwrap());
        assert!(!cusp_special_fibre_simple(&rat(1, 3)).unwrap());
    }

    #[test]
    fn partners_carry_extensions() {
        let f = FreeAlgebra::plane(Vec::<String>::new()).parse("y^2-x^3").unwrap();
        let ideal = relation_ideal(&f).unwrap();
        let none = Assignment::new();
        let c = |r: f64| ComplexApprox::real(r);
        for p in [Point::new(vec![c(1.0), c(1.0)]), Point::new(vec![c(4.0), c(-8.0)])] {
            for q in cusp_partner(&p).unwrap() {
                assert_eq!(f.eval_point(&q, &none).unwrap(), c(0.0));
                assert_eq!(ext1_dim_points(std::slice::from_ref(&f), &p, &q, &none, ExtOptions::default()).unwrap(), 1);
                assert!(ideal.contains(&p, &q, &none).unwrap());
            }
        }
        let origin = Point::new(vec![c(0.0), c(0.0)]);
        assert_eq!(cusp_partner(&origin).unwrap()[0], origin);
        assert!(cusp_partner(&Point::new(vec![c(1.0), c(2.0)])).is_err());
    }
}
