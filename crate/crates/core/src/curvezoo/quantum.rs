use crate::coeffs::{ComplexApprox, Rational, Scalar};
use crate::error::{Error, Result};
use crate::freealg::{MatrixRep, Point};
use crate::linalg::Matrix;

fn cyclic_rep<S: Scalar>(m: usize, lambda: S, gamma: S, q: S) -> Result<MatrixRep<S>> {
    if m < 2 {
        return Err(Error::precondition("quantum simples need m >= 2"));
    }
    if lambda.is_zero() || gamma.is_zero() {
        return Err(Error::precondition("lambda and gamma must be nonzero"));
    }
    let mut diag = Vec::with_capacity(m);
    let mut cur = lambda;
    for _ in 0..m {
        diag.push(cur.clone());
        cur = cur * q.clone();
    }
    let x = Matrix::diag(&diag);
    let mut rows = vec![vec![S::zero(); m]; m];
    for (i, row) in rows.iter_mut().enumerate().skip(1) {
        row[i - 1] = S::one();
    }
    rows[0][m - 1] = gamma;
    MatrixRep::new(vec![x, Matrix::from_rows(rows)?])
}

/// m-dimensional simple module of `xy - q*yx` for q = exp(2πi/m):
/// X = diag(λ, qλ, …), Y cyclic with ones below the diagonal and γ in the corner.
pub fn quantum_simples(m: usize, lambda: ComplexApprox, gamma: ComplexApprox) -> Result<MatrixRep<ComplexApprox>> {
    let m32 = u32::try_from(m).map_err(|_| Error::precondition("m too large"))?;
    cyclic_rep(m, lambda, gamma, ComplexApprox::root_of_unity(m32.max(1), 1))
}

/// The m = 2, q = −1 case over the rationals.
pub fn quantum_simples_exact(lambda: Rational, gamma: Rational) -> Result<MatrixRep<Rational>> {
    cyclic_rep(2, lambda, gamma, Rational::from_integer((-1).into()))
}

/// The partner of a point on `xy - q*yx = 0`: (0, v) ↦ (0, v/q) and (u, 0) ↦ (qu, 0).
pub fn quantum_relation_map<S: Scalar>(q: &S, p: &Point<S>) -> Result<Point<S>> {
    if p.dim() != 2 {
        return Err(Error::Dimension("quantum plane points are 2-dimensional".into()));
    }
    let qi = q.inv().ok_or_else(|| Error::SingularParameter("q = 0".into()))?;
    let (u, v) = (&p.0[0], &p.0[1]);
    if u.is_zero() {
        Ok(Point::new(vec![S::zero(), v.clone() * qi]))
    } else if v.is_zero() {
        Ok(Point::new(vec![q.clone() * u.clone(), S::zero()]))
    } else {
        Err(Error::precondition(format!("{p} is not on the quantum plane")))
    }
}

/// Iterates [`quantum_relation_map`] until the orbit closes or `max_len` points are collected.
pub fn quantum_orbit<S: Scalar>(q: &S, p: &Point<S>, max_len: usize) -> Result<Vec<Point<S>>> {
    let mut out = vec![p.clone()];
    while out.len() < max_len {
        let next = quantum_relation_map(q, out.last().expect("non-empty"))?;
        if next == *p {
            break;
        }
        out.push(next);
    }
    Ok(out)
}

/// Partner of `u` on the smooth conic `x² + y² − 1 + δ[x,y]`.
pub fn quadric_rotation_map<S: Scalar>(delta: &S, u: &Point<S>) -> Result<Point<S>> {
    if u.dim() != 2 {
        return Err(Error::Dimension("conic points are 2-dimensional".into()));
    }
    let d2 = delta.clone() * delta.clone();
    let denom = (S::one() + d2.clone())
        .inv()
        .ok_or_else(|| Error::SingularParameter("1 + delta^2 = 0".into()))?;
    let c = d2 - S::one();
    let two_d = delta.clone() + delta.clone();
    let (u1, u2) = (u.0[0].clone(), u.0[1].clone());
    Ok(Point::new(vec![
        (c.clone() * u1.clone() - two_d.clone() * u2.clone()) * denom.clone(),
        (two_d * u1 + c * u2) * denom,
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{int, rat, Assignment};
    use crate::extcalc::{ext1_dim_points, ext1_general, ExtOptions};
    use crate::freealg::FreeAlgebra;
    use crate::rep2::simple_n_check;

    #[test]
    fn exact_simple_satisfies_relation() {
        let rep = quantum_simples_exact(int(1), int(1)).unwrap();
        let f = FreeAlgebra::plane(Vec::<String>::new()).parse("x*y + y*x").unwrap();
        assert!(f.eval_matrix(&rep, &Assignment::new()).unwrap().is_zero());
        assert!(simple_n_check(&rep));
        assert_eq!(rep.mats[0], Matrix::from_rationals(&[vec![int(1), int(0)], vec![int(0), int(-1)]]));
    }

    #[test]
    fn cubic_root_simple_is_simple() {
        let rep = quantum_simples(3, ComplexApprox::real(0.7), ComplexApprox::new(0.2, 1.1)).unwrap();
        let alg = FreeAlgebra::plane(["q"]);
        let f = alg.parse("x*y - q*y*x").unwrap();
        let mut a = Assignment::new();
        a.insert("q".into(), ComplexApprox::root_of_unity(3, 1));
        assert!(f.eval_matrix(&rep, &a).unwrap().is_zero());
        assert!(simple_n_check(&rep));
        assert_eq!(ext1_general(std::slice::from_ref(&f), &rep, &rep, &a, ExtOptions::default()).unwrap(), 2);
    }

    #[test]
    fn relation_map_matches_ext() {
        let alg = FreeAlgebra::plane(["q"]);
        let f = alg.parse("x*y - q*y*x").unwrap();
        let mut a = Assignment::new();
        a.insert("q".into(), rat(3, 2));
        for p in [Point::new(vec![int(0), int(5)]), Point::new(vec![rat(-2, 7), int(0)])] {
            let img = quantum_relation_map(&rat(3, 2), &p).unwrap();
            assert_eq!(ext1_dim_points(std::slice::from_ref(&f), &p, &img, &a, ExtOptions::default()).unwrap(), 1);
        }
        assert!(quantum_relation_map(&int(2), &Point::new(vec![int(1), int(1)])).is_err());
    }

    #[test]
    fn orbit_closes_at_root_of_unity() {
        let q = ComplexApprox::root_of_unity(4, 1);
        let p = Point::new(vec![ComplexApprox::real(0.0), ComplexApprox::real(2.0)]);
        assert_eq!(quantum_orbit(&q, &p, 10).unwrap().len(), 4);
        let orbit = quantum_orbit(&int(2), &Point::new(vec![int(1), int(0)]), 5).unwrap();
        assert_eq!(orbit.len(), 5);
    }

    #[test]
    fn rotation_map_at_delta_one() {
        let p = quadric_rotation_map(&int(1), &Point::new(vec![int(1), int(0)])).unwrap();
        assert_eq!(p, Point::new(vec![int(0), int(1)]));
        let i = ComplexApprox::new(0.0, 1.0);
        let u = Point::new(vec![ComplexApprox::real(1.0), ComplexApprox::real(0.0)]);
        assert!(matches!(quadric_rotation_map(&i, &u), Err(Error::SingularParameter(_))));
    }

    #[test]
    fn rotation_preserves_circle() {
        let p = quadric_rotation_map(&int(0), &Point::new(vec![rat(3, 5), rat(4, 5)])).unwrap();
        assert_eq!(p, Point::new(vec![rat(-3, 5), rat(-4, 5)]));
        for d in [rat(1, 3), int(2), rat(-7, 4)] {
            for u in [Point::new(vec![rat(3, 5), rat(-4, 5)]), Point::new(vec![rat(5, 13), rat(12, 13)])] {
                let v = quadric_rotation_map(&d, &u).unwrap();
                assert_eq!(&v.0[0] * &v.0[0] + &v.0[1] * &v.0[1], int(1));
            }
        }
    }

    #[test]
    fn quartic_root_simple() {
        let rep = quantum_simples(4, ComplexApprox::real(1.3), ComplexApprox::real(-0.4)).unwrap();
        assert!(simple_n_check(&rep));
        assert!(quantum_simples(1, ComplexApprox::real(1.0), ComplexApprox::real(1.0)).is_err());
    }
}
