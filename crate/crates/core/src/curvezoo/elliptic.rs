use super::SqrtScalar;
use crate::coeffs::{format_rational, ComplexApprox, Rational, Scalar};
use crate::error::{Error, Result};
use crate::freealg::{FreeAlgebra, NCPoly, Point};
use num_traits::Zero;

/// The curve y² = x³ + ax + b with commutator weight q in `y² − x³ − ax − b + q[x,y]`.
#[derive(Clone, Debug, PartialEq)]
pub struct EllipticConfig {
    a: Rational,
    b: Rational,
    q: Rational,
}

impl EllipticConfig {
    pub fn new(a: Rational, b: Rational, q: Rational) -> Result<Self> {
        let disc = Rational::from_integer(4.into()) * &a * &a * &a + Rational::from_integer(27.into()) * &b * &b;
        if disc.is_zero() {
            return Err(Error::SingularParameter("4a^3 + 27b^2 = 0: the cubic is singular".into()));
        }
        Ok(EllipticConfig { a, b, q })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn polynomial(&self) -> NCPoly {
        let r = |v: &Rational| format!("({})", format_rational(v));
        FreeAlgebra::plane(Vec::<String>::new())
            .parse(&format!("y^2-x^3-{}*x-{}+{}*[x,y]", r(&self.a), r(&self.b), r(&self.q)))
            .expect("well-formed cubic")
    }

    /// y² − x³ − ax − b at `p`.
    pub fn residual<S: Scalar>(&self, p: &Point<S>) -> S {
        let (x, y) = (p.0[0].clone(), p.0[1].clone());
        y.clone() * y - x.clone() * x.clone() * x.clone() - S::from_rational(&self.a) * x - S::from_rational(&self.b)
    }

    pub fn on_curve<S: Scalar>(&self, p: &Point<S>) -> bool {
        p.dim() == 2 && self.residual(p).is_zero()
    }

    fn require<S: Scalar>(&self, p: &Point<S>) -> Result<()> {
        if p.dim() != 2 {
            return Err(Error::Dimension("curve points are 2-dimensional".into()));
        }
        if !self.on_curve(p) {
            return Err(Error::precondition(format!("{p} is not on y^2 = x^3 + ax + b")));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Partners<S> {
    /// Takes +√D.
    pub q1: Point<S>,
    pub q2: Point<S>,
    pub d: S,
    /// D = 0: the two partners coincide.
    pub tangent: bool,
}

impl<S: Scalar> Partners<S> {
    pub fn points(&self) -> Vec<Point<S>> {
        if self.tangent {
            vec![self.q1.clone()]
        } else {
            vec![self.q1.clone(), self.q2.clone()]
        }
    }
}

/// Points Q with Ext¹(P, Q) ≠ 0: x = −u/2 + q²/2 ± √D/2, y = −v − q(x − u).
pub fn elliptic_partners<S: SqrtScalar>(cfg: &EllipticConfig, p: &Point<S>) -> Result<Partners<S>> {
    cfg.require(p)?;
    let (u, v) = (p.0[0].clone(), p.0[1].clone());
    let q = S::from_rational(&cfg.q);
    let a = S::from_rational(&cfg.a);
    let c = |n: i64| S::from_i64(n);
    let q2 = q.clone() * q.clone();
    let lin = u.clone() - q2.clone();
    let d = lin.clone() * lin - c(4) * (u.clone() * u.clone() + q2.clone() * u.clone() + a - c(2) * q.clone() * v.clone());
    let root = d
        .try_sqrt()
        .ok_or_else(|| Error::precondition(format!("D = {d} has no square root here; use the complex backend")))?;
    let half = S::from_rational(&Rational::new(1.into(), 2.into()));
    let base = (q2 - u.clone()) * half.clone();
    let point = |x: S| {
        let y = -v.clone() - q.clone() * (x.clone() - u.clone());
        Point::new(vec![x, y])
    };
    let x1 = base.clone() + root.clone() * half.clone();
    let x2 = base - root * half;
    Ok(Partners { q1: point(x1), q2: point(x2), tangent: d.is_zero(), d })
}

#[derive(Clone, Debug, PartialEq)]
pub enum EllipticPoint<S> {
    Infinity,
    Affine(Point<S>),
}

/// Chord-tangent addition on y² = x³ + ax + b.
pub fn elliptic_add<S: Scalar>(cfg: &EllipticConfig, p: &EllipticPoint<S>, q: &EllipticPoint<S>) -> Result<EllipticPoint<S>> {
    let (p, q) = match (p, q) {
        (EllipticPoint::Infinity, other) | (other, EllipticPoint::Infinity) => {
            if let EllipticPoint::Affine(pt) = other {
                cfg.require(pt)?;
            }
            return Ok(other.clone());
        }
        (EllipticPoint::Affine(p), EllipticPoint::Affine(q)) => (p, q),
    };
    cfg.require(p)?;
    cfg.require(q)?;
    let (x1, y1, x2, y2) = (p.0[0].clone(), p.0[1].clone(), q.0[0].clone(), q.0[1].clone());
    let lambda = if x1 == x2 {
        if (y1.clone() + y2.clone()).is_zero() {
            return Ok(EllipticPoint::Infinity);
        }
        let num = S::from_i64(3) * x1.clone() * x1.clone() + S::from_rational(&cfg.a);
        num.try_div(&(y1.clone() + y1.clone())).expect("y1 != 0 here")
    } else {
        (y2 - y1.clone()).try_div(&(x2.clone() - x1.clone())).expect("x1 != x2")
    };
    let x3 = lambda.clone() * lambda.clone() - x1.clone() - x2;
    let y3 = lambda * (x1 - x3.clone()) - y1;
    Ok(EllipticPoint::Affine(Point::new(vec![x3, y3])))
}

/// Q₁ + Q₂ = P and the chord through Q₁, Q₂ has slope −q.
pub fn elliptic_collinearity_check<S: SqrtScalar>(cfg: &EllipticConfig, p: &Point<S>) -> Result<bool> {
    let parts = elliptic_partners(cfg, p)?;
    if parts.tangent {
        return Err(Error::precondition("D = 0: the partners coincide and the chord is undefined"));
    }
    let (a, b) = (&parts.q1, &parts.q2);
    let sum = elliptic_add(cfg, &EllipticPoint::Affine(a.clone()), &EllipticPoint::Affine(b.clone()))?;
    let slope = (b.0[1].clone() - a.0[1].clone()).try_div(&(b.0[0].clone() - a.0[0].clone()));
    Ok(sum == EllipticPoint::Affine(p.clone()) && slope == Some(-S::from_rational(&cfg.q)))
}

/// No 2- or 3-cycles among partners, starting from each sample.
pub fn elliptic_no_short_cycles<S: SqrtScalar>(cfg: &EllipticConfig, samples: &[Point<S>]) -> Result<bool> {
    if cfg.q.is_zero() {
        return Err(Error::precondition("q = 0: partner cycles exist"));
    }
    for p in samples {
        for q in elliptic_partners(cfg, p)?.points() {
            let next = elliptic_partners(cfg, &q)?.points();
            if next.contains(p) {
                return Ok(false);
            }
            for r in next {
                if elliptic_partners(cfg, &r)?.points().contains(p) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Deterministic complex points on the curve.
pub fn elliptic_sample_points(cfg: &EllipticConfig, n: usize) -> Vec<Point<ComplexApprox>> {
    let (a, b) = (ComplexApprox::from_rational(&cfg.a), ComplexApprox::from_rational(&cfg.b));
    (0..n)
        .map(|k| {
            let k = k as f64;
            let x = ComplexApprox::new(0.37 * (k + 1.0) - 1.1, 0.23 * k - 0.8);
            let y = (x * x * x + a * x + b).sqrt();
            Point::new(vec![x, y])
        })
        .collect()
}
