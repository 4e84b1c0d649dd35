//! Scalar backends: exact rationals and tolerance-compared complex doubles.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational numbers, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Tolerance used by the complex backend unless `NCPLANE_TOL` overrides it.
pub const DEFAULT_TOL: f64 = 1e-9;

/// The process-wide complex tolerance (read once from `NCPLANE_TOL`).
pub fn default_tol() -> f64 {
    static TOL: OnceLock<f64> = OnceLock::new();
    *TOL.get_or_init(|| {
        std::env::var("NCPLANE_TOL")
            .ok()
            .and_then(|s| s.trim().parse::<f64>().ok())
            .filter(|t| t.is_finite() && *t >= 0.0)
            .unwrap_or(DEFAULT_TOL)
    })
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `n`, `-n` or `n/d`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("`{text}` is not a rational number"),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Renders `n` or `n/d`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact square root of a non-negative rational when it exists.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// A field element usable by every evaluation routine.
///
/// `PartialEq` is exact for rationals and tolerance-based for the complex backend.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(r: &Rational) -> Self;
    fn inv(&self) -> Option<Self>;
    /// A size measure used for pivot selection.
    fn magnitude(&self) -> f64;
    /// Absolute threshold below which a pivot counts as zero, relative to `scale`.
    fn pivot_threshold(&self, scale: f64) -> f64;
    fn is_exact() -> bool;

    /// Rank of a rectangular, non-empty list of rows.
    fn rank_of(rows: Vec<Vec<Self>>) -> usize {
        crate::linalg::rank_pivoting(rows)
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&int(n))
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
    fn powu(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }
    fn pivot_threshold(&self, _scale: f64) -> f64 {
        0.0
    }
    fn is_exact() -> bool {
        true
    }
    fn rank_of(rows: Vec<Vec<Self>>) -> usize {
        crate::linalg::rank_bareiss(&rows)
    }
}

/// Complex double with an attached comparison tolerance.
///
/// Values built from rationals pick up [`default_tol`]; binary operations keep the
/// larger tolerance of their operands.
#[derive(Clone, Copy, Debug)]
pub struct ComplexApprox {
    pub re: f64,
    pub im: f64,
    pub tol: f64,
}

impl ComplexApprox {
    pub fn new(re: f64, im: f64) -> Self {
        Self::with_tol(re, im, default_tol())
    }

    pub fn with_tol(re: f64, im: f64, tol: f64) -> Self {
        ComplexApprox { re, im, tol }
    }

    pub fn real(re: f64) -> Self {
        Self::new(re, 0.0)
    }

    /// `exp(2πi k / m)`.
    pub fn root_of_unity(m: u32, k: u32) -> Self {
        let angle = 2.0 * std::f64::consts::PI * f64::from(k) / f64::from(m);
        Self::new(angle.cos(), angle.sin())
    }

    pub fn norm(&self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn conj(&self) -> Self {
        ComplexApprox { im: -self.im, ..*self }
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let r = self.norm();
        let re = ((r + self.re) / 2.0).max(0.0).sqrt();
        let im = ((r - self.re) / 2.0).max(0.0).sqrt();
        let im = if self.im < 0.0 { -im } else { im };
        ComplexApprox { re, im, tol: self.tol }
    }

    fn join(&self, other: &Self) -> f64 {
        self.tol.max(other.tol)
    }
}

impl PartialEq for ComplexApprox {
    fn eq(&self, other: &Self) -> bool {
        let tol = self.join(other);
        (self.re - other.re).abs() <= tol && (self.im - other.im).abs() <= tol
    }
}

impl fmt::Display for ComplexApprox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re = if self.re == 0.0 { 0.0 } else { self.re };
        let im = if self.im == 0.0 { 0.0 } else { self.im };
        if im < 0.0 {
            write!(f, "{re}-{}i", -im)
        } else {
            write!(f, "{re}+{im}i")
        }
    }
}

impl Add for ComplexApprox {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        ComplexApprox::with_tol(self.re + o.re, self.im + o.im, self.join(&o))
    }
}

impl Sub for ComplexApprox {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        ComplexApprox::with_tol(self.re - o.re, self.im - o.im, self.join(&o))
    }
}

impl Mul for ComplexApprox {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        ComplexApprox::with_tol(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
            self.join(&o),
        )
    }
}

impl Neg for ComplexApprox {
    type Output = Self;
    fn neg(self) -> Self {
        ComplexApprox { re: -self.re, im: -self.im, tol: self.tol }
    }
}

impl Zero for ComplexApprox {
    fn zero() -> Self {
        ComplexApprox::real(0.0)
    }
    fn is_zero(&self) -> bool {
        self.re.abs() <= self.tol && self.im.abs() <= self.tol
    }
}

impl One for ComplexApprox {
    fn one() -> Self {
        ComplexApprox::real(1.0)
    }
}

impl Scalar for ComplexApprox {
    fn from_rational(r: &Rational) -> Self {
        ComplexApprox::real(r.to_f64().unwrap_or(f64::NAN))
    }
    fn inv(&self) -> Option<Self> {
        let n2 = self.re * self.re + self.im * self.im;
        if n2 == 0.0 || Zero::is_zero(self) {
            None
        } else {
            Some(ComplexApprox::with_tol(self.re / n2, -self.im / n2, self.tol))
        }
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    /// Relative to `scale`, but never below the absolute tolerance of `is_zero`.
    fn pivot_threshold(&self, scale: f64) -> f64 {
        self.tol * scale.max(1.0)
    }
    fn is_exact() -> bool {
        false
    }
}

/// Parses a scalar for the backend `S`: rationals `n/d`, and for the complex backend
/// also `re+imi`, `re-imi`, `imi`.
pub trait ParseScalar: Scalar {
    fn parse_scalar(text: &str) -> Result<Self>;
}

impl ParseScalar for Rational {
    fn parse_scalar(text: &str) -> Result<Self> {
        parse_rational(text)
    }
}

impl ParseScalar for ComplexApprox {
    fn parse_scalar(text: &str) -> Result<Self> {
        let t = text.trim();
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("`{t}` is not a complex number"),
        };
        let real_part = |s: &str| -> Result<f64> {
            if s.is_empty() {
                return Ok(0.0);
            }
            if s.contains('/') {
                return parse_rational(s)?.to_f64().ok_or_else(bad);
            }
            s.parse::<f64>().map_err(|_| bad())
        };
        let Some(body) = t.strip_suffix('i') else {
            return Ok(ComplexApprox::real(real_part(t)?));
        };
        // split at the last sign that is not an exponent sign or the leading sign
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let c = bytes[idx];
            if (c == b'+' || c == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        let (re, im) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("", body),
        };
        let im = match im {
            "+" | "" => 1.0,
            "-" => -1.0,
            s => real_part(s.strip_prefix('+').unwrap_or(s))?,
        };
        Ok(ComplexApprox::new(real_part(re)?, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roundtrip_text() {
        let r = parse_rational("-6/4").unwrap();
        assert_eq!(r, rat(-3, 2));
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&int(2)), None);
        assert_eq!(rational_sqrt(&int(-4)), None);
    }

    #[test]
    fn complex_equality_is_reflexive_and_symmetric() {
        let a = ComplexApprox::new(1.0, 2.0);
        let b = ComplexApprox::new(1.0 + 1e-12, 2.0 - 1e-12);
        assert_eq!(a, a);
        assert_eq!(a, b);
        assert_eq!(b, a);
        assert_ne!(a, ComplexApprox::new(1.0, 2.1));
    }

    #[test]
    fn cube_roots_of_unity() {
        let w = ComplexApprox::root_of_unity(3, 1);
        assert_eq!(w.powu(3), ComplexApprox::one());
        assert_ne!(w, ComplexApprox::one());
        assert_eq!(w * w + w + ComplexApprox::one(), ComplexApprox::zero());
    }

    #[test]
    fn complex_arithmetic_tracks_rationals() {
        let a = rat(1, 3);
        let b = rat(-5, 7);
        let ca = ComplexApprox::from_rational(&a);
        let cb = ComplexApprox::from_rational(&b);
        assert_eq!(ca * cb, ComplexApprox::from_rational(&(&a * &b)));
        assert_eq!(ca - cb, ComplexApprox::from_rational(&(&a - &b)));
        assert_eq!(
            ca.try_div(&cb).unwrap(),
            ComplexApprox::from_rational(&(&a / &b))
        );
    }

    #[test]
    fn complex_parsing() {
        let z = ComplexApprox::parse_scalar("1.5-2i").unwrap();
        assert_eq!(z, ComplexApprox::new(1.5, -2.0));
        assert_eq!(ComplexApprox::parse_scalar("-i").unwrap(), ComplexApprox::new(0.0, -1.0));
        assert_eq!(ComplexApprox::parse_scalar("1/2").unwrap(), ComplexApprox::real(0.5));
        assert_eq!(ComplexApprox::parse_scalar("1e-3+1e-3i").unwrap(), ComplexApprox::new(1e-3, 1e-3));
        let s = ComplexApprox::new(-4.0, 0.0).sqrt();
        assert_eq!(s, ComplexApprox::new(0.0, 2.0));
    }
}
