//! Sparse commutative polynomials over the rationals in named parameters.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::scalar::{format_rational, Rational, Scalar};
use crate::error::{Error, Result};

/// Values assigned to parameter symbols.
pub type Assignment<S> = BTreeMap<String, S>;

/// An ordered list of parameter names shared by a family of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamCtx(Arc<[String]>);

impl ParamCtx {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        ParamCtx(names.into_iter().map(Into::into).collect())
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// This context followed by every name of `extra` not already present.
    pub fn extended<I, S>(&self, extra: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = self.0.to_vec();
        for n in extra {
            let n = n.into();
            if !names.contains(&n) {
                names.push(n);
            }
        }
        ParamCtx(names.into())
    }

    fn same(&self, other: &ParamCtx) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Debug for ParamCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in the parameters of `ctx` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoefPoly {
    ctx: ParamCtx,
    terms: BTreeMap<Monomial, Rational>,
}

impl CoefPoly {
    pub fn zero(ctx: &ParamCtx) -> Self {
        CoefPoly { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &ParamCtx, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ctx.len()), c);
        }
        p
    }

    pub fn one(ctx: &ParamCtx) -> Self {
        Self::constant(ctx, Rational::one())
    }

    /// The parameter `name` as a polynomial.
    pub fn var(ctx: &ParamCtx, name: &str) -> Result<Self> {
        let i = ctx
            .index_of(name)
            .ok_or_else(|| Error::Context(format!("parameter `{name}` not in {ctx:?}")))?;
        Ok(Self::var_at(ctx, i))
    }

    pub fn var_at(ctx: &ParamCtx, i: usize) -> Self {
        let mut p = Self::zero(ctx);
        p.terms.insert(Monomial::var(ctx.len(), i), Rational::one());
        p
    }

    pub fn from_terms<I>(ctx: &ParamCtx, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            assert_eq!(m.0.len(), ctx.len(), "exponent vector length");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn ctx(&self) -> &ParamCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// The value if this polynomial has no parameter dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_ctx(&self, other: &CoefPoly) -> Result<()> {
        if self.ctx.same(&other.ctx) {
            Ok(())
        } else {
            Err(Error::Context(format!(
                "parameter contexts {:?} and {:?} differ",
                self.ctx, other.ctx
            )))
        }
    }

    pub fn checked_add(&self, other: &CoefPoly) -> Result<CoefPoly> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &CoefPoly) -> Result<CoefPoly> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &CoefPoly) -> Result<CoefPoly> {
        self.check_ctx(other)?;
        let mut out = CoefPoly::zero(&self.ctx);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> CoefPoly {
        CoefPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> CoefPoly {
        if c.is_zero() {
            return CoefPoly::zero(&self.ctx);
        }
        CoefPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> CoefPoly {
        let mut acc = CoefPoly::one(&self.ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Evaluates at a full assignment of the parameters.
    pub fn eval<S: Scalar>(&self, assignment: &Assignment<S>) -> Result<S> {
        let used = self.used_params();
        let values = self
            .ctx
            .names()
            .iter()
            .zip(used)
            .map(|(n, used)| match assignment.get(n) {
                Some(v) => Ok(v.clone()),
                None if used => Err(Error::MissingAssignment(n.clone())),
                None => Ok(S::zero()),
            })
            .collect::<Result<Vec<S>>>()?;
        Ok(self.eval_slice(&values))
    }

    /// Evaluates with values given positionally in context order.
    pub fn eval_slice<S: Scalar>(&self, values: &[S]) -> S {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = S::from_rational(c);
            for (v, &e) in values.iter().zip(&m.0) {
                if e > 0 {
                    t = t * v.powu(e);
                }
            }
            acc = acc + t;
        }
        acc
    }

    fn used_params(&self) -> Vec<bool> {
        let mut used = vec![false; self.ctx.len()];
        for m in self.terms.keys() {
            for (u, &e) in used.iter_mut().zip(&m.0) {
                *u |= e > 0;
            }
        }
        used
    }

    /// Names of the parameters that occur with positive degree.
    pub fn support(&self) -> Vec<String> {
        self.used_params()
            .into_iter()
            .zip(self.ctx.names())
            .filter(|&(u, _n)| u).map(|(_u, n)| n.clone())
            .collect()
    }

    /// Re-expresses this polynomial in a context containing all of its parameter names.
    pub fn lift(&self, target: &ParamCtx) -> Result<CoefPoly> {
        if self.ctx.same(target) {
            return Ok(self.clone());
        }
        let map = self
            .ctx
            .names()
            .iter()
            .zip(self.used_params())
            .map(|(n, used)| match target.index_of(n) {
                Some(j) => Ok(Some(j)),
                None if used => Err(Error::Context(format!("parameter `{n}` missing from {target:?}"))),
                None => Ok(None),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut out = CoefPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &d) in m.0.iter().enumerate() {
                if let (true, Some(j)) = (d > 0, map[i]) {
                    e[j] += d;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Substitutes polynomials (in `target`) for every parameter, in context order.
    pub fn compose(&self, images: &[CoefPoly], target: &ParamCtx) -> Result<CoefPoly> {
        if images.len() != self.ctx.len() {
            return Err(Error::Context(format!(
                "{} images for {} parameters",
                images.len(),
                self.ctx.len()
            )));
        }
        let mut out = CoefPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = CoefPoly::constant(target, c.clone());
            for (img, &e) in images.iter().zip(&m.0) {
                if e > 0 {
                    t = t.checked_mul(&img.pow(e))?;
                }
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// Replaces the parameter `name` by `value` (a polynomial in the same context).
    pub fn substitute(&self, name: &str, value: &CoefPoly) -> Result<CoefPoly> {
        let idx = self
            .ctx
            .index_of(name)
            .ok_or_else(|| Error::Context(format!("parameter `{name}` not in {:?}", self.ctx)))?;
        let images: Vec<CoefPoly> = (0..self.ctx.len())
            .map(|i| if i == idx { value.clone() } else { CoefPoly::var_at(&self.ctx, i) })
            .collect();
        self.compose(&images, &self.ctx)
    }

    /// Substitutes rational values for some parameters, keeping the context.
    pub fn specialize(&self, values: &Assignment<Rational>) -> CoefPoly {
        let mut out = CoefPoly::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut c = c.clone();
            let mut e = m.0.clone();
            for (i, n) in self.ctx.names().iter().enumerate() {
                if let Some(v) = values.get(n) {
                    c *= num_traits::pow(v.clone(), e[i] as usize);
                    e[i] = 0;
                }
            }
            out.add_term(Monomial(e), c);
        }
        out
    }

    /// Degree of the parameter at index `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    /// If some rational multiple `c·other` equals `self`, returns `c`.
    pub fn ratio_to(&self, other: &CoefPoly) -> Option<Rational> {
        if self.ctx != other.ctx || self.terms.len() != other.terms.len() || other.is_zero() {
            return None;
        }
        let (m0, c0) = other.terms.iter().next()?;
        let ratio = self.terms.get(m0)? / c0;
        other
            .terms
            .iter()
            .all(|(m, c)| self.terms.get(m) == Some(&(c * &ratio)))
            .then_some(ratio)
    }
}

impl fmt::Display for CoefPoly {
    /// Graded-lex descending, e.g. `t_X^2 - 4*d_X`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let factors: Vec<String> = m
                .0
                .iter()
                .zip(self.ctx.names())
                .filter(|(e, _)| **e > 0)
                .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", format_rational(&abs))?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CoefPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoefPoly({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a CoefPoly> for &'a CoefPoly {
            type Output = CoefPoly;
            /// Panics if the parameter contexts differ; see the `checked_*` variants.
            fn $method(self, rhs: &'a CoefPoly) -> CoefPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for CoefPoly {
            type Output = CoefPoly;
            fn $method(self, rhs: CoefPoly) -> CoefPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CoefPoly {
    type Output = CoefPoly;
    fn neg(self) -> CoefPoly {
        self.neg_ref()
    }
}

impl Neg for CoefPoly {
    type Output = CoefPoly;
    fn neg(self) -> CoefPoly {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{int, rat};

    fn ctx() -> ParamCtx {
        ParamCtx::new(["t_X", "d_X", "t_Y", "d_Y"])
    }

    #[test]
    fn monomial_product() {
        let c = ParamCtx::new(["d"]);
        let d = CoefPoly::var(&c, "d").unwrap();
        let d2 = &d * &d;
        assert_eq!(d2.to_string(), "d^2");
        assert_eq!(d2.total_degree(), Some(2));
    }

    #[test]
    fn additive_inverse_is_empty() {
        let c = ParamCtx::new(["d"]);
        let d = CoefPoly::var(&c, "d").unwrap().scale(&int(2));
        let s = &d + &(-&d);
        assert!(s.is_zero());
        assert_eq!(s.num_terms(), 0);
        assert_eq!(s.to_string(), "0");
    }

    #[test]
    fn discriminant_product_has_four_terms() {
        let c = ctx();
        let v = |n| CoefPoly::var(&c, n).unwrap();
        let four = CoefPoly::constant(&c, int(4));
        let a = &(&v("t_X") * &v("t_X")) - &(&four * &v("d_X"));
        let b = &(&v("t_Y") * &v("t_Y")) - &(&four * &v("d_Y"));
        assert_eq!(a.to_string(), "t_X^2 - 4*d_X");
        let p = &a * &b;
        assert_eq!(p.num_terms(), 4);
        assert_eq!(p.to_string(), "t_X^2*t_Y^2 - 4*t_X^2*d_Y - 4*d_X*t_Y^2 + 16*d_X*d_Y");
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = CoefPoly::var(&ParamCtx::new(["a"]), "a").unwrap();
        let b = CoefPoly::var(&ParamCtx::new(["b"]), "b").unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::Context(_))));
        assert!(matches!(a.checked_mul(&b), Err(Error::Context(_))));
    }

    #[test]
    fn evaluation() {
        let c = ParamCtx::new(["d"]);
        let d = CoefPoly::var(&c, "d").unwrap();
        let mut asg = Assignment::new();
        asg.insert("d".to_string(), int(3));
        assert_eq!((&d * &d).eval(&asg).unwrap(), int(9));
        assert_eq!(CoefPoly::zero(&c).eval(&asg).unwrap(), int(0));
        let empty: Assignment<Rational> = Assignment::new();
        assert!(matches!(d.eval(&empty), Err(Error::MissingAssignment(_))));
        // unused parameters need no value
        assert_eq!(CoefPoly::constant(&c, int(5)).eval(&empty).unwrap(), int(5));
    }

    #[test]
    fn cleared_denominator_family_vanishes() {
        // 4q*d_X*d_Y - (q - 1) at q = 2, d_X = 1/4, d_Y = 1/2
        let c = ParamCtx::new(["q", "d_X", "d_Y"]);
        let v = |n| CoefPoly::var(&c, n).unwrap();
        let p = &(&(&v("q") * &v("d_X")) * &v("d_Y")).scale(&int(4)) - &(&v("q") - &CoefPoly::one(&c));
        let mut asg = Assignment::new();
        asg.insert("q".into(), int(2));
        asg.insert("d_X".into(), rat(1, 4));
        asg.insert("d_Y".into(), rat(1, 2));
        assert_eq!(p.eval(&asg).unwrap(), int(0));
    }

    #[test]
    fn substitution_and_lift() {
        let c = ParamCtx::new(["a", "b"]);
        let a = CoefPoly::var(&c, "a").unwrap();
        let b = CoefPoly::var(&c, "b").unwrap();
        let p = &(&a * &a) + &b;
        let q = p.substitute("a", &(&b + &CoefPoly::one(&c))).unwrap();
        assert_eq!(q.to_string(), "b^2 + 3*b + 1");
        let wide = ParamCtx::new(["z", "b", "a"]);
        let lifted = p.lift(&wide).unwrap();
        assert_eq!(lifted.to_string(), "a^2 + b");
        assert!(p.lift(&ParamCtx::new(["a"])).is_err());
    }

    #[test]
    fn ratio_detection() {
        let c = ParamCtx::new(["a"]);
        let a = CoefPoly::var(&c, "a").unwrap();
        let p = &a + &CoefPoly::one(&c);
        assert_eq!(p.scale(&rat(-3, 2)).ratio_to(&p), Some(rat(-3, 2)));
        assert_eq!(a.ratio_to(&p), None);
    }
}
