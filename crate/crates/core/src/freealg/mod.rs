//! The free associative algebra k⟨x₁,…,x_m⟩ with commuting parameter coefficients.
//!
//! Polynomials are sparse maps from [`Word`]s to [`CoefPoly`] coefficients, stored in
//! degree-lexicographic order. Parameters (δ, q, a, b, …) are central.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::coeffs::{format_rational, Assignment, CoefPoly, Monomial, ParamCtx, ParseScalar, Rational, Scalar};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

pub use parse::parse_poly;

/// Longest word accepted by parsing and multiplication.
pub const DEGREE_CAP: usize = 32;

/// A monomial of the free algebra: a sequence of 0-based generator indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i as u32])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// All words of length `len` over `m` letters, in lexicographic order.
    pub fn all_of_length(m: usize, len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (0..m as u32).map(move |l| {
                        let mut v = w.0.clone();
                        v.push(l);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn default_names(m: usize) -> Vec<String> {
    match m {
        1 => vec!["x".to_string()],
        2 => vec!["x".to_string(), "y".to_string()],
        _ => (1..=m).map(|i| format!("x{i}")).collect(),
    }
}

#[derive(Debug, PartialEq, Eq)]
struct AlgebraInner {
    gens: Vec<String>,
    params: ParamCtx,
}

/// Generator names plus the parameter context of a free algebra.
#[derive(Clone, Debug)]
pub struct FreeAlgebra(Arc<AlgebraInner>);

impl PartialEq for FreeAlgebra {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for FreeAlgebra {}

impl FreeAlgebra {
    /// `m` generators named `x`, `y` (m ≤ 2) or `x1..xm`.
    pub fn new(m: usize, params: &ParamCtx) -> Result<Self> {
        Self::with_names(default_names(m), params)
    }

    /// The plane algebra k⟨x,y⟩ with the given parameter names.
    pub fn plane<I, S>(params: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::new(2, &ParamCtx::new(params)).expect("parameter names must avoid x and y")
    }

    pub fn with_names(gens: Vec<String>, params: &ParamCtx) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].contains(g) || params.index_of(g).is_some() {
                return Err(Error::Context(format!("name `{g}` used twice")));
            }
        }
        Ok(FreeAlgebra(Arc::new(AlgebraInner { gens, params: params.clone() })))
    }

    pub fn m(&self) -> usize {
        self.0.gens.len()
    }

    pub fn gen_names(&self) -> &[String] {
        &self.0.gens
    }

    pub fn params(&self) -> &ParamCtx {
        &self.0.params
    }

    /// Same generators over a larger parameter context.
    pub fn with_params(&self, params: &ParamCtx) -> Result<Self> {
        Self::with_names(self.0.gens.clone(), params)
    }

    /// Generator index for a name; default-named algebras also accept `x1..xm`.
    pub fn gen_index(&self, name: &str) -> Option<usize> {
        if let Some(i) = self.0.gens.iter().position(|g| g == name) {
            return Some(i);
        }
        if self.0.gens != default_names(self.m()) {
            return None;
        }
        let idx: usize = name.strip_prefix('x')?.parse().ok()?;
        (1..=self.m()).contains(&idx).then(|| idx - 1)
    }

    pub fn zero(&self) -> NCPoly {
        NCPoly { alg: self.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(&self, c: Rational) -> NCPoly {
        self.from_coef(CoefPoly::constant(self.params(), c))
    }

    pub fn one(&self) -> NCPoly {
        self.constant(Rational::one())
    }

    pub fn from_coef(&self, c: CoefPoly) -> NCPoly {
        self.monomial(Word::empty(), c)
    }

    /// A parameter as a (central) element of the algebra.
    pub fn param(&self, name: &str) -> Result<NCPoly> {
        Ok(self.from_coef(CoefPoly::var(self.params(), name)?))
    }

    pub fn gen(&self, i: usize) -> NCPoly {
        assert!(i < self.m(), "generator index {i} out of range");
        self.monomial(Word::letter(i), CoefPoly::one(self.params()))
    }

    pub fn monomial(&self, w: Word, c: CoefPoly) -> NCPoly {
        let mut p = self.zero();
        p.add_term(w, c);
        p
    }

    pub fn parse(&self, text: &str) -> Result<NCPoly> {
        parse_poly(text, self)
    }
}

/// An element of a free algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct NCPoly {
    alg: FreeAlgebra,
    terms: BTreeMap<Word, CoefPoly>,
}

impl NCPoly {
    pub fn algebra(&self) -> &FreeAlgebra {
        &self.alg
    }

    pub fn m(&self) -> usize {
        self.alg.m()
    }

    pub fn params(&self) -> &ParamCtx {
        self.alg.params()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending degree-lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &CoefPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> CoefPoly {
        self.terms.get(w).cloned().unwrap_or_else(|| CoefPoly::zero(self.params()))
    }

    /// Maximal word length; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    pub(crate) fn add_term(&mut self, w: Word, c: CoefPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn check_alg(&self, other: &NCPoly) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::Context(format!(
                "algebras {:?}/{:?} and {:?}/{:?} differ",
                self.alg.gen_names(),
                self.params(),
                other.alg.gen_names(),
                other.params()
            )))
        }
    }

    pub fn checked_add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check_alg(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.lift(self.params())?);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &NCPoly) -> Result<NCPoly> {
        self.checked_add(&-other)
    }

    /// Concatenation product; fails if a word would exceed [`DEGREE_CAP`].
    pub fn checked_mul(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check_alg(other)?;
        let mut out = self.alg.zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let len = w1.len() + w2.len();
                if len > DEGREE_CAP {
                    return Err(Error::DegreeCap(len));
                }
                out.add_term(w1.concat(w2), c1.checked_mul(&c2.lift(self.params())?)?);
            }
        }
        Ok(out)
    }

    /// `self·other − other·self`.
    pub fn commutator(&self, other: &NCPoly) -> Result<NCPoly> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }

    pub fn pow(&self, e: u32) -> Result<NCPoly> {
        let mut acc = self.alg.one();
        for _ in 0..e {
            acc = acc.checked_mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplies every coefficient by a central element.
    pub fn scale(&self, c: &CoefPoly) -> Result<NCPoly> {
        let c = c.lift(self.params())?;
        let mut out = self.alg.zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v.checked_mul(&c)?);
        }
        Ok(out)
    }

    pub fn scale_rational(&self, c: &Rational) -> NCPoly {
        let mut out = self.alg.zero();
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v.scale(c));
        }
        out
    }

    /// The same element viewed in an algebra with the same generators and more parameters.
    pub fn lift(&self, target: &FreeAlgebra) -> Result<NCPoly> {
        if target.gen_names() != self.alg.gen_names() {
            return Err(Error::Context("generator names differ".into()));
        }
        let mut out = target.zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.lift(target.params())?);
        }
        Ok(out)
    }

    /// Applies the algebra homomorphism sending generator `i` to `images[i]`.
    pub fn substitute(&self, images: &[NCPoly]) -> Result<NCPoly> {
        if images.len() != self.m() {
            return Err(Error::Context(format!(
                "{} images for {} generators",
                images.len(),
                self.m()
            )));
        }
        let target = match images.first() {
            Some(p) => p.alg.clone(),
            None => self.alg.clone(),
        };
        let mut out = target.zero();
        for (w, c) in &self.terms {
            let mut t = target.from_coef(c.lift(target.params())?);
            for &l in w.letters() {
                t = t.checked_mul(&images[l as usize])?;
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    /// The commutative image f₀: words become commutative monomials in the generator
    /// names, followed by the parameters.
    pub fn abelianize(&self) -> CoefPoly {
        let ctx = self.abelian_ctx();
        let m = self.m();
        let mut out = CoefPoly::zero(&ctx);
        for (w, c) in &self.terms {
            let mut e = vec![0u32; m];
            for &l in w.letters() {
                e[l as usize] += 1;
            }
            let mono = {
                let mut v = e.clone();
                v.extend(std::iter::repeat_n(0, self.params().len()));
                CoefPoly::from_terms(&ctx, [(Monomial(v), Rational::one())])
            };
            out = &out + &(&mono * &c.lift(&ctx).expect("abelian context contains parameters"));
        }
        out
    }

    /// Context of [`abelianize`](Self::abelianize): generator names then parameters.
    pub fn abelian_ctx(&self) -> ParamCtx {
        ParamCtx::new(self.alg.gen_names().iter().cloned()).extended(self.params().names().iter().cloned())
    }

    /// Value under the 1-dimensional representation `x_i ↦ p_i`.
    pub fn eval_point<S: Scalar>(&self, p: &Point<S>, params: &Assignment<S>) -> Result<S> {
        if p.dim() != self.m() {
            return Err(Error::Dimension(format!(
                "point of dimension {} for {} generators",
                p.dim(),
                self.m()
            )));
        }
        let mut acc = S::zero();
        for (w, c) in &self.terms {
            let mut t = c.eval(params)?;
            for &l in w.letters() {
                t = t * p.0[l as usize].clone();
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Image under the matrix representation `x_i ↦ R_i`.
    pub fn eval_matrix<S: Scalar>(&self, rep: &MatrixRep<S>, params: &Assignment<S>) -> Result<Matrix<S>> {
        if rep.mats.len() != self.m() {
            return Err(Error::Dimension(format!(
                "{} matrices for {} generators",
                rep.mats.len(),
                self.m()
            )));
        }
        let n = rep.n();
        let mut acc = Matrix::zeros(n, n);
        for (w, c) in &self.terms {
            let mut t = Matrix::identity(n);
            for &l in w.letters() {
                t = t.checked_mul(&rep.mats[l as usize])?;
            }
            acc = acc.checked_add(&t.scale(&c.eval(params)?))?;
        }
        Ok(acc)
    }

    fn fmt_word(&self, w: &Word) -> String {
        let names = self.alg.gen_names();
        let mut parts: Vec<String> = Vec::new();
        let letters = w.letters();
        let mut i = 0;
        while i < letters.len() {
            let mut j = i;
            while j < letters.len() && letters[j] == letters[i] {
                j += 1;
            }
            let name = &names[letters[i] as usize];
            if j - i == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        parts.join("*")
    }
}

impl fmt::Display for NCPoly {
    /// Highest degree first, lexicographic within a degree, e.g. `x^2 + y^2 + d*x*y - d*y*x - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut order: Vec<(&Word, &CoefPoly)> = self.terms.iter().collect();
        order.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.letters().cmp(b.0.letters())));
        for (k, (w, c)) in order.into_iter().enumerate() {
            let word = self.fmt_word(w);
            let (neg, body) = match c.as_constant() {
                Some(r) => {
                    let neg = r < Rational::zero();
                    let abs = if neg { -r } else { r };
                    let body = match (abs.is_one(), word.is_empty()) {
                        (true, false) => word,
                        (_, true) => format_rational(&abs),
                        (false, false) => format!("{}*{word}", format_rational(&abs)),
                    };
                    (neg, body)
                }
                None if c.num_terms() == 1 => {
                    let text = c.to_string();
                    let (neg, text) = match text.strip_prefix('-') {
                        Some(t) => (true, t.to_string()),
                        None => (false, text),
                    };
                    let body = if word.is_empty() { text } else { format!("{text}*{word}") };
                    (neg, body)
                }
                None => {
                    let body = if word.is_empty() { format!("({c})") } else { format!("({c})*{word}") };
                    (false, body)
                }
            };
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a> $tr<&'a NCPoly> for &'a NCPoly {
            type Output = NCPoly;
            /// Panics on algebra mismatch or degree overflow; see the `checked_*` variants.
            fn $method(self, rhs: &'a NCPoly) -> NCPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for NCPoly {
            type Output = NCPoly;
            fn $method(self, rhs: NCPoly) -> NCPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        NCPoly {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

/// A point of affine m-space, i.e. a 1-dimensional representation.
#[derive(Clone, Debug, PartialEq)]
pub struct Point<S>(pub Vec<S>);

impl<S: Scalar> Point<S> {
    pub fn new(coords: Vec<S>) -> Self {
        Point(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[S] {
        &self.0
    }

    pub fn from_rationals(coords: &[Rational]) -> Self {
        Point(coords.iter().map(S::from_rational).collect())
    }
}

impl<S: ParseScalar> Point<S> {
    /// Parses comma-separated coordinates, e.g. `0,1/2` or `1+2i,-1`.
    pub fn parse(text: &str) -> Result<Self> {
        text.split(',').map(S::parse_scalar).collect::<Result<Vec<_>>>().map(Point)
    }
}

impl Point<Rational> {
    pub fn to_complex(&self) -> Point<crate::coeffs::ComplexApprox> {
        Point(self.0.iter().map(crate::coeffs::ComplexApprox::from_rational).collect())
    }
}

impl<S: Scalar> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// One n×n matrix per generator.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixRep<S> {
    pub mats: Vec<Matrix<S>>,
}

impl<S: Scalar> MatrixRep<S> {
    pub fn new(mats: Vec<Matrix<S>>) -> Result<Self> {
        let n = mats.first().map_or(0, Matrix::rows);
        if mats.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Dimension("matrices must be square of equal size".into()));
        }
        Ok(MatrixRep { mats })
    }

    pub fn n(&self) -> usize {
        self.mats.first().map_or(0, Matrix::rows)
    }

    pub fn m(&self) -> usize {
        self.mats.len()
    }

    /// The 1×1 representation of a point.
    pub fn from_point(p: &Point<S>) -> Self {
        MatrixRep {
            mats: p.0.iter().map(|c| Matrix::diag(std::slice::from_ref(c))).collect(),
        }
    }
}
