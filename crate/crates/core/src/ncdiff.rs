//! Left partial derivatives, left decompositions and the three-letter Taylor operators.

use crate::coeffs::{Assignment, CoefPoly, ParamCtx, Rational, Scalar};
use crate::error::{Error, Result};
use crate::freealg::{FreeAlgebra, NCPoly, Point, Word};

/// Central symbols `u₁,…,u_m` adjoined to the parameter context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicPoint {
    names: Vec<String>,
}

impl SymbolicPoint {
    /// Checks that the names are distinct and unused by `alg`.
    pub fn new(alg: &FreeAlgebra, names: Vec<String>) -> Result<Self> {
        if names.len() != alg.m() {
            return Err(Error::Dimension(format!("{} symbols for {} generators", names.len(), alg.m())));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) || alg.gen_names().contains(n) || alg.params().index_of(n).is_some() {
                return Err(Error::Context(format!("symbol `{n}` is not fresh")));
            }
        }
        Ok(SymbolicPoint { names })
    }

    /// `u1..um`, with trailing underscores added until the names are fresh.
    pub fn fresh(alg: &FreeAlgebra) -> Self {
        Self::fresh_with_stem(alg, "u")
    }

    pub fn fresh_with_stem(alg: &FreeAlgebra, stem: &str) -> Self {
        let mut suffix = String::new();
        loop {
            let names: Vec<String> = (1..=alg.m()).map(|i| format!("{stem}{i}{suffix}")).collect();
            if let Ok(p) = Self::new(alg, names) {
                return p;
            }
            suffix.push('_');
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// The base point of a derivative: rational coordinates or central symbols.
#[derive(Clone, Debug, PartialEq)]
pub enum BasePoint {
    Numeric(Vec<Rational>),
    Symbolic(SymbolicPoint),
}

impl BasePoint {
    /// Algebra in which derivatives at this point live, and the point's coordinates there.
    pub fn resolve(&self, alg: &FreeAlgebra) -> Result<(FreeAlgebra, Vec<CoefPoly>)> {
        match self {
            BasePoint::Numeric(c) => {
                if c.len() != alg.m() {
                    return Err(Error::Dimension(format!("point of dimension {} for {} generators", c.len(), alg.m())));
                }
                Ok((alg.clone(), c.iter().map(|a| CoefPoly::constant(alg.params(), a.clone())).collect()))
            }
            BasePoint::Symbolic(s) => {
                if s.names.len() != alg.m() {
                    return Err(Error::Dimension(format!("{} symbols for {} generators", s.names.len(), alg.m())));
                }
                let ctx = alg.params().extended(s.names.iter().cloned());
                let target = alg.with_params(&ctx)?;
                let coords = s.names.iter().map(|n| CoefPoly::var(&ctx, n)).collect::<Result<Vec<_>>>()?;
                Ok((target, coords))
            }
        }
    }
}

impl From<Vec<Rational>> for BasePoint {
    fn from(v: Vec<Rational>) -> Self {
        BasePoint::Numeric(v)
    }
}

impl From<SymbolicPoint> for BasePoint {
    fn from(s: SymbolicPoint) -> Self {
        BasePoint::Symbolic(s)
    }
}

fn check_index(f: &NCPoly, i: usize) -> Result<()> {
    if i >= f.m() {
        Err(Error::IndexOutOfRange { index: i, len: f.m() })
    } else {
        Ok(())
    }
}

fn derive_resolved(f: &NCPoly, i: usize, target: &FreeAlgebra, coords: &[CoefPoly]) -> Result<NCPoly> {
    let mut out = target.zero();
    for (w, c) in f.terms() {
        let letters = w.letters();
        let c = c.lift(target.params())?;
        // suffix products, right to left
        let mut tail = CoefPoly::one(target.params());
        for t in (0..letters.len()).rev() {
            if letters[t] as usize == i {
                let prefix = Word::new(letters[..t].to_vec());
                out.add_term(prefix, c.checked_mul(&tail)?);
            }
            tail = coords[letters[t] as usize].checked_mul(&tail)?;
        }
    }
    Ok(out)
}

/// The left partial derivative D_i(f; p).
pub fn nc_derive(f: &NCPoly, i: usize, p: &BasePoint) -> Result<NCPoly> {
    check_index(f, i)?;
    let (target, coords) = p.resolve(f.algebra())?;
    derive_resolved(f, i, &target, &coords)
}

/// `f = constant + Σ_k components[k]·(x_k − a_k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LeftDecomposition {
    pub constant: CoefPoly,
    pub components: Vec<NCPoly>,
    coords: Vec<CoefPoly>,
}

impl LeftDecomposition {
    /// Multiplies the decomposition back out.
    pub fn reconstruct(&self) -> Result<NCPoly> {
        let alg = self.components.first().map(|c| c.algebra().clone());
        let Some(alg) = alg else {
            return Err(Error::Invariant("decomposition without components".into()));
        };
        let mut out = alg.from_coef(self.constant.clone());
        for (k, comp) in self.components.iter().enumerate() {
            let lin = alg.gen(k).checked_sub(&alg.from_coef(self.coords[k].clone()))?;
            out = out.checked_add(&comp.checked_mul(&lin)?)?;
        }
        Ok(out)
    }

    pub fn base_coords(&self) -> &[CoefPoly] {
        &self.coords
    }
}

/// Splits `f` into its value at `p` plus the left derivative components.
pub fn left_decompose(f: &NCPoly, p: &BasePoint) -> Result<LeftDecomposition> {
    let (target, coords) = p.resolve(f.algebra())?;
    let components = (0..f.m())
        .map(|i| derive_resolved(f, i, &target, &coords))
        .collect::<Result<Vec<_>>>()?;
    let mut constant = CoefPoly::zero(target.params());
    for (w, c) in f.terms() {
        let mut t = c.lift(target.params())?;
        for &l in w.letters() {
            t = t.checked_mul(&coords[l as usize])?;
        }
        constant = constant.checked_add(&t)?;
    }
    Ok(LeftDecomposition { constant, components, coords })
}

/// The number D_i(f; p₁)(p₂) = Σ coefficient · Σ_t p₂(prefix) · p₁(suffix).
pub fn derivative_value<S: Scalar>(
    f: &NCPoly,
    i: usize,
    p1: &Point<S>,
    p2: &Point<S>,
    params: &Assignment<S>,
) -> Result<S> {
    check_index(f, i)?;
    if p1.dim() != f.m() || p2.dim() != f.m() {
        return Err(Error::Dimension("point dimension differs from generator count".into()));
    }
    let (a, b) = (p1.coords(), p2.coords());
    let mut acc = S::zero();
    for (w, c) in f.terms() {
        let letters = w.letters();
        let mut inner = S::zero();
        let mut tail = S::one();
        for t in (0..letters.len()).rev() {
            let l = letters[t] as usize;
            if l == i {
                let head = letters[..t].iter().fold(S::one(), |h, &k| h * b[k as usize].clone());
                inner = inner + head * tail.clone();
            }
            tail = a[l].clone() * tail;
        }
        if !inner.is_zero() || S::is_exact() {
            acc = acc + c.eval(params)? * inner;
        }
    }
    Ok(acc)
}

/// The free algebra on letters `x…, v…, u…` used by the Taylor operators.
pub fn taylor_algebra(alg: &FreeAlgebra) -> Result<FreeAlgebra> {
    let m = alg.m();
    let v = SymbolicPoint::fresh_with_stem(alg, "v");
    let u = SymbolicPoint::fresh_with_stem(alg, "u");
    let mut names = alg.gen_names().to_vec();
    names.extend(v.names.iter().cloned());
    names.extend(u.names.iter().cloned());
    debug_assert_eq!(names.len(), 3 * m);
    FreeAlgebra::with_names(names, alg.params())
}

fn embed_in_taylor(f: &NCPoly, talg: &FreeAlgebra) -> NCPoly {
    let mut out = talg.zero();
    for (w, c) in f.terms() {
        out.add_term(w.clone(), c.clone());
    }
    out
}

fn taylor_step(g: &NCPoly, i: usize, m: usize) -> NCPoly {
    let mut out = g.algebra().zero();
    for (w, c) in g.terms() {
        let letters = w.letters();
        for t in 0..letters.len() {
            if letters[t] as usize != i {
                continue;
            }
            let mut nw = letters[..t].to_vec();
            nw.push((m + i) as u32);
            nw.extend(letters[t + 1..].iter().map(|&l| if (l as usize) < m { l + 2 * m as u32 } else { l }));
            out.add_term(Word::new(nw), c.clone());
        }
    }
    out
}

/// The iterated Taylor operator D_{x_{i_n},…,x_{i_1}}(f; x, v, u), applying `indices[0]` first.
/// The result lives in [`taylor_algebra`].
pub fn taylor_d(f: &NCPoly, indices: &[usize]) -> Result<NCPoly> {
    if indices.is_empty() {
        return Err(Error::precondition("empty index list"));
    }
    for &i in indices {
        check_index(f, i)?;
    }
    let talg = taylor_algebra(f.algebra())?;
    let mut g = embed_in_taylor(f, &talg);
    for &i in indices {
        g = taylor_step(&g, i, f.m());
    }
    Ok(g)
}

/// One term `coefficient · (x_{i_n}−u_{i_n})…(x_{i_1}−u_{i_1})` of the centered expansion;
/// `indices` lists `i_1, …, i_n` in application order.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorTerm {
    pub indices: Vec<usize>,
    pub coefficient: CoefPoly,
    pub term: NCPoly,
}

/// Centered Taylor expansion of `f` about the central point `u`; the zeroth-order term
/// has empty `indices`.
pub fn taylor_expand_centered(f: &NCPoly, u: &SymbolicPoint) -> Result<Vec<TaylorTerm>> {
    let alg = f.algebra();
    let m = alg.m();
    let (target, coords) = BasePoint::Symbolic(u.clone()).resolve(alg)?;
    let talg = taylor_algebra(alg)?;
    // x ↦ u, v ↦ 1, u ↦ u, all central in the target
    let mut collapse = Vec::with_capacity(3 * m);
    for k in 0..3 * m {
        collapse.push(match k / m {
            1 => target.one(),
            _ => target.from_coef(coords[k % m].clone()),
        });
    }
    let scalar_of = |g: &NCPoly| -> Result<CoefPoly> {
        let c = g.substitute(&collapse)?;
        Ok(c.coefficient(&Word::empty()))
    };
    let linear: Vec<NCPoly> = (0..m)
        .map(|k| target.gen(k).checked_sub(&target.from_coef(coords[k].clone())))
        .collect::<Result<_>>()?;

    let mut out = vec![TaylorTerm {
        indices: vec![],
        coefficient: scalar_of(&embed_in_taylor(f, &talg))?,
        term: target.zero(),
    }];
    out[0].term = target.from_coef(out[0].coefficient.clone());

    let mut stack: Vec<(Vec<usize>, NCPoly, NCPoly)> = vec![(vec![], embed_in_taylor(f, &talg), target.one())];
    while let Some((idx, g, prod)) = stack.pop() {
        for i in 0..m {
            let d = taylor_step(&g, i, m);
            if d.is_zero() {
                continue;
            }
            let mut indices = idx.clone();
            indices.push(i);
            let prod = linear[i].checked_mul(&prod)?;
            let coefficient = scalar_of(&d)?;
            if !coefficient.is_zero() {
                out.push(TaylorTerm {
                    indices: indices.clone(),
                    term: prod.scale(&coefficient)?,
                    coefficient,
                });
            }
            stack.push((indices, d, prod));
        }
    }
    out.sort_by(|a, b| a.indices.len().cmp(&b.indices.len()).then_with(|| a.indices.cmp(&b.indices)));
    Ok(out)
}

/// Sum of all terms of an expansion.
pub fn taylor_sum(terms: &[TaylorTerm]) -> Result<NCPoly> {
    let mut it = terms.iter();
    let Some(first) = it.next() else {
        return Err(Error::precondition("empty expansion"));
    };
    it.try_fold(first.term.clone(), |acc, t| acc.checked_add(&t.term))
}

/// Checks f(u+v) = f(u) + Σ D_{x_{i_n},…,x_{i_1}}(f; u, v, u) in the free algebra on the
/// 2m noncommuting letters `u…, v…`.
pub fn taylor_additive_check(f: &NCPoly) -> Result<bool> {
    let alg = f.algebra();
    let m = alg.m();
    let u = SymbolicPoint::fresh_with_stem(alg, "u");
    let v = SymbolicPoint::fresh_with_stem(alg, "v");
    let names: Vec<String> = u.names.iter().chain(v.names.iter()).cloned().collect();
    let uv = FreeAlgebra::with_names(names, alg.params())?;
    let sum_images: Vec<NCPoly> = (0..m).map(|k| uv.gen(k).checked_add(&uv.gen(m + k))).collect::<Result<_>>()?;
    let lhs = f.substitute(&sum_images)?;

    // x ↦ u, v ↦ v, u ↦ u
    let images: Vec<NCPoly> = (0..3 * m)
        .map(|k| match k / m {
            1 => uv.gen(m + k % m),
            _ => uv.gen(k % m),
        })
        .collect();
    let talg = taylor_algebra(alg)?;
    let mut rhs = embed_in_taylor(f, &talg).substitute(&images)?;
    let mut frontier = vec![embed_in_taylor(f, &talg)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for i in 0..m {
                let d = taylor_step(g, i, m);
                if !d.is_zero() {
                    rhs = rhs.checked_add(&d.substitute(&images)?)?;
                    next.push(d);
                }
            }
        }
        frontier = next;
    }
    Ok(lhs == rhs)
}

/// Parameter context of derivatives at `p`.
pub fn derivative_ctx(alg: &FreeAlgebra, p: &BasePoint) -> Result<ParamCtx> {
    Ok(p.resolve(alg)?.0.params().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{int, rat, ComplexApprox};

    fn plane() -> FreeAlgebra {
        FreeAlgebra::plane(Vec::<String>::new())
    }

    #[test]
    fn commutator_derivatives() {
        let a = FreeAlgebra::new(3, &ParamCtx::empty()).unwrap();
        let f = a.parse("x1*x2 - x2*x1").unwrap();
        let p = BasePoint::Numeric(vec![int(2), int(3), int(5)]);
        assert_eq!(nc_derive(&f, 0, &p).unwrap(), a.parse("3 - x2").unwrap());
        assert_eq!(nc_derive(&f, 1, &p).unwrap(), a.parse("x1 - 2").unwrap());
        assert!(nc_derive(&f, 2, &p).unwrap().is_zero());
        assert!(matches!(nc_derive(&f, 3, &p), Err(Error::IndexOutOfRange { index: 3, len: 3 })));
    }

    #[test]
    fn xy_at_point() {
        let a = plane();
        let f = a.parse("x*y").unwrap();
        let p = BasePoint::Numeric(vec![int(7), int(-2)]);
        assert_eq!(nc_derive(&f, 0, &p).unwrap(), a.constant(int(-2)));
        assert_eq!(nc_derive(&f, 1, &p).unwrap(), a.gen(0));
        let dec = left_decompose(&f, &p).unwrap();
        assert_eq!(dec.constant.as_constant(), Some(int(-14)));
        assert_eq!(dec.reconstruct().unwrap(), f);
    }

    #[test]
    fn circle_decomposition() {
        let a = plane();
        let f = a.parse("x^2+y^2-1").unwrap();
        let p = BasePoint::Numeric(vec![rat(3, 5), rat(4, 5)]);
        let dec = left_decompose(&f, &p).unwrap();
        assert!(dec.constant.is_zero());
        assert_eq!(dec.components[0], a.parse("x + 3/5").unwrap());
        assert_eq!(dec.components[1], a.parse("y + 4/5").unwrap());
        assert_eq!(dec.reconstruct().unwrap(), f);
    }

    #[test]
    fn symbolic_point_derivative() {
        let a = FreeAlgebra::plane(["q"]);
        let f = a.parse("x*y - q*y*x").unwrap();
        let u = SymbolicPoint::fresh(&a);
        let p = BasePoint::Symbolic(u.clone());
        let (t, _) = p.resolve(&a).unwrap();
        assert_eq!(nc_derive(&f, 0, &p).unwrap(), t.parse("u2 - q*y").unwrap());
        assert_eq!(nc_derive(&f, 1, &p).unwrap(), t.parse("x - q*u1").unwrap());
        assert_eq!(left_decompose(&f, &p).unwrap().reconstruct().unwrap(), f.lift(&t).unwrap());
    }

    #[test]
    fn fresh_symbols_avoid_parameters() {
        let a = FreeAlgebra::plane(["u1"]);
        assert_eq!(SymbolicPoint::fresh(&a).names(), ["u1_", "u2_"]);
        assert!(SymbolicPoint::new(&a, vec!["u1".into(), "w".into()]).is_err());
    }

    #[test]
    fn numeric_value_matches_symbolic() {
        let a = FreeAlgebra::plane(["q"]);
        let f = a.parse("x*y - q*y*x + y^2*x").unwrap();
        let mut asg = Assignment::new();
        asg.insert("q".to_string(), rat(2, 3));
        let p1 = vec![int(1), rat(-1, 2)];
        let p2 = vec![int(3), int(4)];
        for i in 0..2 {
            let d = nc_derive(&f, i, &BasePoint::Numeric(p1.clone())).unwrap();
            let direct = d.eval_point(&Point::new(p2.clone()), &asg).unwrap();
            let value = derivative_value(&f, i, &Point::new(p1.clone()), &Point::new(p2.clone()), &asg).unwrap();
            assert_eq!(direct, value);
            let c = |v: &Vec<Rational>| Point::<Rational>::new(v.clone()).to_complex();
            let casg: Assignment<ComplexApprox> = asg.iter().map(|(k, v)| (k.clone(), ComplexApprox::from_rational(v))).collect();
            let cv = derivative_value(&f, i, &c(&p1), &c(&p2), &casg).unwrap();
            assert_eq!(cv, ComplexApprox::from_rational(&value));
        }
    }

    #[test]
    fn taylor_rules() {
        let a = plane();
        let t = taylor_algebra(&a).unwrap();
        assert_eq!(t.gen_names(), ["x", "y", "v1", "v2", "u1", "u2"]);
        assert_eq!(taylor_d(&a.gen(0), &[0]).unwrap(), t.parse("v1").unwrap());
        assert!(taylor_d(&a.gen(1), &[0]).unwrap().is_zero());
        let xy = a.parse("x*y").unwrap();
        assert_eq!(taylor_d(&xy, &[0]).unwrap(), t.parse("v1*u2").unwrap());
        let xx = a.parse("x^2").unwrap();
        assert_eq!(taylor_d(&xx, &[0]).unwrap(), t.parse("v1*u1 + x*v1").unwrap());
        assert_eq!(taylor_d(&xx, &[0, 0]).unwrap(), t.parse("v1^2").unwrap());
        assert!(taylor_d(&xx, &[]).is_err());
    }

    #[test]
    fn centered_expansion_of_square() {
        let a = FreeAlgebra::new(1, &ParamCtx::empty()).unwrap();
        let f = a.parse("x^2").unwrap();
        let u = SymbolicPoint::fresh(&a);
        let terms = taylor_expand_centered(&f, &u).unwrap();
        let shown: Vec<(Vec<usize>, String)> = terms.iter().map(|t| (t.indices.clone(), t.coefficient.to_string())).collect();
        assert_eq!(
            shown,
            vec![(vec![], "u1^2".into()), (vec![0], "2*u1".into()), (vec![0, 0], "1".into())]
        );
        assert_eq!(taylor_sum(&terms).unwrap(), f.lift(&terms[0].term.algebra().clone()).unwrap());
    }

    #[test]
    fn centered_expansion_reconstructs_noncommutative() {
        let a = FreeAlgebra::plane(["d"]);
        for text in ["x*y^2*x - d*y*x", "[x,y]^2*y + x^2 - 1", "y*x*x*y*x + 3", "2*x + 5*y - 1"] {
            let f = a.parse(text).unwrap();
            let terms = taylor_expand_centered(&f, &SymbolicPoint::fresh(&a)).unwrap();
            let target = terms[0].term.algebra().clone();
            assert_eq!(taylor_sum(&terms).unwrap(), f.lift(&target).unwrap(), "{text}");
        }
        let lin = a.parse("2*x + 5*y - 1").unwrap();
        let terms = taylor_expand_centered(&lin, &SymbolicPoint::fresh(&a)).unwrap();
        assert!(terms.iter().all(|t| t.indices.len() <= 1));
    }

    #[test]
    fn reversed_product_order_fails() {
        // the reversed order (x_{i_1}-u_{i_1})…(x_{i_n}-u_{i_n}) does not reconstruct x*y
        let a = plane();
        let f = a.parse("x*y").unwrap();
        let u = SymbolicPoint::fresh(&a);
        let terms = taylor_expand_centered(&f, &u).unwrap();
        let target = terms[0].term.algebra().clone();
        let lin = |k: usize| target.gen(k) - target.param(&u.names()[k]).unwrap();
        let mut rev = target.zero();
        for t in &terms {
            let mut prod = target.one();
            for &i in &t.indices {
                prod = &prod * &lin(i);
            }
            rev = &rev + &prod.scale(&t.coefficient).unwrap();
        }
        assert_ne!(rev, f.lift(&target).unwrap());
    }

    #[test]
    fn first_order_matches_derivative() {
        let a = FreeAlgebra::plane(["q"]);
        let f = a.parse("x*y - q*y*x + x^3*y").unwrap();
        let u = SymbolicPoint::fresh(&a);
        let p = BasePoint::Symbolic(u.clone());
        let (target, coords) = p.resolve(&a).unwrap();
        for k in 0..2 {
            let d = taylor_d(&f, &[k]).unwrap();
            // v ↦ 1, u ↦ p, x ↦ x
            let images: Vec<NCPoly> = (0..6)
                .map(|j| match j / 2 {
                    0 => target.gen(j),
                    1 => target.one(),
                    _ => target.from_coef(coords[j % 2].clone()),
                })
                .collect();
            assert_eq!(d.substitute(&images).unwrap(), nc_derive(&f, k, &p).unwrap());
        }
    }

    #[test]
    fn additive_identity() {
        let a = FreeAlgebra::plane(["d"]);
        for text in ["x^2", "7", "x*y - d*y*x", "[x,y]^2 + y^3*x", "x*y*x*y*y"] {
            assert!(taylor_additive_check(&a.parse(text).unwrap()).unwrap(), "{text}");
        }
    }
}
