//! Ext¹ between finite-dimensional modules over k⟨x₁,…,x_m⟩/(f¹,…,f^r).

use std::collections::BTreeMap;

use crate::coeffs::{Assignment, CoefPoly, ParamCtx, Rational, Scalar};
use crate::error::{Error, Result};
use crate::freealg::{FreeAlgebra, MatrixRep, NCPoly, Point, Word};
use crate::linalg::{rank, Echelon, Matrix};
use crate::ncdiff::{derivative_value, nc_derive, BasePoint, SymbolicPoint};

/// Toggles for the Ext routines.
#[derive(Clone, Copy, Debug)]
pub struct ExtOptions {
    /// Verify that points and matrices satisfy every relation.
    pub check_preconditions: bool,
}

impl Default for ExtOptions {
    fn default() -> Self {
        ExtOptions { check_preconditions: true }
    }
}

/// Entry `(j, k)` is D_k(f^j; p).
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiMatrix {
    pub entries: Vec<Vec<NCPoly>>,
    pub base: BasePoint,
    pub m: usize,
}

pub fn jacobi_matrix(fs: &[NCPoly], alg: &FreeAlgebra, p: &BasePoint) -> Result<JacobiMatrix> {
    let mut entries = Vec::with_capacity(fs.len());
    for f in fs {
        if f.algebra() != alg {
            return Err(Error::Context("relation from a different algebra".into()));
        }
        entries.push((0..alg.m()).map(|k| nc_derive(f, k, p)).collect::<Result<Vec<_>>>()?);
    }
    Ok(JacobiMatrix { entries, base: p.clone(), m: alg.m() })
}

impl JacobiMatrix {
    /// Numeric matrix J(p)(q).
    pub fn eval<S: Scalar>(&self, q: &Point<S>, params: &Assignment<S>) -> Result<Vec<Vec<S>>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.eval_point(q, params)).collect())
            .collect()
    }
}

fn check_point<S: Scalar>(fs: &[NCPoly], p: &Point<S>, params: &Assignment<S>, label: &str) -> Result<()> {
    for (j, f) in fs.iter().enumerate() {
        let v = f.eval_point(p, params)?;
        if !v.is_zero() {
            return Err(Error::precondition(format!(
                "{label} ({p}) is not a zero of relation {j}: value {v}"
            )));
        }
    }
    Ok(())
}

fn common_m(fs: &[NCPoly], fallback: usize) -> Result<usize> {
    let m = fs.first().map_or(fallback, NCPoly::m);
    if fs.iter().any(|f| f.m() != m) {
        return Err(Error::Context("relations have different generator counts".into()));
    }
    Ok(m)
}

/// dim Ext¹(k(p₁), k(p₂)): `m − 1 − rk J(p₁)(p₂)` for p₁ ≠ p₂ and `m − rk J(p)(p)` otherwise.
pub fn ext1_dim_points<S: Scalar>(
    fs: &[NCPoly],
    p1: &Point<S>,
    p2: &Point<S>,
    params: &Assignment<S>,
    opts: ExtOptions,
) -> Result<usize> {
    let m = common_m(fs, p1.dim())?;
    if p1.dim() != m || p2.dim() != m {
        return Err(Error::Dimension(format!("points must have dimension {m}")));
    }
    if opts.check_preconditions {
        check_point(fs, p1, params, "p1")?;
        check_point(fs, p2, params, "p2")?;
    }
    let rows = fs
        .iter()
        .map(|f| (0..m).map(|k| derivative_value(f, k, p1, p2, params)).collect())
        .collect::<Result<Vec<Vec<S>>>>()?;
    let rk = rank(rows);
    if p1 == p2 {
        Ok(m - rk)
    } else if rk >= m {
        Err(Error::Invariant(format!("rank {rk} of J(p1)(p2) exceeds m-1 = {}", m - 1)))
    } else {
        Ok(m - 1 - rk)
    }
}

/// Products ρ(w) for every prefix of `w`, starting from the identity.
fn prefix_products<S: Scalar>(rep: &MatrixRep<S>, letters: &[u32]) -> Result<Vec<Matrix<S>>> {
    let mut out = vec![Matrix::identity(rep.n())];
    for &l in letters {
        let next = out.last().expect("non-empty").checked_mul(&rep.mats[l as usize])?;
        out.push(next);
    }
    Ok(out)
}

fn suffix_products<S: Scalar>(rep: &MatrixRep<S>, letters: &[u32]) -> Result<Vec<Matrix<S>>> {
    let mut out = vec![Matrix::identity(rep.n()); letters.len() + 1];
    for t in (0..letters.len()).rev() {
        out[t] = rep.mats[letters[t] as usize].checked_mul(&out[t + 1])?;
    }
    Ok(out)
}

/// dim Ext¹(V, W) as derivations `(δ_k) ∈ Hom(V,W)^m` with Δf^j = 0, modulo inner ones.
pub fn ext1_general<S: Scalar>(
    fs: &[NCPoly],
    v: &MatrixRep<S>,
    w: &MatrixRep<S>,
    params: &Assignment<S>,
    opts: ExtOptions,
) -> Result<usize> {
    let m = common_m(fs, v.m())?;
    if v.m() != m || w.m() != m {
        return Err(Error::Dimension(format!("representations must have {m} matrices")));
    }
    if opts.check_preconditions {
        for (label, rep) in [("V", v), ("W", w)] {
            for (j, f) in fs.iter().enumerate() {
                if !f.eval_matrix(rep, params)?.is_zero() {
                    return Err(Error::precondition(format!("{label} does not satisfy relation {j}")));
                }
            }
        }
    }
    let (nv, nw) = (v.n(), w.n());
    let hom = nw * nv;
    let ncols = m * hom;
    // column index of δ_k[a][b]
    let col = |k: usize, a: usize, b: usize| k * hom + a * nv + b;

    let mut rows: Vec<Vec<S>> = Vec::new();
    for f in fs {
        let mut block = vec![vec![S::zero(); ncols]; hom];
        for (word, c) in f.terms() {
            let c = c.eval(params)?;
            let letters = word.letters();
            let pre = prefix_products(w, letters)?;
            let suf = suffix_products(v, letters)?;
            for (t, &l) in letters.iter().enumerate() {
                let (left, right) = (&pre[t], &suf[t + 1]);
                for r in 0..nw {
                    for s in 0..nv {
                        let out = &mut block[r * nv + s];
                        for a in 0..nw {
                            let la = c.clone() * left[(r, a)].clone();
                            if la.is_zero() {
                                continue;
                            }
                            for b in 0..nv {
                                let idx = col(l as usize, a, b);
                                out[idx] = out[idx].clone() + la.clone() * right[(b, s)].clone();
                            }
                        }
                    }
                }
            }
        }
        rows.extend(block);
    }
    let dim_z = ncols - if rows.is_empty() { 0 } else { rank(rows) };

    // inner derivations T ↦ (ρ_W(x_k)T − Tρ_V(x_k))_k, one column per entry of T
    let mut inner: Vec<Vec<S>> = Vec::with_capacity(hom);
    for a in 0..nw {
        for b in 0..nv {
            let mut t = Matrix::zeros(nw, nv);
            t[(a, b)] = S::one();
            let mut image = Vec::with_capacity(ncols);
            for k in 0..m {
                let d = w.mats[k].checked_mul(&t)?.checked_sub(&t.checked_mul(&v.mats[k])?)?;
                image.extend(d.entries().iter().cloned());
            }
            inner.push(image);
        }
    }
    let dim_inner = rank(inner);
    dim_z.checked_sub(dim_inner).ok_or_else(|| {
        Error::Invariant(format!("inner derivations ({dim_inner}) exceed derivations ({dim_z})"))
    })
}

/// The pair (D₁(f;u)(v), D₂(f;u)(v)) as commutative polynomials in parameters, u and v.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationIdeal {
    pub ctx: ParamCtx,
    pub gens: [CoefPoly; 2],
    pub u: [String; 2],
    pub v: [String; 2],
}

pub fn relation_ideal(f: &NCPoly) -> Result<RelationIdeal> {
    if f.m() != 2 {
        return Err(Error::precondition(format!("relation ideal needs m = 2, got {}", f.m())));
    }
    let alg = f.algebra();
    let u = SymbolicPoint::fresh_with_stem(alg, "u");
    let ualg = alg.with_params(&alg.params().extended(u.names().iter().cloned()))?;
    let v = SymbolicPoint::fresh_with_stem(&ualg, "v");
    let ctx = ualg.params().extended(v.names().iter().cloned());
    let target = alg.with_params(&ctx)?;
    let images = [target.param(&v.names()[0])?, target.param(&v.names()[1])?];
    let base = BasePoint::Symbolic(u.clone());
    let mut gens = Vec::with_capacity(2);
    for k in 0..2 {
        let d = nc_derive(f, k, &base)?.lift(&target)?;
        gens.push(d.substitute(&images)?.coefficient(&Word::empty()));
    }
    let [g1, g2]: [CoefPoly; 2] = gens.try_into().expect("two generators");
    Ok(RelationIdeal {
        ctx,
        gens: [g1, g2],
        u: [u.names()[0].clone(), u.names()[1].clone()],
        v: [v.names()[0].clone(), v.names()[1].clone()],
    })
}

impl RelationIdeal {
    fn assignment<S: Scalar>(&self, p: &Point<S>, q: &Point<S>, params: &Assignment<S>) -> Result<Assignment<S>> {
        if p.dim() != 2 || q.dim() != 2 {
            return Err(Error::Dimension("relation pairs live in A²×A²".into()));
        }
        let mut asg = params.clone();
        for i in 0..2 {
            asg.insert(self.u[i].clone(), p.0[i].clone());
            asg.insert(self.v[i].clone(), q.0[i].clone());
        }
        Ok(asg)
    }

    /// Values of both generators at `(u, v) = (p, q)`.
    pub fn eval<S: Scalar>(&self, p: &Point<S>, q: &Point<S>, params: &Assignment<S>) -> Result<[S; 2]> {
        let asg = self.assignment(p, q, params)?;
        Ok([self.gens[0].eval(&asg)?, self.gens[1].eval(&asg)?])
    }

    /// Whether `(p, q)` lies on R.
    pub fn contains<S: Scalar>(&self, p: &Point<S>, q: &Point<S>, params: &Assignment<S>) -> Result<bool> {
        Ok(self.eval(p, q, params)?.iter().all(num_traits::Zero::is_zero))
    }
}

/// `base_ext_nonzero || α(m_p) = m_q`, the latter decided as `p = α(q)` coordinatewise.
/// `alpha[i]` is the image of the i-th coordinate, a polynomial in the coordinates.
pub fn ext_quasipoly(alpha: &[CoefPoly], p: &[Rational], q: &[Rational], base_ext_nonzero: bool) -> Result<bool> {
    let n = alpha.len();
    if p.len() != n || q.len() != n || alpha.iter().any(|a| a.ctx().len() != n) {
        return Err(Error::Dimension(format!(
            "automorphism of arity {n} with points of dimension {} and {}",
            p.len(),
            q.len()
        )));
    }
    if base_ext_nonzero {
        return Ok(true);
    }
    for (a, pi) in alpha.iter().zip(p) {
        if a.eval_slice(q) != *pi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For f = g·h, checks Ext¹(k(p₁), k(p₂)) ≠ 0 for all p₁ on C_h and p₂ on C_g.
pub fn factor_ext_check<S: Scalar>(
    g: &NCPoly,
    h: &NCPoly,
    samples1: &[Point<S>],
    samples2: &[Point<S>],
    params: &Assignment<S>,
) -> Result<bool> {
    for p in samples1 {
        if !h.eval_point(p, params)?.is_zero() {
            return Err(Error::precondition(format!("({p}) is not on the curve of the right factor")));
        }
    }
    for p in samples2 {
        if !g.eval_point(p, params)?.is_zero() {
            return Err(Error::precondition(format!("({p}) is not on the curve of the left factor")));
        }
    }
    let f = [g.checked_mul(h)?];
    for p1 in samples1 {
        for p2 in samples2 {
            if ext1_dim_points(&f, p1, p2, params, ExtOptions::default())? == 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Membership of `f` in the two-sided ideal generated by `[x,y]` (or `[x,y]²`), truncated
/// at `degree_bound`.
///
/// The commutator is homogeneous, so each homogeneous component of each parameter
/// monomial of `f` is tested against the span of `a·C·b·C·c` (resp. `a·C·b`) of that degree.
pub fn ideal_membership_bounded(f: &NCPoly, square_commutator: bool, degree_bound: usize) -> Result<bool> {
    if f.m() != 2 {
        return Err(Error::precondition("membership oracle needs m = 2"));
    }
    let deg = f.degree().unwrap_or(0);
    if degree_bound < deg {
        return Err(Error::precondition(format!("degree bound {degree_bound} below deg f = {deg}")));
    }
    // component (parameter monomial, degree) -> word -> coefficient
    let mut parts: BTreeMap<(Vec<u32>, usize), BTreeMap<Vec<u32>, Rational>> = BTreeMap::new();
    for (w, c) in f.terms() {
        for (mono, r) in c.terms() {
            parts
                .entry((mono.0.clone(), w.len()))
                .or_default()
                .insert(w.letters().to_vec(), r.clone());
        }
    }
    let mut spans: BTreeMap<usize, (BTreeMap<Vec<u32>, usize>, Echelon)> = BTreeMap::new();
    for ((_, d), coeffs) in parts {
        let (index, ech) = spans.entry(d).or_insert_with(|| commutator_span(d, square_commutator));
        let mut v = vec![Rational::from_integer(0.into()); index.len()];
        for (w, r) in coeffs {
            v[index[&w]] = r;
        }
        if !ech.contains(&v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Homogeneous degree-`d` part of the ideal, with the word index used for coordinates.
fn commutator_span(d: usize, square: bool) -> (BTreeMap<Vec<u32>, usize>, Echelon) {
    let words = Word::all_of_length(2, d);
    let index: BTreeMap<Vec<u32>, usize> = words.iter().enumerate().map(|(i, w)| (w.letters().to_vec(), i)).collect();
    let mut ech = Echelon::new();
    let c: [(Vec<u32>, i64); 2] = [(vec![0, 1], 1), (vec![1, 0], -1)];
    let ncomm = if square { 2 } else { 1 };
    if d < 2 * ncomm {
        return (index, ech);
    }
    let free = d - 2 * ncomm;
    // split `free` letters into ncomm + 1 gaps
    let mut gap_splits: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..ncomm {
        gap_splits = gap_splits
            .into_iter()
            .flat_map(|s| {
                let used: usize = s.iter().sum();
                (0..=free - used).map(move |k| {
                    let mut t = s.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    for mut split in gap_splits {
        split.push(free - split.iter().sum::<usize>());
        for filler in Word::all_of_length(2, free) {
            let fl = filler.letters();
            let mut v = vec![Rational::from_integer(0.into()); index.len()];
            // expand the product of the gap words and commutators
            let mut partial: Vec<(Vec<u32>, i64)> = vec![(vec![], 1)];
            let mut at = 0;
            for (g, &len) in split.iter().enumerate() {
                let gap = &fl[at..at + len];
                at += len;
                for (w, _) in partial.iter_mut() {
                    w.extend_from_slice(gap);
                }
                if g < ncomm {
                    partial = partial
                        .into_iter()
                        .flat_map(|(w, s)| {
                            c.iter().map(move |(cw, cs)| {
                                let mut nw = w.clone();
                                nw.extend_from_slice(cw);
                                (nw, s * cs)
                            })
                        })
                        .collect();
                }
            }
            for (w, s) in partial {
                v[index[&w]] += Rational::from_integer(s.into());
            }
            ech.insert(v);
        }
    }
    (index, ech)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{int, rat, ComplexApprox};

    fn pt(c: &[Rational]) -> Point<Rational> {
        Point::from_rationals(c)
    }

    fn q_is(v: Rational) -> Assignment<Rational> {
        let mut a = Assignment::new();
        a.insert("q".into(), v);
        a
    }

    #[test]
    fn quantum_plane_jacobi() {
        let a = FreeAlgebra::plane(["q"]);
        let f = a.parse("x*y - q*y*x").unwrap();
        let u = SymbolicPoint::fresh(&a);
        let j = jacobi_matrix(&[f], &a, &BasePoint::Symbolic(u)).unwrap();
        assert_eq!(j.entries[0][0].to_string(), "-q*y + u2");
        assert_eq!(j.entries[0][1].to_string(), "x - q*u1");
        let empty = jacobi_matrix(&[], &a, &BasePoint::Numeric(vec![int(0), int(0)])).unwrap();
        assert!(empty.entries.is_empty());
        assert_eq!(empty.m, 2);
    }

    #[test]
    fn quantum_plane_ext() {
        let a = FreeAlgebra::plane(["q"]);
        let f = [a.parse("x*y - q*y*x").unwrap()];
        let two = q_is(int(2));
        let opts = ExtOptions::default();
        assert_eq!(ext1_dim_points(&f, &pt(&[int(0), int(1)]), &pt(&[int(0), rat(1, 2)]), &two, opts).unwrap(), 1);
        assert_eq!(ext1_dim_points(&f, &pt(&[int(0), int(1)]), &pt(&[int(0), int(2)]), &two, opts).unwrap(), 0);
        assert_eq!(ext1_dim_points(&f, &pt(&[int(0), int(0)]), &pt(&[int(0), int(0)]), &two, opts).unwrap(), 2);
        let err = ext1_dim_points(&f, &pt(&[int(1), int(1)]), &pt(&[int(0), int(0)]), &two, opts).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let off = ExtOptions { check_preconditions: false };
        assert!(ext1_dim_points(&f, &pt(&[int(1), int(1)]), &pt(&[int(0), int(0)]), &two, off).is_ok());
    }

    #[test]
    fn commutative_model_has_no_cross_extensions() {
        let a = FreeAlgebra::plane(Vec::<String>::new());
        let fs = [a.parse("x^2 + y^2 - 1").unwrap(), a.parse("[x,y]").unwrap()];
        let none = Assignment::new();
        let pts = [pt(&[int(1), int(0)]), pt(&[rat(3, 5), rat(4, 5)]), pt(&[int(0), int(-1)])];
        for p in &pts {
            for q in &pts {
                let e = ext1_dim_points(&fs, p, q, &none, ExtOptions::default()).unwrap();
                assert_eq!(e, usize::from(p == q));
            }
        }
    }

    #[test]
    fn general_matches_points() {
        let a = FreeAlgebra::plane(["q"]);
        let f = [a.parse("x*y - q*y*x").unwrap()];
        let two = q_is(int(2));
        let p = pt(&[int(0), int(1)]);
        let q = pt(&[int(0), rat(1, 2)]);
        let g = ext1_general(&f, &MatrixRep::from_point(&p), &MatrixRep::from_point(&q), &two, ExtOptions::default());
        assert_eq!(g.unwrap(), 1);
        let g = ext1_general(&f, &MatrixRep::from_point(&p), &MatrixRep::from_point(&p), &two, ExtOptions::default());
        assert_eq!(g.unwrap(), ext1_dim_points(&f, &p, &p, &two, ExtOptions::default()).unwrap());
    }

    #[test]
    fn smooth_point_self_extension() {
        let a = FreeAlgebra::plane(Vec::<String>::new());
        let fs = [a.parse("x^2 + y^2 - 1").unwrap(), a.parse("[x,y]").unwrap()];
        let p = MatrixRep::from_point(&pt(&[rat(3, 5), rat(4, 5)]));
        assert_eq!(ext1_general(&fs, &p, &p, &Assignment::new(), ExtOptions::default()).unwrap(), 1);
    }

    #[test]
    fn quantum_two_dimensional_simples_do_not_extend() {
        // q = -1: x ↦ diag(λ, -λ), y ↦ [[0, γ], [1, 0]]
        let a = FreeAlgebra::plane(["q"]);
        let f = [a.parse("x*y - q*y*x").unwrap()];
        let asg = q_is(int(-1));
        let rep = |l: i64, g: i64| {
            MatrixRep::new(vec![
                Matrix::<Rational>::from_rationals(&[vec![int(l), int(0)], vec![int(0), int(-l)]]),
                Matrix::from_rationals(&[vec![int(0), int(g)], vec![int(1), int(0)]]),
            ])
            .unwrap()
        };
        let (v, w) = (rep(1, 2), rep(3, 5));
        assert_eq!(ext1_general(&f, &v, &w, &asg, ExtOptions::default()).unwrap(), 0);
        assert_eq!(ext1_general(&f, &w, &v, &asg, ExtOptions::default()).unwrap(), 0);
        assert!(ext1_general(&f, &v, &v, &asg, ExtOptions::default()).unwrap() >= 1);
    }

    #[test]
    fn cusp_relation_on_diagonal() {
        let a = FreeAlgebra::plane(Vec::<String>::new());
        let r = relation_ideal(&a.parse("y^2 - x^3").unwrap()).unwrap();
        let none = Assignment::new();
        assert!(r.contains(&pt(&[int(0), int(0)]), &pt(&[int(0), int(0)]), &none).unwrap());
        for t in [1, 2, -3] {
            let p = pt(&[int(t * t), int(t * t * t)]);
            assert!(!r.contains(&p, &p, &none).unwrap());
        }
        assert!(relation_ideal(&FreeAlgebra::new(3, &ParamCtx::empty()).unwrap().gen(0)).is_err());
    }

    #[test]
    fn relation_ideal_generators() {
        let a = FreeAlgebra::plane(["q"]);
        let r = relation_ideal(&a.parse("x*y - q*y*x").unwrap()).unwrap();
        assert_eq!(r.gens[0].to_string(), "-q*v2 + u2");
        assert_eq!(r.gens[1].to_string(), "-q*u1 + v1");
    }

    #[test]
    fn shift_automorphism() {
        let ctx = ParamCtx::new(["x"]);
        let shift = [&CoefPoly::var(&ctx, "x").unwrap() + &CoefPoly::one(&ctx)];
        assert!(ext_quasipoly(&shift, &[int(0)], &[int(-1)], false).unwrap());
        assert!(!ext_quasipoly(&shift, &[int(0)], &[int(1)], false).unwrap());
        let id = [CoefPoly::var(&ctx, "x").unwrap()];
        assert!(ext_quasipoly(&id, &[int(2)], &[int(2)], false).unwrap());
        assert!(!ext_quasipoly(&id, &[int(2)], &[int(3)], false).unwrap());
        assert!(ext_quasipoly(&id, &[int(2)], &[int(3)], true).unwrap());
        assert!(ext_quasipoly(&id, &[int(2), int(1)], &[int(3)], true).is_err());
    }

    #[test]
    fn shift_convention_matches_skew_extension() {
        // θx − (x+1)θ with θ acting by zero
        let a = FreeAlgebra::with_names(vec!["x".into(), "t".into()], &ParamCtx::empty()).unwrap();
        let f = [a.parse("t*x - x*t - t").unwrap()];
        let ctx = ParamCtx::new(["x"]);
        let shift = [&CoefPoly::var(&ctx, "x").unwrap() + &CoefPoly::one(&ctx)];
        for pa in -2..=2 {
            for qa in -2..=2 {
                if pa == qa {
                    continue;
                }
                let e = ext1_dim_points(&f, &pt(&[int(pa), int(0)]), &pt(&[int(qa), int(0)]), &Assignment::new(), ExtOptions::default()).unwrap();
                assert_eq!(e >= 1, ext_quasipoly(&shift, &[int(pa)], &[int(qa)], false).unwrap(), "{pa} {qa}");
            }
        }
    }

    #[test]
    fn product_curves_extend() {
        let a = FreeAlgebra::plane(Vec::<String>::new());
        let g = a.parse("x*y + 1").unwrap();
        let h = a.parse("x").unwrap();
        let none = Assignment::new();
        let s1 = [pt(&[int(0), int(5)]), pt(&[int(0), rat(-1, 3)])];
        let s2 = [pt(&[int(1), int(-1)]), pt(&[int(2), rat(-1, 2)])];
        assert!(factor_ext_check(&g, &h, &s1, &s2, &none).unwrap());
        assert!(factor_ext_check(&g, &h, &s2, &s1, &none).is_err());
        let line = [pt(&[int(0), int(1)]), pt(&[int(0), int(-4)])];
        assert!(factor_ext_check(&h, &h, &line, &line, &none).unwrap());
        let c = |p: &Point<Rational>| p.to_complex();
        let cs1: Vec<_> = s1.iter().map(c).collect();
        let cs2: Vec<_> = s2.iter().map(c).collect();
        assert!(factor_ext_check::<ComplexApprox>(&g, &h, &cs1, &cs2, &Assignment::new()).unwrap());
    }

    #[test]
    fn commutator_ideal_membership() {
        let a = FreeAlgebra::plane(["t"]);
        let c2 = a.parse("[x,y]*[x,y]").unwrap();
        assert!(ideal_membership_bounded(&c2, true, 4).unwrap());
        assert!(!ideal_membership_bounded(&a.parse("[x,y]").unwrap(), true, 4).unwrap());
        assert!(ideal_membership_bounded(&a.parse("[x,y]").unwrap(), false, 4).unwrap());
        assert!(ideal_membership_bounded(&a.parse("x*[x,y]*y*[x,y]").unwrap(), true, 6).unwrap());
        assert!(ideal_membership_bounded(&a.parse("t*x*[x,y]*y*[x,y] - [x,y]*[x,y]").unwrap(), true, 6).unwrap());
        assert!(!ideal_membership_bounded(&a.parse("x*y*x*y").unwrap(), true, 4).unwrap());
        assert!(ideal_membership_bounded(&a.parse("x*y*x*y").unwrap(), true, 3).is_err());
        assert!(ideal_membership_bounded(&a.zero(), true, 0).unwrap());
    }
}
