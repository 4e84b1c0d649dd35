//! Two-dimensional representations through the trace ring C₂ = k[t_X, d_X, t_Y, d_Y, t_XY].
//!
//! Every element of k⟨x,y⟩ evaluated on generic 2×2 matrices X, Y reduces to
//! `c₁·XY + c₂·X + c₃·Y + c₄·I` with coefficients in C₂. The reduction is a left action on
//! the basis `[XY, X, Y, I]`:
//!
//! ```text
//! X·I = X        X·X = t_X X − d_X        X·Y = XY     X·XY = t_X XY − d_X Y
//! Y·I = Y        Y·X = −XY + t_Y X + t_X Y + (t_XY − t_X t_Y)
//! Y·Y = t_Y Y − d_Y                       Y·XY = d_Y X + t_XY Y − t_X d_Y
//! ```
//!
//! The last line follows from `Y·XY = (YX)·Y` and the two lines above it.

use serde_json::{json, Value};

use crate::coeffs::{Assignment, CoefPoly, ParamCtx, Rational, Scalar};
use crate::error::{Error, Result};
use crate::freealg::{MatrixRep, NCPoly};
use crate::linalg::{rank, Matrix};

pub const TRACE_SYMBOLS: [&str; 5] = ["t_X", "d_X", "t_Y", "d_Y", "t_XY"];

/// Trace symbols followed by the given parameters.
pub fn trace_ctx(params: &ParamCtx) -> Result<ParamCtx> {
    for s in TRACE_SYMBOLS {
        if params.index_of(s).is_some() {
            return Err(Error::Context(format!("parameter `{s}` clashes with a trace symbol")));
        }
    }
    Ok(ParamCtx::new(TRACE_SYMBOLS).extended(params.names().iter().cloned()))
}

/// `c1·XY + c2·X + c3·Y + c4·I`.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceVector {
    pub c1: CoefPoly,
    pub c2: CoefPoly,
    pub c3: CoefPoly,
    pub c4: CoefPoly,
}

impl TraceVector {
    pub fn coefficients(&self) -> [&CoefPoly; 4] {
        [&self.c1, &self.c2, &self.c3, &self.c4]
    }

    fn from_array([c1, c2, c3, c4]: [CoefPoly; 4]) -> Self {
        TraceVector { c1, c2, c3, c4 }
    }

    pub fn ctx(&self) -> &ParamCtx {
        self.c1.ctx()
    }
}

struct Syms {
    t_x: CoefPoly,
    d_x: CoefPoly,
    t_y: CoefPoly,
    d_y: CoefPoly,
    t_xy: CoefPoly,
}

impl Syms {
    fn new(ctx: &ParamCtx) -> Self {
        let v = |i| CoefPoly::var_at(ctx, i);
        Syms { t_x: v(0), d_x: v(1), t_y: v(2), d_y: v(3), t_xy: v(4) }
    }
}

/// Left multiplication by X (`letter = 0`) or Y (`letter = 1`) on `[XY, X, Y, I]`.
fn act(letter: u32, v: &[CoefPoly; 4], s: &Syms) -> [CoefPoly; 4] {
    let [a, b, c, d] = v;
    if letter == 0 {
        // a·(t_X XY − d_X Y) + b·(t_X X − d_X) + c·XY + d·X
        [
            &(a * &s.t_x) + c,
            &(b * &s.t_x) + d,
            -&(a * &s.d_x),
            -&(b * &s.d_x),
        ]
    } else {
        // a·(d_Y X + t_XY Y − t_X d_Y) + b·(−XY + t_Y X + t_X Y + t_XY − t_X t_Y)
        //   + c·(t_Y Y − d_Y) + d·Y
        let txty = &s.t_x * &s.t_y;
        [
            -b,
            &(a * &s.d_y) + &(b * &s.t_y),
            &(&(&(a * &s.t_xy) + &(b * &s.t_x)) + &(c * &s.t_y)) + d,
            &(&(-&(&(a * &s.t_x) * &s.d_y)) + &(b * &(&s.t_xy - &txty))) - &(c * &s.d_y),
        ]
    }
}

/// Reduces `f ∈ k⟨x,y⟩` to its trace vector.
pub fn ch_reduce(f: &NCPoly) -> Result<TraceVector> {
    if f.m() != 2 {
        return Err(Error::precondition(format!("trace reduction needs m = 2, got {}", f.m())));
    }
    let ctx = trace_ctx(f.params())?;
    let s = Syms::new(&ctx);
    let zero = CoefPoly::zero(&ctx);
    let mut acc = [zero.clone(), zero.clone(), zero.clone(), zero];
    for (w, c) in f.terms() {
        let mut v = [
            CoefPoly::zero(&ctx),
            CoefPoly::zero(&ctx),
            CoefPoly::zero(&ctx),
            CoefPoly::one(&ctx),
        ];
        for &l in w.letters().iter().rev() {
            v = act(l, &v, &s);
        }
        let c = c.lift(&ctx)?;
        for (a, x) in acc.iter_mut().zip(v.iter()) {
            *a = &*a + &(&c * x);
        }
    }
    Ok(TraceVector::from_array(acc))
}

/// det[X,Y] = −¼((2t_XY − t_X t_Y)² − (t_X² − 4d_X)(t_Y² − 4d_Y)) over `trace_ctx(params)`.
pub fn formanek2(params: &ParamCtx) -> Result<CoefPoly> {
    let ctx = trace_ctx(params)?;
    let s = Syms::new(&ctx);
    let two = CoefPoly::constant(&ctx, Rational::from_integer(2.into()));
    let four = CoefPoly::constant(&ctx, Rational::from_integer(4.into()));
    let a = &(&two * &s.t_xy) - &(&s.t_x * &s.t_y);
    let b = &(&s.t_x * &s.t_x) - &(&four * &s.d_x);
    let c = &(&s.t_y * &s.t_y) - &(&four * &s.d_y);
    let inner = &(&a * &a) - &(&b * &c);
    Ok(inner.scale(&Rational::new((-1).into(), 4.into())))
}

/// The five trace coordinates (tr X, det X, tr Y, det Y, tr XY).
pub fn trace_coords<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>) -> Result<[S; 5]> {
    if x.rows() != 2 || x.cols() != 2 || y.rows() != 2 || y.cols() != 2 {
        return Err(Error::Dimension("trace coordinates need 2x2 matrices".into()));
    }
    Ok([x.trace(), x.det2(), y.trace(), y.det2(), x.checked_mul(y)?.trace()])
}

fn with_traces<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>, params: &Assignment<S>) -> Result<Assignment<S>> {
    let mut asg = params.clone();
    for (name, v) in TRACE_SYMBOLS.iter().zip(trace_coords(x, y)?) {
        asg.insert(name.to_string(), v);
    }
    Ok(asg)
}

/// `c1(γ)·XY + c2(γ)·X + c3(γ)·Y + c4(γ)·I` where γ are the traces of `(X, Y)`.
pub fn trace_eval<S: Scalar>(tv: &TraceVector, x: &Matrix<S>, y: &Matrix<S>, params: &Assignment<S>) -> Result<Matrix<S>> {
    let asg = with_traces(x, y, params)?;
    let basis = [x.checked_mul(y)?, x.clone(), y.clone(), Matrix::identity(2)];
    let mut out = Matrix::zeros(2, 2);
    for (c, b) in tv.coefficients().iter().zip(&basis) {
        out = out.checked_add(&b.scale(&c.eval(&asg)?))?;
    }
    Ok(out)
}

/// Value of a trace-ring polynomial at the traces of `(X, Y)`.
pub fn trace_poly_eval<S: Scalar>(p: &CoefPoly, x: &Matrix<S>, y: &Matrix<S>, params: &Assignment<S>) -> Result<S> {
    p.eval(&with_traces(x, y, params)?)
}

/// Equations `c₁ = … = c₄ = 0` with the open condition `formanek ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Simp2System {
    pub equations: [CoefPoly; 4],
    pub formanek: CoefPoly,
    /// Trace symbols already eliminated, with their solved values.
    pub solved: Vec<(String, CoefPoly)>,
}

/// Outcome of the desk-scale feasibility analysis.
#[derive(Clone, Debug, PartialEq)]
pub enum Simp2Verdict {
    /// No 2-dimensional simple modules.
    Empty { reason: String },
    /// The simple locus is `{remaining = 0, formanek ≠ 0}` in the free trace coordinates.
    Locus { remaining: Vec<CoefPoly>, formanek: CoefPoly },
}

pub fn simp2_system(f: &NCPoly) -> Result<Simp2System> {
    let tv = ch_reduce(f)?;
    Ok(Simp2System {
        formanek: formanek2(f.params())?,
        equations: [tv.c1, tv.c2, tv.c3, tv.c4],
        solved: Vec::new(),
    })
}

/// Splits `e = coeff·v + rest` when `v` occurs only linearly with a constant coefficient.
fn linear_in(e: &CoefPoly, v: usize) -> Option<(Rational, CoefPoly)> {
    if e.degree_in(v) != 1 {
        return None;
    }
    let ctx = e.ctx();
    let mut coeff = None;
    let mut rest = Vec::new();
    for (m, c) in e.terms() {
        if m.0[v] == 1 {
            if m.degree() != 1 || coeff.is_some() {
                return None;
            }
            coeff = Some(c.clone());
        } else {
            rest.push((m.clone(), c.clone()));
        }
    }
    coeff.map(|c| (c, CoefPoly::from_terms(ctx, rest)))
}

impl Simp2System {
    pub fn ctx(&self) -> &ParamCtx {
        self.formanek.ctx()
    }

    /// Substitutes rational values for user parameters.
    pub fn specialize(&self, values: &Assignment<Rational>) -> Simp2System {
        Simp2System {
            equations: self.equations.clone().map(|e| e.specialize(values)),
            formanek: self.formanek.specialize(values),
            solved: self.solved.iter().map(|(n, p)| (n.clone(), p.specialize(values))).collect(),
        }
    }

    /// Repeatedly solves an equation that is linear in a trace symbol with constant
    /// coefficient, substituting the solution everywhere.
    pub fn restrict(&self) -> Result<Simp2System> {
        let mut sys = self.clone();
        'outer: loop {
            for j in 0..4 {
                // prefer determinants, then traces
                for v in [1, 3, 2, 0, 4] {
                    let e = &sys.equations[j];
                    let Some((c, rest)) = linear_in(e, v) else { continue };
                    let value = rest.scale(&(-c.recip()));
                    let name = TRACE_SYMBOLS[v];
                    for k in 0..4 {
                        sys.equations[k] = if k == j {
                            CoefPoly::zero(sys.ctx())
                        } else {
                            sys.equations[k].substitute(name, &value)?
                        };
                    }
                    sys.formanek = sys.formanek.substitute(name, &value)?;
                    for (_, p) in sys.solved.iter_mut() {
                        *p = p.substitute(name, &value)?;
                    }
                    sys.solved.push((name.to_string(), value));
                    continue 'outer;
                }
            }
            return Ok(sys);
        }
    }

    /// Restricts, then looks for an obstruction.
    pub fn verdict(&self) -> Result<Simp2Verdict> {
        let r = self.restrict()?;
        if r.formanek.is_zero() {
            return Ok(Simp2Verdict::Empty { reason: "the restricted Formanek element vanishes".into() });
        }
        let mut remaining = Vec::new();
        for (j, e) in r.equations.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if let Some(c) = e.as_constant() {
                return Ok(Simp2Verdict::Empty {
                    reason: format!("equation c{} is the nonzero constant {c}", j + 1),
                });
            }
            if let Some(ratio) = e.ratio_to(&r.formanek) {
                return Ok(Simp2Verdict::Empty {
                    reason: format!("equation c{} is {ratio} times the Formanek element", j + 1),
                });
            }
            remaining.push(e.clone());
        }
        Ok(Simp2Verdict::Locus { remaining, formanek: r.formanek })
    }

    /// Whether the trace point (t_X, d_X, t_Y, d_Y, t_XY) with parameter values gives a
    /// simple representation.
    pub fn check_point<S: Scalar>(&self, traces: &[S; 5], params: &Assignment<S>) -> Result<bool> {
        let mut asg = params.clone();
        for (n, v) in TRACE_SYMBOLS.iter().zip(traces) {
            asg.insert(n.to_string(), v.clone());
        }
        for e in &self.equations {
            if !e.eval(&asg)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(!self.formanek.eval(&asg)?.is_zero())
    }

    pub fn to_json(&self) -> Value {
        let ctx = self.ctx();
        json!({
            "equations": self.equations.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "formanek": self.formanek.to_string(),
            "solved": self.solved.iter().map(|(n, v)| json!({"symbol": n, "value": v.to_string()})).collect::<Vec<_>>(),
            "variables": TRACE_SYMBOLS,
            "parameters": ctx.names()[TRACE_SYMBOLS.len()..].to_vec(),
        })
    }
}

/// Entries of each relation on generic n×n matrices, in variables `x{i}_{p}{q}` followed by
/// the parameters. Returns the context and the r·n² polynomials, row-major per relation.
pub fn rep_variety_ideal(fs: &[NCPoly], n: usize) -> Result<(ParamCtx, Vec<CoefPoly>)> {
    if n == 0 {
        return Err(Error::precondition("matrix size must be at least 1"));
    }
    let m = fs.first().map_or(0, NCPoly::m);
    let params = fs.first().map_or_else(ParamCtx::empty, |f| f.params().clone());
    let mut names = Vec::with_capacity(m * n * n);
    for i in 1..=m {
        for p in 1..=n {
            for q in 1..=n {
                names.push(format!("x{i}_{p}{q}"));
            }
        }
    }
    let ctx = ParamCtx::new(names).extended(params.names().iter().cloned());
    type Mat = Vec<Vec<CoefPoly>>;
    let generic: Vec<Mat> = (0..m)
        .map(|i| (0..n).map(|p| (0..n).map(|q| CoefPoly::var_at(&ctx, i * n * n + p * n + q)).collect()).collect())
        .collect();
    let identity: Mat = (0..n)
        .map(|p| (0..n).map(|q| if p == q { CoefPoly::one(&ctx) } else { CoefPoly::zero(&ctx) }).collect())
        .collect();
    let mul = |a: &Mat, b: &Mat| -> Mat {
        (0..n)
            .map(|p| {
                (0..n)
                    .map(|q| (0..n).fold(CoefPoly::zero(&ctx), |acc, k| &acc + &(&a[p][k] * &b[k][q])))
                    .collect()
            })
            .collect()
    };
    let mut out = Vec::with_capacity(fs.len() * n * n);
    for f in fs {
        if f.m() != m || f.params() != &params {
            return Err(Error::Context("relations from different algebras".into()));
        }
        let mut acc: Mat = vec![vec![CoefPoly::zero(&ctx); n]; n];
        for (w, c) in f.terms() {
            let mut t = identity.clone();
            for &l in w.letters() {
                t = mul(&t, &generic[l as usize]);
            }
            let c = c.lift(&ctx)?;
            for p in 0..n {
                for q in 0..n {
                    acc[p][q] = &acc[p][q] + &(&c * &t[p][q]);
                }
            }
        }
        out.extend(acc.into_iter().flatten());
    }
    Ok((ctx, out))
}

/// det(XY − YX) ≠ 0.
pub fn simple2_check<S: Scalar>(x: &Matrix<S>, y: &Matrix<S>) -> Result<bool> {
    if x.rows() != 2 || x.cols() != 2 || y.rows() != 2 || y.cols() != 2 {
        return Err(Error::Dimension("simple2_check needs 2x2 matrices".into()));
    }
    Ok(!x.commutator(y)?.det2().is_zero())
}

/// Whether the generated matrix algebra is all of M_n (Burnside).
pub fn simple_n_check<S: Scalar>(rep: &MatrixRep<S>) -> bool {
    let n = rep.n();
    if n == 0 {
        return false;
    }
    let full = n * n;
    let mut basis: Vec<Vec<S>> = Vec::new();
    let mut queue: Vec<Matrix<S>> = Vec::new();
    let consider = |m: Matrix<S>, basis: &mut Vec<Vec<S>>, queue: &mut Vec<Matrix<S>>| {
        let mut trial = basis.clone();
        trial.push(m.entries().to_vec());
        if rank(trial.clone()) > basis.len() {
            *basis = trial;
            queue.push(m);
        }
    };
    consider(Matrix::identity(n), &mut basis, &mut queue);
    for g in &rep.mats {
        consider(g.clone(), &mut basis, &mut queue);
    }
    while let Some(m) = queue.pop() {
        if basis.len() == full {
            break;
        }
        for g in &rep.mats {
            consider(g * &m, &mut basis, &mut queue);
        }
    }
    basis.len() == full
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{int, rat, ComplexApprox};
    use crate::freealg::FreeAlgebra;

    fn show(tv: &TraceVector) -> [String; 4] {
        tv.coefficients().map(ToString::to_string)
    }

    fn plane(params: &[&str]) -> FreeAlgebra {
        FreeAlgebra::plane(params.iter().copied())
    }

    #[test]
    fn cayley_hamilton_identities() {
        let a = plane(&[]);
        let r = |t: &str| show(&ch_reduce(&a.parse(t).unwrap()).unwrap());
        assert_eq!(r("x^2"), ["0", "t_X", "0", "-d_X"]);
        assert_eq!(r("x^3"), ["0", "t_X^2 - d_X", "0", "-t_X*d_X"]);
        assert_eq!(r("y*x"), ["-1", "t_Y", "t_X", "-t_X*t_Y + t_XY"]);
    }

    #[test]
    fn deformed_circle() {
        let a = plane(&["d"]);
        let tv = ch_reduce(&a.parse("x^2+y^2-1+d*[x,y]").unwrap()).unwrap();
        let ctx = tv.ctx().clone();
        let p = |t: &str| {
            let b = FreeAlgebra::new(2, &ctx).unwrap();
            b.parse(t).unwrap().coefficient(&crate::freealg::Word::empty())
        };
        assert_eq!(tv.c1, p("2*d"));
        assert_eq!(tv.c2, p("t_X - d*t_Y"));
        assert_eq!(tv.c3, p("t_Y - d*t_X"));
        assert_eq!(tv.c4, p("-d_X - d_Y - 1 - d*t_XY + d*t_X*t_Y"));
    }

    #[test]
    fn cusp_and_elliptic_vectors() {
        let a = plane(&["a", "b", "q"]);
        let tv = ch_reduce(&a.parse("y^2-x^3").unwrap()).unwrap();
        let ctx = tv.ctx().clone();
        let b = FreeAlgebra::new(2, &ctx).unwrap();
        let p = |t: &str| b.parse(t).unwrap().coefficient(&crate::freealg::Word::empty());
        assert_eq!(tv.coefficients().map(Clone::clone), [p("0"), p("-(t_X^2 - d_X)"), p("t_Y"), p("-(d_Y - t_X*d_X)")]);
        let tv = ch_reduce(&a.parse("y^2-x^3-a*x-b+q*[x,y]").unwrap()).unwrap();
        assert_eq!(
            tv.coefficients().map(Clone::clone),
            [
                p("2*q"),
                p("-t_X^2 + d_X - a - q*t_Y"),
                p("t_Y - q*t_X"),
                p("-d_Y + t_X*d_X - b - q*t_XY + q*t_X*t_Y"),
            ]
        );
    }

    #[test]
    fn formanek_shape() {
        let f = formanek2(&ParamCtx::empty()).unwrap();
        let t_xy = crate::coeffs::Monomial(vec![0, 0, 0, 0, 2]);
        assert_eq!(f.coefficient(&t_xy), int(-1));
        let mut at = Assignment::new();
        at.insert("t_X".to_string(), int(0));
        at.insert("t_Y".to_string(), int(0));
        let g = f.specialize(&at);
        assert_eq!(g.to_string(), "4*d_X*d_Y - t_XY^2");
        let id = [int(2), int(1), int(2), int(1), int(2)];
        assert_eq!(f.eval_slice(&id), int(0));
    }

    #[test]
    fn trace_eval_matches_matrices() {
        let a = plane(&["q"]);
        let f = a.parse("x*y*x - q*y^2*x*y + 3*x - 1/2").unwrap();
        let tv = ch_reduce(&f).unwrap();
        let x = Matrix::<Rational>::from_rationals(&[vec![int(1), int(2)], vec![int(-3), rat(1, 2)]]);
        let y = Matrix::from_rationals(&[vec![int(0), int(5)], vec![int(7), int(-1)]]);
        let mut asg = Assignment::new();
        asg.insert("q".into(), rat(2, 3));
        let rep = MatrixRep::new(vec![x.clone(), y.clone()]).unwrap();
        assert_eq!(trace_eval(&tv, &x, &y, &asg).unwrap(), f.eval_matrix(&rep, &asg).unwrap());
        let one = TraceVector::from_array([0, 0, 0, 1].map(|v| CoefPoly::constant(tv.ctx(), int(v))));
        assert_eq!(trace_eval(&one, &x, &y, &asg).unwrap(), Matrix::identity(2));
        let fm = formanek2(&ParamCtx::new(["q"])).unwrap();
        assert_eq!(trace_poly_eval(&fm, &x, &y, &asg).unwrap(), x.commutator(&y).unwrap().det2());
    }

    #[test]
    fn circle_system() {
        let a = plane(&["d"]);
        let sys = simp2_system(&a.parse("x^2+y^2-1+d*[x,y]").unwrap()).unwrap();
        let mut d = Assignment::new();
        d.insert("d".into(), rat(1, 3));
        assert!(matches!(sys.specialize(&d).verdict().unwrap(), Simp2Verdict::Empty { .. }));
        d.insert("d".into(), int(0));
        let r = sys.specialize(&d).restrict().unwrap();
        let solved: Vec<(&str, String)> = r.solved.iter().map(|(n, p)| (n.as_str(), p.to_string())).collect();
        assert_eq!(solved, vec![("t_X", "0".to_string()), ("t_Y", "0".to_string()), ("d_X", "-d_Y - 1".to_string())]);
        assert!(matches!(sys.specialize(&d).verdict().unwrap(), Simp2Verdict::Locus { ref remaining, .. } if remaining.is_empty()));
    }

    #[test]
    fn cusp_hypercusp() {
        let a = plane(&[]);
        let sys = simp2_system(&a.parse("y^2-x^3").unwrap()).unwrap();
        let r = sys.restrict().unwrap();
        assert_eq!(r.formanek.to_string(), "3*t_X^5 - t_XY^2");
    }

    #[test]
    fn elliptic_restriction() {
        let a = plane(&["a", "b"]);
        let sys = simp2_system(&a.parse("y^2-x^3-a*x-b").unwrap()).unwrap();
        let r = sys.restrict().unwrap();
        let b = FreeAlgebra::new(2, r.ctx()).unwrap();
        let expect = b.parse("-t_XY^2+3*t_X^5+7*a*t_X^3-3*b*t_X^2+4*a^2*t_X-4*a*b").unwrap();
        assert_eq!(r.formanek, expect.coefficient(&crate::freealg::Word::empty()));
    }

    #[test]
    fn commutator_square_curve_has_no_simples() {
        let a = plane(&[]);
        let sys = simp2_system(&a.parse("x^2-1+[x,y]^2*y").unwrap()).unwrap();
        let v = sys.verdict().unwrap();
        assert!(matches!(v, Simp2Verdict::Empty { ref reason } if reason.contains("Formanek")), "{v:?}");
    }

    #[test]
    fn quantum_commutator_family() {
        let a = plane(&["q"]);
        let sys = simp2_system(&a.parse("x*y + q*[x,y]^2*y*x - 1").unwrap()).unwrap();
        // t_X = t_Y = 0, t_XY = 1, 4 q d_X d_Y = q − 1
        for (q, dx) in [(int(2), int(1)), (int(-1), rat(1, 3)), (rat(5, 7), int(-2))] {
            let dy = (&q - int(1)) / (int(4) * &q * &dx);
            let mut asg = Assignment::new();
            asg.insert("q".into(), q);
            assert!(sys.check_point(&[int(0), dx, int(0), dy, int(1)], &asg).unwrap());
        }
    }

    #[test]
    fn generic_square() {
        let a = FreeAlgebra::new(1, &ParamCtx::empty()).unwrap();
        let (ctx, gens) = rep_variety_ideal(&[a.parse("x^2").unwrap()], 2).unwrap();
        assert_eq!(ctx.names(), ["x1_11", "x1_12", "x1_21", "x1_22"]);
        let shown: Vec<String> = gens.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["x1_11^2 + x1_12*x1_21", "x1_11*x1_12 + x1_12*x1_22", "x1_11*x1_21 + x1_21*x1_22", "x1_12*x1_21 + x1_22^2"]);
        let (_, one) = rep_variety_ideal(&[a.parse("x^2 - 1").unwrap()], 1).unwrap();
        assert_eq!(one[0].to_string(), "x1_11^2 - 1");
    }

    #[test]
    fn commutator_variety() {
        let a = plane(&[]);
        let (_, gens) = rep_variety_ideal(&[a.parse("x*y - y*x").unwrap()], 2).unwrap();
        assert_eq!(gens.len(), 4);
        let x = [int(1), int(2), int(0), int(1)];
        let y = [int(3), int(-4), int(0), int(3)];
        let values: Vec<Rational> = x.iter().chain(&y).cloned().collect();
        assert!(gens.iter().all(|g| g.eval_slice(&values) == int(0)));
    }

    #[test]
    fn simplicity() {
        let e12 = Matrix::<Rational>::from_rationals(&[vec![int(0), int(1)], vec![int(0), int(0)]]);
        let e21 = Matrix::from_rationals(&[vec![int(0), int(0)], vec![int(1), int(0)]]);
        assert!(simple2_check(&e12, &e21).unwrap());
        assert!(simple_n_check(&MatrixRep::new(vec![e12.clone(), e21]).unwrap()));
        let d = Matrix::diag(&[int(1), int(2)]);
        assert!(!simple2_check(&d, &d.pow(2)).unwrap());
        let s = Matrix::diag(&[int(3), int(3), int(3)]);
        assert!(!simple_n_check(&MatrixRep::new(vec![s.clone(), s]).unwrap()));
        // x ↦ e_{n1}, y ↦ Σ e_{i,i+1}
        for n in [2, 3] {
            let mut x = Matrix::<Rational>::zeros(n, n);
            x[(n - 1, 0)] = int(1);
            let mut y = Matrix::zeros(n, n);
            for i in 0..n - 1 {
                y[(i, i + 1)] = int(1);
            }
            assert!(simple_n_check(&MatrixRep::new(vec![x, y]).unwrap()));
        }
        // q = e^{2πi/3}: x ↦ diag(1, q, q²), y ↦ cyclic shift
        let w = ComplexApprox::root_of_unity(3, 1);
        let x = Matrix::diag(&[ComplexApprox::real(1.0), w, w * w]);
        let mut y = Matrix::zeros(3, 3);
        for i in 0..3 {
            y[(i, (i + 1) % 3)] = ComplexApprox::real(1.0);
        }
        assert!(simple_n_check(&MatrixRep::new(vec![x, y]).unwrap()));
    }
}
