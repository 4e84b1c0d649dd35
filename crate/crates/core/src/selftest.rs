//! The acceptance suite, shared by `ncplane selftest` and the `acceptance` test target.

use std::fmt;
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::{int, rat, Assignment, CoefPoly, ComplexApprox, ParamCtx, Rational, Scalar};
use crate::curvezoo::{
    cusp_versal_check, cusp_versal_check_family, cusp_versal_family, elliptic_add, elliptic_no_short_cycles,
    elliptic_partners, elliptic_sample_points, quantum_relation_map, quantum_simples_exact, EllipticConfig,
    EllipticPoint,
};
use crate::error::{Error, Result};
use crate::extcalc::{ext1_dim_points, ext1_general, factor_ext_check, ideal_membership_bounded, ExtOptions};
use crate::extgraph::build_graph;
use crate::freealg::{FreeAlgebra, MatrixRep, NCPoly, Point, Word};
use crate::linalg::Matrix;
use crate::ncdiff::{left_decompose, taylor_expand_centered, taylor_sum, BasePoint, SymbolicPoint};
use crate::rep2::{
    ch_reduce, formanek2, rep_variety_ideal, simp2_system, simple_n_check, trace_eval, trace_poly_eval, Simp2Verdict,
};

/// Wall-clock budget per criterion.
pub const TIME_BUDGET: Duration = Duration::from_secs(10);

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:>2} {}: {} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

type Check = fn() -> Result<(bool, String)>;

pub const CRITERIA: [(u32, &str, Check); 12] = [
    (1, "trace reduction regression", c01_trace_reduction),
    (2, "formanek oracle", c02_formanek),
    (3, "cusp system", c03_cusp),
    (4, "elliptic formanek", c04_elliptic_formanek),
    (5, "taylor/decomposition identities", c05_taylor),
    (6, "ext rank formula", c06_ext_rank),
    (7, "rep-variety ideal", c07_rep_variety),
    (8, "quantum plane", c08_quantum_plane),
    (9, "elliptic collinearity", c09_elliptic_collinearity),
    (10, "cusp versal check", c10_cusp_versal),
    (11, "negative control", c11_negative_control),
    (12, "factorization property", c12_factorization),
];

pub fn run_criterion(id: u32) -> Result<CriterionReport> {
    let (id, title, check) = CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .copied()
        .ok_or(Error::IndexOutOfRange { index: id as usize, len: CRITERIA.len() })?;
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if elapsed > TIME_BUDGET {
        passed = false;
        detail.push_str("; over the time budget");
    }
    Ok(CriterionReport { id, title, passed, detail, elapsed })
}

pub fn run_all() -> Vec<CriterionReport> {
    CRITERIA
        .iter()
        .map(|c| run_criterion(c.0).expect("listed criterion"))
        .collect()
}

/// Deterministic generators for randomized checks.
pub mod gen {
    use super::*;

    pub fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    pub fn rational(rng: &mut impl Rng, bound: i64, max_den: i64) -> Rational {
        rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=max_den))
    }

    pub fn integer(rng: &mut impl Rng, bound: i64) -> Rational {
        int(rng.gen_range(-bound..=bound))
    }

    /// A polynomial with at most `max_terms` rational terms of degree at most `max_deg`.
    pub fn poly(rng: &mut impl Rng, alg: &FreeAlgebra, max_deg: usize, max_terms: usize) -> NCPoly {
        let mut out = alg.zero();
        for _ in 0..rng.gen_range(1..=max_terms) {
            let len = rng.gen_range(0..=max_deg);
            let letters = (0..len).map(|_| rng.gen_range(0..alg.m() as u32)).collect();
            let c = rational(rng, 5, 3);
            out = &out + &alg.monomial(Word::new(letters), CoefPoly::constant(alg.params(), c));
        }
        out
    }

    pub fn point(rng: &mut impl Rng, m: usize) -> Point<Rational> {
        Point::new((0..m).map(|_| rational(rng, 6, 4)).collect())
    }

    pub fn matrix2(rng: &mut impl Rng, bound: i64) -> Matrix<Rational> {
        Matrix::from_rationals(&[
            vec![integer(rng, bound), integer(rng, bound)],
            vec![integer(rng, bound), integer(rng, bound)],
        ])
    }
}

fn plane() -> FreeAlgebra {
    FreeAlgebra::plane(Vec::<String>::new())
}

fn var(ctx: &ParamCtx, name: &str) -> Result<CoefPoly> {
    CoefPoly::var(ctx, name)
}

fn c01_trace_reduction() -> Result<(bool, String)> {
    let f = FreeAlgebra::plane(["d"]).parse("x^2+y^2-1+d*[x,y]")?;
    let tv = ch_reduce(&f)?;
    let ctx = tv.ctx().clone();
    let v = |n: &str| var(&ctx, n);
    let (d, tx, ty, dx, dy, txy) = (v("d")?, v("t_X")?, v("t_Y")?, v("d_X")?, v("d_Y")?, v("t_XY")?);
    let one = CoefPoly::one(&ctx);
    let expected = [
        d.scale(&int(2)),
        &tx - &(&d * &ty),
        &ty - &(&d * &tx),
        &(&(&(&-&dx - &dy) - &one) - &(&d * &txy)) + &(&d * &(&tx * &ty)),
    ];
    let got = tv.coefficients();
    let ok = got.iter().zip(&expected).all(|(g, e)| *g == e);
    Ok((ok, format!("c = ({}, {}, {}, {})", got[0], got[1], got[2], got[3])))
}

fn c02_formanek() -> Result<(bool, String)> {
    let mut rng = gen::rng(2);
    let formanek = formanek2(&ParamCtx::empty())?;
    let none = Assignment::new();
    for _ in 0..200 {
        let (x, y) = (gen::matrix2(&mut rng, 9), gen::matrix2(&mut rng, 9));
        if trace_poly_eval(&formanek, &x, &y, &none)? != x.commutator(&y)?.det2() {
            return Ok((false, format!("formanek mismatch at X = {x}, Y = {y}")));
        }
    }
    let alg = plane();
    for _ in 0..200 {
        let f = gen::poly(&mut rng, &alg, 6, 6);
        let (x, y) = (gen::matrix2(&mut rng, 4), gen::matrix2(&mut rng, 4));
        let rep = MatrixRep::new(vec![x.clone(), y.clone()])?;
        if trace_eval(&ch_reduce(&f)?, &x, &y, &none)? != f.eval_matrix(&rep, &none)? {
            return Ok((false, format!("trace_eval mismatch for {f}")));
        }
    }
    Ok((true, "200 determinant pairs and 200 reductions agree".into()))
}

fn c03_cusp() -> Result<(bool, String)> {
    let f = plane().parse("y^2-x^3")?;
    let restricted = simp2_system(&f)?.restrict()?;
    let ctx = restricted.formanek.ctx().clone();
    let (tx, txy) = (var(&ctx, "t_X")?, var(&ctx, "t_XY")?);
    let hypercusp = &txy.pow(2) - &tx.pow(5).scale(&int(3));
    let ratio = restricted.formanek.ratio_to(&hypercusp);
    let ok = ratio.as_ref().is_some_and(|r| !r.is_zero());
    let ratio = ratio.map_or_else(|| "none".to_string(), |r| r.to_string());
    Ok((ok, format!("restricted formanek {}, ratio to t_XY^2 - 3*t_X^5 is {ratio}", restricted.formanek)))
}

fn c04_elliptic_formanek() -> Result<(bool, String)> {
    let f = FreeAlgebra::plane(["a", "b"]).parse("y^2-x^3-a*x-b")?;
    let restricted = simp2_system(&f)?.restrict()?;
    let ctx = restricted.formanek.ctx().clone();
    let v = |n: &str| var(&ctx, n);
    let (a, b, tx, txy) = (v("a")?, v("b")?, v("t_X")?, v("t_XY")?);
    let terms = [
        -&txy.pow(2),
        tx.pow(5).scale(&int(3)),
        (&a * &tx.pow(3)).scale(&int(7)),
        (&b * &tx.pow(2)).scale(&int(-3)),
        (&a.pow(2) * &tx).scale(&int(4)),
        (&a * &b).scale(&int(-4)),
    ];
    let expected = terms.iter().fold(CoefPoly::zero(&ctx), |acc, t| &acc + t);
    Ok((restricted.formanek == expected, format!("restricted formanek {}", restricted.formanek)))
}

fn c05_taylor() -> Result<(bool, String)> {
    let mut rng = gen::rng(5);
    for n in 0..500 {
        let m = 1 + n % 3;
        let alg = FreeAlgebra::new(m, &ParamCtx::empty())?;
        let f = gen::poly(&mut rng, &alg, 6, 6);
        let p = gen::point(&mut rng, m);
        let dec = left_decompose(&f, &BasePoint::Numeric(p.0.clone()))?;
        if dec.reconstruct()? != f {
            return Ok((false, format!("reconstruction failed for {f} at ({p})")));
        }
    }
    let alg = plane();
    for _ in 0..100 {
        let f = gen::poly(&mut rng, &alg, 6, 5);
        let terms = taylor_expand_centered(&f, &SymbolicPoint::fresh(&alg))?;
        let target = terms[0].term.algebra().clone();
        if taylor_sum(&terms)? != f.lift(&target)? {
            return Ok((false, format!("centered expansion does not sum to {f}")));
        }
    }
    Ok((true, "500 decompositions and 100 centered expansions reconstruct f".into()))
}

/// Relations through `p` and `q` for the commutative model: [x,y] and a random f₀.
fn commutative_model(rng: &mut impl Rng, p: &Point<Rational>, q: &Point<Rational>) -> Result<Vec<NCPoly>> {
    let alg = plane();
    let (x, y) = (alg.gen(0), alg.gen(1));
    let c = |r: &Rational| alg.constant(r.clone());
    let (p1, p2, q1, q2) = (&p.0[0], &p.0[1], &q.0[0], &q.0[1]);
    let line = &(&(&x - &c(p1)) * &c(&(q2 - p2))) - &(&(&y - &c(p2)) * &c(&(q1 - p1)));
    let vanishing = [
        line,
        &(&x - &c(p1)) * &(&x - &c(q1)),
        &(&y - &c(p2)) * &(&y - &c(q2)),
        &(&x - &c(p1)) * &(&y - &c(q2)),
    ];
    let mut f0 = alg.zero();
    for v in &vanishing {
        f0 = &f0 + &v.scale_rational(&gen::integer(rng, 4));
    }
    if f0.is_zero() {
        f0 = vanishing[0].clone();
    }
    Ok(vec![f0, x.commutator(&y)?])
}

fn c06_ext_rank() -> Result<(bool, String)> {
    let mut rng = gen::rng(6);
    let none = Assignment::new();
    let opts = ExtOptions::default();
    for _ in 0..100 {
        let p = gen::point(&mut rng, 2);
        let mut q = gen::point(&mut rng, 2);
        while q == p {
            q = gen::point(&mut rng, 2);
        }
        let fs = commutative_model(&mut rng, &p, &q)?;
        let d = ext1_dim_points(&fs, &p, &q, &none, opts)?;
        if d != 0 {
            return Ok((false, format!("commutative model {} gave Ext = {d} at ({p}), ({q})", fs[0])));
        }
    }
    let qalg = FreeAlgebra::plane(["q"]);
    let f = [qalg.parse("x*y-q*y*x")?];
    for qv in [int(-1), int(2), int(3)] {
        let mut params = Assignment::new();
        params.insert("q".to_string(), qv.clone());
        for _ in 0..10 {
            let s = gen::rational(&mut rng, 6, 4);
            let s = if s.is_zero() { int(1) } else { s };
            let p = if rng.gen_bool(0.5) { Point::new(vec![int(0), s.clone()]) } else { Point::new(vec![s.clone(), int(0)]) };
            let image = quantum_relation_map(&qv, &p)?;
            if ext1_dim_points(&f, &p, &image, &params, opts)? != 1 {
                return Ok((false, format!("partner pair ({p}) -> ({image}) at q = {qv}")));
            }
            let other = if p.0[0].is_zero() {
                Point::new(vec![int(0), &image.0[1] + int(1)])
            } else {
                Point::new(vec![int(0), s])
            };
            if ext1_dim_points(&f, &p, &other, &params, opts)? != 0 {
                return Ok((false, format!("non-partner pair ({p}) -> ({other}) at q = {qv}")));
            }
        }
    }
    let alg = plane();
    for n in 0..50 {
        let (fs, p, q) = if n % 2 == 0 {
            let g = gen::poly(&mut rng, &alg, 4, 5);
            let p = gen::point(&mut rng, 2);
            let g = &g - &alg.constant(g.eval_point(&p, &none)?);
            (vec![g], p.clone(), p)
        } else {
            let p = gen::point(&mut rng, 2);
            let q = gen::point(&mut rng, 2);
            let h = alg.gen(0) - alg.constant(p.0[0].clone());
            let g = alg.gen(1) - alg.constant(q.0[1].clone());
            let mid = gen::poly(&mut rng, &alg, 2, 3);
            (vec![&(&g * &mid) * &h], p, q)
        };
        let points = ext1_dim_points(&fs, &p, &q, &none, opts)?;
        let general = ext1_general(&fs, &MatrixRep::from_point(&p), &MatrixRep::from_point(&q), &none, opts)?;
        if points != general {
            return Ok((false, format!("ext1_general {general} vs ext1_dim_points {points} for {}", fs[0])));
        }
    }
    Ok((true, "commutative pairs 0, quantum partners 1, non-partners 0, 50 general agreements".into()))
}

fn c07_rep_variety() -> Result<(bool, String)> {
    let alg = FreeAlgebra::new(1, &ParamCtx::empty())?;
    let (ctx, gens) = rep_variety_ideal(&[alg.parse("x^2")?], 2)?;
    let v = |n: &str| var(&ctx, n);
    let (a, b, c, d) = (v("x1_11")?, v("x1_12")?, v("x1_21")?, v("x1_22")?);
    let expected = [&(&a * &a) + &(&b * &c), &(&a * &b) + &(&b * &d), &(&c * &a) + &(&d * &c), &(&c * &b) + &(&d * &d)];
    let ok = gens.len() == 4 && expected.iter().all(|e| gens.contains(e));
    let shown: Vec<String> = gens.iter().map(ToString::to_string).collect();
    Ok((ok, shown.join(", ")))
}

fn c08_quantum_plane() -> Result<(bool, String)> {
    let none = Assignment::new();
    let minus = plane().parse("x*y+y*x")?;
    let rep = quantum_simples_exact(int(1), int(1))?;
    let relation = minus.eval_matrix(&rep, &none)?.is_zero();
    let simple = simple_n_check(&rep);
    let pts = [Point::new(vec![int(0), int(1)]), Point::new(vec![int(0), int(-1)])];
    let cycle = build_graph(&pts, &[minus], &none)?.has_complete_cycle();
    let two = plane().parse("x*y-2*y*x")?;
    let chain = [
        Point::new(vec![int(0), int(1)]),
        Point::new(vec![int(0), rat(1, 2)]),
        Point::new(vec![int(0), rat(1, 4)]),
    ];
    let g = build_graph(&chain, &[two], &none)?;
    let no_cycle = !g.has_complete_cycle();
    let (m, n) = g.split_no_cycle()?;
    let valid = !m.is_empty()
        && !n.is_empty()
        && m.len() + n.len() == g.len()
        && m.is_disjoint(&n)
        && m.iter().all(|&i| n.iter().all(|&j| !g.has_edge(i, j)));
    let ok = relation && simple && cycle && no_cycle && valid;
    Ok((
        ok,
        format!(
            "relation {relation}, simple {simple}, q=-1 cycle {cycle}, q=2 chain acyclic {no_cycle}, split M={m:?} N={n:?} valid {valid}"
        ),
    ))
}

fn c09_elliptic_collinearity() -> Result<(bool, String)> {
    const TOL: f64 = 1e-7;
    let mut worst = 0.0f64;
    let err = |a: &ComplexApprox, b: &ComplexApprox| (*a - *b).norm();
    for q in [int(0), rat(1, 2), int(1)] {
        let cfg = EllipticConfig::new(int(-1), int(0), q.clone())?;
        let qc = ComplexApprox::from_rational(&q);
        for p in elliptic_sample_points(&cfg, 10) {
            let parts = elliptic_partners(&cfg, &p)?;
            if parts.tangent {
                return Ok((false, format!("sample ({p}) is a tangent point")));
            }
            for r in parts.points() {
                worst = worst.max(cfg.residual(&r).norm());
            }
            let (a, b) = (&parts.q1, &parts.q2);
            match elliptic_add(&cfg, &EllipticPoint::Affine(a.clone()), &EllipticPoint::Affine(b.clone()))? {
                EllipticPoint::Affine(s) => worst = worst.max(err(&s.0[0], &p.0[0])).max(err(&s.0[1], &p.0[1])),
                EllipticPoint::Infinity => return Ok((false, format!("Q1 + Q2 = O at ({p})"))),
            }
            let slope = (b.0[1] - a.0[1])
                .try_div(&(b.0[0] - a.0[0]))
                .ok_or_else(|| Error::Invariant("vertical chord".into()))?;
            worst = worst.max(err(&slope, &-qc));
        }
        if !q.is_zero() && !elliptic_no_short_cycles(&cfg, &elliptic_sample_points(&cfg, 10))? {
            return Ok((false, format!("short partner cycle at q = {q}")));
        }
    }
    // exact branch: √D is rational at the 2-torsion point (0, 0)
    let cfg = EllipticConfig::new(int(-1), int(0), int(0))?;
    let origin = Point::new(vec![int(0), int(0)]);
    let exact = crate::curvezoo::elliptic_collinearity_check(&cfg, &origin)?;
    Ok((worst < TOL && exact, format!("max error {worst:.2e} over 30 samples; exact check at origin {exact}")))
}

fn c10_cusp_versal() -> Result<(bool, String)> {
    let base = cusp_versal_check();
    let (mut rx, ry) = cusp_versal_family();
    rx[1][0] = CoefPoly::var(rx[0][0].ctx(), "t")?;
    let perturbed = cusp_versal_check_family(&rx, &ry)?;
    Ok((base && !perturbed, format!("family {base}, perturbed by t in entry (2,1) {perturbed}")))
}

fn c11_negative_control() -> Result<(bool, String)> {
    let f = plane().parse("x^2-1+[x,y]^2*y")?;
    let verdict = simp2_system(&f)?.restrict()?.verdict()?;
    let empty = matches!(verdict, Simp2Verdict::Empty { .. });
    let pts = [Point::new(vec![int(1), int(0)]), Point::new(vec![int(-1), int(2)])];
    let cycle = build_graph(&pts, &[f], &Assignment::new())?.has_complete_cycle();
    let verdict = match &verdict {
        Simp2Verdict::Empty { reason } => format!("no 2-dimensional simples ({reason})"),
        Simp2Verdict::Locus { formanek, .. } => format!("simple locus where {formanek} is nonzero"),
    };
    Ok((empty && cycle, format!("{verdict}; 2-point graph complete cycle {cycle}")))
}

fn c12_factorization() -> Result<(bool, String)> {
    let alg = plane();
    let (g, h) = (alg.parse("x*y+1")?, alg.parse("x")?);
    let mut rng = gen::rng(12);
    let mut on_h = Vec::new();
    let mut on_g = Vec::new();
    while on_g.len() < 20 {
        let t = gen::rational(&mut rng, 9, 5);
        if !t.is_zero() {
            on_h.push(Point::new(vec![int(0), gen::rational(&mut rng, 9, 5)]));
            on_g.push(Point::new(vec![t.clone(), -t.recip()]));
        }
    }
    let mut all = true;
    for (p1, p2) in on_h.iter().zip(&on_g) {
        all &= factor_ext_check(&g, &h, std::slice::from_ref(p1), std::slice::from_ref(p2), &Assignment::new())?;
    }
    let sq = ideal_membership_bounded(&alg.parse("[x,y]^2")?, true, 4)?;
    let lin = ideal_membership_bounded(&alg.parse("[x,y]")?, true, 4)?;
    Ok((all && sq && !lin, format!("20 pairs carry Ext {all}; [x,y]^2 member {sq}; [x,y] member {lin}")))
}
