use std::fmt::Write as _;

use clap::Args;
use serde_json::{json, Value};

use super::format::{self, CliScalar};
use super::{validation, AlgebraArgs, Output};
use crate::coeffs::{parse_rational, ComplexApprox, Rational};
use crate::curvezoo::{classify_quadric, QuadricCoeffs, Shift};
use crate::error::{Error, Result};
use crate::extcalc::{ext1_dim_points, ext1_general, ideal_membership_bounded, relation_ideal, ExtOptions};
use crate::extgraph::{build_graph, ExtGraph};
use crate::freealg::{MatrixRep, Point};
use crate::linalg::Matrix;
use crate::ncdiff::{left_decompose, taylor_additive_check, taylor_expand_centered, taylor_sum, BasePoint, SymbolicPoint};
use crate::rep2::{rep_variety_ideal, simp2_system, Simp2Verdict};
use crate::selftest;

#[derive(Args, Debug)]
pub(crate) struct DeriveArgs {
    #[command(flatten)]
    alg: AlgebraArgs,
    /// Rational base point, e.g. "1,-1/2"; symbolic u1..um when omitted.
    #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
    at: Option<String>,
    #[arg(long)]
    json: bool,
}

pub(crate) fn derive(a: &DeriveArgs) -> Result<Output> {
    let (alg, fs) = a.alg.build()?;
    let base = match &a.at {
        Some(p) => {
            let p = Point::<Rational>::parse(p)?;
            if p.dim() != alg.m() {
                return Err(Error::Dimension(format!("point has {} coordinates for {} generators", p.dim(), alg.m())));
            }
            BasePoint::Numeric(p.0)
        }
        None => BasePoint::Symbolic(SymbolicPoint::fresh(&alg)),
    };
    let mut text = String::new();
    let mut items = Vec::new();
    let mut all_ok = true;
    for f in &fs {
        let dec = left_decompose(f, &base)?;
        let ok = dec.reconstruct()? == f.lift(dec.components[0].algebra())?;
        all_ok &= ok;
        let coords: Vec<String> = dec.base_coords().iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "f = {f}\np = ({})\nf(p) = {}", coords.join(", "), dec.constant);
        let mut ds = serde_json::Map::new();
        for (name, d) in alg.gen_names().iter().zip(&dec.components) {
            let _ = writeln!(text, "D_{name}(f; p) = {d}");
            ds.insert(name.clone(), Value::from(d.to_string()));
        }
        let _ = writeln!(text, "reconstruction: {}", if ok { "ok" } else { "FAILED" });
        items.push(json!({
            "relation": f.to_string(),
            "point": coords,
            "value": dec.constant.to_string(),
            "derivatives": ds,
            "reconstructs": ok,
        }));
    }
    if a.json {
        return Ok(Output::json(&json!({ "decompositions": items }), all_ok));
    }
    Ok(Output::checked(text, all_ok))
}

#[derive(Args, Debug)]
pub(crate) struct TaylorArgs {
    #[command(flatten)]
    alg: AlgebraArgs,
    #[arg(long)]
    json: bool,
}

pub(crate) fn taylor(a: &TaylorArgs) -> Result<Output> {
    let f = a.alg.single()?;
    let centre = SymbolicPoint::fresh(f.algebra());
    let terms = taylor_expand_centered(&f, &centre)?;
    let target = terms[0].term.algebra().clone();
    let sums = taylor_sum(&terms)? == f.lift(&target)?;
    let additive = taylor_additive_check(&f)?;
    let names = f.algebra().gen_names();
    let label = |idx: &[usize]| idx.iter().map(|&i| names[i].clone()).collect::<Vec<_>>();
    let mut text = format!("f = {f}\ncentre = ({})\n", centre.names().join(", "));
    let mut items = Vec::new();
    for t in &terms {
        let _ = writeln!(text, "D[{}] = {}", label(&t.indices).join(","), t.coefficient);
        items.push(json!({
            "indices": label(&t.indices),
            "coefficient": t.coefficient.to_string(),
            "term": t.term.to_string(),
        }));
    }
    let _ = writeln!(text, "sum equals f: {sums}\nadditive identity: {additive}");
    if a.json {
        let v = json!({
            "relation": f.to_string(),
            "centre": centre.names(),
            "terms": items,
            "sum_matches": sums,
            "additive": additive,
        });
        return Ok(Output::json(&v, sums && additive));
    }
    Ok(Output::checked(text, sums && additive))
}

#[derive(Args, Debug)]
pub(crate) struct ExtArgs {
    #[command(flatten)]
    alg: AlgebraArgs,
    #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
    p1: Option<String>,
    #[arg(long, value_name = "POINT", allow_hyphen_values = true)]
    p2: Option<String>,
    /// First module as matrices "a,b;c,d|e,f;g,h", one block per generator.
    #[arg(long, value_name = "MATRICES", allow_hyphen_values = true, conflicts_with_all = ["p1", "p2"])]
    v: Option<String>,
    /// Second module, same syntax as --v.
    #[arg(long, value_name = "MATRICES", allow_hyphen_values = true)]
    w: Option<String>,
    /// Use the complex backend.
    #[arg(long)]
    complex: bool,
    #[arg(long)]
    json: bool,
}

fn parse_rep<S: CliScalar>(text: &str) -> Result<MatrixRep<S>> {
    let mats = text
        .split('|')
        .map(|block| {
            let rows = block
                .split(';')
                .map(|r| r.split(',').map(S::parse_scalar).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            Matrix::from_rows(rows)
        })
        .collect::<Result<Vec<_>>>()?;
    MatrixRep::new(mats)
}

fn ext_with<S: CliScalar>(a: &ExtArgs) -> Result<(usize, &'static str)> {
    let (_, fs) = a.alg.build()?;
    let params = a.alg.assignment::<S>()?;
    let opts = ExtOptions::default();
    match (&a.p1, &a.p2, &a.v, &a.w) {
        (Some(p1), Some(p2), None, None) => {
            let d = ext1_dim_points(&fs, &Point::<S>::parse(p1)?, &Point::<S>::parse(p2)?, &params, opts)?;
            Ok((d, "points"))
        }
        (None, None, Some(v), Some(w)) => {
            let d = ext1_general(&fs, &parse_rep::<S>(v)?, &parse_rep::<S>(w)?, &params, opts)?;
            Ok((d, "modules"))
        }
        _ => Err(validation("give either --p1 and --p2, or --v and --w")),
    }
}

pub(crate) fn ext(a: &ExtArgs) -> Result<Output> {
    let (d, mode) = if a.complex { ext_with::<ComplexApprox>(a)? } else { ext_with::<Rational>(a)? };
    if a.json {
        return Ok(Output::json(&json!({ "ext1": d, "mode": mode }), true));
    }
    Ok(Output::ok(format!("{d}\n")))
}

#[derive(Args, Debug)]
pub(crate) struct RelationArgs {
    #[command(flatten)]
    alg: AlgebraArgs,
    /// Base point of a pair to test.
    #[arg(long, value_name = "POINT", allow_hyphen_values = true, requires = "p2")]
    p1: Option<String>,
    #[arg(long, value_name = "POINT", allow_hyphen_values = true, requires = "p1")]
    p2: Option<String>,
    #[arg(long)]
    complex: bool,
    #[arg(long)]
    json: bool,
}

fn pair_test<S: CliScalar>(a: &RelationArgs, ideal: &crate::extcalc::RelationIdeal) -> Result<Option<bool>> {
    match (&a.p1, &a.p2) {
        (Some(p), Some(q)) => {
            let params = a.alg.assignment::<S>()?;
            Ok(Some(ideal.contains(&Point::<S>::parse(p)?, &Point::<S>::parse(q)?, &params)?))
        }
        _ => Ok(None),
    }
}

pub(crate) fn relation(a: &RelationArgs) -> Result<Output> {
    let f = a.alg.single()?;
    let ideal = relation_ideal(&f)?;
    let pair = if a.complex { pair_test::<ComplexApprox>(a, &ideal)? } else { pair_test::<Rational>(a, &ideal)? };
    if a.json {
        let v = json!({
            "relation": f.to_string(),
            "base": ideal.u,
            "target": ideal.v,
            "generators": ideal.gens.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "pair_in_relation": pair,
        });
        return Ok(Output::json(&v, true));
    }
    let mut text = format!(
        "f = {f}\nbase = ({}), target = ({})\ng1 = {}\ng2 = {}\n",
        ideal.u.join(", "),
        ideal.v.join(", "),
        ideal.gens[0],
        ideal.gens[1]
    );
    if let Some(b) = pair {
        let _ = writeln!(text, "pair in relation: {b}");
    }
    Ok(Output::ok(text))
}

#[derive(Args, Debug)]
pub(crate) struct GraphArgs {
    #[command(flatten)]
    alg: AlgebraArgs,
    /// Vertices as points separated by ';', e.g. "0,1;0,-1".
    #[arg(long, value_name = "POINTS", allow_hyphen_values = true, conflicts_with = "from_json")]
    points: Option<String>,
    /// Read a graph {"vertices": [...], "edges": [[i, j], ...]} instead of building one.
    #[arg(long, value_name = "FILE")]
    from_json: Option<std::path::PathBuf>,
    /// Report complete cycles and the completion filter.
    #[arg(long)]
    analyze: bool,
    /// Split an acyclic graph into (M, N) with no edge from M to N.
    #[arg(long)]
    split: bool,
    /// Print Graphviz DOT.
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    #[arg(long)]
    complex: bool,
    #[arg(long)]
    json: bool,
}

fn graph_from_points<S: CliScalar>(a: &GraphArgs, text: &str) -> Result<ExtGraph> {
    let (_, fs) = a.alg.build()?;
    let params = a.alg.assignment::<S>()?;
    let points = text.split(';').map(Point::<S>::parse).collect::<Result<Vec<_>>>()?;
    let g = build_graph(&points, &fs, &params)?;
    let labels = points.iter().map(|p| p.0.iter().map(CliScalar::show).collect()).collect();
    ExtGraph::with_coords(labels, g.edges().iter().copied())
}

pub(crate) fn graph(a: &GraphArgs) -> Result<Output> {
    let g = match (&a.points, &a.from_json) {
        (Some(p), None) if a.complex => graph_from_points::<ComplexApprox>(a, p)?,
        (Some(p), None) => graph_from_points::<Rational>(a, p)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| validation(format!("{}: {e}", path.display())))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| validation(format!("invalid JSON: {e}")))?;
            ExtGraph::from_json(&v)?
        }
        _ => return Err(validation("give --points or --from-json")),
    };
    if a.dot {
        return Ok(Output::ok(g.to_dot()));
    }
    let cycle = g.has_complete_cycle();
    let split = if cycle { None } else { Some(g.split_no_cycle()?) };
    if a.json {
        let v = json!({
            "graph": g.to_json(),
            "complete_cycle": cycle,
            "completion_candidate": g.completion_candidate_filter(),
            "split": split.as_ref().map(|(m, n)| json!({ "m": m, "n": n })),
        });
        return Ok(Output::json(&v, true));
    }
    let mut text = String::new();
    for (i, c) in g.vertices().iter().enumerate() {
        let _ = writeln!(text, "v{i} = ({})", c.join(", "));
    }
    for (i, j) in g.edges() {
        let _ = writeln!(text, "v{i} -> v{j}");
    }
    if a.analyze {
        let _ = writeln!(text, "complete_cycle: {cycle}\ncompletion_candidate: {}", g.completion_candidate_filter());
    }
    if a.split {
        match &split {
            Some((m, n)) => {
                let _ = writeln!(text, "split: M = {}, N = {}", format::set(m.iter().copied()), format::set(n.iter().copied()));
            }
            None => text.push_str("split: none (complete cycle)\n"),
        }
    }
    Ok(Output::ok(text))
}

#[derive(Args, Debug)]
pub(crate) struct ReduceArgs {
    #[command(flatten)]
    alg: AlgebraArgs,
    /// Eliminate linearly solvable trace symbols and give a verdict.
    #[arg(long)]
    restrict: bool,
    #[arg(long)]
    json: bool,
}

fn verdict_json(v: &Simp2Verdict) -> Value {
    match v {
        Simp2Verdict::Empty { reason } => json!({ "kind": "empty", "reason": reason }),
        Simp2Verdict::Locus { remaining, formanek } => json!({
            "kind": "locus",
            "remaining": remaining.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "formanek": formanek.to_string(),
        }),
    }
}

pub(crate) fn reduce(a: &ReduceArgs) -> Result<Output> {
    let f = a.alg.single()?;
    let mut sys = simp2_system(&f)?;
    let values = a.alg.assignment::<Rational>()?;
    if !values.is_empty() {
        sys = sys.specialize(&values);
    }
    let restricted = if a.restrict { Some((sys.restrict()?, sys.verdict()?)) } else { None };
    if a.json {
        let v = match &restricted {
            None => sys.to_json(),
            Some((r, verdict)) => json!({
                "system": sys.to_json(),
                "restricted": r.to_json(),
                "verdict": verdict_json(verdict),
            }),
        };
        return Ok(Output::json(&v, true));
    }
    let mut text = format!("f = {f}\n");
    for (j, e) in sys.equations.iter().enumerate() {
        let _ = writeln!(text, "c{} = {e}", j + 1);
    }
    let _ = writeln!(text, "formanek = {}", sys.formanek);
    if let Some((r, verdict)) = restricted {
        for (n, v) in &r.solved {
            let _ = writeln!(text, "solved {n} = {v}");
        }
        for e in r.equations.iter().filter(|e| !e.is_zero()) {
            let _ = writeln!(text, "remaining {e} = 0");
        }
        let _ = writeln!(text, "restricted formanek = {}", r.formanek);
        match verdict {
            Simp2Verdict::Empty { reason } => {
                let _ = writeln!(text, "verdict: no 2-dimensional simples ({reason})");
            }
            Simp2Verdict::Locus { .. } => text.push_str("verdict: simple locus where the restricted formanek is nonzero\n"),
        }
    }
    Ok(Output::ok(text))
}

#[derive(Args, Debug)]
pub(crate) struct RepvarietyArgs {
    #[command(flatten)]
    alg: AlgebraArgs,
    /// Matrix size.
    #[arg(short = 'n', long, default_value_t = 2)]
    n: usize,
    #[arg(long)]
    json: bool,
}

pub(crate) fn repvariety(a: &RepvarietyArgs) -> Result<Output> {
    let (_, fs) = a.alg.build()?;
    let (ctx, gens) = rep_variety_ideal(&fs, a.n)?;
    let shown: Vec<String> = gens.iter().map(ToString::to_string).collect();
    if a.json {
        return Ok(Output::json(&json!({ "variables": ctx.names(), "generators": shown }), true));
    }
    Ok(Output::ok(shown.iter().map(|s| format!("{s}\n")).collect()))
}

#[derive(Args, Debug)]
pub(crate) struct ClassifyArgs {
    /// Coefficients λ1,λ2,δ,e,f,g of λ1*x^2+λ2*y^2+δ*[x,y]+e*x+f*y+g.
    #[arg(long, value_name = "L1,L2,D,E,F,G", allow_hyphen_values = true)]
    coeffs: String,
    #[arg(long)]
    json: bool,
}

fn shift_json<S: CliScalar>(s: &crate::curvezoo::AffineShift<S>) -> Value {
    json!({
        "linear": s.linear.iter().map(|r| r.iter().map(CliScalar::show).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "offset": s.offset.iter().map(CliScalar::show).collect::<Vec<_>>(),
        "factor": s.factor.show(),
    })
}

fn shift_text<S: CliScalar>(s: &crate::curvezoo::AffineShift<S>) -> String {
    let row = |i: usize| {
        format!(
            "{} = ({})*X + ({})*Y + ({})",
            ["x", "y"][i],
            s.linear[i][0].show(),
            s.linear[i][1].show(),
            s.offset[i].show()
        )
    };
    format!("{}\n{}\nfactor = {}\n", row(0), row(1), s.factor.show())
}

pub(crate) fn classify(a: &ClassifyArgs) -> Result<Output> {
    let parts = a.coeffs.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
    let arr: [Rational; 6] = parts
        .try_into()
        .map_err(|v: Vec<Rational>| validation(format!("expected 6 coefficients, got {}", v.len())))?;
    let coeffs = QuadricCoeffs::new(arr);
    let class = classify_quadric(&coeffs)?;
    let q = class.quantum_parameter();
    if a.json {
        let (exact, shift) = match &class.shift {
            Shift::Exact(s) => (true, shift_json(s)),
            Shift::Approx(s) => (false, shift_json(s)),
        };
        let v = json!({
            "input": coeffs.polynomial().to_string(),
            "class": class.tag.to_string(),
            "shape": class.tag.shape(),
            "normal_form": class.normal_form.to_string(),
            "exact": exact,
            "shift": shift,
            "parameters": class.parameter_values.iter().map(|(k, v)| (k.clone(), Value::from(v.show()))).collect::<serde_json::Map<_, _>>(),
            "quantum_q": q.map(|q| q.show()),
        });
        return Ok(Output::json(&v, true));
    }
    let mut text = format!(
        "input = {}\nclass = {}\nnormal form = {}\n",
        coeffs.polynomial(),
        class.tag,
        class.normal_form
    );
    for (k, v) in &class.parameter_values {
        let _ = writeln!(text, "{k} = {}", v.show());
    }
    match &class.shift {
        Shift::Exact(s) => text.push_str(&shift_text(s)),
        Shift::Approx(s) => text.push_str(&shift_text(s)),
    }
    if let Some(q) = q {
        let _ = writeln!(text, "quantum q = {}", q.show());
    }
    Ok(Output::ok(text))
}

#[derive(Args, Debug)]
pub(crate) struct MembershipArgs {
    #[command(flatten)]
    alg: AlgebraArgs,
    /// Test against ([x,y])^2 instead of ([x,y]).
    #[arg(long)]
    square: bool,
    /// Degree bound [default: degree of the relation].
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long)]
    json: bool,
}

pub(crate) fn membership(a: &MembershipArgs) -> Result<Output> {
    let f = a.alg.single()?;
    let bound = a.bound.unwrap_or_else(|| f.degree().unwrap_or(0));
    let member = ideal_membership_bounded(&f, a.square, bound)?;
    if a.json {
        let v = json!({
            "relation": f.to_string(),
            "ideal": if a.square { "([x,y])^2" } else { "([x,y])" },
            "bound": bound,
            "member": member,
        });
        return Ok(Output::json(&v, true));
    }
    Ok(Output::ok(format!("{member}\n")))
}

#[derive(Args, Debug)]
pub(crate) struct SelftestArgs {
    /// Run only these criteria (repeatable).
    #[arg(long = "only", value_name = "ID")]
    only: Vec<u32>,
    #[arg(long)]
    json: bool,
}

pub(crate) fn selftest(a: &SelftestArgs) -> Result<Output> {
    let reports = if a.only.is_empty() {
        selftest::run_all()
    } else {
        a.only.iter().map(|&id| selftest::run_criterion(id)).collect::<Result<Vec<_>>>()?
    };
    let passed = reports.iter().all(|r| r.passed);
    if a.json {
        let v = Value::from(
            reports
                .iter()
                .map(|r| json!({ "id": r.id, "title": r.title, "passed": r.passed, "detail": r.detail }))
                .collect::<Vec<_>>(),
        );
        return Ok(Output::json(&v, passed));
    }
    let mut text: String = reports.iter().map(|r| format!("{r}\n")).collect();
    let _ = writeln!(text, "{}/{} passed", reports.iter().filter(|r| r.passed).count(), reports.len());
    Ok(Output::checked(text, passed))
}
