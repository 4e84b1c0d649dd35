use std::fmt::Write as _;

use clap::{Args, Subcommand};
use serde_json::{json, Value};

use super::format::{self, CliScalar};
use super::{validation, Output};
use num_traits::Zero;

use crate::coeffs::{parse_rational, Assignment, ComplexApprox, Rational};
use crate::curvezoo::{
    cusp_partner, cusp_special_fibre_simple, cusp_versal_check, elliptic_collinearity_check, elliptic_no_short_cycles,
    elliptic_partners, elliptic_sample_points, quantum_orbit, quantum_relation_map, quantum_simples,
    quantum_simples_exact, EllipticConfig,
};
use crate::error::{Error, Result};
use crate::extcalc::{ext1_dim_points, relation_ideal, ExtOptions};
use crate::freealg::{FreeAlgebra, MatrixRep, NCPoly, Point};
use crate::rep2::{simp2_system, simple_n_check, Simp2Verdict};

#[derive(Args, Debug)]
pub(crate) struct ZooArgs {
    #[command(subcommand)]
    family: Family,
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Family {
    /// xy - q*yx at a primitive m-th root of unity q.
    Quantum {
        /// Order m of q.
        #[arg(long, default_value_t = 2)]
        order: usize,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        gamma: String,
        /// Start of the relation-map orbit.
        #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
        point: String,
    },
    /// y^2 - x^3 with its partner points and versal family.
    Cusp {
        #[arg(long, default_value = "1,1", allow_hyphen_values = true)]
        point: String,
    },
    /// y^2 - x^3 - a*x - b + q*[x,y].
    Elliptic {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// A point on the curve; deterministic complex samples when omitted.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        #[arg(long, default_value_t = 10)]
        samples: usize,
    },
}

/// The family record shared by every subfamily.
struct Report {
    family: &'static str,
    parameters: Value,
    points: Vec<Value>,
    partners: Vec<Value>,
    checks: serde_json::Map<String, Value>,
    lines: Vec<String>,
}

impl Report {
    fn passed(&self) -> bool {
        self.checks.values().all(|v| v.as_bool() != Some(false))
    }

    fn render(&self, json: bool) -> Output {
        if json {
            let v = json!({
                "family": self.family,
                "parameters": self.parameters,
                "points": self.points,
                "partners": self.partners,
                "checks": self.checks,
            });
            return Output::json(&v, self.passed());
        }
        let mut text = format!("family = {}\n", self.family);
        for l in &self.lines {
            let _ = writeln!(text, "{l}");
        }
        for (k, v) in &self.checks {
            let _ = writeln!(text, "check {k}: {v}");
        }
        Output::checked(text, self.passed())
    }
}

pub(crate) fn zoo(a: &ZooArgs) -> Result<Output> {
    let report = match &a.family {
        Family::Quantum { order, lambda, gamma, point } => {
            if *order == 2 {
                quantum_exact(lambda, gamma, point)?
            } else {
                quantum_complex(*order, lambda, gamma, point)?
            }
        }
        Family::Cusp { point } => cusp(point)?,
        Family::Elliptic { a: ca, b, q, point, samples } => {
            let cfg = EllipticConfig::new(parse_rational(ca)?, parse_rational(b)?, parse_rational(q)?)?;
            elliptic(&cfg, point.as_deref(), *samples)?
        }
    };
    Ok(report.render(a.json))
}

fn quantum_body<S: CliScalar>(order: usize, q: S, rep: MatrixRep<S>, start: Point<S>, f: &NCPoly, params: Assignment<S>) -> Result<Report> {
    let relation_holds = f.eval_matrix(&rep, &params)?.is_zero();
    let simple = simple_n_check(&rep);
    let orbit = quantum_orbit(&q, &start, 4 * order)?;
    let mut partners = Vec::new();
    let mut ext_ok = true;
    let mut lines = vec![
        format!("q = {}", q.show()),
        format!("X = {}", format::matrix(&rep.mats[0])),
        format!("Y = {}", format::matrix(&rep.mats[1])),
    ];
    for p in &orbit {
        let image = quantum_relation_map(&q, p)?;
        ext_ok &= ext1_dim_points(std::slice::from_ref(f), p, &image, &params, ExtOptions::default())? >= 1;
        lines.push(format!("{} -> {}", format::point(p), format::point(&image)));
        partners.push(Value::from(vec![format::point_json(&image)]));
    }
    lines.push(format!("orbit length = {}", orbit.len()));
    let mut checks = serde_json::Map::new();
    checks.insert("relation".into(), Value::from(relation_holds && ext_ok));
    checks.insert("simple".into(), Value::from(simple));
    checks.insert("collinear".into(), Value::Null);
    checks.insert("orbit_closes".into(), Value::from(orbit.len() == order || start.0.iter().all(|c| c.is_zero())));
    Ok(Report {
        family: "quantum",
        parameters: json!({
            "order": order,
            "q": q.show(),
            "X": format::matrix_json(&rep.mats[0]),
            "Y": format::matrix_json(&rep.mats[1]),
        }),
        points: orbit.iter().map(format::point_json).collect(),
        partners,
        checks,
        lines,
    })
}

fn quantum_exact(lambda: &str, gamma: &str, point: &str) -> Result<Report> {
    let rep = quantum_simples_exact(parse_rational(lambda)?, parse_rational(gamma)?)?;
    let f = FreeAlgebra::plane(Vec::<String>::new()).parse("x*y+y*x")?;
    quantum_body(2, Rational::from_integer((-1).into()), rep, Point::<Rational>::parse(point)?, &f, Assignment::new())
}

fn quantum_complex(order: usize, lambda: &str, gamma: &str, point: &str) -> Result<Report> {
    use crate::coeffs::ParseScalar;
    let rep = quantum_simples(order, ComplexApprox::parse_scalar(lambda)?, ComplexApprox::parse_scalar(gamma)?)?;
    let q = ComplexApprox::root_of_unity(order as u32, 1);
    let f = FreeAlgebra::plane(["q"]).parse("x*y-q*y*x")?;
    let mut params = Assignment::new();
    params.insert("q".to_string(), q);
    quantum_body(order, q, rep, Point::<ComplexApprox>::parse(point)?, &f, params)
}

fn cusp(point: &str) -> Result<Report> {
    let p = Point::<ComplexApprox>::parse(point)?;
    let f = FreeAlgebra::plane(Vec::<String>::new()).parse("y^2-x^3")?;
    let ideal = relation_ideal(&f)?;
    let none = Assignment::new();
    let partners = cusp_partner(&p)?;
    let mut ok = true;
    let mut lines = vec![format!("p = {}", format::point(&p))];
    for r in &partners {
        ok &= f.eval_point(r, &none)?.is_zero();
        ok &= ext1_dim_points(std::slice::from_ref(&f), &p, r, &none, ExtOptions::default())? >= 1;
        ok &= ideal.contains(&p, r, &none)?;
        lines.push(format!("partner {}", format::point(r)));
    }
    let versal = cusp_versal_check();
    let special = cusp_special_fibre_simple(&Rational::from_integer(0.into()))?;
    lines.push(format!("versal family is a deformation: {versal}"));
    lines.push(format!("special fibre (mu = -1, t = 0) simple: {special}"));
    let mut checks = serde_json::Map::new();
    checks.insert("relation".into(), Value::from(ok));
    checks.insert("simple".into(), Value::Null);
    checks.insert("collinear".into(), Value::Null);
    checks.insert("versal".into(), Value::from(versal && !special));
    Ok(Report {
        family: "cusp",
        parameters: json!({}),
        points: vec![format::point_json(&p)],
        partners: vec![Value::from(partners.iter().map(format::point_json).collect::<Vec<_>>())],
        checks,
        lines,
    })
}

fn elliptic_points<S: CliScalar>(cfg: &EllipticConfig, points: &[Point<S>], lines: &mut Vec<String>) -> Result<(Vec<Value>, bool, bool)> {
    let ideal = relation_ideal(&cfg.polynomial())?;
    let none = Assignment::new();
    let mut partners = Vec::new();
    let (mut relation, mut collinear) = (true, true);
    for p in points {
        let parts = elliptic_partners(cfg, p)?;
        let mut shown = Vec::new();
        for r in parts.points() {
            relation &= cfg.on_curve(&r) && ideal.contains(p, &r, &none)?;
            shown.push(format::point(&r));
        }
        if parts.tangent {
            lines.push(format!("{} -> {} (tangent: D = 0, single partner)", format::point(p), shown.join(", ")));
        } else {
            collinear &= elliptic_collinearity_check(cfg, p)?;
            lines.push(format!("{} -> {}, D = {}", format::point(p), shown.join(", "), parts.d.show()));
        }
        partners.push(Value::from(parts.points().iter().map(format::point_json).collect::<Vec<_>>()));
    }
    Ok((partners, relation, collinear))
}

fn elliptic(cfg: &EllipticConfig, point: Option<&str>, samples: usize) -> Result<Report> {
    let mut lines = vec![format!("f = {}", cfg.polynomial())];
    let exact_point = match point {
        Some(text) => Some(Point::<Rational>::parse(text)?),
        None => None,
    };
    // exact when √D is rational, complex otherwise
    let exact = match &exact_point {
        Some(p) => match elliptic_partners(cfg, p) {
            Ok(_) => true,
            Err(Error::Precondition(msg)) if msg.contains("square root") => false,
            Err(e) => return Err(e),
        },
        None => false,
    };
    let (points, partners, relation, collinear, cycles) = if exact {
        let pts = vec![exact_point.clone().expect("point given")];
        let (partners, relation, collinear) = elliptic_points(cfg, &pts, &mut lines)?;
        let cycles = if cfg.q().is_zero() { None } else { Some(elliptic_no_short_cycles(cfg, &pts)?) };
        (pts.iter().map(format::point_json).collect::<Vec<_>>(), partners, relation, collinear, cycles)
    } else {
        let pts = match &exact_point {
            Some(p) => vec![p.to_complex()],
            None => elliptic_sample_points(cfg, samples),
        };
        let (partners, relation, collinear) = elliptic_points(cfg, &pts, &mut lines)?;
        let cycles = if cfg.q().is_zero() { None } else { Some(elliptic_no_short_cycles(cfg, &pts)?) };
        (pts.iter().map(format::point_json).collect::<Vec<_>>(), partners, relation, collinear, cycles)
    };
    // a nonzero commutator term leaves no 2-dimensional simples
    let locus = matches!(simp2_system(&cfg.polynomial())?.verdict()?, Simp2Verdict::Locus { .. });
    let simple = locus == cfg.q().is_zero();
    lines.push(format!("2-dimensional simples: {}", if locus { "nonempty locus" } else { "none" }));
    lines.push(format!("backend = {}", if exact { "exact" } else { "complex" }));
    let mut checks = serde_json::Map::new();
    checks.insert("relation".into(), Value::from(relation));
    checks.insert("simple".into(), Value::from(simple));
    checks.insert("collinear".into(), Value::from(collinear));
    checks.insert("no_short_cycles".into(), cycles.map_or(Value::Null, Value::from));
    if points.is_empty() {
        return Err(validation("no sample points"));
    }
    Ok(Report {
        family: "elliptic",
        parameters: json!({
            "a": cfg.a().to_string(),
            "b": cfg.b().to_string(),
            "q": cfg.q().to_string(),
        }),
        points,
        partners,
        checks,
        lines,
    })
}
