use serde_json::Value;

use crate::coeffs::{format_rational, ComplexApprox, ParseScalar, Rational};
use crate::curvezoo::SqrtScalar;
use crate::freealg::Point;
use crate::linalg::Matrix;

/// Backend scalars as they cross the text boundary.
pub trait CliScalar: ParseScalar + SqrtScalar {
    fn show(&self) -> String;
}

impl CliScalar for Rational {
    fn show(&self) -> String {
        format_rational(self)
    }
}

fn trim_float(v: f64) -> String {
    let s = format!("{v:.10}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

impl CliScalar for ComplexApprox {
    /// `re+imi` rounded to ten decimals.
    fn show(&self) -> String {
        let im = trim_float(self.im);
        if im.starts_with('-') {
            format!("{}{}i", trim_float(self.re), im)
        } else {
            format!("{}+{}i", trim_float(self.re), im)
        }
    }
}

pub fn point<S: CliScalar>(p: &Point<S>) -> String {
    format!("({})", p.0.iter().map(CliScalar::show).collect::<Vec<_>>().join(", "))
}

pub fn point_json<S: CliScalar>(p: &Point<S>) -> Value {
    Value::from(p.0.iter().map(CliScalar::show).collect::<Vec<_>>())
}

pub fn matrix<S: CliScalar>(m: &Matrix<S>) -> String {
    let rows: Vec<String> = m.to_rows().iter().map(|r| r.iter().map(CliScalar::show).collect::<Vec<_>>().join(", ")).collect();
    format!("[{}]", rows.join("; "))
}

pub fn matrix_json<S: CliScalar>(m: &Matrix<S>) -> Value {
    Value::from(
        m.to_rows()
            .iter()
            .map(|r| Value::from(r.iter().map(CliScalar::show).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
    )
}

pub fn set(items: impl IntoIterator<Item = usize>) -> String {
    let parts: Vec<String> = items.into_iter().map(|i| format!("v{i}")).collect();
    format!("{{{}}}", parts.join(", "))
}
