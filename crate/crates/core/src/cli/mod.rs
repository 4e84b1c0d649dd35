//! The `ncplane` command line. [`run`] is the whole program; the binary only forwards
//! arguments and the exit code.
//!
//! Exit codes: 0 success, 1 parse or validation failure, 2 violated precondition,
//! 3 internal invariant breach (including a failed self-test or identity check).

mod commands;
mod format;
mod zoo;

use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::coeffs::{Assignment, ParamCtx, ParseScalar};
use crate::error::{Error, Result};
use crate::freealg::{FreeAlgebra, NCPoly};

pub use format::CliScalar;

#[derive(Parser, Debug)]
#[command(name = "ncplane", version, about = "Extension relations, trace rings and simple modules of algebras k<x,y>/(f)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Left partial derivatives and the left decomposition at a point.
    Derive(commands::DeriveArgs),
    /// Centered Taylor expansion with its identity checks.
    Taylor(commands::TaylorArgs),
    /// dim Ext¹ between points or between matrix modules.
    Ext(commands::ExtArgs),
    /// Generators of the extension relation, optionally testing a pair.
    Relation(commands::RelationArgs),
    /// Extension graph on a point set: cycles, splitting, DOT export.
    Graph(commands::GraphArgs),
    /// Cayley-Hamilton reduction and the 2-dimensional simple system.
    Reduce(commands::ReduceArgs),
    /// Equations of the representation variety on generic matrices.
    Repvariety(commands::RepvarietyArgs),
    /// Affine classification of a plane quadric.
    Classify(commands::ClassifyArgs),
    /// Worked families with their checks.
    Zoo(zoo::ZooArgs),
    /// Membership in the ideal generated by [x,y] or [x,y]^2.
    Membership(commands::MembershipArgs),
    /// Runs the acceptance suite.
    Selftest(commands::SelftestArgs),
}

/// Relations and parameter values shared by most subcommands.
#[derive(Args, Debug, Clone)]
pub(crate) struct AlgebraArgs {
    /// A relation, e.g. "x*y-q*y*x" (repeatable).
    #[arg(short = 'r', long = "relation", value_name = "POLY", allow_hyphen_values = true)]
    relations: Vec<String>,
    /// Comma-separated generator names [default: x,y].
    #[arg(long, value_name = "NAMES")]
    gens: Option<String>,
    /// Parameter value NAME=VALUE (repeatable).
    #[arg(long = "set", value_name = "NAME=VALUE")]
    set: Vec<String>,
}

fn identifiers(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    for c in text.chars().chain(std::iter::once(' ')) {
        if c.is_alphanumeric() || c == '_' {
            cur.push(c);
        } else {
            if cur.starts_with(|c: char| c.is_alphabetic() || c == '_') {
                out.push(cur.clone());
            }
            cur.clear();
        }
    }
    out
}

fn validation(msg: impl Into<String>) -> Error {
    Error::Parse { pos: 0, msg: msg.into() }
}

impl AlgebraArgs {
    fn set_pairs(&self) -> Result<Vec<(String, String)>> {
        self.set
            .iter()
            .map(|s| {
                let (n, v) = s.split_once('=').ok_or_else(|| validation(format!("`{s}` is not NAME=VALUE")))?;
                Ok((n.trim().to_string(), v.trim().to_string()))
            })
            .collect()
    }

    /// The algebra on the generators, with every other identifier as a parameter.
    pub(crate) fn build(&self) -> Result<(FreeAlgebra, Vec<NCPoly>)> {
        if self.relations.is_empty() {
            return Err(validation("at least one relation (-r) is required"));
        }
        let gens: Vec<String> = match &self.gens {
            Some(g) => g.split(',').map(|s| s.trim().to_string()).collect(),
            None => vec!["x".into(), "y".into()],
        };
        let base = FreeAlgebra::with_names(gens, &ParamCtx::empty())?;
        let mut params: Vec<String> = Vec::new();
        let names = self.relations.iter().flat_map(|r| identifiers(r)).chain(self.set_pairs()?.into_iter().map(|p| p.0));
        for id in names {
            if base.gen_index(&id).is_none() && !params.contains(&id) {
                params.push(id);
            }
        }
        let alg = base.with_params(&ParamCtx::new(params))?;
        let fs = self.relations.iter().map(|r| alg.parse(r)).collect::<Result<Vec<_>>>()?;
        Ok((alg, fs))
    }

    pub(crate) fn single(&self) -> Result<NCPoly> {
        let (_, mut fs) = self.build()?;
        if fs.len() != 1 {
            return Err(validation("this subcommand takes exactly one relation"));
        }
        Ok(fs.remove(0))
    }

    pub(crate) fn assignment<S: ParseScalar>(&self) -> Result<Assignment<S>> {
        self.set_pairs()?
            .into_iter()
            .map(|(n, v)| Ok((n, S::parse_scalar(&v)?)))
            .collect()
    }
}

/// Runs the program on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Derive(a) => commands::derive(a),
        Command::Taylor(a) => commands::taylor(a),
        Command::Ext(a) => commands::ext(a),
        Command::Relation(a) => commands::relation(a),
        Command::Graph(a) => commands::graph(a),
        Command::Reduce(a) => commands::reduce(a),
        Command::Repvariety(a) => commands::repvariety(a),
        Command::Classify(a) => commands::classify(a),
        Command::Zoo(a) => zoo::zoo(a),
        Command::Membership(a) => commands::membership(a),
        Command::Selftest(a) => commands::selftest(a),
    };
    match result {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            output.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Text produced by a subcommand together with its exit code.
pub(crate) struct Output {
    text: String,
    code: i32,
}

impl Output {
    pub(crate) fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }

    /// Exit 3 unless `passed`.
    pub(crate) fn checked(text: String, passed: bool) -> Self {
        Output { text, code: if passed { 0 } else { 3 } }
    }

    pub(crate) fn json(v: &serde_json::Value, passed: bool) -> Self {
        let text = serde_json::to_string_pretty(v).expect("serializable") + "\n";
        Self::checked(text, passed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("ncplane").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parameters_are_detected() {
        let a = AlgebraArgs { relations: vec!["x^2+y^2-1+d*[x,y]".into()], gens: None, set: vec![] };
        let (alg, _) = a.build().unwrap();
        assert_eq!(alg.params().names(), ["d"]);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["ext", "-r", "x*y-2*y*x", "--p1", "0,1", "--p2", "0,1/2"]).0, 0);
        assert_eq!(run_str(&["ext", "-r", "x*y-", "--p1", "0,1", "--p2", "0,1"]).0, 1);
        assert_eq!(run_str(&["ext", "-r", "x*y-2*y*x", "--p1", "1,1", "--p2", "0,1"]).0, 2);
        assert_eq!(run_str(&["nonsense"]).0, 1);
        assert_eq!(run_str(&["--help"]).0, 0);
    }
}
