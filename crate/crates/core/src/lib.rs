//! Exact computations for one-relation algebras k⟨x, y⟩/(f), from free-algebra calculus
//! up to Ext¹ between simple modules and the trace-ring description of 2-dimensional simples.
//!
//! Runnable walkthroughs live in `examples/`; the `ncplane` binary wraps [`cli::run`].

pub mod cli;
pub mod coeffs;
pub mod curvezoo;
pub mod error;
pub mod extcalc;
pub mod extgraph;
pub mod freealg;
pub mod linalg;
pub mod ncdiff;
pub mod rep2;
pub mod selftest;

pub use error::{Error, Result};
