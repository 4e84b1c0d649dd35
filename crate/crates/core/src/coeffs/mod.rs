//! Coefficient domain: exact and approximate scalars, and commutative parameter polynomials.

mod poly;
mod scalar;

pub use poly::{Assignment, CoefPoly, Monomial, ParamCtx};
pub use scalar::{
    default_tol, format_rational, int, parse_rational, rat, rational_sqrt, ComplexApprox,
    ParseScalar, Rational, Scalar, DEFAULT_TOL,
};
