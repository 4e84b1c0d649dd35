//! Worked curves: plane quadrics, quantum planes, the cusp and elliptic curves.

mod cusp;
mod degenerate;
mod elliptic;
mod quadric;
mod quantum;

pub use cusp::{
    cusp_partner, cusp_special_fibre_simple, cusp_versal_check, cusp_versal_check_family, cusp_versal_family,
    cusp_versal_residual, PolyMatrix,
};
pub use degenerate::{degenerate_ext_pairs, DegenerateCase, DegeneratePairs, RejectedPair};
pub use elliptic::{
    elliptic_add, elliptic_collinearity_check, elliptic_no_short_cycles, elliptic_partners, elliptic_sample_points,
    EllipticConfig, EllipticPoint, Partners,
};
pub use quadric::{classify_quadric, AffineShift, QuadricClass, QuadricCoeffs, QuadricTag, Shift};
pub use quantum::{quadric_rotation_map, quantum_orbit, quantum_relation_map, quantum_simples, quantum_simples_exact};

use crate::coeffs::{rational_sqrt, ComplexApprox, Rational, Scalar};

/// Scalars with a (partial) square root.
pub trait SqrtScalar: Scalar {
    fn try_sqrt(&self) -> Option<Self>;
}

impl SqrtScalar for Rational {
    fn try_sqrt(&self) -> Option<Self> {
        rational_sqrt(self)
    }
}

impl SqrtScalar for ComplexApprox {
    fn try_sqrt(&self) -> Option<Self> {
        Some(self.sqrt())
    }
}
