use crate::coeffs::{format_rational, Assignment, Rational};
use crate::error::{Error, Result};
use crate::extcalc::{ext1_dim_points, ExtOptions};
use crate::freealg::{FreeAlgebra, NCPoly, Point};
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq)]
pub enum DegenerateCase {
    /// `x + δ[x,y]`
    SimpleLine { delta: Rational },
    /// `x² + ex + δ[x,y]`
    TwoLines { e: Rational, delta: Rational },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RejectedPair {
    pub pair: (Point<Rational>, Point<Rational>),
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegeneratePairs {
    pub relation: NCPoly,
    pub verified: Vec<(Point<Rational>, Point<Rational>)>,
    /// Candidate pairs that were tested and do not carry an extension.
    pub rejected: Vec<RejectedPair>,
}

fn pt(a: &Rational, b: &Rational) -> Point<Rational> {
    Point::new(vec![a.clone(), b.clone()])
}

/// Point pairs on a degenerate quadric with nonzero Ext¹, each checked with the Jacobi rank.
pub fn degenerate_ext_pairs(case: &DegenerateCase, beta: &Rational) -> Result<DegeneratePairs> {
    let alg = FreeAlgebra::plane(Vec::<String>::new());
    let r = |q: &Rational| format!("({})", format_rational(q));
    let zero = Rational::zero();
    let (relation, candidates, literal) = match case {
        DegenerateCase::SimpleLine { delta } => {
            if delta.is_zero() {
                return Err(Error::precondition("delta must be nonzero"));
            }
            let f = alg.parse(&format!("x+{}*[x,y]", r(delta)))?;
            let shift = delta.recip();
            (f, vec![(pt(&zero, beta), pt(&zero, &(beta + shift)))], vec![])
        }
        DegenerateCase::TwoLines { e, delta } => {
            if delta.is_zero() || e.is_zero() {
                return Err(Error::precondition("e and delta must be nonzero"));
            }
            let f = alg.parse(&format!("x^2+{}*x+{}*[x,y]", r(e), r(delta)))?;
            let s = e / delta;
            let three = Rational::from_integer(3.into());
            (
                f,
                vec![
                    (pt(&zero, beta), pt(&zero, &(beta + &s))),
                    (pt(&-e, beta), pt(&-e, &(beta - &s))),
                ],
                vec![(pt(e, beta), pt(e, &(beta + three * &s)))],
            )
        }
    };
    let fs = [relation.clone()];
    let params = Assignment::new();
    let mut verified = Vec::new();
    for (p, q) in candidates {
        let d = ext1_dim_points(&fs, &p, &q, &params, ExtOptions::default())?;
        if d == 0 {
            return Err(Error::Invariant(format!("expected Ext^1({p}, {q}) != 0 for {relation}")));
        }
        verified.push((p, q));
    }
    let mut rejected = Vec::new();
    for (p, q) in literal {
        let reason = match ext1_dim_points(&fs, &p, &q, &params, ExtOptions::default()) {
            Ok(0) => "Ext^1 vanishes".to_string(),
            Ok(_) => {
                verified.push((p, q));
                continue;
            }
            Err(Error::Precondition(msg)) => msg,
            Err(e) => return Err(e),
        };
        rejected.push(RejectedPair { pair: (p, q), reason });
    }
    Ok(DegeneratePairs { relation, verified, rejected })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{int, rat};

    #[test]
    fn simple_line_pair() {
        let out = degenerate_ext_pairs(&DegenerateCase::SimpleLine { delta: int(2) }, &int(1)).unwrap();
        assert_eq!(out.verified, vec![(pt(&int(0), &int(1)), pt(&int(0), &rat(3, 2)))]);
        assert!(out.rejected.is_empty());
    }

    #[test]
    fn two_lines_pairs_and_rejected_literal() {
        let out = degenerate_ext_pairs(&DegenerateCase::TwoLines { e: int(2), delta: int(1) }, &int(0)).unwrap();
        assert_eq!(
            out.verified,
            vec![
                (pt(&int(0), &int(0)), pt(&int(0), &int(2))),
                (pt(&int(-2), &int(0)), pt(&int(-2), &int(-2))),
            ]
        );
        assert_eq!(out.rejected.len(), 1);
        assert_eq!(out.rejected[0].pair.0, pt(&int(2), &int(0)));
        assert!(out.rejected[0].reason.contains("not a zero"), "{}", out.rejected[0].reason);
    }
}
