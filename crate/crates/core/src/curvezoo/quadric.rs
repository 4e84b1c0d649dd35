use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::coeffs::{format_rational, rational_sqrt, ComplexApprox, Rational, Scalar};
use crate::error::{Error, Result};
use crate::freealg::{FreeAlgebra, NCPoly};

/// The isomorphism types of plane noncommutative quadrics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadricTag {
    Smooth,
    QuantumPlane,
    TwoLines,
    DoubleLine,
    SimpleLine,
    Weyl,
    AffinePlane,
}

impl QuadricTag {
    /// Normal-form shape with parameters `d` (commutator) and `e` (linear term).
    pub fn shape(self) -> &'static str {
        match self {
            QuadricTag::Smooth => "x^2+y^2-1+d*[x,y]",
            QuadricTag::QuantumPlane => "x^2+y^2+d*[x,y]",
            QuadricTag::TwoLines => "x^2+e*x+d*[x,y]",
            QuadricTag::DoubleLine => "x^2+d*[x,y]",
            QuadricTag::SimpleLine => "x+d*[x,y]",
            QuadricTag::Weyl => "1+d*[x,y]",
            QuadricTag::AffinePlane => "[x,y]",
        }
    }
}

impl fmt::Display for QuadricTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `(x, y) = linear·(X, Y) + offset` turns the input into `factor · normal_form(X, Y)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineShift<S> {
    pub linear: [[S; 2]; 2],
    pub offset: [S; 2],
    pub factor: S,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Shift {
    Exact(AffineShift<Rational>),
    Approx(AffineShift<ComplexApprox>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuadricClass {
    pub tag: QuadricTag,
    /// Rational when the shift is exact; otherwise in parameters `d`/`e` whose values are
    /// in `parameter_values`.
    pub normal_form: NCPoly,
    pub shift: Shift,
    pub parameter_values: BTreeMap<String, ComplexApprox>,
}

/// Coefficients of λ₁x² + λ₂y² + δ[x,y] + ex + fy + g.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricCoeffs {
    pub l1: Rational,
    pub l2: Rational,
    pub delta: Rational,
    pub e: Rational,
    pub f: Rational,
    pub g: Rational,
}

impl QuadricCoeffs {
    pub fn new(c: [Rational; 6]) -> Self {
        let [l1, l2, delta, e, f, g] = c;
        QuadricCoeffs { l1, l2, delta, e, f, g }
    }

    pub fn polynomial(&self) -> NCPoly {
        let a = FreeAlgebra::plane(Vec::<String>::new());
        let r = |q: &Rational| format!("({})", format_rational(q));
        a.parse(&format!(
            "{}*x^2+{}*y^2+{}*[x,y]+{}*x+{}*y+{}",
            r(&self.l1),
            r(&self.l2),
            r(&self.delta),
            r(&self.e),
            r(&self.f),
            r(&self.g)
        ))
        .expect("well-formed quadric")
    }
}

struct Core<S> {
    tag: QuadricTag,
    params: Vec<(&'static str, S)>,
    shift: AffineShift<S>,
}

/// Returns `Ok(None)` when a needed square root is unavailable in `S`.
fn classify_core<S: Scalar>(c: &QuadricCoeffs, sqrt: &dyn Fn(&Rational) -> Option<S>) -> Result<Option<Core<S>>> {
    let q = |r: &Rational| S::from_rational(r);
    let (zero, one) = (S::zero(), S::one());
    let QuadricCoeffs { l1, l2, delta, e, f, g } = c;

    if !l1.is_zero() && !l2.is_zero() {
        let b = [-(e / (int2() * l1)), -(f / (int2() * l2))];
        let cst = g - e * e / (int4() * l1) - f * f / (int4() * l2);
        let offset = [q(&b[0]), q(&b[1])];
        return Ok(Some(if cst.is_zero() {
            let (Some(s1), Some(s2)) = (sqrt(&l1.recip()), sqrt(&l2.recip())) else { return Ok(None) };
            let d = q(delta) * s1.clone() * s2.clone();
            Core {
                tag: QuadricTag::QuantumPlane,
                params: vec![("d", d)],
                shift: AffineShift { linear: [[s1, zero.clone()], [zero, s2]], offset, factor: one },
            }
        } else {
            let (Some(s1), Some(s2)) = (sqrt(&(-&cst / l1)), sqrt(&(-&cst / l2))) else { return Ok(None) };
            let d = -(q(delta) * s1.clone() * s2.clone()) * q(&cst.recip());
            Core {
                tag: QuadricTag::Smooth,
                params: vec![("d", d)],
                shift: AffineShift { linear: [[s1, zero.clone()], [zero, s2]], offset, factor: q(&-cst) },
            }
        }));
    }

    if !l1.is_zero() || !l2.is_zero() {
        // P is the variable carrying the square; swapping x and y negates the commutator
        let swapped = l1.is_zero();
        let (lam, dl, ep, fp) = if swapped { (l2, -delta, f, e) } else { (l1, delta.clone(), e, f) };
        if !fp.is_zero() {
            return Err(Error::Classification(format!(
                "parabolic quadric {} has a linear term in the second variable; not in the taxonomy",
                c.polynomial()
            )));
        }
        let b = -(ep / (int2() * lam));
        let cst = g - ep * ep / (int4() * lam);
        let d = q(&(&dl / lam));
        let (tag, params, p_offset) = if cst.is_zero() {
            (QuadricTag::DoubleLine, vec![("d", d)], q(&b))
        } else {
            let Some(r) = sqrt(&(-&cst / lam)) else { return Ok(None) };
            let e_nf = -(q(&Rational::from_integer(2.into())) * r.clone());
            (QuadricTag::TwoLines, vec![("d", d), ("e", e_nf)], q(&b) - r)
        };
        let (linear, offset) = if swapped {
            ([[zero.clone(), one.clone()], [one.clone(), zero.clone()]], [zero, p_offset])
        } else {
            ([[one.clone(), zero.clone()], [zero.clone(), one]], [p_offset, zero])
        };
        return Ok(Some(Core { tag, params, shift: AffineShift { linear, offset, factor: q(lam) } }));
    }

    if !e.is_zero() {
        // X = e x + f y + g, Y = y
        let linear = [[q(&e.recip()), q(&-(f / e))], [zero.clone(), one.clone()]];
        let offset = [q(&-(g / e)), zero];
        return Ok(Some(Core {
            tag: QuadricTag::SimpleLine,
            params: vec![("d", q(&(delta / e)))],
            shift: AffineShift { linear, offset, factor: one },
        }));
    }
    if !f.is_zero() {
        // X = f y + g, Y = x
        let linear = [[zero.clone(), one.clone()], [q(&f.recip()), zero.clone()]];
        let offset = [zero, q(&-(g / f))];
        return Ok(Some(Core {
            tag: QuadricTag::SimpleLine,
            params: vec![("d", q(&-(delta / f)))],
            shift: AffineShift { linear, offset, factor: one },
        }));
    }
    let identity = [[one.clone(), zero.clone()], [zero.clone(), one.clone()]];
    match (delta.is_zero(), g.is_zero()) {
        (false, false) => Ok(Some(Core {
            tag: QuadricTag::Weyl,
            params: vec![("d", q(&(delta / g)))],
            shift: AffineShift { linear: identity, offset: [zero.clone(), zero], factor: q(g) },
        })),
        (false, true) => Ok(Some(Core {
            tag: QuadricTag::AffinePlane,
            params: vec![],
            shift: AffineShift { linear: identity, offset: [zero.clone(), zero], factor: q(delta) },
        })),
        (true, false) => Err(Error::Classification(format!(
            "nonzero constant relation {}; the quotient is zero",
            format_rational(g)
        ))),
        (true, true) => Err(Error::precondition("all quadric coefficients are zero")),
    }
}

fn int2() -> Rational {
    Rational::from_integer(2.into())
}

fn int4() -> Rational {
    Rational::from_integer(4.into())
}

/// Classifies λ₁x² + λ₂y² + δ[x,y] + ex + fy + g up to affine change of variables.
///
/// The shift is exact when every square root it needs is rational, otherwise complex.
pub fn classify_quadric(coeffs: &QuadricCoeffs) -> Result<QuadricClass> {
    if let Some(core) = classify_core::<Rational>(coeffs, &rational_sqrt)? {
        let mut text = core.tag.shape().to_string();
        for (name, v) in &core.params {
            text = text.replace(&format!("{name}*"), &format!("({})*", format_rational(v)));
        }
        let normal_form = FreeAlgebra::plane(Vec::<String>::new()).parse(&text)?;
        return Ok(QuadricClass {
            tag: core.tag,
            normal_form,
            shift: Shift::Exact(core.shift),
            parameter_values: BTreeMap::new(),
        });
    }
    let csqrt = |r: &Rational| Some(ComplexApprox::from_rational(r).sqrt());
    let core = classify_core::<ComplexApprox>(coeffs, &csqrt)?
        .ok_or_else(|| Error::Invariant("complex square roots always exist".into()))?;
    let names: Vec<&str> = core.params.iter().map(|p| p.0).collect();
    let normal_form = FreeAlgebra::plane(names).parse(core.tag.shape())?;
    Ok(QuadricClass {
        tag: core.tag,
        normal_form,
        shift: Shift::Approx(core.shift),
        parameter_values: core.params.into_iter().map(|(n, v)| (n.to_string(), v)).collect(),
    })
}

impl QuadricClass {
    /// For a quantum-plane class, the q with normal form isomorphic to `xy - q*yx`.
    pub fn quantum_parameter(&self) -> Option<ComplexApprox> {
        if self.tag != QuadricTag::QuantumPlane {
            return None;
        }
        let d = match &self.shift {
            Shift::Exact(_) => {
                let c = self.normal_form.coefficient(&crate::freealg::Word::new(vec![0, 1]));
                ComplexApprox::from_rational(&c.as_constant()?)
            }
            Shift::Approx(_) => *self.parameter_values.get("d")?,
        };
        let i = ComplexApprox::new(0.0, 1.0);
        (d + i).try_div(&(d - i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{int, rat, Assignment};
    use crate::freealg::MatrixRep;
    use crate::linalg::Matrix;

    fn coeffs(c: [Rational; 6]) -> QuadricCoeffs {
        QuadricCoeffs::new(c)
    }

    fn check_shift(c: &QuadricCoeffs, class: &QuadricClass) {
        let f = c.polynomial();
        match &class.shift {
            Shift::Exact(s) => {
                let alg = f.algebra().clone();
                let img = |i: usize| {
                    &(&alg.gen(0).scale_rational(&s.linear[i][0]) + &alg.gen(1).scale_rational(&s.linear[i][1]))
                        + &alg.constant(s.offset[i].clone())
                };
                let lhs = f.substitute(&[img(0), img(1)]).unwrap();
                let rhs = class.normal_form.lift(&alg).unwrap().scale_rational(&s.factor);
                assert_eq!(lhs, rhs, "{:?}", class.tag);
            }
            Shift::Approx(s) => {
                let m = |a: [f64; 8]| {
                    Matrix::from_rows(vec![
                        vec![ComplexApprox::new(a[0], a[1]), ComplexApprox::new(a[2], a[3])],
                        vec![ComplexApprox::new(a[4], a[5]), ComplexApprox::new(a[6], a[7])],
                    ])
                    .unwrap()
                };
                let x = m([0.3, -0.2, 1.1, 0.4, -0.7, 0.9, 0.25, 0.0]);
                let y = m([-1.2, 0.5, 0.1, -0.3, 0.8, 0.6, -0.4, 1.3]);
                let id = Matrix::<ComplexApprox>::identity(2);
                let img = |i: usize| &(&x.scale(&s.linear[i][0]) + &y.scale(&s.linear[i][1])) + &id.scale(&s.offset[i]);
                let lhs = f
                    .eval_matrix(&MatrixRep::new(vec![img(0), img(1)]).unwrap(), &Assignment::new())
                    .unwrap();
                let rhs = class
                    .normal_form
                    .eval_matrix(&MatrixRep::new(vec![x.clone(), y.clone()]).unwrap(), &class.parameter_values)
                    .unwrap()
                    .scale(&s.factor);
                assert_eq!(lhs, rhs, "{:?}", class.tag);
            }
        }
    }

    fn classify(c: [Rational; 6]) -> (QuadricCoeffs, QuadricClass) {
        let c = coeffs(c);
        let class = classify_quadric(&c).unwrap();
        check_shift(&c, &class);
        (c, class)
    }

    #[test]
    fn smooth_conic_is_its_own_normal_form() {
        let (c, class) = classify([int(1), int(1), int(3), int(0), int(0), int(-1)]);
        assert_eq!(class.tag, QuadricTag::Smooth);
        assert_eq!(class.normal_form, c.polynomial());
    }

    #[test]
    fn irrational_scalings_fall_back_to_complex() {
        let (_, class) = classify([int(2), int(3), int(1), int(1), int(0), int(-1)]);
        assert_eq!(class.tag, QuadricTag::Smooth);
        assert!(matches!(class.shift, Shift::Approx(_)));
        let (_, class) = classify([int(1), int(2), int(5), int(0), int(0), int(0)]);
        assert_eq!(class.tag, QuadricTag::QuantumPlane);
        let (_, class) = classify([int(1), int(0), int(1), int(0), int(0), int(-2)]);
        assert_eq!(class.tag, QuadricTag::TwoLines);
    }

    #[test]
    fn quantum_plane_parameter() {
        let (_, class) = classify([int(1), int(1), int(1), int(0), int(0), int(0)]);
        assert_eq!(class.tag, QuadricTag::QuantumPlane);
        assert_eq!(class.quantum_parameter(), Some(ComplexApprox::new(0.0, 1.0)));
    }

    #[test]
    fn degenerate_shapes() {
        let tag = |c: [Rational; 6]| classify(c).1.tag;
        assert_eq!(tag([int(1), int(0), int(2), int(3), int(0), int(2)]), QuadricTag::TwoLines);
        assert_eq!(tag([int(0), int(1), int(2), int(0), int(0), int(0)]), QuadricTag::DoubleLine);
        assert_eq!(tag([int(0), int(3), int(2), int(0), int(6), int(3)]), QuadricTag::DoubleLine);
        assert_eq!(tag([int(0), int(0), int(2), int(3), int(4), int(5)]), QuadricTag::SimpleLine);
        assert_eq!(tag([int(0), int(0), int(2), int(0), int(4), int(5)]), QuadricTag::SimpleLine);
        assert_eq!(tag([int(0), int(0), int(2), int(0), int(0), rat(3, 2)]), QuadricTag::Weyl);
        assert_eq!(tag([int(0), int(0), int(2), int(0), int(0), int(0)]), QuadricTag::AffinePlane);
        let (_, two) = classify([int(1), int(0), int(2), int(3), int(0), int(2)]);
        assert_eq!(two.normal_form.to_string(), "x^2 + 2*x*y - 2*y*x - x");
    }

    #[test]
    fn classification_errors() {
        let err = |c: [Rational; 6]| classify_quadric(&coeffs(c)).unwrap_err();
        assert!(matches!(err([int(1), int(0), int(1), int(0), int(1), int(0)]), Error::Classification(_)));
        assert!(matches!(err([int(0), int(0), int(0), int(0), int(0), int(3)]), Error::Classification(_)));
        assert!(matches!(err([int(0), int(0), int(0), int(0), int(0), int(0)]), Error::Precondition(_)));
    }
}
