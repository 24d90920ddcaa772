//! Vector potentials for a uniform magnetic field, written in the position
//! operators of a generator quadruple, and the l-parameter choices that
//! realise particular gauges.
//!
//! The one-parameter family A_m = (−m B Q̂2, (1−m) B Q̂1) interpolates
//! between the two Landau gauges through the symmetric gauge at m = 1/2;
//! its formal curl, read off the expansion coefficients as
//! (Q̂1-coefficient of A2) − (Q̂2-coefficient of A1), is B for every m.

use num_complex::Complex64;

use crate::algebra::{AffineDiffOp, Generators};
use crate::error::{Error, Result};
use crate::group::ExtensionConstants;

/// A two-component potential A = (A1, A2) with its expansion in the
/// position operators of the generating quadruple: A_i = coeffs[i][0]·Q̂1 +
/// coeffs[i][1]·Q̂2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaugePotential {
    a1: AffineDiffOp,
    a2: AffineDiffOp,
    coeffs: [[f64; 2]; 2],
}

impl GaugePotential {
    pub fn a1(&self) -> &AffineDiffOp {
        &self.a1
    }

    pub fn a2(&self) -> &AffineDiffOp {
        &self.a2
    }

    /// Expansion coefficients in the (Q̂1, Q̂2) basis, row per component.
    pub fn coefficients(&self) -> [[f64; 2]; 2] {
        self.coeffs
    }

    /// Landau gauge, all of the potential on the first component.
    pub fn landau(b: f64, gens: &Generators) -> Self {
        vector_potential(1.0, b, gens)
    }

    /// Symmetric gauge, the field shared evenly between both components.
    pub fn symmetric(b: f64, gens: &Generators) -> Self {
        vector_potential(0.5, b, gens)
    }

    /// Recover a potential from raw operators by solving for its expansion
    /// in (Q̂1, Q̂2). Anything outside that span is rejected.
    pub fn from_components(a1: AffineDiffOp, a2: AffineDiffOp, gens: &Generators) -> Result<Self> {
        let c1 = expand(&a1, gens)?;
        let c2 = expand(&a2, gens)?;
        Ok(Self { a1, a2, coeffs: [c1, c2] })
    }
}

/// A_m = (−m B Q̂2, (1−m) B Q̂1).
pub fn vector_potential(m: f64, b: f64, gens: &Generators) -> GaugePotential {
    let c12 = -m * b;
    let c21 = (1.0 - m) * b;
    GaugePotential {
        a1: gens.q2.scaled(c12),
        a2: gens.q1.scaled(c21),
        coeffs: [[0.0, c12], [c21, 0.0]],
    }
}

/// ∂1 A2 − ∂2 A1 at the level of expansion coefficients:
/// (Q̂1-coefficient of A2) − (Q̂2-coefficient of A1).
pub fn formal_curl(a: &GaugePotential) -> f64 {
    a.coeffs[1][0] - a.coeffs[0][1]
}

/// The (l, m) pair whose generator quadruple realises the symmetric gauge:
/// m = 1/2 and l = α(α − √(α² − γβ))/(γβ). Needs α² > γβ; at α² = γβ the
/// resulting l lands exactly on the singular locus γβl = α².
pub fn symmetric_rep_params(k: &ExtensionConstants) -> Result<(f64, f64)> {
    let alpha_sq = k.alpha() * k.alpha();
    let gamma_beta = k.gamma() * k.beta();
    let disc = alpha_sq - gamma_beta;
    if disc < 0.0 {
        return Err(Error::ComplexRoot { alpha_sq, gamma_beta });
    }
    let l = k.alpha() * (k.alpha() - disc.sqrt()) / gamma_beta;
    let denom = gamma_beta * l - alpha_sq;
    if denom.abs() < crate::rep::GAUGE_SINGULAR_TOL {
        return Err(Error::SingularGaugeParameter { l, denom: denom.abs() });
    }
    Ok((l, 0.5))
}

/// Least-squares expansion of `op` in span{Q̂1, Q̂2} over the coefficient
/// space (const, r, ∂); exact membership is required and the coefficients
/// must be real.
fn expand(op: &AffineDiffOp, gens: &Generators) -> Result<[f64; 2]> {
    let dim = gens.q1.dim();
    if op.dim() != dim {
        return Err(Error::DimensionMismatch { expected: dim, got: op.dim() });
    }
    let vec = |o: &AffineDiffOp| -> Vec<Complex64> {
        let mut v = vec![o.constant()];
        v.extend_from_slice(o.position());
        v.extend_from_slice(o.derivative());
        v
    };
    let (q1, q2, a) = (vec(&gens.q1), vec(&gens.q2), vec(op));
    let dot = |x: &[Complex64], y: &[Complex64]| -> Complex64 {
        x.iter().zip(y).map(|(u, v)| u.conj() * v).sum()
    };
    let g11 = dot(&q1, &q1);
    let g12 = dot(&q1, &q2);
    let g22 = dot(&q2, &q2);
    let det = g11 * g22 - g12 * g12.conj();
    if det.norm() < 1e-14 {
        return Err(Error::InvalidRepParameters("position operators are linearly dependent".into()));
    }
    let r1 = dot(&q1, &a);
    let r2 = dot(&q2, &a);
    let x = (g22 * r1 - g12 * r2) / det;
    let y = (g11 * r2 - g12.conj() * r1) / det;
    let scale = a.iter().map(|c| c.norm()).fold(1.0f64, f64::max);
    let mut residual = 0.0f64;
    for j in 0..a.len() {
        residual = residual.max((a[j] - x * q1[j] - y * q2[j]).norm());
    }
    residual = residual.max(x.im.abs()).max(y.im.abs());
    if residual > 1e-12 * scale {
        return Err(Error::NonlinearPotential(residual));
    }
    Ok([x.re, y.re])
}
