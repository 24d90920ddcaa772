//! Coadjoint action on the dual of the Lie algebra and the orbit taxonomy.
//!
//! A dual vector carries coordinates (x1, .., x7); the last three are
//! invariants of the action and are written ρ = x5, σ = x6, τ = x7. The
//! action of g = (θ, φ, ψ, q, p) touches only x1..x4:
//!
//! ```text
//! x1' = x1 − (α/2) q1 x5 + (β/2) p2 x6
//! x2' = x2 − (α/2) q2 x5 − (β/2) p1 x6
//! x3' = x3 + (γ/2) q2 x7 + (α/2) p1 x5
//! x4' = x4 − (γ/2) q1 x7 + (α/2) p2 x5
//! ```
//!
//! Orbits fall into nine classes decided by which of (ρ, σ, τ) vanish and,
//! when none do, by the sign of the discriminant ρ²α² − γβστ. On the
//! degenerate cone ρ²α² = γβστ the orbit is a two-dimensional sheet labelled
//! by ρ and the slope ζ with ρ = σζ = γβτ/(ζα²).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ExtensionConstants, GroupElement};

/// Functional on the Lie algebra, coordinates in the dual basis.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct DualVector {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
    pub x4: f64,
    pub x5: f64,
    pub x6: f64,
    pub x7: f64,
}

impl DualVector {
    #[allow(clippy::too_many_arguments)]
    pub fn new(x1: f64, x2: f64, x3: f64, x4: f64, x5: f64, x6: f64, x7: f64) -> Self {
        Self { x1, x2, x3, x4, x5, x6, x7 }
    }

    pub fn rho(&self) -> f64 {
        self.x5
    }

    pub fn sigma(&self) -> f64 {
        self.x6
    }

    pub fn tau(&self) -> f64 {
        self.x7
    }
}

/// Coadjoint action of `g` on `f`. x5..x7 are returned bit-for-bit.
pub fn coadjoint_act(g: &GroupElement, f: &DualVector, k: &ExtensionConstants) -> DualVector {
    let (a, b, c) = (k.alpha(), k.beta(), k.gamma());
    DualVector {
        x1: f.x1 - 0.5 * a * g.q1 * f.x5 + 0.5 * b * g.p2 * f.x6,
        x2: f.x2 - 0.5 * a * g.q2 * f.x5 - 0.5 * b * g.p1 * f.x6,
        x3: f.x3 + 0.5 * c * g.q2 * f.x7 + 0.5 * a * g.p1 * f.x5,
        x4: f.x4 - 0.5 * c * g.q1 * f.x7 + 0.5 * a * g.p2 * f.x5,
        x5: f.x5,
        x6: f.x6,
        x7: f.x7,
    }
}

/// One orbit class per pattern of vanishing invariants, with the generic
/// stratum split by the discriminant ρ²α² − γβστ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "class")]
pub enum OrbitClass {
    /// ρ, σ, τ all nonzero, discriminant nonzero: 4-dimensional orbits.
    Generic4D { rho: f64, sigma: f64, tau: f64 },
    /// ρ, σ, τ all nonzero on the cone ρ²α² = γβστ: 2-dimensional sheets
    /// labelled by ρ and the slope ζ = ρ/σ.
    Cone2D { rho: f64, zeta: f64 },
    /// τ = 0, ρσ ≠ 0.
    TauZero4D { rho: f64, sigma: f64 },
    /// σ = 0, ρτ ≠ 0.
    SigmaZero4D { rho: f64, tau: f64 },
    /// ρ = 0, στ ≠ 0.
    RhoZero4D { sigma: f64, tau: f64 },
    /// σ = τ = 0, ρ ≠ 0: the doubled Weyl–Heisenberg stratum.
    WeylHeisenberg4D { rho: f64 },
    /// ρ = σ = 0, τ ≠ 0: noncommutative plane in the q-directions.
    PPlane2D { tau: f64 },
    /// ρ = τ = 0, σ ≠ 0: noncommutative plane in the p-directions.
    QPlane2D { sigma: f64 },
    /// ρ = σ = τ = 0: single points labelled by the remaining coordinates.
    Point0D { c1: f64, c2: f64, c3: f64, c4: f64 },
}

impl OrbitClass {
    /// Dimension of the orbit as a manifold.
    pub fn dimension(&self) -> usize {
        match self {
            OrbitClass::Generic4D { .. }
            | OrbitClass::TauZero4D { .. }
            | OrbitClass::SigmaZero4D { .. }
            | OrbitClass::RhoZero4D { .. }
            | OrbitClass::WeylHeisenberg4D { .. } => 4,
            OrbitClass::Cone2D { .. } | OrbitClass::PPlane2D { .. } | OrbitClass::QPlane2D { .. } => 2,
            OrbitClass::Point0D { .. } => 0,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            OrbitClass::Generic4D { .. } => "Generic4D",
            OrbitClass::Cone2D { .. } => "Cone2D",
            OrbitClass::TauZero4D { .. } => "TauZero4D",
            OrbitClass::SigmaZero4D { .. } => "SigmaZero4D",
            OrbitClass::RhoZero4D { .. } => "RhoZero4D",
            OrbitClass::WeylHeisenberg4D { .. } => "WeylHeisenberg4D",
            OrbitClass::PPlane2D { .. } => "PPlane2D",
            OrbitClass::QPlane2D { .. } => "QPlane2D",
            OrbitClass::Point0D { .. } => "Point0D",
        }
    }
}

/// Classify the orbit through `f`.
///
/// An invariant is treated as zero when |x| < `zero_tol`; the discriminant
/// test is scaled, |ρ²α² − γβστ| ≤ zero_tol · max(1, ρ²α²). On the cone the
/// slope is cross-checked against ρ = γβτ/(ζα²) and a failure reports the
/// input as inconsistent rather than silently picking a class.
pub fn classify_orbit(f: &DualVector, k: &ExtensionConstants, zero_tol: f64) -> Result<OrbitClass> {
    assert!(zero_tol > 0.0, "zero_tol must be positive");
    let (rho, sigma, tau) = (f.rho(), f.sigma(), f.tau());
    let rho_zero = rho.abs() < zero_tol;
    let sigma_zero = sigma.abs() < zero_tol;
    let tau_zero = tau.abs() < zero_tol;

    Ok(match (rho_zero, sigma_zero, tau_zero) {
        (false, false, false) => {
            let lead = rho * rho * k.alpha() * k.alpha();
            let det = lead - k.gamma() * k.beta() * sigma * tau;
            if det.abs() <= zero_tol * lead.abs().max(1.0) {
                let zeta = rho / sigma;
                let reconstructed = k.gamma() * k.beta() * tau / (zeta * k.alpha() * k.alpha());
                if (rho - reconstructed).abs() > zero_tol * rho.abs().max(1.0) {
                    return Err(Error::InconsistentCone { rho, zeta, reconstructed });
                }
                OrbitClass::Cone2D { rho, zeta }
            } else {
                OrbitClass::Generic4D { rho, sigma, tau }
            }
        }
        (false, false, true) => OrbitClass::TauZero4D { rho, sigma },
        (false, true, false) => OrbitClass::SigmaZero4D { rho, tau },
        (true, false, false) => OrbitClass::RhoZero4D { sigma, tau },
        (false, true, true) => OrbitClass::WeylHeisenberg4D { rho },
        (true, true, false) => OrbitClass::PPlane2D { tau },
        (true, false, true) => OrbitClass::QPlane2D { sigma },
        (true, true, true) => OrbitClass::Point0D { c1: f.x1, c2: f.x2, c3: f.x3, c4: f.x4 },
    })
}
