//! Unitary irreducible representations on Gaussian packets, one family per
//! orbit class, plus the two-parameter gauge family on the ρ = σ = τ = 1
//! stratum.
//!
//! Every operator here has the shape C(g) · e^{i u(g)·r} · f(r + d(g)) with
//! a unit-modulus constant C(g), so a Gaussian packet maps to a Gaussian
//! packet with the same widths: the amplitude rotates, the wavevector gains
//! u and the centre moves by −d. The concrete (C, u, d) per class:
//!
//! ```text
//! Generic4D   e^{iρ(θ + α p·r + (α/2)⟨q,p⟩)} e^{iσ(φ + (β/2)p1p2)} e^{iτ(ψ + γ q2 r1 + (γ/2)q1q2)}
//!             · f(r1 + q1, r2 + q2 + (σβ/ρα) p1)
//! Cone2D      e^{iρ(θ + φ/ζ + ζα²ψ/γβ) + iκq1 + iδq2 − iραrp1 − i(ρα²ζ/β)rq2 + (iρα/2)(q1p1 − q2p2)}
//!             · e^{iρ((α²ζ/2β)q1q2 − (β/2ζ)p1p2)} · f(r − q1 + (β/αζ) p2)
//! TauZero4D   the Generic4D factors with the τ exponential removed
//! SigmaZero4D the ρ and τ factors, argument f(r + q)
//! WeylHeis.   the ρ factor alone, argument f(r + q)
//! RhoZero4D   e^{iσ(φ + (β/2)p1p2)} e^{i r2 p2} e^{iτ(ψ + γ q2 r1 + (γ/2)q1q2)} · f(r1 + q1, r2 + σβ p1)
//! PPlane2D    e^{i(c1 p1 + c2 p2)} e^{iτ(ψ − γ q1 r − (γ/2)q1q2)} · f(r + q2)
//! QPlane2D    e^{i(c3 q1 + c4 q2)} e^{iσφ + i r p2 + i(σβ/2) p1p2} · f(r + σβ p1)
//! Point0D     the scalar e^{i(c1 p1 + c2 p2 + c3 q1 + c4 q2)}
//! ```
//!
//! The r2 p2 exponent of RhoZero4D carries no α on purpose: that stratum is
//! parametrised dimensionlessly.

use serde::{Deserialize, Serialize};

use crate::coadjoint::OrbitClass;
use crate::error::{Error, Result};
use crate::group::{ExtensionConstants, GroupElement};
use crate::packet::GaussianPacket;

/// Gauge parameters l with |γβl − α²| below this are rejected: the family
/// degenerates there.
pub const GAUGE_SINGULAR_TOL: f64 = 1e-12;

/// Which representation to apply, with the orbit labels it needs. The label
/// pairs (κ, δ) and (c1..c4) are free user parameters of the degenerate
/// classes, never derived from a dual vector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum RepSpec {
    Generic4D {
        rho: f64,
        sigma: f64,
        tau: f64,
    },
    Cone2D {
        rho: f64,
        zeta: f64,
        #[serde(default)]
        kappa: f64,
        #[serde(default)]
        delta: f64,
    },
    TauZero4D {
        rho: f64,
        sigma: f64,
    },
    SigmaZero4D {
        rho: f64,
        tau: f64,
    },
    WeylHeisenberg4D {
        rho: f64,
    },
    RhoZero4D {
        sigma: f64,
        tau: f64,
    },
    PPlane2D {
        tau: f64,
        #[serde(default)]
        c1: f64,
        #[serde(default)]
        c2: f64,
    },
    QPlane2D {
        sigma: f64,
        #[serde(default)]
        c3: f64,
        #[serde(default)]
        c4: f64,
    },
    Point0D {
        #[serde(default)]
        c1: f64,
        #[serde(default)]
        c2: f64,
        #[serde(default)]
        c3: f64,
        #[serde(default)]
        c4: f64,
    },
}

impl RepSpec {
    /// Check that the parameters are nonzero exactly where the class demands
    /// and that Generic4D sits off the degenerate cone.
    pub fn validate(&self, k: &ExtensionConstants) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidRepParameters(msg));
        match *self {
            RepSpec::Generic4D { rho, sigma, tau } => {
                if rho == 0.0 || sigma == 0.0 || tau == 0.0 {
                    return bad(format!("Generic4D needs rho, sigma, tau nonzero, got ({rho}, {sigma}, {tau})"));
                }
                let det = rho * rho * k.alpha() * k.alpha() - k.gamma() * k.beta() * sigma * tau;
                if det == 0.0 {
                    return bad(format!("Generic4D lies on the degenerate cone: rho={rho}, sigma={sigma}, tau={tau}"));
                }
                Ok(())
            }
            RepSpec::Cone2D { rho, zeta, .. } => {
                if rho == 0.0 || zeta == 0.0 {
                    return bad(format!("Cone2D needs rho and zeta nonzero, got ({rho}, {zeta})"));
                }
                Ok(())
            }
            RepSpec::TauZero4D { rho, sigma } => {
                if rho == 0.0 || sigma == 0.0 {
                    return bad(format!("TauZero4D needs rho and sigma nonzero, got ({rho}, {sigma})"));
                }
                Ok(())
            }
            RepSpec::SigmaZero4D { rho, tau } => {
                if rho == 0.0 || tau == 0.0 {
                    return bad(format!("SigmaZero4D needs rho and tau nonzero, got ({rho}, {tau})"));
                }
                Ok(())
            }
            RepSpec::WeylHeisenberg4D { rho } => {
                if rho == 0.0 {
                    return bad("WeylHeisenberg4D needs rho nonzero".into());
                }
                Ok(())
            }
            RepSpec::RhoZero4D { sigma, tau } => {
                if sigma == 0.0 || tau == 0.0 {
                    return bad(format!("RhoZero4D needs sigma and tau nonzero, got ({sigma}, {tau})"));
                }
                Ok(())
            }
            RepSpec::PPlane2D { tau, .. } => {
                if tau == 0.0 {
                    return bad("PPlane2D needs tau nonzero".into());
                }
                Ok(())
            }
            RepSpec::QPlane2D { sigma, .. } => {
                if sigma == 0.0 {
                    return bad("QPlane2D needs sigma nonzero".into());
                }
                Ok(())
            }
            RepSpec::Point0D { .. } => Ok(()),
        }
    }

    /// Dimension of the carrier space; `None` means the scalar class acts on
    /// packets of either dimension.
    pub fn carrier_dim(&self) -> Option<usize> {
        match self {
            RepSpec::Generic4D { .. }
            | RepSpec::TauZero4D { .. }
            | RepSpec::SigmaZero4D { .. }
            | RepSpec::WeylHeisenberg4D { .. }
            | RepSpec::RhoZero4D { .. } => Some(2),
            RepSpec::Cone2D { .. } | RepSpec::PPlane2D { .. } | RepSpec::QPlane2D { .. } => Some(1),
            RepSpec::Point0D { .. } => None,
        }
    }

    /// Orbit the representation is attached to.
    pub fn orbit_class(&self) -> OrbitClass {
        match *self {
            RepSpec::Generic4D { rho, sigma, tau } => OrbitClass::Generic4D { rho, sigma, tau },
            RepSpec::Cone2D { rho, zeta, .. } => OrbitClass::Cone2D { rho, zeta },
            RepSpec::TauZero4D { rho, sigma } => OrbitClass::TauZero4D { rho, sigma },
            RepSpec::SigmaZero4D { rho, tau } => OrbitClass::SigmaZero4D { rho, tau },
            RepSpec::WeylHeisenberg4D { rho } => OrbitClass::WeylHeisenberg4D { rho },
            RepSpec::RhoZero4D { sigma, tau } => OrbitClass::RhoZero4D { sigma, tau },
            RepSpec::PPlane2D { tau, .. } => OrbitClass::PPlane2D { tau },
            RepSpec::QPlane2D { sigma, .. } => OrbitClass::QPlane2D { sigma },
            RepSpec::Point0D { c1, c2, c3, c4 } => OrbitClass::Point0D { c1, c2, c3, c4 },
        }
    }

    pub fn label(&self) -> &'static str {
        self.orbit_class().label()
    }

    /// Multipliers (ρ_eff, σ_eff, τ_eff) of the central coordinates: an
    /// element with only θ = t multiplies f by e^{i ρ_eff t}, and likewise
    /// for φ and ψ.
    pub fn central_character(&self, k: &ExtensionConstants) -> [f64; 3] {
        match *self {
            RepSpec::Generic4D { rho, sigma, tau } => [rho, sigma, tau],
            RepSpec::Cone2D { rho, zeta, .. } => [
                rho,
                rho / zeta,
                rho * zeta * k.alpha() * k.alpha() / (k.gamma() * k.beta()),
            ],
            RepSpec::TauZero4D { rho, sigma } => [rho, sigma, 0.0],
            RepSpec::SigmaZero4D { rho, tau } => [rho, 0.0, tau],
            RepSpec::WeylHeisenberg4D { rho } => [rho, 0.0, 0.0],
            RepSpec::RhoZero4D { sigma, tau } => [0.0, sigma, tau],
            RepSpec::PPlane2D { tau, .. } => [0.0, 0.0, tau],
            RepSpec::QPlane2D { sigma, .. } => [0.0, sigma, 0.0],
            RepSpec::Point0D { .. } => [0.0, 0.0, 0.0],
        }
    }
}

/// One representation together with everything that acts: either an
/// orbit-class family or a gauge member (l, m) on the ρ = σ = τ = 1 stratum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RepFamily {
    Orbit(RepSpec),
    Gauge { l: f64, m: f64 },
}

impl RepFamily {
    pub fn apply(
        &self,
        g: &GroupElement,
        k: &ExtensionConstants,
        f: &GaussianPacket,
    ) -> Result<GaussianPacket> {
        match self {
            RepFamily::Orbit(spec) => apply_rep(spec, g, k, f),
            RepFamily::Gauge { l, m } => apply_gauge_rep(*l, *m, k, g, f),
        }
    }

    pub fn carrier_dim(&self) -> Option<usize> {
        match self {
            RepFamily::Orbit(spec) => spec.carrier_dim(),
            RepFamily::Gauge { .. } => Some(2),
        }
    }

    pub fn label(&self) -> String {
        match self {
            RepFamily::Orbit(spec) => spec.label().to_string(),
            RepFamily::Gauge { l, m } => format!("Gauge(l={l}, m={m})"),
        }
    }

    /// ρ multiplier of the central coordinate θ; the scale through which
    /// group parameters couple to the algebra generators.
    pub(crate) fn rho_character(&self, k: &ExtensionConstants) -> f64 {
        match self {
            RepFamily::Orbit(spec) => spec.central_character(k)[0],
            RepFamily::Gauge { .. } => 1.0,
        }
    }
}

/// Affine data of one unitary: constant phase exponent, r-linear phase and
/// argument translation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct AffineAction {
    pub phase: f64,
    pub linear: [f64; 2],
    pub shift: [f64; 2],
}

pub(crate) fn rep_action(spec: &RepSpec, g: &GroupElement, k: &ExtensionConstants) -> Result<AffineAction> {
    spec.validate(k)?;
    let (al, be, ga) = (k.alpha(), k.beta(), k.gamma());
    Ok(match *spec {
        RepSpec::Generic4D { rho, sigma, tau } => AffineAction {
            phase: rho * (g.theta + 0.5 * al * (g.q1 * g.p1 + g.q2 * g.p2))
                + sigma * (g.phi + 0.5 * be * g.p1 * g.p2)
                + tau * (g.psi + 0.5 * ga * g.q1 * g.q2),
            linear: [rho * al * g.p1 + tau * ga * g.q2, rho * al * g.p2],
            shift: [g.q1, g.q2 + sigma * be * g.p1 / (rho * al)],
        },
        RepSpec::Cone2D { rho, zeta, kappa, delta } => AffineAction {
            phase: rho * (g.theta + g.phi / zeta + zeta * al * al * g.psi / (ga * be))
                + kappa * g.q1
                + delta * g.q2
                + 0.5 * rho * al * (g.q1 * g.p1 - g.q2 * g.p2)
                + rho * (0.5 * al * al * zeta / be) * g.q1 * g.q2
                - rho * (0.5 * be / zeta) * g.p1 * g.p2,
            linear: [-rho * al * g.p1 - (rho * al * al * zeta / be) * g.q2, 0.0],
            shift: [-g.q1 + be / (al * zeta) * g.p2, 0.0],
        },
        RepSpec::TauZero4D { rho, sigma } => AffineAction {
            phase: rho * (g.theta + 0.5 * al * (g.q1 * g.p1 + g.q2 * g.p2))
                + sigma * (g.phi + 0.5 * be * g.p1 * g.p2),
            linear: [rho * al * g.p1, rho * al * g.p2],
            shift: [g.q1, g.q2 + sigma * be * g.p1 / (rho * al)],
        },
        RepSpec::SigmaZero4D { rho, tau } => AffineAction {
            phase: rho * (g.theta + 0.5 * al * (g.q1 * g.p1 + g.q2 * g.p2))
                + tau * (g.psi + 0.5 * ga * g.q1 * g.q2),
            linear: [rho * al * g.p1 + tau * ga * g.q2, rho * al * g.p2],
            shift: [g.q1, g.q2],
        },
        RepSpec::WeylHeisenberg4D { rho } => AffineAction {
            phase: rho * (g.theta + 0.5 * al * (g.q1 * g.p1 + g.q2 * g.p2)),
            linear: [rho * al * g.p1, rho * al * g.p2],
            shift: [g.q1, g.q2],
        },
        RepSpec::RhoZero4D { sigma, tau } => AffineAction {
            phase: sigma * (g.phi + 0.5 * be * g.p1 * g.p2) + tau * (g.psi + 0.5 * ga * g.q1 * g.q2),
            linear: [tau * ga * g.q2, g.p2],
            shift: [g.q1, sigma * be * g.p1],
        },
        RepSpec::PPlane2D { tau, c1, c2 } => AffineAction {
            phase: c1 * g.p1 + c2 * g.p2 + tau * (g.psi - 0.5 * ga * g.q1 * g.q2),
            linear: [-tau * ga * g.q1, 0.0],
            shift: [g.q2, 0.0],
        },
        RepSpec::QPlane2D { sigma, c3, c4 } => AffineAction {
            phase: c3 * g.q1 + c4 * g.q2 + sigma * g.phi + 0.5 * sigma * be * g.p1 * g.p2,
            linear: [g.p2, 0.0],
            shift: [sigma * be * g.p1, 0.0],
        },
        RepSpec::Point0D { c1, c2, c3, c4 } => AffineAction {
            phase: c1 * g.p1 + c2 * g.p2 + c3 * g.q1 + c4 * g.q2,
            linear: [0.0, 0.0],
            shift: [0.0, 0.0],
        },
    })
}

fn check_dim(spec: &RepSpec, f: &GaussianPacket) -> Result<()> {
    if let Some(d) = spec.carrier_dim() {
        if f.dim() != d {
            return Err(Error::DimensionMismatch { expected: d, got: f.dim() });
        }
    }
    Ok(())
}

/// Apply the unitary of `g` in the representation `spec` to the packet `f`.
pub fn apply_rep(
    spec: &RepSpec,
    g: &GroupElement,
    k: &ExtensionConstants,
    f: &GaussianPacket,
) -> Result<GaussianPacket> {
    check_dim(spec, f)?;
    let action = rep_action(spec, g, k)?;
    Ok(f.transformed(action.phase, action.linear, action.shift))
}

/// Constant, linear and shift data for the gauge member (l, m), split into
/// the central phase θ + φ + ψ and the bilinear remainder. The adjoint
/// negates the central phase, the linear phase and the shift but keeps the
/// bilinear block, which is what cancels against e^{−i u·d} to give U*U = 1.
fn gauge_parts(
    l: f64,
    m: f64,
    k: &ExtensionConstants,
    g: &GroupElement,
) -> Result<(f64, f64, [f64; 2], [f64; 2])> {
    let (al, be, ga) = (k.alpha(), k.beta(), k.gamma());
    let denom = ga * be * l - al * al;
    if denom.abs() < GAUGE_SINGULAR_TOL {
        return Err(Error::SingularGaugeParameter { l, denom: denom.abs() });
    }
    let central = g.theta + g.phi + g.psi;
    let bilinear = (0.5 * al + al * ga * be * m * (1.0 - l) / denom) * g.p1 * g.q1
        + (0.5 * al - l * ga * be * (1.0 - m) / al) * g.p2 * g.q2
        + (m - 0.5) * be * g.p1 * g.p2
        + (0.5 * ga - ga * (1.0 - l) * (ga * be * l - ga * be * l * m - al * al) / denom) * g.q1 * g.q2;
    let linear = [
        al * g.p1 + l * ga * g.q2,
        al * g.p2 + al * al * ga * (1.0 - l) / denom * g.q1,
    ];
    let shift = [
        -(1.0 - m) * be / al * g.p2 + (ga * be * (l + m - l * m) - al * al) / denom * g.q1,
        m * be / al * g.p1 - (ga * be * l * (1.0 - m) - al * al) / (al * al) * g.q2,
    ];
    Ok((central, bilinear, linear, shift))
}

/// The gauge member U_{l,m}(g) on the ρ = σ = τ = 1 stratum. (l, m) = (1, 1)
/// reproduces the Generic4D action at ρ = σ = τ = 1.
pub fn apply_gauge_rep(
    l: f64,
    m: f64,
    k: &ExtensionConstants,
    g: &GroupElement,
    f: &GaussianPacket,
) -> Result<GaussianPacket> {
    if f.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: f.dim() });
    }
    let (central, bilinear, linear, shift) = gauge_parts(l, m, k, g)?;
    Ok(f.transformed(central + bilinear, linear, shift))
}

/// The adjoint U*_{l,m}(g); composing with [`apply_gauge_rep`] in either
/// order is the identity.
pub fn apply_gauge_rep_adjoint(
    l: f64,
    m: f64,
    k: &ExtensionConstants,
    g: &GroupElement,
    f: &GaussianPacket,
) -> Result<GaussianPacket> {
    if f.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, got: f.dim() });
    }
    let (central, bilinear, linear, shift) = gauge_parts(l, m, k, g)?;
    Ok(f.transformed(-central + bilinear, [-linear[0], -linear[1]], [-shift[0], -shift[1]]))
}
