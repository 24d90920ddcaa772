//! The 7-dimensional group of triply centrally extended translations of R^4.
//!
//! Elements are tuples (θ, φ, ψ, q1, q2, p1, p2); the three central
//! coordinates pick up symplectic-style cocycles under composition:
//!
//! ```text
//! θ'' = θ + θ' + (α/2) [⟨q, p'⟩ − ⟨p, q'⟩]
//! φ'' = φ + φ' + (β/2) (p ∧ p')
//! ψ'' = ψ + ψ' + (γ/2) (q ∧ q')
//! q'' = q + q',   p'' = p + p'
//! ```
//!
//! with ⟨q, p⟩ = q1 p1 + q2 p2 and q ∧ p = q1 p2 − q2 p1. The inverse is
//! coordinate-wise negation: every cocycle vanishes on (g, g⁻¹).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Central extension strengths α, β, γ. Validated strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawConstants", into = "RawConstants")]
pub struct ExtensionConstants {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

#[derive(Serialize, Deserialize)]
struct RawConstants {
    alpha: f64,
    beta: f64,
    gamma: f64,
}

impl TryFrom<RawConstants> for ExtensionConstants {
    type Error = Error;
    fn try_from(raw: RawConstants) -> Result<Self> {
        ExtensionConstants::new(raw.alpha, raw.beta, raw.gamma)
    }
}

impl From<ExtensionConstants> for RawConstants {
    fn from(k: ExtensionConstants) -> Self {
        RawConstants { alpha: k.alpha, beta: k.beta, gamma: k.gamma }
    }
}

impl ExtensionConstants {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self> {
        if !(alpha > 0.0 && beta > 0.0 && gamma > 0.0) {
            return Err(Error::NonPositiveConstants { alpha, beta, gamma });
        }
        Ok(Self { alpha, beta, gamma })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }
}

/// A group element (θ, φ, ψ, q1, q2, p1, p2).
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct GroupElement {
    pub theta: f64,
    pub phi: f64,
    pub psi: f64,
    pub q1: f64,
    pub q2: f64,
    pub p1: f64,
    pub p2: f64,
}

impl GroupElement {
    #[allow(clippy::too_many_arguments)]
    pub fn new(theta: f64, phi: f64, psi: f64, q1: f64, q2: f64, p1: f64, p2: f64) -> Self {
        Self { theta, phi, psi, q1, q2, p1, p2 }
    }

    /// The neutral element: all coordinates zero.
    pub fn identity() -> Self {
        Self::default()
    }

    /// Group law. Central coordinates gain the three pairings listed in the
    /// module doc; the translation part adds componentwise.
    pub fn compose(&self, other: &Self, k: &ExtensionConstants) -> Self {
        let dot = self.q1 * other.p1 + self.q2 * other.p2 - (self.p1 * other.q1 + self.p2 * other.q2);
        let p_wedge = self.p1 * other.p2 - self.p2 * other.p1;
        let q_wedge = self.q1 * other.q2 - self.q2 * other.q1;
        Self {
            theta: self.theta + other.theta + 0.5 * k.alpha() * dot,
            phi: self.phi + other.phi + 0.5 * k.beta() * p_wedge,
            psi: self.psi + other.psi + 0.5 * k.gamma() * q_wedge,
            q1: self.q1 + other.q1,
            q2: self.q2 + other.q2,
            p1: self.p1 + other.p1,
            p2: self.p2 + other.p2,
        }
    }

    /// Coordinate-wise negation; both cocycles cancel exactly, so
    /// `g.compose(&g.inverse(), k)` is the identity in exact float arithmetic.
    pub fn inverse(&self) -> Self {
        Self {
            theta: -self.theta,
            phi: -self.phi,
            psi: -self.psi,
            q1: -self.q1,
            q2: -self.q2,
            p1: -self.p1,
            p2: -self.p2,
        }
    }

    /// Largest absolute coordinate difference against `other`.
    pub fn max_coordinate_distance(&self, other: &Self) -> f64 {
        [
            self.theta - other.theta,
            self.phi - other.phi,
            self.psi - other.psi,
            self.q1 - other.q1,
            self.q2 - other.q2,
            self.p1 - other.p1,
            self.p2 - other.p2,
        ]
        .iter()
        .fold(0.0f64, |acc, d| acc.max(d.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_constants() -> ExtensionConstants {
        ExtensionConstants::new(1.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn constants_reject_nonpositive() {
        assert!(ExtensionConstants::new(0.0, 1.0, 1.0).is_err());
        assert!(ExtensionConstants::new(1.0, -2.0, 1.0).is_err());
        assert!(ExtensionConstants::new(1.0, 1.0, f64::NAN).is_err());
        assert!(ExtensionConstants::new(1.0, 0.5, 0.5).is_ok());
    }

    #[test]
    fn compose_picks_up_all_three_cocycles() {
        let k = unit_constants();
        let g = GroupElement::new(0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0);
        let h = GroupElement::new(0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0);
        let gh = g.compose(&h, &k);
        assert_eq!(gh.theta, 0.0); // (1/2)(⟨q,p'⟩ − ⟨p,q'⟩) = (1/2)(1 − 1)
        assert_eq!(gh.phi, -0.5); // (1/2)(p ∧ p') = (1/2)(0·0 − 1·1)
        assert_eq!(gh.psi, 0.5); // (1/2)(q ∧ q') = (1/2)(1·1 − 0·0)
        assert_eq!((gh.q1, gh.q2, gh.p1, gh.p2), (1.0, 1.0, 1.0, 1.0));
    }

    #[test]
    fn identity_is_neutral() {
        let k = unit_constants();
        let g = GroupElement::new(0.3, -0.7, 0.1, 1.5, -2.0, 0.25, 3.0);
        let e = GroupElement::identity();
        assert_eq!(g.compose(&e, &k), g);
        assert_eq!(e.compose(&g, &k), g);
    }

    #[test]
    fn inverse_cancels_exactly() {
        let k = ExtensionConstants::new(1.0, 0.5, 0.5).unwrap();
        let g = GroupElement::new(0.3, -0.7, 0.1, 1.5, -2.0, 0.25, 3.0);
        let gi = g.inverse();
        assert_eq!(g.compose(&gi, &k), GroupElement::identity());
        assert_eq!(gi.compose(&g, &k), GroupElement::identity());
    }

    #[test]
    fn central_coordinates_never_feed_back() {
        let k = unit_constants();
        let central = GroupElement::new(0.4, -1.1, 2.2, 0.0, 0.0, 0.0, 0.0);
        let g = GroupElement::new(0.0, 0.0, 0.0, 1.0, 2.0, 3.0, 4.0);
        let left = central.compose(&g, &k);
        let right = g.compose(&central, &k);
        assert_eq!(left, right);
        assert_eq!(left.theta, 0.4);
        assert_eq!(left.phi, -1.1);
        assert_eq!(left.psi, 2.2);
        assert_eq!((left.q1, left.q2, left.p1, left.p2), (1.0, 2.0, 3.0, 4.0));
    }
}
