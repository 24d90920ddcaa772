//! The operator algebra of the representations: affine differential
//! operators, the position/momentum quadruples each family integrates, and
//! exact commutators.
//!
//! Everything lives in the space const·I + Σ_j a_j r_j + Σ_j b_j ∂_j, which
//! is closed under commutators with the scalar result
//!
//! ```text
//! [O, O'] = Σ_j (b_j a'_j − b'_j a_j) · I
//! ```
//!
//! so brackets are evaluated by coefficient arithmetic, never by finite
//! differences. The quadruples satisfy, where defined,
//! [Q1,P1] = [Q2,P2] = iħ, [Q1,Q2] = iϑ, [P1,P2] = i𝓑 with ħ = 1/(ρα),
//! ϑ = −σβ/(ρα)², 𝓑 = −τγ/(ρα)².

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{ExtensionConstants, GroupElement};
use crate::packet::GaussianPacket;
use crate::rep::RepFamily;
use crate::rep::RepSpec;

/// const·I + Σ_j position[j]·r_j + Σ_j derivative[j]·∂_j on packets of the
/// stated dimension.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineDiffOp {
    dim: usize,
    constant: Complex64,
    position: [Complex64; 2],
    derivative: [Complex64; 2],
}

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

impl AffineDiffOp {
    pub fn new(dim: usize, constant: Complex64, position: [Complex64; 2], derivative: [Complex64; 2]) -> Result<Self> {
        if dim != 1 && dim != 2 {
            return Err(Error::BadDimension(dim));
        }
        let mut op = Self { dim, constant, position, derivative };
        if dim == 1 {
            op.position[1] = ZERO;
            op.derivative[1] = ZERO;
        }
        Ok(op)
    }

    pub fn scalar(dim: usize, value: Complex64) -> Result<Self> {
        Self::new(dim, value, [ZERO; 2], [ZERO; 2])
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::scalar(dim, ZERO)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constant(&self) -> Complex64 {
        self.constant
    }

    pub fn position(&self) -> &[Complex64] {
        &self.position[..self.dim]
    }

    pub fn derivative(&self) -> &[Complex64] {
        &self.derivative[..self.dim]
    }

    /// True when every r and ∂ coefficient vanishes exactly.
    pub fn is_scalar(&self) -> bool {
        self.position[..self.dim].iter().chain(&self.derivative[..self.dim]).all(|c| *c == ZERO)
    }

    pub fn scaled(&self, s: f64) -> Self {
        let mut out = *self;
        out.constant *= s;
        for j in 0..self.dim {
            out.position[j] *= s;
            out.derivative[j] *= s;
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        let mut out = *self;
        out.constant += other.constant;
        for j in 0..self.dim {
            out.position[j] += other.position[j];
            out.derivative[j] += other.derivative[j];
        }
        Ok(out)
    }

    /// [self, other] by coefficient arithmetic; always a scalar multiple of
    /// the identity on this space.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        let mut value = ZERO;
        for j in 0..self.dim {
            value += self.derivative[j] * other.position[j] - other.derivative[j] * self.position[j];
        }
        Self::scalar(self.dim, value)
    }

    /// Pointwise (Ô f)(r), using ∂_j f = (i k_j − (r_j − c_j)/w_j²) f.
    pub fn apply(&self, f: &GaussianPacket, r: &[f64]) -> Result<Complex64> {
        if self.dim != f.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim, got: f.dim() });
        }
        let value = f.eval(r);
        let mut factor = self.constant;
        for (j, &rj) in r.iter().enumerate().take(self.dim) {
            let log_deriv = Complex64::new(
                -(rj - f.centre()[j]) / (f.widths()[j] * f.widths()[j]),
                f.wavevector()[j],
            );
            factor += self.position[j] * rj + self.derivative[j] * log_deriv;
        }
        Ok(factor * value)
    }
}

/// ħ, the position noncommutativity ϑ, the momentum noncommutativity 𝓑 and
/// the magnetic field B = 𝓑/ħ carried by a (ρ, σ, τ) stratum with ρ ≠ 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    pub hbar: f64,
    pub position_nc: f64,
    pub momentum_nc: f64,
    pub magnetic_field: f64,
}

/// ħ = 1/(ρα), ϑ = −σβ/(ρα)², 𝓑 = −τγ/(ρα)², B = 𝓑/ħ.
pub fn physical_params(rho: f64, sigma: f64, tau: f64, k: &ExtensionConstants) -> Result<PhysicalParams> {
    if rho == 0.0 {
        return Err(Error::InvalidRepParameters("physical parameters need rho != 0".into()));
    }
    let ra = rho * k.alpha();
    let hbar = 1.0 / ra;
    let position_nc = -sigma * k.beta() / (ra * ra);
    let momentum_nc = -tau * k.gamma() / (ra * ra);
    Ok(PhysicalParams { hbar, position_nc, momentum_nc, magnetic_field: momentum_nc / hbar })
}

/// The position/momentum quadruple integrated by one representation family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Generators {
    pub q1: AffineDiffOp,
    pub q2: AffineDiffOp,
    pub p1: AffineDiffOp,
    pub p2: AffineDiffOp,
}

impl Generators {
    pub fn named(&self) -> [(&'static str, &AffineDiffOp); 4] {
        [("Q1", &self.q1), ("Q2", &self.q2), ("P1", &self.p1), ("P2", &self.p2)]
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Build the operator quadruple for a family. 2-D classes act on r = (r1, r2),
/// the 1-D classes on a single coordinate, and the point class is scalar.
pub fn build_generators(family: &RepFamily, k: &ExtensionConstants) -> Result<Generators> {
    let (al, be, ga) = (k.alpha(), k.beta(), k.gamma());
    match family {
        RepFamily::Orbit(spec) => {
            spec.validate(k)?;
            match *spec {
                RepSpec::Generic4D { rho, sigma, tau } => {
                    let pp = physical_params(rho, sigma, tau, k)?;
                    Ok(Generators {
                        q1: AffineDiffOp::new(2, ZERO, [c(1.0, 0.0), ZERO], [ZERO, c(0.0, pp.position_nc)])?,
                        q2: AffineDiffOp::new(2, ZERO, [ZERO, c(1.0, 0.0)], [ZERO; 2])?,
                        p1: AffineDiffOp::new(2, ZERO, [ZERO; 2], [c(0.0, -pp.hbar), ZERO])?,
                        p2: AffineDiffOp::new(
                            2,
                            ZERO,
                            [c(-pp.momentum_nc / pp.hbar, 0.0), ZERO],
                            [ZERO, c(0.0, -pp.hbar)],
                        )?,
                    })
                }
                RepSpec::Cone2D { rho, zeta, kappa, delta } => {
                    let sigma = rho / zeta;
                    let tau = rho * zeta * al * al / (ga * be);
                    let pp = physical_params(rho, sigma, tau, k)?;
                    Ok(Generators {
                        q1: AffineDiffOp::new(1, ZERO, [c(-1.0, 0.0), ZERO], [ZERO; 2])?,
                        q2: AffineDiffOp::new(1, ZERO, [ZERO; 2], [c(0.0, pp.position_nc), ZERO])?,
                        p1: AffineDiffOp::new(1, c(pp.hbar * kappa, 0.0), [ZERO; 2], [c(0.0, pp.hbar), ZERO])?,
                        p2: AffineDiffOp::new(1, c(pp.hbar * delta, 0.0), [c(pp.hbar / pp.position_nc, 0.0), ZERO], [ZERO; 2])?,
                    })
                }
                RepSpec::TauZero4D { rho, sigma } => {
                    let pp = physical_params(rho, sigma, 0.0, k)?;
                    Ok(Generators {
                        q1: AffineDiffOp::new(2, ZERO, [c(1.0, 0.0), ZERO], [ZERO, c(0.0, pp.position_nc)])?,
                        q2: AffineDiffOp::new(2, ZERO, [ZERO, c(1.0, 0.0)], [ZERO; 2])?,
                        p1: AffineDiffOp::new(2, ZERO, [ZERO; 2], [c(0.0, -pp.hbar), ZERO])?,
                        p2: AffineDiffOp::new(2, ZERO, [ZERO; 2], [ZERO, c(0.0, -pp.hbar)])?,
                    })
                }
                RepSpec::SigmaZero4D { rho, tau } => {
                    let pp = physical_params(rho, 0.0, tau, k)?;
                    Ok(Generators {
                        q1: AffineDiffOp::new(2, ZERO, [c(1.0, 0.0), ZERO], [ZERO; 2])?,
                        q2: AffineDiffOp::new(2, ZERO, [ZERO, c(1.0, 0.0)], [ZERO; 2])?,
                        p1: AffineDiffOp::new(2, ZERO, [ZERO; 2], [c(0.0, -pp.hbar), ZERO])?,
                        p2: AffineDiffOp::new(
                            2,
                            ZERO,
                            [c(-pp.momentum_nc / pp.hbar, 0.0), ZERO],
                            [ZERO, c(0.0, -pp.hbar)],
                        )?,
                    })
                }
                RepSpec::WeylHeisenberg4D { rho } => {
                    let pp = physical_params(rho, 0.0, 0.0, k)?;
                    Ok(Generators {
                        q1: AffineDiffOp::new(2, ZERO, [c(1.0, 0.0), ZERO], [ZERO; 2])?,
                        q2: AffineDiffOp::new(2, ZERO, [ZERO, c(1.0, 0.0)], [ZERO; 2])?,
                        p1: AffineDiffOp::new(2, ZERO, [ZERO; 2], [c(0.0, -pp.hbar), ZERO])?,
                        p2: AffineDiffOp::new(2, ZERO, [ZERO; 2], [ZERO, c(0.0, -pp.hbar)])?,
                    })
                }
                RepSpec::RhoZero4D { sigma, tau } => {
                    let kappa1 = -sigma * be;
                    let kappa2 = -tau * ga;
                    Ok(Generators {
                        q1: AffineDiffOp::new(2, ZERO, [ZERO; 2], [ZERO, c(0.0, kappa1)])?,
                        q2: AffineDiffOp::new(2, ZERO, [ZERO, c(1.0, 0.0)], [ZERO; 2])?,
                        p1: AffineDiffOp::new(2, ZERO, [ZERO; 2], [c(0.0, -1.0), ZERO])?,
                        p2: AffineDiffOp::new(2, ZERO, [c(-kappa2, 0.0), ZERO], [ZERO; 2])?,
                    })
                }
                RepSpec::PPlane2D { tau, c1, c2 } => {
                    let kappa2 = -tau * ga;
                    Ok(Generators {
                        q1: AffineDiffOp::scalar(1, c(c1, 0.0))?,
                        q2: AffineDiffOp::scalar(1, c(c2, 0.0))?,
                        p1: AffineDiffOp::new(1, ZERO, [c(kappa2, 0.0), ZERO], [ZERO; 2])?,
                        p2: AffineDiffOp::new(1, ZERO, [ZERO; 2], [c(0.0, -1.0), ZERO])?,
                    })
                }
                RepSpec::QPlane2D { sigma, c3, c4 } => {
                    let kappa1 = -sigma * be;
                    Ok(Generators {
                        q1: AffineDiffOp::new(1, ZERO, [ZERO; 2], [c(0.0, kappa1), ZERO])?,
                        q2: AffineDiffOp::new(1, ZERO, [c(1.0, 0.0), ZERO], [ZERO; 2])?,
                        p1: AffineDiffOp::scalar(1, c(c3, 0.0))?,
                        p2: AffineDiffOp::scalar(1, c(c4, 0.0))?,
                    })
                }
                RepSpec::Point0D { c1, c2, c3, c4 } => Ok(Generators {
                    q1: AffineDiffOp::scalar(1, c(c1, 0.0))?,
                    q2: AffineDiffOp::scalar(1, c(c2, 0.0))?,
                    p1: AffineDiffOp::scalar(1, c(c3, 0.0))?,
                    p2: AffineDiffOp::scalar(1, c(c4, 0.0))?,
                }),
            }
        }
        RepFamily::Gauge { l, m } => {
            let denom = ga * be * l - al * al;
            if denom.abs() < crate::rep::GAUGE_SINGULAR_TOL {
                return Err(Error::SingularGaugeParameter { l: *l, denom: denom.abs() });
            }
            let (l, m) = (*l, *m);
            Ok(Generators {
                q1: AffineDiffOp::new(2, ZERO, [c(1.0, 0.0), ZERO], [ZERO, c(0.0, -m * be / (al * al))])?,
                q2: AffineDiffOp::new(2, ZERO, [ZERO, c(1.0, 0.0)], [c(0.0, (1.0 - m) * be / (al * al)), ZERO])?,
                p1: AffineDiffOp::new(
                    2,
                    ZERO,
                    [ZERO, c(ga * al * (1.0 - l) / denom, 0.0)],
                    [c(0.0, -(ga * be * (l + m - l * m) - al * al) / (al * denom)), ZERO],
                )?,
                p2: AffineDiffOp::new(
                    2,
                    ZERO,
                    [c(l * ga / al, 0.0), ZERO],
                    [ZERO, c(0.0, (ga * be * l * (1.0 - m) - al * al) / (al * al * al))],
                )?,
            })
        }
    }
}

/// Group direction entering a one-parameter subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Q1,
    Q2,
    P1,
    P2,
}

impl Direction {
    pub const ALL: [Direction; 4] = [Direction::Q1, Direction::Q2, Direction::P1, Direction::P2];

    pub fn element(&self, t: f64) -> GroupElement {
        let mut g = GroupElement::identity();
        match self {
            Direction::Q1 => g.q1 = t,
            Direction::Q2 => g.q2 = t,
            Direction::P1 => g.p1 = t,
            Direction::P2 => g.p2 = t,
        }
        g
    }

    /// Generator integrated by this direction: q_i pairs with P_i, p_i with Q_i.
    pub fn generator<'a>(&self, gens: &'a Generators) -> &'a AffineDiffOp {
        match self {
            Direction::Q1 => &gens.p1,
            Direction::Q2 => &gens.p2,
            Direction::P1 => &gens.q1,
            Direction::P2 => &gens.q2,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Direction::Q1 => "q1",
            Direction::Q2 => "q2",
            Direction::P1 => "p1",
            Direction::P2 => "p2",
        }
    }
}

/// Central-difference consistency between a one-parameter unitary subgroup
/// and its generator:
///
/// ```text
/// (U(t e) f − U(−t e) f)(r) / (2t)  ≈  i λ (X̂ f)(r)
/// ```
///
/// where X̂ is the paired generator and λ the coupling scale — the ρ-carrying
/// classes integrate e^{i t X̂/ħ} with 1/ħ = ρα, the ρ = 0 classes couple with
/// unit scale. Returns |difference − i λ X̂f| / max(1, |λ X̂f|) at `r`.
pub fn generator_check(
    family: &RepFamily,
    direction: Direction,
    k: &ExtensionConstants,
    f: &GaussianPacket,
    r: &[f64],
    step: f64,
) -> Result<f64> {
    let gens = build_generators(family, k)?;
    let rho = family.rho_character(k);
    let lambda = if rho != 0.0 { rho * k.alpha() } else { 1.0 };
    let plus = family.apply(&direction.element(step), k, f)?;
    let minus = family.apply(&direction.element(-step), k, f)?;
    let diff = (plus.eval(r) - minus.eval(r)) / (2.0 * step);
    let target = Complex64::new(0.0, lambda) * direction.generator(&gens).apply(f, r)?;
    Ok((diff - target).norm() / target.norm().max(1.0))
}
