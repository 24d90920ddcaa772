//! Noncommutative tori from the one-parameter unitaries of a representation.
//!
//! Fixing amounts (a1, a2, a3, a4) along the group directions (q1, q2, p1,
//! p2) gives four unitaries U_i. Each pair obeys U_i U_j = c(i,j) U_j U_i
//! with a constant unimodular c(i,j) = e^{2πi θ_ij}, because the group
//! commutator of two one-parameter subgroups is central and the central
//! coordinates act by characters. The standard amounts
//!
//!   (a1, a2, a3, a4) = (1, 2π/γ, 2π/α, α/β)
//!
//! make every pairing product equal 2π at once; that needs α² = γβ, and
//! then θ is built from the orbit invariants alone: θ_12 = τ_eff,
//! θ_13 = θ_24 = ρ_eff, θ_34 = σ_eff, the two cross pairs commute.
//!
//! c(i,j) is *measured*, not assumed: both orderings are applied to a
//! packet and the pointwise ratio is checked for constancy and
//! unimodularity before it is reported.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::Direction;
use crate::coadjoint::OrbitClass;
use crate::error::{Error, Result};
use crate::group::{ExtensionConstants, GroupElement};
use crate::packet::GaussianPacket;
use crate::par::{index_rng, sub_seed};
use crate::rep::{apply_rep, RepSpec};

/// Sample points fainter than this are skipped when forming ratios.
const MAGNITUDE_FLOOR: f64 = 1e-14;
/// Minimum number of usable sample points for a trustworthy ratio.
const MIN_USABLE: usize = 5;
/// The ratio must be constant across points to this spread ...
const RATIO_STDEV_TOL: f64 = 1e-9;
/// ... and its modulus this close to one.
const UNIMODULAR_TOL: f64 = 1e-10;

/// Standard amounts (1, 2π/γ, 2π/α, α/β) along (q1, q2, p1, p2). Requires
/// α² = γβ so that all four pairing products α a1 a3, α a2 a4, γ a1 a2,
/// β a3 a4 equal 2π.
pub fn standard_parameters(k: &ExtensionConstants) -> Result<[f64; 4]> {
    let alpha_sq = k.alpha() * k.alpha();
    let gamma_beta = k.gamma() * k.beta();
    if (alpha_sq - gamma_beta).abs() > 1e-12 * alpha_sq.max(1.0) {
        return Err(Error::InconsistentTorusConstants { alpha_sq, gamma_beta });
    }
    Ok([1.0, 2.0 * PI / k.gamma(), 2.0 * PI / k.alpha(), k.alpha() / k.beta()])
}

/// Four one-parameter unitaries of one representation, taken along the
/// group directions (q1, q2, p1, p2) with fixed amounts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeylSystem {
    spec: RepSpec,
    k: ExtensionConstants,
    amounts: [f64; 4],
}

impl WeylSystem {
    /// The standard lattice for torus constants with α² = γβ.
    pub fn standard(spec: RepSpec, k: &ExtensionConstants) -> Result<Self> {
        let amounts = standard_parameters(k)?;
        Self::with_amounts(spec, k, amounts)
    }

    pub fn with_amounts(spec: RepSpec, k: &ExtensionConstants, amounts: [f64; 4]) -> Result<Self> {
        spec.validate(k)?;
        Ok(Self { spec, k: *k, amounts })
    }

    pub fn spec(&self) -> &RepSpec {
        &self.spec
    }

    pub fn amounts(&self) -> [f64; 4] {
        self.amounts
    }

    /// The group element generating U_i, for i in 1..=4.
    pub fn element(&self, i: usize) -> Result<GroupElement> {
        let dir = match i {
            1 => Direction::Q1,
            2 => Direction::Q2,
            3 => Direction::P1,
            4 => Direction::P2,
            _ => return Err(Error::BadUnitaryIndex { i, j: i }),
        };
        Ok(dir.element(self.amounts[i - 1]))
    }

    /// U_i f.
    pub fn apply(&self, i: usize, f: &GaussianPacket) -> Result<GaussianPacket> {
        apply_rep(&self.spec, &self.element(i)?, &self.k, f)
    }

    /// The measured constant with U_i U_j f = c(i,j) U_j U_i f.
    pub fn commutation_phase(
        &self,
        i: usize,
        j: usize,
        f: &GaussianPacket,
        rng: &mut impl Rng,
    ) -> Result<Complex64> {
        if i == j {
            return Err(Error::BadUnitaryIndex { i, j });
        }
        let num = self.apply(i, &self.apply(j, f)?)?;
        let den = self.apply(j, &self.apply(i, f)?)?;
        measure_weyl_phase(&num, &den, rng)
    }
}

/// Measure the constant c with num = c · den by pointwise ratios over a
/// width-scaled lattice around the packet centre plus random fill-in
/// points. Rejects non-constant and non-unimodular ratios.
pub fn measure_weyl_phase(
    num: &GaussianPacket,
    den: &GaussianPacket,
    rng: &mut impl Rng,
) -> Result<Complex64> {
    if num.dim() != den.dim() {
        return Err(Error::DimensionMismatch { expected: num.dim(), got: den.dim() });
    }
    let dim = num.dim();
    let centre = num.centre();
    let widths = num.widths();

    const OFFSETS: [f64; 5] = [-3.0, -1.5, 0.0, 1.5, 3.0];
    let mut points: Vec<[f64; 2]> = Vec::new();
    if dim == 1 {
        for o in OFFSETS {
            points.push([centre[0] + o * widths[0], 0.0]);
        }
    } else {
        for oa in OFFSETS {
            for ob in OFFSETS {
                points.push([centre[0] + oa * widths[0], centre[1] + ob * widths[1]]);
            }
        }
    }
    for _ in 0..15 {
        let mut r = [0.0; 2];
        for j in 0..dim {
            r[j] = centre[j] + widths[j] * rng.gen_range(-2.0..2.0);
        }
        points.push(r);
    }

    let mut ratios: Vec<Complex64> = Vec::with_capacity(points.len());
    for r in &points {
        let top = num.eval(&r[..dim]);
        let bottom = den.eval(&r[..dim]);
        if top.norm() < MAGNITUDE_FLOOR || bottom.norm() < MAGNITUDE_FLOOR {
            continue;
        }
        ratios.push(top / bottom);
    }
    if ratios.len() < MIN_USABLE {
        return Err(Error::TooFewSamplePoints { usable: ratios.len(), total: points.len() });
    }

    let n = ratios.len() as f64;
    let mean = ratios.iter().sum::<Complex64>() / n;
    let variance = ratios.iter().map(|c| (c - mean).norm_sqr()).sum::<f64>() / n;
    let stdev = variance.sqrt();
    if stdev > RATIO_STDEV_TOL {
        return Err(Error::NonConstantRatio { stdev });
    }
    let off_circle = (mean.norm() - 1.0).abs();
    if off_circle > UNIMODULAR_TOL {
        return Err(Error::NonUnimodularPhase(off_circle));
    }
    Ok(mean)
}

/// The measured constant with U_a(s) U_b(t) f = c · U_b(t) U_a(s) f for
/// arbitrary direction/amount pairs.
pub fn measure_commutation_phase(
    spec: &RepSpec,
    k: &ExtensionConstants,
    (a, s): (Direction, f64),
    (b, t): (Direction, f64),
    f: &GaussianPacket,
    rng: &mut impl Rng,
) -> Result<Complex64> {
    let ga = a.element(s);
    let gb = b.element(t);
    let num = apply_rep(spec, &ga, k, &apply_rep(spec, &gb, k, f)?)?;
    let den = apply_rep(spec, &gb, k, &apply_rep(spec, &ga, k, f)?)?;
    measure_weyl_phase(&num, &den, rng)
}

/// The exact constant the group law predicts for
/// U_a(s) U_b(t) = c · U_b(t) U_a(s): the group commutator of the two
/// subgroups is central, so c is a central character value.
pub fn expected_commutation_phase(
    spec: &RepSpec,
    k: &ExtensionConstants,
    (a, s): (Direction, f64),
    (b, t): (Direction, f64),
) -> Complex64 {
    let idx = |d: Direction| match d {
        Direction::Q1 => 0usize,
        Direction::Q2 => 1,
        Direction::P1 => 2,
        Direction::P2 => 3,
    };
    let chars = spec.central_character(k);
    let (lo, hi, sign) = if idx(a) <= idx(b) { (idx(a), idx(b), 1.0) } else { (idx(b), idx(a), -1.0) };
    let rate = match (lo, hi) {
        (0, 1) => chars[2] * k.gamma(),
        (0, 2) | (1, 3) => chars[0] * k.alpha(),
        (2, 3) => chars[1] * k.beta(),
        _ => 0.0,
    };
    Complex64::from_polar(1.0, sign * rate * s * t)
}

/// The skew-symmetric θ with c(i,j) = e^{2πi θ_ij} under the standard
/// amounts. Entries come from the orbit invariants alone; for the cone the
/// torus constraint α² = γβ turns the τ character ρζ·α²/(γβ) into ρζ.
pub fn theta_matrix(class: &OrbitClass) -> [[f64; 4]; 4] {
    let mut m = [[0.0; 4]; 4];
    let mut set = |i: usize, j: usize, v: f64| {
        m[i - 1][j - 1] = v;
        m[j - 1][i - 1] = -v;
    };
    match *class {
        OrbitClass::Generic4D { rho, sigma, tau } => {
            set(1, 2, tau);
            set(1, 3, rho);
            set(2, 4, rho);
            set(3, 4, sigma);
        }
        OrbitClass::Cone2D { rho, zeta } => {
            set(1, 2, rho * zeta);
            set(1, 3, rho);
            set(2, 4, rho);
            set(3, 4, rho / zeta);
        }
        OrbitClass::TauZero4D { rho, sigma } => {
            set(1, 3, rho);
            set(2, 4, rho);
            set(3, 4, sigma);
        }
        OrbitClass::SigmaZero4D { rho, tau } => {
            set(1, 2, tau);
            set(1, 3, rho);
            set(2, 4, rho);
        }
        OrbitClass::WeylHeisenberg4D { rho } => {
            set(1, 3, rho);
            set(2, 4, rho);
        }
        OrbitClass::RhoZero4D { sigma, tau } => {
            set(1, 2, tau);
            set(3, 4, sigma);
        }
        OrbitClass::PPlane2D { tau } => set(1, 2, tau),
        OrbitClass::QPlane2D { sigma } => set(3, 4, sigma),
        OrbitClass::Point0D { .. } => {}
    }
    m
}

/// Comparison of every measured pair phase against e^{2πi θ_ij}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TorusReport {
    pub case: String,
    pub amounts: [f64; 4],
    pub theta: [[f64; 4]; 4],
    /// Measured c(i,j) for the first packet, keyed "12".."34" as [re, im].
    pub measured_phases: BTreeMap<String, [f64; 2]>,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

const PAIRS: [(usize, usize); 6] = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];

/// Measure all six pair phases on each packet and compare to the θ matrix
/// of the underlying orbit class.
pub fn verify_torus(
    spec: &RepSpec,
    k: &ExtensionConstants,
    packets: &[GaussianPacket],
    seed: u64,
    tolerance: f64,
) -> Result<TorusReport> {
    let ws = WeylSystem::standard(*spec, k)?;
    let theta = theta_matrix(&spec.orbit_class());
    let check_seed = sub_seed(seed, "torus-phase");

    let mut measured = BTreeMap::new();
    let mut max_deviation = 0.0f64;
    for (pair_idx, &(i, j)) in PAIRS.iter().enumerate() {
        let expected = Complex64::from_polar(1.0, 2.0 * PI * theta[i - 1][j - 1]);
        for (pkt_idx, f) in packets.iter().enumerate() {
            let mut rng = index_rng(check_seed, pair_idx * packets.len() + pkt_idx);
            let c = ws.commutation_phase(i, j, f, &mut rng)?;
            max_deviation = max_deviation.max((c - expected).norm());
            if pkt_idx == 0 {
                measured.insert(format!("{i}{j}"), [c.re, c.im]);
            }
        }
    }
    Ok(TorusReport {
        case: spec.label().to_string(),
        amounts: ws.amounts(),
        theta,
        measured_phases: measured,
        max_deviation,
        tolerance,
        pass: max_deviation <= tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn unit() -> ExtensionConstants {
        ExtensionConstants::new(1.0, 1.0, 1.0).unwrap()
    }

    fn close(c: Complex64, angle: f64, tol: f64) -> bool {
        (c - Complex64::from_polar(1.0, angle)).norm() <= tol
    }

    #[test]
    fn standard_parameters_examples() {
        assert_eq!(standard_parameters(&unit()).unwrap(), [1.0, 2.0 * PI, 2.0 * PI, 1.0]);

        let doubled = ExtensionConstants::new(2.0, 2.0, 2.0).unwrap();
        let a = standard_parameters(&doubled).unwrap();
        assert_eq!(a, [1.0, PI, PI, 1.0]);
        // all four pairing products land on 2π exactly
        assert_eq!(2.0 * a[0] * a[2], 2.0 * PI);
        assert_eq!(2.0 * a[1] * a[3], 2.0 * PI);
        assert_eq!(2.0 * a[0] * a[1], 2.0 * PI);
        assert_eq!(2.0 * a[2] * a[3], 2.0 * PI);

        let skew = ExtensionConstants::new(1.0, 0.5, 0.5).unwrap();
        assert!(matches!(
            standard_parameters(&skew),
            Err(Error::InconsistentTorusConstants { .. })
        ));
    }

    #[test]
    fn unitary_indexing() {
        let ws = WeylSystem::standard(RepSpec::WeylHeisenberg4D { rho: 0.3 }, &unit()).unwrap();
        let g = ws.element(2).unwrap();
        assert_eq!((g.q1, g.q2, g.p1, g.p2), (0.0, 2.0 * PI, 0.0, 0.0));
        let g = ws.element(4).unwrap();
        assert_eq!((g.q1, g.q2, g.p1, g.p2), (0.0, 0.0, 0.0, 1.0));
        assert!(matches!(ws.element(0), Err(Error::BadUnitaryIndex { .. })));
        assert!(matches!(ws.element(5), Err(Error::BadUnitaryIndex { .. })));

        let f = GaussianPacket::standard(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(matches!(
            ws.commutation_phase(3, 3, &f, &mut rng),
            Err(Error::BadUnitaryIndex { i: 3, j: 3 })
        ));
    }

    #[test]
    fn generic_fractional_invariants_measure_their_phases() {
        let spec = RepSpec::Generic4D { rho: 1.0 / 3.0, sigma: 0.5, tau: 0.2 };
        let ws = WeylSystem::standard(spec, &unit()).unwrap();
        let f = GaussianPacket::new_2d(
            Complex64::new(0.8, 0.3),
            [0.4, -0.2],
            [0.1, 0.5],
            [1.0, 1.3],
        )
        .unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let phase = |i, j, rng: &mut ChaCha8Rng| ws.commutation_phase(i, j, &f, rng).unwrap();

        assert!(close(phase(1, 3, &mut rng), 2.0 * PI / 3.0, 1e-9));
        assert!(close(phase(2, 4, &mut rng), 2.0 * PI / 3.0, 1e-9));
        assert!(close(phase(1, 2, &mut rng), 2.0 * PI * 0.2, 1e-9));
        assert!(close(phase(3, 4, &mut rng), PI, 1e-9)); // e^{2πi·0.5} = −1
        assert!(close(phase(1, 4, &mut rng), 0.0, 1e-9));
        assert!(close(phase(2, 3, &mut rng), 0.0, 1e-9));
        // reversing the order conjugates the constant
        assert!(close(phase(3, 1, &mut rng), -2.0 * PI / 3.0, 1e-9));
    }

    #[test]
    fn tau_zero_drops_the_position_pair() {
        let spec = RepSpec::TauZero4D { rho: 0.25, sigma: 0.4 };
        let ws = WeylSystem::standard(spec, &unit()).unwrap();
        let f = GaussianPacket::standard(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let c12 = ws.commutation_phase(1, 2, &f, &mut rng).unwrap();
        let c13 = ws.commutation_phase(1, 3, &f, &mut rng).unwrap();
        let c34 = ws.commutation_phase(3, 4, &f, &mut rng).unwrap();
        assert!(close(c12, 0.0, 1e-12));
        assert!(close(c13, PI / 2.0, 1e-9)); // e^{2πi/4} = i
        assert!(close(c34, 2.0 * PI * 0.4, 1e-9));
    }

    #[test]
    fn cone_phases_ignore_the_section_labels() {
        let mut baseline = None;
        for kappa in [-1.0, 0.0, 2.0] {
            for delta in [-1.0, 0.0, 2.0] {
                let spec = RepSpec::Cone2D { rho: 1.0 / 3.0, zeta: 2.0, kappa, delta };
                let report = verify_torus(
                    &spec,
                    &unit(),
                    &[GaussianPacket::standard(1).unwrap()],
                    5,
                    1e-9,
                )
                .unwrap();
                assert!(report.pass, "κ={kappa}, δ={delta}: {}", report.max_deviation);
                let phases = report.measured_phases.clone();
                match &baseline {
                    None => baseline = Some(phases),
                    Some(b) => {
                        for (key, val) in b {
                            let got = phases[key];
                            assert!(
                                (got[0] - val[0]).abs() < 1e-12 && (got[1] - val[1]).abs() < 1e-12,
                                "pair {key} drifted across section labels"
                            );
                        }
                    }
                }
            }
        }
        // the cone θ entries themselves: τ_eff = ρζ = 2/3, σ_eff = ρ/ζ = 1/6
        let theta = theta_matrix(&OrbitClass::Cone2D { rho: 1.0 / 3.0, zeta: 2.0 });
        assert_eq!(theta[0][1], 2.0 / 3.0);
        assert_eq!(theta[2][3], 1.0 / 6.0);
    }

    #[test]
    fn integer_invariants_make_every_pair_commute() {
        for spec in [
            RepSpec::Generic4D { rho: 1.0, sigma: 2.0, tau: 3.0 },
            RepSpec::WeylHeisenberg4D { rho: 1.0 },
        ] {
            let ws = WeylSystem::standard(spec, &unit()).unwrap();
            let f = GaussianPacket::standard(2).unwrap();
            for (n, &(i, j)) in PAIRS.iter().enumerate() {
                let mut rng = ChaCha8Rng::seed_from_u64(100 + n as u64);
                let c = ws.commutation_phase(i, j, &f, &mut rng).unwrap();
                assert!(close(c, 0.0, 1e-10), "{} pair ({i},{j}): {c}", spec.label());
            }
        }
    }

    #[test]
    fn point_class_tori_are_commutative() {
        let spec = RepSpec::Point0D { c1: 0.1, c2: -0.2, c3: 0.3, c4: -0.4 };
        for dim in [1usize, 2] {
            let f = GaussianPacket::standard(dim).unwrap();
            let ws = WeylSystem::standard(spec, &unit()).unwrap();
            for &(i, j) in &PAIRS {
                let mut rng = ChaCha8Rng::seed_from_u64(3);
                let c = ws.commutation_phase(i, j, &f, &mut rng).unwrap();
                assert!(close(c, 0.0, 1e-12));
            }
        }
        assert_eq!(
            theta_matrix(&OrbitClass::Point0D { c1: 0.1, c2: -0.2, c3: 0.3, c4: -0.4 }),
            [[0.0; 4]; 4]
        );
    }

    #[test]
    fn theta_is_skew_and_degenerates_structurally() {
        let generic = theta_matrix(&OrbitClass::Generic4D { rho: 0.7, sigma: 0.3, tau: 0.0 });
        for (i, row) in generic.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                assert_eq!(*entry, -generic[j][i]);
            }
        }
        assert_eq!(generic, theta_matrix(&OrbitClass::TauZero4D { rho: 0.7, sigma: 0.3 }));
        assert_eq!(
            theta_matrix(&OrbitClass::Generic4D { rho: 0.7, sigma: 0.0, tau: 0.4 }),
            theta_matrix(&OrbitClass::SigmaZero4D { rho: 0.7, tau: 0.4 })
        );
        assert_eq!(
            theta_matrix(&OrbitClass::Generic4D { rho: 0.7, sigma: 0.0, tau: 0.0 }),
            theta_matrix(&OrbitClass::WeylHeisenberg4D { rho: 0.7 })
        );
        assert_eq!(
            theta_matrix(&OrbitClass::Generic4D { rho: 0.0, sigma: 0.3, tau: 0.4 }),
            theta_matrix(&OrbitClass::RhoZero4D { sigma: 0.3, tau: 0.4 })
        );
        let pplane = theta_matrix(&OrbitClass::PPlane2D { tau: 0.4 });
        assert_eq!(pplane[0][1], 0.4);
        assert_eq!(pplane[2][3], 0.0);
        let qplane = theta_matrix(&OrbitClass::QPlane2D { sigma: 0.3 });
        assert_eq!(qplane[2][3], 0.3);
        assert_eq!(qplane[0][1], 0.0);
    }

    #[test]
    fn general_amount_relations_follow_the_central_characters() {
        // away from the torus constraint: α² ≠ γβ here
        let k = ExtensionConstants::new(1.0, 0.5, 0.5).unwrap();
        let spec = RepSpec::Generic4D { rho: 1.3, sigma: -0.6, tau: 0.8 };
        let f = GaussianPacket::standard(2).unwrap();
        let cases = [
            (Direction::Q1, 0.7, Direction::P1, 1.3),
            (Direction::Q2, -0.4, Direction::P2, 0.9),
            (Direction::Q1, 0.7, Direction::Q2, -0.4),
            (Direction::P1, 1.3, Direction::P2, 0.9),
            (Direction::Q1, 0.7, Direction::P2, 0.9),
            (Direction::P1, 1.3, Direction::Q2, -0.4),
            (Direction::P2, 0.9, Direction::Q2, -0.4), // reversed order
        ];
        for (n, (a, s, b, t)) in cases.into_iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(200 + n as u64);
            let measured =
                measure_commutation_phase(&spec, &k, (a, s), (b, t), &f, &mut rng).unwrap();
            let expected = expected_commutation_phase(&spec, &k, (a, s), (b, t));
            assert!(
                (measured - expected).norm() < 1e-9,
                "{}/{}: measured {measured}, expected {expected}",
                a.label(),
                b.label()
            );
        }
        // spot value: ⟨q1, p1⟩ pair picks up e^{iρ α s t}
        assert_eq!(
            expected_commutation_phase(&spec, &k, (Direction::Q1, 0.7), (Direction::P1, 1.3)),
            Complex64::from_polar(1.0, 1.3 * 1.0 * 0.7 * 1.3)
        );
    }

    #[test]
    fn torus_report_shape() {
        let spec = RepSpec::SigmaZero4D { rho: 0.3, tau: 0.45 };
        let packets = [
            GaussianPacket::standard(2).unwrap(),
            GaussianPacket::new_2d(Complex64::new(0.5, -0.5), [1.0, 0.0], [0.2, -0.1], [0.8, 1.1])
                .unwrap(),
        ];
        let report = verify_torus(&spec, &unit(), &packets, 42, 1e-9).unwrap();
        assert!(report.pass);
        assert_eq!(report.case, "SigmaZero4D");
        assert_eq!(report.measured_phases.len(), 6);
        assert!(report.max_deviation <= 1e-9);
        let c13 = report.measured_phases["13"];
        let expected = Complex64::from_polar(1.0, 2.0 * PI * 0.3);
        assert!((Complex64::new(c13[0], c13[1]) - expected).norm() < 1e-9);

        // identical call → identical JSON
        let again = verify_torus(&spec, &unit(), &packets, 42, 1e-9).unwrap();
        assert_eq!(
            serde_json::to_string(&report).unwrap(),
            serde_json::to_string(&again).unwrap()
        );

        let err = verify_torus(&spec, &ExtensionConstants::new(1.0, 0.5, 0.5).unwrap(), &packets, 42, 1e-9);
        assert!(matches!(err, Err(Error::InconsistentTorusConstants { .. })));
    }
}
