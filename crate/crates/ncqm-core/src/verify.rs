//! Seeded verification suites over the defining identities of the crate:
//! group axioms, coadjoint geometry, representation laws, gauge members and
//! torus phases, each reduced to a sweep of independent items with a
//! recorded max residual.
//!
//! Determinism contract: every sweep derives its stream from the master
//! seed and the check label, every item from the stream and its index, and
//! results are collected in index order. The sequential and parallel
//! execution paths therefore serialise to byte-identical reports.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{build_generators, generator_check, physical_params, Direction};
use crate::coadjoint::{classify_orbit, coadjoint_act, DualVector};
use crate::error::{Error, Result};
use crate::gauge::{formal_curl, symmetric_rep_params, vector_potential, GaugePotential};
use crate::group::{ExtensionConstants, GroupElement};
use crate::packet::{inner_product, GaussianPacket};
use crate::par::{index_rng, map_indexed, sub_seed, Execution};
use crate::rep::{apply_gauge_rep, apply_gauge_rep_adjoint, RepFamily, RepSpec};
use crate::torus::{
    expected_commutation_phase, measure_commutation_phase, standard_parameters, verify_torus,
};

/// Identifier of the report layout.
pub const SCHEMA: &str = "ncqm-lab/1";

/// Residual bounds, one per identity class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    pub associativity: f64,
    pub homomorphism: f64,
    pub unitarity: f64,
    pub commutator: f64,
    pub weyl_phase: f64,
    pub finite_diff: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            associativity: 1e-12,
            homomorphism: 1e-9,
            unitarity: 1e-10,
            commutator: 1e-12,
            weyl_phase: 1e-9,
            finite_diff: 1e-6,
        }
    }
}

/// Item counts for the randomised sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Sweeps {
    pub group_triples: usize,
    pub coadjoint_pairs: usize,
    pub orbit_trajectories: usize,
    pub homomorphism_samples: usize,
    pub gauge_members: usize,
    pub weyl_pairs: usize,
    pub torus_packets: usize,
}

impl Default for Sweeps {
    fn default() -> Self {
        Self {
            group_triples: 1000,
            coadjoint_pairs: 1000,
            orbit_trajectories: 100,
            homomorphism_samples: 200,
            gauge_members: 10,
            weyl_pairs: 50,
            torus_packets: 10,
        }
    }
}

/// Full configuration of a verification run. `constants` drives the group,
/// representation and gauge suites; `torus_constants` must satisfy α² = γβ
/// and drives the torus suite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub seed: u64,
    pub constants: ExtensionConstants,
    pub torus_constants: ExtensionConstants,
    pub tolerances: Tolerances,
    pub sweeps: Sweeps,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            constants: ExtensionConstants::new(1.0, 0.5, 0.5).expect("valid defaults"),
            torus_constants: ExtensionConstants::new(1.0, 1.0, 1.0).expect("valid defaults"),
            tolerances: Tolerances::default(),
            sweeps: Sweeps::default(),
        }
    }
}

/// Outcome of one named sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub pass: bool,
    pub count: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub seed: u64,
    /// Context strings for the first few items over tolerance.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<CheckReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FullReport {
    pub schema: String,
    pub config: RunConfig,
    pub suites: Vec<SuiteReport>,
    pub pass: bool,
}

const MAX_RECORDED_FAILURES: usize = 5;

/// Run `n` independent items of one check and fold them into a report.
fn sweep<F>(
    exec: Execution,
    master: u64,
    suite: &str,
    name: &str,
    n: usize,
    tolerance: f64,
    item: F,
) -> CheckReport
where
    F: Fn(usize, &mut ChaCha8Rng) -> (f64, String) + Sync + Send,
{
    let seed = sub_seed(master, &format!("{suite}/{name}"));
    let results = map_indexed(exec, n, |i| {
        let mut rng = index_rng(seed, i);
        item(i, &mut rng)
    });
    let mut max_residual = 0.0f64;
    let mut failures = Vec::new();
    for (residual, context) in results {
        let r = if residual.is_nan() { f64::INFINITY } else { residual };
        max_residual = max_residual.max(r);
        if r > tolerance && failures.len() < MAX_RECORDED_FAILURES {
            failures.push(context);
        }
    }
    CheckReport {
        name: name.to_string(),
        pass: max_residual <= tolerance,
        count: n,
        max_residual,
        tolerance,
        seed,
        failures,
    }
}

fn suite_report(name: &str, checks: Vec<CheckReport>) -> SuiteReport {
    let pass = checks.iter().all(|c| c.pass);
    SuiteReport { suite: name.to_string(), pass, checks }
}

fn uniform(rng: &mut impl Rng, half_width: f64) -> f64 {
    rng.gen_range(-half_width..half_width)
}

fn random_element(rng: &mut impl Rng, half_width: f64) -> GroupElement {
    GroupElement::new(
        uniform(rng, half_width),
        uniform(rng, half_width),
        uniform(rng, half_width),
        uniform(rng, half_width),
        uniform(rng, half_width),
        uniform(rng, half_width),
        uniform(rng, half_width),
    )
}

fn random_dual(rng: &mut impl Rng, half_width: f64) -> DualVector {
    DualVector::new(
        uniform(rng, half_width),
        uniform(rng, half_width),
        uniform(rng, half_width),
        uniform(rng, half_width),
        uniform(rng, half_width),
        uniform(rng, half_width),
        uniform(rng, half_width),
    )
}

fn random_packet(rng: &mut impl Rng, dim: usize) -> GaussianPacket {
    let amplitude = Complex64::from_polar(
        rng.gen_range(0.5..2.0),
        rng.gen_range(0.0..std::f64::consts::TAU),
    );
    let k = [uniform(rng, 1.5), uniform(rng, 1.5)];
    let c = [uniform(rng, 1.5), uniform(rng, 1.5)];
    let w = [rng.gen_range(0.6..1.6), rng.gen_range(0.6..1.6)];
    GaussianPacket::new(dim, amplitude, k, c, w).expect("random packet parameters are valid")
}

/// Worst per-field distance between two packets; infinite on a dim mismatch.
fn packet_distance(a: &GaussianPacket, b: &GaussianPacket) -> f64 {
    if a.dim() != b.dim() {
        return f64::INFINITY;
    }
    let mut d = (a.amplitude() - b.amplitude()).norm();
    for j in 0..a.dim() {
        d = d
            .max((a.wavevector()[j] - b.wavevector()[j]).abs())
            .max((a.centre()[j] - b.centre()[j]).abs())
            .max((a.widths()[j] - b.widths()[j]).abs());
    }
    d
}

/// A generic stratum valid at these constants: (1, 1, 1) unless that lands
/// on the cone, in which case τ is halved off it.
fn generic_default(k: &ExtensionConstants) -> RepSpec {
    let det = k.alpha() * k.alpha() - k.gamma() * k.beta();
    if det.abs() > 1e-9 * (k.alpha() * k.alpha()).max(1.0) {
        RepSpec::Generic4D { rho: 1.0, sigma: 1.0, tau: 1.0 }
    } else {
        RepSpec::Generic4D { rho: 1.0, sigma: 1.0, tau: 0.5 }
    }
}

/// One representative spec per orbit class, valid at any constants.
fn default_specs(k: &ExtensionConstants) -> Vec<RepSpec> {
    vec![
        generic_default(k),
        RepSpec::Cone2D { rho: 1.0, zeta: 2.0, kappa: 0.3, delta: -0.7 },
        RepSpec::TauZero4D { rho: 1.0, sigma: 0.8 },
        RepSpec::SigmaZero4D { rho: 1.0, tau: 0.6 },
        RepSpec::WeylHeisenberg4D { rho: 1.0 },
        RepSpec::RhoZero4D { sigma: 0.9, tau: 1.1 },
        RepSpec::PPlane2D { tau: 0.7, c1: 0.2, c2: -0.4 },
        RepSpec::QPlane2D { sigma: 1.3, c3: -0.5, c4: 0.8 },
        RepSpec::Point0D { c1: 0.1, c2: -0.2, c3: 0.3, c4: -0.4 },
    ]
}

/// Deterministic gauge members clear of the singular locus γβl = α².
fn gauge_members(config: &RunConfig) -> Vec<(f64, f64)> {
    let k = &config.constants;
    let mut rng = ChaCha8Rng::seed_from_u64(sub_seed(config.seed, "reps/gauge-members"));
    let mut members = Vec::with_capacity(config.sweeps.gauge_members);
    while members.len() < config.sweeps.gauge_members {
        let l = rng.gen_range(-2.0..2.0);
        let m = rng.gen_range(-2.0..2.0);
        if (k.gamma() * k.beta() * l - k.alpha() * k.alpha()).abs() < 0.3 {
            continue;
        }
        members.push((l, m));
    }
    members
}

fn rep_families(config: &RunConfig) -> Vec<RepFamily> {
    let mut families: Vec<RepFamily> =
        default_specs(&config.constants).into_iter().map(RepFamily::Orbit).collect();
    families.extend(gauge_members(config).into_iter().map(|(l, m)| RepFamily::Gauge { l, m }));
    families
}

fn family_dim(family: &RepFamily, fallback: usize) -> usize {
    family.carrier_dim().unwrap_or(fallback)
}

/// Group axioms and coadjoint geometry.
pub fn run_group_suite(config: &RunConfig, exec: Execution) -> SuiteReport {
    let k = config.constants;
    let tol = config.tolerances;
    let sweeps = config.sweeps;
    let seed = config.seed;

    let associativity = sweep(
        exec,
        seed,
        "group",
        "associativity",
        sweeps.group_triples,
        tol.associativity,
        |i, rng| {
            let (a, b, c) =
                (random_element(rng, 3.0), random_element(rng, 3.0), random_element(rng, 3.0));
            let left = a.compose(&b, &k).compose(&c, &k);
            let right = a.compose(&b.compose(&c, &k), &k);
            (left.max_coordinate_distance(&right), format!("triple {i}"))
        },
    );

    let identity = sweep(
        exec,
        seed,
        "group",
        "identity-neutrality",
        sweeps.group_triples,
        0.0,
        |i, rng| {
            let g = random_element(rng, 3.0);
            let e = GroupElement::identity();
            let r = g
                .compose(&e, &k)
                .max_coordinate_distance(&g)
                .max(e.compose(&g, &k).max_coordinate_distance(&g));
            (r, format!("element {i}"))
        },
    );

    let inverse = sweep(
        exec,
        seed,
        "group",
        "inverse-exactness",
        sweeps.group_triples,
        0.0,
        |i, rng| {
            let g = random_element(rng, 3.0);
            let e = GroupElement::identity();
            let r = g
                .compose(&g.inverse(), &k)
                .max_coordinate_distance(&e)
                .max(g.inverse().compose(&g, &k).max_coordinate_distance(&e));
            (r, format!("element {i}"))
        },
    );

    let coadjoint = sweep(
        exec,
        seed,
        "group",
        "coadjoint-composition",
        sweeps.coadjoint_pairs,
        tol.associativity,
        |i, rng| {
            let g = random_element(rng, 3.0);
            let h = random_element(rng, 3.0);
            let f = random_dual(rng, 2.0);
            let composed = coadjoint_act(&g.compose(&h, &k), &f, &k);
            let stepped = coadjoint_act(&g, &coadjoint_act(&h, &f, &k), &k);
            let r = [
                composed.x1 - stepped.x1,
                composed.x2 - stepped.x2,
                composed.x3 - stepped.x3,
                composed.x4 - stepped.x4,
            ]
            .into_iter()
            .fold(0.0f64, |m, d| m.max(d.abs()));
            (r, format!("pair {i}"))
        },
    );

    let invariants = sweep(
        exec,
        seed,
        "group",
        "invariant-bits",
        sweeps.coadjoint_pairs,
        0.0,
        |i, rng| {
            let g = random_element(rng, 3.0);
            let f = random_dual(rng, 2.0);
            let moved = coadjoint_act(&g, &f, &k);
            let exact = moved.x5.to_bits() == f.x5.to_bits()
                && moved.x6.to_bits() == f.x6.to_bits()
                && moved.x7.to_bits() == f.x7.to_bits();
            (if exact { 0.0 } else { 1.0 }, format!("action {i}"))
        },
    );

    // one representative invariant triple per class; the walk must never
    // change the classification
    let representatives: Vec<(String, [f64; 3])> = default_specs(&k)
        .iter()
        .map(|spec| {
            let chars = spec.central_character(&k);
            (spec.label().to_string(), chars)
        })
        .collect();
    let zero_tol = 1e-12;
    let stability = sweep(
        exec,
        seed,
        "group",
        "orbit-class-stability",
        sweeps.orbit_trajectories,
        0.0,
        |i, rng| {
            let (label, chars) = &representatives[i % representatives.len()];
            let mut f = random_dual(rng, 2.0);
            f.x5 = chars[0];
            f.x6 = chars[1];
            f.x7 = chars[2];
            let start = match classify_orbit(&f, &k, zero_tol) {
                Ok(class) => class,
                Err(e) => return (f64::INFINITY, format!("{label}: {e}")),
            };
            for _ in 0..25 {
                f = coadjoint_act(&random_element(rng, 3.0), &f, &k);
                match classify_orbit(&f, &k, zero_tol) {
                    Ok(class) if class == start => {}
                    Ok(other) => {
                        return (1.0, format!("{label}: drifted to {}", other.label()))
                    }
                    Err(e) => return (f64::INFINITY, format!("{label}: {e}")),
                }
            }
            (0.0, label.clone())
        },
    );

    suite_report(
        "group",
        vec![associativity, identity, inverse, coadjoint, invariants, stability],
    )
}

/// Representation laws: homomorphism, unitarity, characters, gauge
/// equivalences, operator tables and the exponential map.
pub fn run_reps_suite(config: &RunConfig, exec: Execution) -> SuiteReport {
    let k = config.constants;
    let tol = config.tolerances;
    let sweeps = config.sweeps;
    let seed = config.seed;
    let families = rep_families(config);
    let members = gauge_members(config);
    let samples = sweeps.homomorphism_samples;

    let homomorphism = sweep(
        exec,
        seed,
        "reps",
        "homomorphism",
        families.len() * samples,
        tol.homomorphism,
        |i, rng| {
            let family = &families[i / samples];
            let dim = family_dim(family, 1 + (i % 2));
            let f = random_packet(rng, dim);
            let g = random_element(rng, 2.0);
            let h = random_element(rng, 2.0);
            let out = (|| -> Result<f64> {
                let stepped = family.apply(&g, &k, &family.apply(&h, &k, &f)?)?;
                let composed = family.apply(&g.compose(&h, &k), &k, &f)?;
                Ok(packet_distance(&stepped, &composed))
            })();
            match out {
                Ok(r) => (r, format!("{} sample {}", family.label(), i % samples)),
                Err(e) => (f64::INFINITY, format!("{}: {e}", family.label())),
            }
        },
    );

    let unitarity = sweep(
        exec,
        seed,
        "reps",
        "inner-product-preservation",
        families.len() * samples,
        tol.unitarity,
        |i, rng| {
            let family = &families[i / samples];
            let dim = family_dim(family, 1 + (i % 2));
            let f = random_packet(rng, dim);
            let h = random_packet(rng, dim);
            let g = random_element(rng, 2.0);
            let out = (|| -> Result<f64> {
                let before = inner_product(&f, &h)?;
                let after = inner_product(&family.apply(&g, &k, &f)?, &family.apply(&g, &k, &h)?)?;
                Ok((after - before).norm() / before.norm().max(1.0))
            })();
            match out {
                Ok(r) => (r, format!("{} sample {}", family.label(), i % samples)),
                Err(e) => (f64::INFINITY, format!("{}: {e}", family.label())),
            }
        },
    );

    let characters = sweep(
        exec,
        seed,
        "reps",
        "central-characters",
        families.len() * samples,
        tol.commutator,
        |i, rng| {
            let family = &families[i / samples];
            let chars = match family {
                RepFamily::Orbit(spec) => spec.central_character(&k),
                RepFamily::Gauge { .. } => [1.0, 1.0, 1.0],
            };
            let dim = family_dim(family, 1 + (i % 2));
            let f = random_packet(rng, dim);
            let t = uniform(rng, 2.0);
            let centrals = [
                (GroupElement::new(t, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0), chars[0]),
                (GroupElement::new(0.0, t, 0.0, 0.0, 0.0, 0.0, 0.0), chars[1]),
                (GroupElement::new(0.0, 0.0, t, 0.0, 0.0, 0.0, 0.0), chars[2]),
            ];
            let mut worst = 0.0f64;
            for (g, rate) in centrals {
                match family.apply(&g, &k, &f) {
                    Ok(out) => {
                        let expected = f.amplitude() * Complex64::from_polar(1.0, rate * t);
                        worst = worst.max((out.amplitude() - expected).norm());
                        for j in 0..f.dim() {
                            worst = worst
                                .max((out.wavevector()[j] - f.wavevector()[j]).abs())
                                .max((out.centre()[j] - f.centre()[j]).abs());
                        }
                    }
                    Err(e) => return (f64::INFINITY, format!("{}: {e}", family.label())),
                }
            }
            (worst, format!("{} t={t:.3}", family.label()))
        },
    );

    let generic_match = sweep(
        exec,
        seed,
        "reps",
        "gauge-generic-match",
        samples,
        tol.commutator,
        |i, rng| {
            let singular = (k.gamma() * k.beta() - k.alpha() * k.alpha()).abs() < 1e-9;
            if singular {
                return (0.0, "skipped: member (1, 1) singular at these constants".into());
            }
            let unit_stratum = RepSpec::Generic4D { rho: 1.0, sigma: 1.0, tau: 1.0 };
            let f = random_packet(rng, 2);
            let g = random_element(rng, 2.0);
            let out = (|| -> Result<f64> {
                let via_member = apply_gauge_rep(1.0, 1.0, &k, &g, &f)?;
                let via_orbit = RepFamily::Orbit(unit_stratum).apply(&g, &k, &f)?;
                Ok(packet_distance(&via_member, &via_orbit))
            })();
            match out {
                Ok(r) => (r, format!("sample {i}")),
                Err(e) => (f64::INFINITY, format!("sample {i}: {e}")),
            }
        },
    );

    let adjoint = sweep(
        exec,
        seed,
        "reps",
        "adjoint-roundtrip",
        samples.max(members.len()),
        tol.commutator,
        |i, rng| {
            if members.is_empty() {
                return (0.0, "no gauge members requested".into());
            }
            let (l, m) = members[i % members.len()];
            let f = random_packet(rng, 2);
            let g = random_element(rng, 2.0);
            let out = (|| -> Result<f64> {
                let there = apply_gauge_rep(l, m, &k, &g, &f)?;
                let back = apply_gauge_rep_adjoint(l, m, &k, &g, &there)?;
                let lowered = apply_gauge_rep_adjoint(l, m, &k, &g, &f)?;
                let raised = apply_gauge_rep(l, m, &k, &g, &lowered)?;
                Ok(packet_distance(&back, &f).max(packet_distance(&raised, &f)))
            })();
            match out {
                Ok(r) => (r, format!("member ({l:.3}, {m:.3})")),
                Err(e) => (f64::INFINITY, format!("member ({l:.3}, {m:.3}): {e}")),
            }
        },
    );

    let widths = sweep(
        exec,
        seed,
        "reps",
        "width-invariance",
        samples,
        0.0,
        |i, rng| {
            let family = &families[i % families.len()];
            let dim = family_dim(family, 1 + (i % 2));
            let f = random_packet(rng, dim);
            let g = random_element(rng, 2.0);
            match family.apply(&g, &k, &f) {
                Ok(out) => {
                    let exact = (0..dim)
                        .all(|j| out.widths()[j].to_bits() == f.widths()[j].to_bits());
                    (if exact { 0.0 } else { 1.0 }, family.label())
                }
                Err(e) => (f64::INFINITY, format!("{}: {e}", family.label())),
            }
        },
    );

    let commutators = sweep(
        exec,
        seed,
        "reps",
        "commutator-tables",
        families.len(),
        tol.commutator,
        |i, _rng| {
            let family = &families[i];
            let out = (|| -> Result<f64> {
                let gens = build_generators(family, &k)?;
                let expected = expected_commutators(family, &k)?;
                let actual = [
                    gens.q1.commutator(&gens.p1)?,
                    gens.q2.commutator(&gens.p2)?,
                    gens.q1.commutator(&gens.q2)?,
                    gens.p1.commutator(&gens.p2)?,
                    gens.q1.commutator(&gens.p2)?,
                    gens.q2.commutator(&gens.p1)?,
                ];
                let mut worst = 0.0f64;
                for (op, want) in actual.iter().zip(expected) {
                    worst = worst.max((op.constant() - want).norm());
                    if !op.is_scalar() {
                        worst = f64::INFINITY;
                    }
                }
                Ok(worst)
            })();
            match out {
                Ok(r) => (r, family.label()),
                Err(e) => (f64::INFINITY, format!("{}: {e}", family.label())),
            }
        },
    );

    let fd = sweep(
        exec,
        seed,
        "reps",
        "generator-finite-difference",
        families.len() * 4,
        tol.finite_diff,
        |i, rng| {
            let family = &families[i / 4];
            let direction = Direction::ALL[i % 4];
            let dim = family_dim(family, 1);
            let f = GaussianPacket::new(
                dim,
                Complex64::from_polar(rng.gen_range(0.7..1.4), rng.gen_range(0.0..1.0)),
                [uniform(rng, 1.0), uniform(rng, 1.0)],
                [uniform(rng, 1.0), uniform(rng, 1.0)],
                [rng.gen_range(0.8..1.5), rng.gen_range(0.8..1.5)],
            )
            .expect("valid packet");
            let mut r = [0.0f64; 2];
            for (j, rj) in r.iter_mut().enumerate().take(dim) {
                *rj = f.centre()[j] + f.widths()[j] * uniform(rng, 1.0);
            }
            match generator_check(family, direction, &k, &f, &r[..dim], 1e-5) {
                Ok(res) => (res, format!("{} along {}", family.label(), direction.label())),
                Err(e) => (f64::INFINITY, format!("{}: {e}", family.label())),
            }
        },
    );

    suite_report(
        "reps",
        vec![homomorphism, unitarity, characters, generic_match, adjoint, widths, commutators, fd],
    )
}

/// The commutator table a family's quadruple must satisfy, ordered
/// [Q1P1, Q2P2, Q1Q2, P1P2, Q1P2, Q2P1].
fn expected_commutators(family: &RepFamily, k: &ExtensionConstants) -> Result<[Complex64; 6]> {
    let i = |x: f64| Complex64::new(0.0, x);
    let zero = Complex64::new(0.0, 0.0);
    let canonical = |rho: f64, sigma: f64, tau: f64| -> Result<[Complex64; 6]> {
        let pp = physical_params(rho, sigma, tau, k)?;
        Ok([i(pp.hbar), i(pp.hbar), i(pp.position_nc), i(pp.momentum_nc), zero, zero])
    };
    match family {
        RepFamily::Orbit(spec) => match *spec {
            RepSpec::Generic4D { rho, sigma, tau } => canonical(rho, sigma, tau),
            RepSpec::Cone2D { rho, zeta, .. } => {
                let tau = rho * zeta * k.alpha() * k.alpha() / (k.gamma() * k.beta());
                canonical(rho, rho / zeta, tau)
            }
            RepSpec::TauZero4D { rho, sigma } => canonical(rho, sigma, 0.0),
            RepSpec::SigmaZero4D { rho, tau } => canonical(rho, 0.0, tau),
            RepSpec::WeylHeisenberg4D { rho } => canonical(rho, 0.0, 0.0),
            RepSpec::RhoZero4D { sigma, tau } => {
                Ok([zero, zero, i(-sigma * k.beta()), i(-tau * k.gamma()), zero, zero])
            }
            RepSpec::PPlane2D { tau, .. } => {
                Ok([zero, zero, zero, i(-tau * k.gamma()), zero, zero])
            }
            RepSpec::QPlane2D { sigma, .. } => {
                Ok([zero, zero, i(-sigma * k.beta()), zero, zero, zero])
            }
            RepSpec::Point0D { .. } => Ok([zero; 6]),
        },
        RepFamily::Gauge { .. } => {
            let al = k.alpha();
            Ok([
                i(1.0 / al),
                i(1.0 / al),
                i(-k.beta() / (al * al)),
                i(-k.gamma() / (al * al)),
                zero,
                zero,
            ])
        }
    }
}

/// Potentials, curls, presets and the member grid. Fails fast with an
/// error when `extra_member` sits on the singular locus.
pub fn run_gauge_suite(
    config: &RunConfig,
    exec: Execution,
    extra_member: Option<(f64, f64)>,
) -> Result<SuiteReport> {
    let k = config.constants;
    let tol = config.tolerances;
    let sweeps = config.sweeps;
    let seed = config.seed;

    if let Some((l, m)) = extra_member {
        // surfaces SingularGaugeParameter before any check runs
        build_generators(&RepFamily::Gauge { l, m }, &k)?;
    }

    let gens = build_generators(&RepFamily::Orbit(generic_default(&k)), &k)?;
    const M_VALUES: [f64; 6] = [-1.0, 0.0, 0.25, 0.5, 1.0, 2.0];

    let curl = sweep(
        exec,
        seed,
        "gauge",
        "curl-exactness",
        M_VALUES.len() * sweeps.gauge_members.max(1),
        0.0,
        |i, rng| {
            let m = M_VALUES[i % M_VALUES.len()];
            let b = uniform(rng, 5.0);
            let a = vector_potential(m, b, &gens);
            let r = (formal_curl(&a) - b).abs();
            (r, format!("m={m}, B={b:.6}"))
        },
    );

    let presets = sweep(
        exec,
        seed,
        "gauge",
        "gauge-presets",
        sweeps.gauge_members.max(1),
        0.0,
        |i, rng| {
            let b = uniform(rng, 5.0);
            let landau = GaugePotential::landau(b, &gens);
            let symmetric = GaugePotential::symmetric(b, &gens);
            let ok = landau.coefficients() == [[0.0, -b], [0.0, 0.0]]
                && symmetric.coefficients() == [[0.0, -0.5 * b], [0.5 * b, 0.0]]
                && formal_curl(&landau) == b
                && formal_curl(&symmetric) == b;
            (if ok { 0.0 } else { 1.0 }, format!("preset sample {i}"))
        },
    );

    let expansion = sweep(
        exec,
        seed,
        "gauge",
        "potential-expansion",
        sweeps.gauge_members.max(1),
        tol.commutator,
        |i, rng| {
            let m = uniform(rng, 2.0);
            let b = uniform(rng, 5.0);
            let a = vector_potential(m, b, &gens);
            match GaugePotential::from_components(*a.a1(), *a.a2(), &gens) {
                Ok(rebuilt) => ((formal_curl(&rebuilt) - b).abs(), format!("m={m:.3}, B={b:.3}")),
                Err(e) => (f64::INFINITY, format!("item {i}: {e}")),
            }
        },
    );

    let symmetric_params = sweep(
        exec,
        seed,
        "gauge",
        "symmetric-parameters",
        1,
        tol.commutator,
        |_i, _rng| {
            let alpha_sq = k.alpha() * k.alpha();
            let gamma_beta = k.gamma() * k.beta();
            let disc = alpha_sq - gamma_beta;
            if disc.abs() <= 1e-12 * alpha_sq.max(1.0) {
                return match symmetric_rep_params(&k) {
                    Err(Error::SingularGaugeParameter { .. }) => {
                        (0.0, "singular branch confirmed".into())
                    }
                    other => (f64::INFINITY, format!("expected singular branch, got {other:?}")),
                };
            }
            if disc < 0.0 {
                return match symmetric_rep_params(&k) {
                    Err(Error::ComplexRoot { .. }) => (0.0, "complex branch confirmed".into()),
                    other => (f64::INFINITY, format!("expected complex branch, got {other:?}")),
                };
            }
            match symmetric_rep_params(&k) {
                Ok((l, m)) => {
                    if m != 0.5 {
                        return (f64::INFINITY, format!("m = {m}, expected 1/2"));
                    }
                    // the returned l satisfies γβl − α² = −α√(α² − γβ)
                    let denom = gamma_beta * l - alpha_sq;
                    let r = (denom + k.alpha() * disc.sqrt()).abs() / alpha_sq.max(1.0);
                    (r, format!("l = {l:.12}"))
                }
                Err(e) => (f64::INFINITY, format!("unexpected error: {e}")),
            }
        },
    );

    let grid: Vec<(f64, f64)> = {
        let values = [-2.0, -1.0, 0.0, 1.0, 2.0];
        let mut g: Vec<(f64, f64)> =
            values.iter().flat_map(|&l| values.iter().map(move |&m| (l, m))).collect();
        if let Some(member) = extra_member {
            g.push(member);
        }
        g
    };
    let grid_commutators = sweep(
        exec,
        seed,
        "gauge",
        "member-grid-commutators",
        grid.len(),
        tol.commutator,
        |i, _rng| {
            let (l, m) = grid[i];
            let family = RepFamily::Gauge { l, m };
            match build_generators(&family, &k) {
                Ok(g) => {
                    let expected = expected_commutators(&family, &k).expect("gauge table");
                    let actual = [
                        g.q1.commutator(&g.p1),
                        g.q2.commutator(&g.p2),
                        g.q1.commutator(&g.q2),
                        g.p1.commutator(&g.p2),
                        g.q1.commutator(&g.p2),
                        g.q2.commutator(&g.p1),
                    ];
                    let mut worst = 0.0f64;
                    for (op, want) in actual.into_iter().zip(expected) {
                        match op {
                            Ok(op) => worst = worst.max((op.constant() - want).norm()),
                            Err(_) => worst = f64::INFINITY,
                        }
                    }
                    (worst, format!("member ({l}, {m})"))
                }
                Err(Error::SingularGaugeParameter { .. }) => {
                    (0.0, format!("member ({l}, {m}) skipped: singular"))
                }
                Err(e) => (f64::INFINITY, format!("member ({l}, {m}): {e}")),
            }
        },
    );

    let mut checks = vec![curl, presets, expansion, symmetric_params, grid_commutators];

    if let Some((l, m)) = extra_member {
        let member_hom = sweep(
            exec,
            seed,
            "gauge",
            "member-homomorphism",
            sweeps.homomorphism_samples,
            tol.homomorphism,
            |i, rng| {
                let f = random_packet(rng, 2);
                let g = random_element(rng, 2.0);
                let h = random_element(rng, 2.0);
                let out = (|| -> Result<f64> {
                    let stepped = apply_gauge_rep(l, m, &k, &g, &apply_gauge_rep(l, m, &k, &h, &f)?)?;
                    let composed = apply_gauge_rep(l, m, &k, &g.compose(&h, &k), &f)?;
                    Ok(packet_distance(&stepped, &composed))
                })();
                match out {
                    Ok(r) => (r, format!("sample {i}")),
                    Err(e) => (f64::INFINITY, format!("sample {i}: {e}")),
                }
            },
        );
        checks.push(member_hom);
    }

    Ok(suite_report("gauge", checks))
}

/// Torus phases under the standard lattice, plus the general-amount
/// commutation relations at the main constants. Fails fast when the torus
/// constants violate α² = γβ.
pub fn run_torus_suite(config: &RunConfig, exec: Execution) -> Result<SuiteReport> {
    let kt = config.torus_constants;
    let k = config.constants;
    let tol = config.tolerances;
    let sweeps = config.sweeps;
    let seed = config.seed;

    let amounts = standard_parameters(&kt)?;

    let lattice = sweep(exec, seed, "torus", "lattice-products", 1, 1e-9, |_i, _rng| {
        let two_pi = 2.0 * std::f64::consts::PI;
        let products = [
            kt.alpha() * amounts[0] * amounts[2],
            kt.alpha() * amounts[1] * amounts[3],
            kt.gamma() * amounts[0] * amounts[1],
            kt.beta() * amounts[2] * amounts[3],
        ];
        let r = products.into_iter().fold(0.0f64, |m, p| m.max((p - two_pi).abs()));
        (r, format!("amounts {amounts:?}"))
    });

    let torus_specs: Vec<RepSpec> = vec![
        RepSpec::Generic4D { rho: 1.0 / 3.0, sigma: 0.5, tau: 0.2 },
        RepSpec::Cone2D { rho: 1.0 / 3.0, zeta: 2.0, kappa: 0.3, delta: -0.7 },
        RepSpec::TauZero4D { rho: 0.25, sigma: 0.4 },
        RepSpec::SigmaZero4D { rho: 0.3, tau: 0.45 },
        RepSpec::WeylHeisenberg4D { rho: 0.3 },
        RepSpec::RhoZero4D { sigma: 0.35, tau: 0.55 },
        RepSpec::PPlane2D { tau: 0.7, c1: 0.2, c2: -0.4 },
        RepSpec::QPlane2D { sigma: 0.65, c3: -0.5, c4: 0.8 },
        RepSpec::Point0D { c1: 0.1, c2: -0.2, c3: 0.3, c4: -0.4 },
    ];

    let torus_packets = |rng: &mut ChaCha8Rng, dim: usize, n: usize| -> Vec<GaussianPacket> {
        (0..n.max(1)).map(|_| random_packet(rng, dim)).collect()
    };

    let phases = sweep(
        exec,
        seed,
        "torus",
        "pair-phases",
        torus_specs.len(),
        tol.weyl_phase,
        |i, rng| {
            let spec = &torus_specs[i];
            let dim = spec.carrier_dim().unwrap_or(1);
            let packets = torus_packets(rng, dim, sweeps.torus_packets);
            match verify_torus(spec, &kt, &packets, seed.wrapping_add(i as u64), tol.weyl_phase) {
                Ok(report) => (report.max_deviation, spec.label().to_string()),
                Err(e) => (f64::INFINITY, format!("{}: {e}", spec.label())),
            }
        },
    );

    let cone_grid: Vec<(f64, f64)> = [-1.0, 0.0, 2.0]
        .iter()
        .flat_map(|&kappa| [-1.0, 0.0, 2.0].iter().map(move |&delta| (kappa, delta)))
        .collect();
    let cone = sweep(
        exec,
        seed,
        "torus",
        "cone-section-grid",
        cone_grid.len(),
        tol.weyl_phase,
        |i, rng| {
            let (kappa, delta) = cone_grid[i];
            let spec = RepSpec::Cone2D { rho: 1.0 / 3.0, zeta: 2.0, kappa, delta };
            let packets = torus_packets(rng, 1, sweeps.torus_packets);
            match verify_torus(&spec, &kt, &packets, seed.wrapping_add(i as u64), tol.weyl_phase) {
                Ok(report) => (report.max_deviation, format!("κ={kappa}, δ={delta}")),
                Err(e) => (f64::INFINITY, format!("κ={kappa}, δ={delta}: {e}")),
            }
        },
    );

    let integer_specs = [
        RepSpec::Generic4D { rho: 1.0, sigma: 2.0, tau: 3.0 },
        RepSpec::WeylHeisenberg4D { rho: 1.0 },
    ];
    let degeneration = sweep(
        exec,
        seed,
        "torus",
        "integer-degeneration",
        integer_specs.len(),
        1e-10,
        |i, rng| {
            let spec = &integer_specs[i];
            let packets = torus_packets(rng, 2, sweeps.torus_packets);
            match verify_torus(spec, &kt, &packets, seed.wrapping_add(i as u64), 1e-10) {
                Ok(report) => (report.max_deviation, spec.label().to_string()),
                Err(e) => (f64::INFINITY, format!("{}: {e}", spec.label())),
            }
        },
    );

    let general_specs = default_specs(&k);
    let weyl = sweep(
        exec,
        seed,
        "torus",
        "general-weyl-relations",
        sweeps.weyl_pairs,
        tol.weyl_phase,
        |i, rng| {
            let spec = &general_specs[i % general_specs.len()];
            let dim = spec.carrier_dim().unwrap_or(1);
            let f = random_packet(rng, dim);
            let a = Direction::ALL[rng.gen_range(0..4)];
            let b = loop {
                let d = Direction::ALL[rng.gen_range(0..4)];
                if d != a {
                    break d;
                }
            };
            let s = uniform(rng, 2.0);
            let t = uniform(rng, 2.0);
            match measure_commutation_phase(spec, &k, (a, s), (b, t), &f, rng) {
                Ok(measured) => {
                    let expected = expected_commutation_phase(spec, &k, (a, s), (b, t));
                    (
                        (measured - expected).norm(),
                        format!("{} {}·{}", spec.label(), a.label(), b.label()),
                    )
                }
                Err(e) => (f64::INFINITY, format!("{}: {e}", spec.label())),
            }
        },
    );

    Ok(suite_report("torus", vec![lattice, phases, cone, degeneration, weyl]))
}

/// All suites under one report.
pub fn run_all(config: &RunConfig, exec: Execution) -> Result<FullReport> {
    let suites = vec![
        run_group_suite(config, exec),
        run_reps_suite(config, exec),
        run_gauge_suite(config, exec, None)?,
        run_torus_suite(config, exec)?,
    ];
    let pass = suites.iter().all(|s| s.pass);
    Ok(FullReport { schema: SCHEMA.to_string(), config: *config, suites, pass })
}
