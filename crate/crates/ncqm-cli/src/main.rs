//! `ncqm-lab`: orbit classification, verification sweeps, gauge scans and
//! torus reports over JSON, with a strict exit-code contract:
//! 0 everything passed, 1 a property check failed, 2 input/parse error,
//! 3 precondition violation (singular gauge member, skew torus constants, …).

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ncqm_core::algebra::build_generators;
use ncqm_core::gauge::{formal_curl, symmetric_rep_params, vector_potential};
use ncqm_core::torus::{verify_torus, TorusReport};
use ncqm_core::verify::{
    run_all, run_gauge_suite, run_group_suite, run_reps_suite, run_torus_suite, FullReport,
    RunConfig, SuiteReport, SCHEMA,
};
use ncqm_core::{
    classify_orbit, DualVector, Execution, ExtensionConstants, GaussianPacket, OrbitClass,
    RepFamily, RepSpec,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Parser)]
#[command(
    name = "ncqm-lab",
    version,
    about = "Verification laboratory for the defining group of 2-D noncommutative quantum mechanics"
)]
struct Cli {
    #[command(flatten)]
    common: CommonArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// JSON run configuration; individual flags override its fields
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Override the first extension constant (applies to group and torus runs)
    #[arg(long, global = true)]
    alpha: Option<f64>,
    /// Override the second extension constant
    #[arg(long, global = true)]
    beta: Option<f64>,
    /// Override the third extension constant
    #[arg(long, global = true)]
    gamma: Option<f64>,
    /// Master seed for every randomized sweep
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Bound on group associativity residuals
    #[arg(long = "tol-associativity", global = true, value_name = "TOL")]
    tol_associativity: Option<f64>,
    /// Bound on representation-property residuals
    #[arg(long = "tol-homomorphism", global = true, value_name = "TOL")]
    tol_homomorphism: Option<f64>,
    /// Bound on relative norm drift under the representations
    #[arg(long = "tol-unitarity", global = true, value_name = "TOL")]
    tol_unitarity: Option<f64>,
    /// Bound on commutator coefficient deviations (also the classifier's zero test)
    #[arg(long = "tol-commutator", global = true, value_name = "TOL")]
    tol_commutator: Option<f64>,
    /// Bound on Weyl phase deviations
    #[arg(long = "tol-weyl-phase", global = true, value_name = "TOL")]
    tol_weyl_phase: Option<f64>,
    /// Bound on finite-difference generator residuals
    #[arg(long = "tol-finite-diff", global = true, value_name = "TOL")]
    tol_finite_diff: Option<f64>,
    /// Also write the JSON output to this file
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Run the sweeps sequentially or across threads (same numbers either way)
    #[arg(long, global = true, value_enum, default_value_t = ExecutionArg::Parallel)]
    execution: ExecutionArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExecutionArg {
    Sequential,
    Parallel,
}

impl From<ExecutionArg> for Execution {
    fn from(arg: ExecutionArg) -> Self {
        match arg {
            ExecutionArg::Sequential => Execution::Sequential,
            ExecutionArg::Parallel => Execution::Parallel,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Group,
    Reps,
    Gauge,
    Torus,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the coadjoint orbit through a dual point
    Classify {
        /// The point as a JSON array [x1, x2, x3, x4, x5, x6, x7]
        point: String,
    },
    /// Run a verification suite and report every residual
    Verify {
        /// Which suite to run
        #[arg(value_enum)]
        suite: Option<SuiteArg>,
        /// Flag form of the suite selector
        #[arg(long = "suite", value_enum, conflicts_with = "suite")]
        suite_flag: Option<SuiteArg>,
        /// Check one extra gauge member with this first parameter
        #[arg(long, allow_negative_numbers = true)]
        l: Option<f64>,
        /// Second parameter of the extra gauge member
        #[arg(long, requires = "l", allow_negative_numbers = true)]
        m: Option<f64>,
    },
    /// Tabulate vector potentials and generator commutators across slopes
    GaugeScan {
        /// Comma-separated slopes m of the potential family
        #[arg(long = "m-values", value_delimiter = ',', allow_hyphen_values = true)]
        m_values: Option<Vec<f64>>,
        /// Gauge-member parameter l; defaults to the symmetric member's value
        #[arg(long, allow_negative_numbers = true)]
        l: Option<f64>,
        /// Magnetic field strength B
        #[arg(long = "field-b", default_value_t = 1.0, allow_negative_numbers = true)]
        field_b: f64,
    },
    /// Measure the Weyl phases of one representation against its theta matrix
    Torus {
        /// The representation as JSON, e.g. {"family":"Generic4D","rho":0.33,...}
        spec: String,
        /// Number of random packets to measure on
        #[arg(long)]
        packets: Option<usize>,
    },
    /// Run everything: all four suites, nine torus cases and a gauge scan
    Report,
}

/// Failures that reach the user, split by exit code.
enum Failure {
    /// Exit 2: the input could not be read or parsed.
    Input(String),
    /// Exit 3: parsed fine but violates a documented precondition.
    Precondition(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Precondition(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(msg) | Failure::Precondition(msg) => msg,
        }
    }
}

impl From<ncqm_core::Error> for Failure {
    fn from(e: ncqm_core::Error) -> Self {
        Failure::Precondition(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(pass) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let config = load_config(&cli.common)?;
    let exec = Execution::from(cli.common.execution);
    match &cli.command {
        Command::Classify { point } => classify(cli, &config, point),
        Command::Verify { suite, suite_flag, l, m } => {
            let suite = suite_flag.or(*suite).unwrap_or(SuiteArg::All);
            let member = l.map(|l| (l, m.unwrap_or(0.5)));
            verify(cli, &config, exec, suite, member)
        }
        Command::GaugeScan { m_values, l, field_b } => {
            gauge_scan(cli, &config, m_values.as_deref(), *l, *field_b)
        }
        Command::Torus { spec, packets } => torus(cli, &config, spec, *packets),
        Command::Report => report(cli, &config, exec),
    }
}

/// Config file, then flag overrides. Constant overrides apply to both the
/// sweep constants and the torus constants so one `--beta` reaches every
/// suite; tolerance and seed overrides are field-for-field.
fn load_config(common: &CommonArgs) -> Result<RunConfig, Failure> {
    let mut config = match &common.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Failure::Input(format!("bad config {}: {e}", path.display())))?
        }
        None => RunConfig::default(),
    };
    if common.alpha.is_some() || common.beta.is_some() || common.gamma.is_some() {
        let override_constants = |base: &ExtensionConstants| {
            ExtensionConstants::new(
                common.alpha.unwrap_or(base.alpha()),
                common.beta.unwrap_or(base.beta()),
                common.gamma.unwrap_or(base.gamma()),
            )
        };
        config.constants = override_constants(&config.constants)?;
        config.torus_constants = override_constants(&config.torus_constants)?;
    }
    if let Some(seed) = common.seed {
        config.seed = seed;
    }
    let t = &mut config.tolerances;
    for (slot, flag) in [
        (&mut t.associativity, common.tol_associativity),
        (&mut t.homomorphism, common.tol_homomorphism),
        (&mut t.unitarity, common.tol_unitarity),
        (&mut t.commutator, common.tol_commutator),
        (&mut t.weyl_phase, common.tol_weyl_phase),
        (&mut t.finite_diff, common.tol_finite_diff),
    ] {
        if let Some(value) = flag {
            if value <= 0.0 {
                return Err(Failure::Precondition(format!("tolerances must be positive, got {value}")));
            }
            *slot = value;
        }
    }
    Ok(config)
}

fn emit<T: Serialize>(cli: &Cli, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Input(format!("serialization failed: {e}")))?;
    text.push('\n');
    print!("{text}");
    if let Some(path) = &cli.common.out {
        fs::write(path, &text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyReport {
    schema: &'static str,
    #[serde(flatten)]
    class: OrbitClass,
    dim: usize,
}

fn classify(cli: &Cli, config: &RunConfig, point: &str) -> Result<bool, Failure> {
    let coords: Vec<f64> = serde_json::from_str(point)
        .map_err(|e| Failure::Input(format!("point must be a JSON array of numbers: {e}")))?;
    let [x1, x2, x3, x4, x5, x6, x7] = coords[..] else {
        return Err(Failure::Input(format!(
            "point must have exactly 7 entries, got {}",
            coords.len()
        )));
    };
    let f = DualVector::new(x1, x2, x3, x4, x5, x6, x7);
    let class = classify_orbit(&f, &config.constants, config.tolerances.commutator)?;
    emit(cli, &ClassifyReport { schema: SCHEMA, class, dim: class.dimension() })?;
    Ok(true)
}

fn verify(
    cli: &Cli,
    config: &RunConfig,
    exec: Execution,
    suite: SuiteArg,
    member: Option<(f64, f64)>,
) -> Result<bool, Failure> {
    let suites: Vec<SuiteReport> = match suite {
        SuiteArg::Group => vec![run_group_suite(config, exec)],
        SuiteArg::Reps => vec![run_reps_suite(config, exec)],
        SuiteArg::Gauge => vec![run_gauge_suite(config, exec, member)?],
        SuiteArg::Torus => vec![run_torus_suite(config, exec)?],
        SuiteArg::All => match member {
            Some(_) => vec![
                run_group_suite(config, exec),
                run_reps_suite(config, exec),
                run_gauge_suite(config, exec, member)?,
                run_torus_suite(config, exec)?,
            ],
            None => run_all(config, exec)?.suites,
        },
    };
    let pass = suites.iter().all(|s| s.pass);
    let report =
        FullReport { schema: SCHEMA.to_string(), config: *config, suites, pass };
    emit(cli, &report)?;
    Ok(pass)
}

#[derive(Serialize)]
struct GaugeScanRow {
    m: f64,
    coefficients: [[f64; 2]; 2],
    curl: f64,
    commutators: BTreeMap<&'static str, [f64; 2]>,
}

#[derive(Serialize)]
struct GaugeScanReport {
    schema: &'static str,
    constants: ExtensionConstants,
    l: f64,
    field_b: f64,
    rows: Vec<GaugeScanRow>,
}

fn scan_rows(
    k: &ExtensionConstants,
    l: f64,
    field_b: f64,
    m_values: &[f64],
) -> Result<Vec<GaugeScanRow>, Failure> {
    let mut rows = Vec::with_capacity(m_values.len());
    for &m in m_values {
        let gens = build_generators(&RepFamily::Gauge { l, m }, k)?;
        let potential = vector_potential(m, field_b, &gens);
        let pairs: [(&'static str, &_, &_); 6] = [
            ("q1p1", &gens.q1, &gens.p1),
            ("q2p2", &gens.q2, &gens.p2),
            ("q1q2", &gens.q1, &gens.q2),
            ("p1p2", &gens.p1, &gens.p2),
            ("q1p2", &gens.q1, &gens.p2),
            ("q2p1", &gens.q2, &gens.p1),
        ];
        let mut commutators = BTreeMap::new();
        for (name, a, b) in pairs {
            let c: Complex64 = a.commutator(b)?.constant();
            commutators.insert(name, [c.re, c.im]);
        }
        rows.push(GaugeScanRow {
            m,
            coefficients: potential.coefficients(),
            curl: formal_curl(&potential),
            commutators,
        });
    }
    Ok(rows)
}

fn gauge_scan(
    cli: &Cli,
    config: &RunConfig,
    m_values: Option<&[f64]>,
    l: Option<f64>,
    field_b: f64,
) -> Result<bool, Failure> {
    let k = config.constants;
    let l = match l {
        Some(l) => l,
        None => symmetric_rep_params(&k)?.0,
    };
    let default_m = [-1.0, 0.0, 0.25, 0.5, 1.0, 2.0];
    let m_values = m_values.unwrap_or(&default_m);
    let rows = scan_rows(&k, l, field_b, m_values)?;
    emit(cli, &GaugeScanReport { schema: SCHEMA, constants: k, l, field_b, rows })?;
    Ok(true)
}

fn random_packet(rng: &mut ChaCha8Rng, dim: usize) -> GaussianPacket {
    let amp = Complex64::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..std::f64::consts::TAU));
    let k = [rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5)];
    let c = [rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5)];
    let w = [rng.gen_range(0.6..1.6), rng.gen_range(0.6..1.6)];
    GaussianPacket::new(dim, amp, k, c, w).expect("valid packet")
}

#[derive(Serialize)]
struct TorusOutput {
    schema: &'static str,
    constants: ExtensionConstants,
    seed: u64,
    packets: usize,
    #[serde(flatten)]
    report: TorusReport,
}

fn torus(
    cli: &Cli,
    config: &RunConfig,
    spec_text: &str,
    packets: Option<usize>,
) -> Result<bool, Failure> {
    let spec: RepSpec = serde_json::from_str(spec_text)
        .map_err(|e| Failure::Input(format!("bad representation spec: {e}")))?;
    let k = config.torus_constants;
    spec.validate(&k)?;
    let n = packets.unwrap_or(config.sweeps.torus_packets).max(1);
    let dim = spec.carrier_dim().unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let packets: Vec<GaussianPacket> = (0..n).map(|_| random_packet(&mut rng, dim)).collect();
    let report = verify_torus(&spec, &k, &packets, config.seed, config.tolerances.weyl_phase)?;
    let pass = report.pass;
    emit(
        cli,
        &TorusOutput { schema: SCHEMA, constants: k, seed: config.seed, packets: n, report },
    )?;
    Ok(pass)
}

/// The nine showcase torus cases; fractional parameters except where the
/// class demands otherwise, all valid at the square-constraint constants.
fn showcase_specs() -> [RepSpec; 9] {
    [
        RepSpec::Generic4D { rho: 1.0 / 3.0, sigma: 0.5, tau: 0.2 },
        RepSpec::Cone2D { rho: 1.0 / 3.0, zeta: 2.0, kappa: 0.0, delta: 0.0 },
        RepSpec::TauZero4D { rho: 0.25, sigma: 0.4 },
        RepSpec::SigmaZero4D { rho: 0.3, tau: 0.45 },
        RepSpec::WeylHeisenberg4D { rho: 0.3 },
        RepSpec::RhoZero4D { sigma: 0.35, tau: 0.55 },
        RepSpec::PPlane2D { tau: 0.7, c1: 0.2, c2: -0.4 },
        RepSpec::QPlane2D { sigma: 0.65, c3: -0.5, c4: 0.8 },
        RepSpec::Point0D { c1: 0.1, c2: -0.2, c3: 0.3, c4: -0.4 },
    ]
}

#[derive(Serialize)]
struct LabReport {
    schema: &'static str,
    config: RunConfig,
    suites: Vec<SuiteReport>,
    torus_reports: Vec<TorusReport>,
    gauge_scan: Vec<GaugeScanRow>,
    pass: bool,
}

fn report(cli: &Cli, config: &RunConfig, exec: Execution) -> Result<bool, Failure> {
    let full = run_all(config, exec)?;

    let k = config.torus_constants;
    let mut torus_reports = Vec::new();
    for (i, spec) in showcase_specs().into_iter().enumerate() {
        let dim = spec.carrier_dim().unwrap_or(1);
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(i as u64));
        let packets: Vec<GaussianPacket> =
            (0..config.sweeps.torus_packets.max(1)).map(|_| random_packet(&mut rng, dim)).collect();
        torus_reports.push(verify_torus(
            &spec,
            &k,
            &packets,
            config.seed.wrapping_add(i as u64),
            config.tolerances.weyl_phase,
        )?);
    }

    let l = symmetric_rep_params(&config.constants)?.0;
    let gauge_scan = scan_rows(&config.constants, l, 1.0, &[-1.0, 0.0, 0.25, 0.5, 1.0, 2.0])?;

    let pass = full.pass && torus_reports.iter().all(|r| r.pass);
    let out = LabReport {
        schema: SCHEMA,
        config: *config,
        suites: full.suites,
        torus_reports,
        gauge_scan,
        pass,
    };
    emit(cli, &out)?;
    Ok(pass)
}
