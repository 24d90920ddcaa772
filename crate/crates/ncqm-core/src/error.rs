use thiserror::Error;

/// Errors surfaced by the laboratory. Everything here is a precondition
/// violation on user-supplied data; internal math never errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("extension constants must be positive, got alpha={alpha}, beta={beta}, gamma={gamma}")]
    NonPositiveConstants { alpha: f64, beta: f64, gamma: f64 },

    #[error("widths must be positive, got {0}")]
    NonPositiveWidth(f64),

    #[error("packet dimension must be 1 or 2, got {0}")]
    BadDimension(usize),

    #[error("dimension mismatch: operation expects dim {expected}, packet has dim {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid representation parameters: {0}")]
    InvalidRepParameters(String),

    #[error("coadjoint invariants lie on the cone but the slope cross-check fails: rho={rho}, zeta={zeta}, reconstructed rho={reconstructed}")]
    InconsistentCone { rho: f64, zeta: f64, reconstructed: f64 },

    #[error("gauge parameter l={l} is singular: |gamma*beta*l - alpha^2| = {denom:e} < 1e-12")]
    SingularGaugeParameter { l: f64, denom: f64 },

    #[error("symmetric gauge member needs alpha^2 >= gamma*beta, got alpha^2={alpha_sq}, gamma*beta={gamma_beta}")]
    ComplexRoot { alpha_sq: f64, gamma_beta: f64 },

    #[error("operator is not a combination of the given generators: residual {0:e}")]
    NonlinearPotential(f64),

    #[error("torus parameters need alpha^2 = gamma*beta, got alpha^2={alpha_sq}, gamma*beta={gamma_beta}")]
    InconsistentTorusConstants { alpha_sq: f64, gamma_beta: f64 },

    #[error("unitary index must be 1..=4 and the pair distinct, got ({i}, {j})")]
    BadUnitaryIndex { i: usize, j: usize },

    #[error("phase ratio is not constant across sample points: stdev {stdev:e}")]
    NonConstantRatio { stdev: f64 },

    #[error("too few usable sample points: {usable} of {total}")]
    TooFewSamplePoints { usable: usize, total: usize },

    #[error("measured phase is not unimodular: | |c| - 1 | = {0:e}")]
    NonUnimodularPhase(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
