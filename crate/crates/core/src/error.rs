//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("magnetic field must be positive and finite, got {0} T")]
    NonPositiveField(f64),

    #[error("energy gap must be positive and finite, got {0} J")]
    InvalidGap(f64),

    #[error("temperature must be finite and nonzero, got {0} K")]
    UnrepresentableTemperature(f64),

    #[error("temperature must be positive for this operation, got {0} K")]
    NonPositiveTemperature(f64),

    #[error("dimensionless coordinate gap/(k_B T) must be finite and nonzero, got {0}")]
    InvalidCoordinate(f64),

    #[error("constants must be positive and finite: k_B = {k_b} J/K, mu_B = {mu_b} J/T")]
    InvalidConstants { k_b: f64, mu_b: f64 },

    #[error("mean energy {energy} J outside the open range (-{half_gap} J, {half_gap} J)")]
    EnergyOutOfRange { energy: f64, half_gap: f64 },

    #[error("zero mean energy corresponds to an unrepresentable infinite temperature")]
    ZeroEnergy,

    #[error("entropy {entropy} J/K outside the open range (0, k_B ln 2 = {max} J/K)")]
    EntropyOutOfRange { entropy: f64, max: f64 },

    #[error(
        "entropy inversion did not converge after {iterations} iterations; \
         bracket [{lo}, {hi}] on gap/(k_B T)"
    )]
    NoConvergence { iterations: usize, lo: f64, hi: f64 },

    #[error(
        "infeasible heat exchange: entropy generation {s_gen} J/K is negative \
         for bath at {bath_temperature} K"
    )]
    NegativeEntropyGeneration { s_gen: f64, bath_temperature: f64 },

    #[error("impossible work-only process: entropy would decrease by {0} J/K")]
    EntropyDecrease(f64),

    #[error("entropy generation input must be nonnegative, got {0} J/K")]
    NegativeSgenInput(f64),

    #[error(
        "infeasible Carnot spec: gap_low = {gap_low} J must be strictly below \
         gap_high * (t_low / t_high) = {limit} J"
    )]
    InfeasibleCarnot { gap_low: f64, limit: f64 },

    #[error(
        "infeasible Otto spec: gap ratio {ratio} must strictly exceed \
         t_low / t_high = {limit}"
    )]
    InfeasibleOtto { ratio: f64, limit: f64 },

    #[error("degenerate inscription: Carnot corner gaps 2 and 4 coincide at {0} J")]
    DegenerateInscription(f64),

    #[error(
        "Otto cycle cannot run in reverse: corner temperature T3' = {t3p} K is not \
         below T1' = {t1p} K, so no bath pair with hot side <= T1' and cold side >= T3' exists \
         (gap ratio inside the ((t_low/t_high)^(5/2), (t_low/t_high)^(3/2)) window)"
    )]
    ReverseInfeasible { t1p: f64, t3p: f64 },

    #[error("sampling requires at least 2 points, got {0}")]
    TooFewSamples(usize),

    #[error("empty sampling range [{0}, {1}]")]
    EmptyRange(f64, f64),

    #[error("number of integration steps must be at least 1")]
    ZeroSteps,

    #[error("writing {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}
