use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no sign change of the matching condition on [{lo}, {hi}]")]
    NoRootBracketed { lo: f64, hi: f64 },

    #[error("root solver did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("state n={n}, l={l} is not bound (beta = {beta})")]
    Unbound { n: u32, l: u32, beta: f64 },

    #[error("energy {energy} has no outer turning point below the asymptote {asymptote}")]
    NoTurningPoint { energy: f64, asymptote: f64 },

    #[error("bracket failure: no energy in [{lo}, {hi}] isolates level n={n} (node count at top = {nodes_at_hi})")]
    BracketFailure {
        lo: f64,
        hi: f64,
        n: u32,
        nodes_at_hi: usize,
    },

    #[error("wavefunction tail too large at r_max = {r_max}: e^(-2αβ r_max) = {tail:e}")]
    TailTooLarge { r_max: f64, tail: f64 },

    #[error("insufficient sampling: {0}")]
    InsufficientSampling(String),

    #[error("invalid state label {label:?}: {reason}")]
    Label { label: String, reason: String },

    #[error("config line {line}: {reason}")]
    Config { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
