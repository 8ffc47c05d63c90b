use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("incompatible dimensions: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("hermiticity violated (max |M - M^dagger| = {0:e})")]
    HermiticityViolated(f64),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("eigenvalue pairing failed in the real embedding (gap {0:e})")]
    EigenPairing(f64),

    #[error("partial trace needs a non-empty set of kept qubits")]
    EmptyKeepSet,

    #[error("qubit index {index} out of range for a {count}-qubit register")]
    QubitOutOfRange { index: usize, count: usize },

    #[error("{name} = {value} out of range [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("not a density matrix: {0}")]
    NotDensityMatrix(String),

    #[error("Kraus completeness violated (max deviation {0:e})")]
    CompletenessViolated(f64),

    #[error("negativity {0:e} is below the round-off tolerance")]
    NegativeNegativity(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

impl Error {
    /// True for failures of the numerics themselves, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::HermiticityViolated(_)
                | Error::NoConvergence { .. }
                | Error::EigenPairing(_)
                | Error::CompletenessViolated(_)
                | Error::NegativeNegativity(_)
                | Error::NotDensityMatrix(_)
        )
    }
}
