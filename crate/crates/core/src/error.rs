use thiserror::Error;

/// Errors raised by the exact kernels and the analysis pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square: {0}")]
    NotSquare(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not unimodular (det = {0}); not a torus-bundle monodromy")]
    NotUnimodular(String),
    #[error("matrix is not hyperbolic: {0} eigenvalue(s) on the unit circle")]
    NotHyperbolic(usize),
    #[error("matrix is not tight: partition (inside, on, outside) = ({0}, {1}, {2})")]
    NotTight(usize, usize, usize),
    #[error("polynomial {0} is reducible over the rationals")]
    Reducible(String),
    #[error("degree {0} is out of scope (supported: {1})")]
    DegreeOutOfScope(usize, &'static str),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("Jacobi-Perron expansion degenerates at step {step}: first fractional part is zero")]
    DegenerateExpansion { step: usize },
    #[error("no period detected within {0} Jacobi-Perron steps")]
    NoPeriod(usize),
    #[error("positivization budget of {0} shears exhausted")]
    PositivizationBudget(usize),
    #[error("element is not invertible")]
    NotInvertible,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
