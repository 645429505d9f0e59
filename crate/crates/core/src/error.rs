use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix not invertible (rank {rank} of {size})")]
    NotInvertible { rank: usize, size: usize },
    #[error("antipode not bijective (rank {rank} of {size})")]
    AntipodeNotBijective { rank: usize, size: usize },
    #[error("axiom `{0}` fails")]
    AxiomFailure(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("search guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
