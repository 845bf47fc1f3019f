use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("not divisible by x")]
    NotDivisibleByX,
    #[error("index out of range: {0}")]
    Index(String),
    #[error("unsupported moment: {0}")]
    UnsupportedMoment(String),
    #[error("product of two transcendental moment units is not representable")]
    UnitProduct,
    #[error("root finding did not converge for node {index} of {order}")]
    Convergence { index: usize, order: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
