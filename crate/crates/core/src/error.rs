use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension: {0}")]
    Dimension(String),
    #[error("norm: squared norm {0} is not within tolerance of 1")]
    Norm(f64),
    #[error("eta-mismatch: commutator operands carry different right units")]
    EtaMismatch,
    #[error("domain: {0}")]
    Domain(String),
    #[error("boundary: {0}")]
    Boundary(String),
    #[error("resolution: {0}")]
    Resolution(String),
    #[error("support: {0}")]
    Support(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
