use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("shape {shape} does not fit in a {rows}x{cols} rectangle")]
    ShapeTooLarge {
        shape: String,
        rows: usize,
        cols: usize,
    },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid corner set: {0}")]
    InvalidCorner(String),
    #[error("tableau is not Pieri-filled for content {0}")]
    NotPieriFilled(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("rules disagree: {0}")]
    CrossCheck(String),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("leading exponent {0:?} is not a partition")]
    NonPartitionLeadingTerm(Vec<u32>),
    #[error("integer overflow in polynomial arithmetic")]
    Overflow,
}

impl Error {
    /// True for errors that indicate two independent computations disagreeing.
    pub fn is_cross_check(&self) -> bool {
        matches!(self, Error::CrossCheck(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
