use thiserror::Error;

use crate::symfunc::Basis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("negative part {0} in partition")]
    NegativePart(i64),
    #[error("partition is not weakly decreasing at position {index}: {left} < {right}")]
    NotDecreasing { index: usize, left: u32, right: u32 },
    #[error("inner partition {inner} does not fit inside {outer}")]
    InvalidSkewShape { outer: String, inner: String },
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("rank {n} exceeds the permutation bound {bound}")]
    RankTooLarge { n: usize, bound: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("partition {partition} has more than {n} parts")]
    TooManyParts { partition: String, n: usize },
    #[error("truncation index {k} out of range 0..={max}")]
    TruncationOutOfRange { k: usize, max: usize },
    #[error("basis mismatch: {left:?} vs {right:?}")]
    BasisMismatch { left: Basis, right: Basis },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("expected {expected:?} basis, got {got:?}")]
    WrongBasis { expected: Basis, got: Basis },
    #[error("polynomial is not homogeneous (degrees {0} and {1})")]
    NotHomogeneous(u32, u32),
    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),
    #[error("matrix is not square")]
    NotSquare,
    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("dense alternant size guard: n = {0} exceeds 4")]
    DenseTooLarge(usize),
    #[error("telescoping identity failed at k = {0}")]
    TelescopingFailed(usize),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
