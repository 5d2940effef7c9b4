use thiserror::Error;

/// Errors raised by the computations in this crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("padding size {m} is below the bound {bound} for partition {partition}")]
    PaddingTooSmall { partition: String, m: usize, bound: usize },
    #[error("{0} does not refine {1}")]
    NotRefinement(String, String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("modulus must have degree at least 1")]
    ConstantModulus,
    #[error("algebraic numbers with different moduli cannot be combined")]
    ModulusMismatch,
    #[error("basis mismatch: expected {expected}, found {found}")]
    BasisMismatch { expected: &'static str, found: &'static str },
    #[error("not an endomorphism: {top} strands on top, {bottom} on the bottom")]
    NotEndomorphism { top: usize, bottom: usize },
    #[error("not a permutation of 1..{0}")]
    InvalidPermutation(usize),
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("t = {0} is a natural number; Rep(S_t) is not semisimple there")]
    NaturalParameter(String),
    #[error("stable multiplicity did not stabilize: {0}")]
    Unstable(String),
    #[error("size {size} exceeds the configured bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("invalid super algebra presentation: {0}")]
    InvalidAlgebra(String),
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
