use alloc::string::String;

/// Errors raised by the estimators, generators and tree builders.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("mode expects single source")]
    SingleSourceExpected,
    #[error("corrupt factorization: {0}")]
    CorruptFactorization(&'static str),
    #[error("empty reference region")]
    EmptyReference,
    #[error("undefined log base: alphabet of size {0}")]
    UndefinedLogBase(usize),
    #[error("invalid admissible function: {0}")]
    InvalidFunction(String),
    #[error("directed information needs two distinct indices, got {0} and {1}")]
    SameIndex(usize, usize),
    #[error("index {index} out of range for a set of {len} strings")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("string set needs at least {needed} strings, got {got}")]
    TooFewStrings { needed: usize, got: usize },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("string `{0}` is empty")]
    EmptyString(String),
    #[error("invalid distance matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("connectivity must be acyclic")]
    CyclicConnectivity,
}

pub type Result<T> = core::result::Result<T, Error>;
