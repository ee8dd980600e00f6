use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("unsupported root system {family}{rank}")]
    UnsupportedRootSystem { family: String, rank: usize },
    #[error("not a root of the system: {0}")]
    NotARoot(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0} is not in the coweight lattice")]
    NotACoweight(String),
    #[error("no generic base point found after {attempts} attempts")]
    NonGeneric { attempts: usize },
    #[error("word invariant violated: {0}")]
    WordInvariant(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("eigenvalue collision between compositions {0:?} and {1:?}")]
    Degeneracy(Vec<u32>, Vec<u32>),
    #[error("triangularity violated: row {row:?}, column {col:?}")]
    Triangularity { row: Vec<u32>, col: Vec<u32> },
    #[error("specialization error: {0}")]
    Specialization(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
