use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A configured budget (terms, digits, enumeration nodes) would be exceeded.
    #[error("resource limit exceeded: {what} (limit {limit})")]
    ResourceLimit { what: &'static str, limit: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    /// A generated prefix does not decompose into doubled blocks plus glue.
    #[error("block structure violated at level {level}: {detail}")]
    StructureViolation { level: usize, detail: String },

    /// The series is not a k-th power over the integers; divisibility failed here.
    #[error("k-th root is not integral: coefficient {index} is not divisible")]
    NonIntegerRoot { index: usize },

    #[error("residue search inconclusive after {nodes} nodes")]
    Inconclusive { nodes: u64 },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("indices not contiguous on line {line}: expected {expected}, found {found}")]
    Contiguity {
        line: usize,
        expected: i64,
        found: i64,
    },

    #[error("no bundled fixture for {0}")]
    MissingFixture(String),

    #[error("{0} not found on the OEIS host")]
    NotFound(String),

    #[error("network error: {0}")]
    Network(String),

    #[error("cache error at {path}: {source}")]
    Cache {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("sequences have no overlapping indices")]
    EmptyOverlap,

    #[error("unknown lattice {0:?}")]
    UnknownLattice(String),

    #[error("invalid Gram matrix: {0}")]
    InvalidGram(String),

    #[error(
        "theta series has no nonzero coefficient beyond the constant term up to norm {max_norm}"
    )]
    NoMinimalVectors { max_norm: usize },
}
