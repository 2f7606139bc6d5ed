use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed base set: {0}")]
    MalformedBaseSet(String),
    #[error("ground set size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("unequal moduli: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("entries differ by more than one at index {index}")]
    NotAdjacent { index: usize },
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("infeasible spec: the inequalities admit no base")]
    Infeasible,
    #[error("vector is not a base of the spec: {0}")]
    NotABase(String),
    #[error("intervals are not LP-orderable")]
    NotLpOrderable,
    #[error("invalid lattice path: {0}")]
    InvalidPath(String),
    #[error("not linear quotients in this order at generator {index}")]
    NotLinearQuotients { index: usize },
    #[error("no closed form for this family: {0}")]
    UnsupportedFamily(String),
    #[error("resource guard tripped: {0}")]
    ResourceGuard(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
