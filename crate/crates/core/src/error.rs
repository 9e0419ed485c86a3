use std::fmt;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("resource limit exceeded: {what} needs {requested}, cap is {limit}{}", fmt_degree(*.degree))]
    ResourceLimit {
        what: &'static str,
        requested: u128,
        limit: u128,
        /// Highest degree fully computed before the cap was hit, if any.
        degree: Option<usize>,
    },
    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("ambient dimension mismatch: expected {expected}, got {found}")]
    AmbientMismatch { expected: usize, found: usize },
    #[error("polynomial is not homogeneous in each variable")]
    NotHomogeneous,
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("certification failed: {0}")]
    Certification(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
}

fn fmt_degree(degree: Option<usize>) -> String {
    match degree {
        Some(d) => format!(" (completed through degree {d})"),
        None => String::new(),
    }
}

/// A syntax or semantic error in a variety or algebra file, with a 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

pub type Result<T, E = Error> = std::result::Result<T, E>;
