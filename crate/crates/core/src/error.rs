use thiserror::Error;

/// Errors produced by the exact algebra, the pairing constructors and the
/// catalog loader.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot evaluate a Laurent polynomial with negative exponents at 0")]
    EvaluationAtZero,

    /// Input data violates a named structural invariant.
    #[error("invariant violated: {invariant}{}", fmt_detail(.detail))]
    Invariant { invariant: &'static str, detail: String },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("evaluation point {re}{im:+}i is not on the unit circle minus 1")]
    InvalidPoint { re: f64, im: f64 },

    /// The hermitian form is numerically degenerate at the requested point.
    #[error("indeterminate signature: smallest eigenvalue {smallest:.3e} below threshold {threshold:.3e}")]
    Indeterminate { smallest: f64, threshold: f64 },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
}

fn fmt_detail(detail: &str) -> String {
    if detail.is_empty() {
        String::new()
    } else {
        format!(" ({detail})")
    }
}

impl Error {
    pub(crate) fn invariant(invariant: &'static str, detail: impl Into<String>) -> Self {
        Error::Invariant {
            invariant,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
