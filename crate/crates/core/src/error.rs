use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column} (token {token}): {message}")]
    Syntax {
        line: usize,
        column: usize,
        token: usize,
        message: String,
    },

    #[error("arity mismatch: expected {expected} variables, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("duplicate name `{0}`")]
    DuplicateName(String),

    #[error("quotient by the zero polynomial")]
    ZeroDivisor,

    #[error("saturation with respect to the zero ideal")]
    ZeroIdeal,

    #[error("ideal is not zero-dimensional at the origin (local dimension {0})")]
    PositiveDimensional(i64),

    #[error("genericity failure: no admissible draw found, last failure in codimension {codim}")]
    Genericity { codim: usize },

    #[error("improper intersection: intersection has dimension {found}, expected {expected}")]
    ImproperIntersection { found: i64, expected: i64 },

    #[error("unresolved moving support: {0}")]
    UnresolvedMovingSupport(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Machine-readable error code used in reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax_error",
            Error::ArityMismatch { .. } => "arity_mismatch",
            Error::UnknownVariable(_) => "unknown_variable",
            Error::UnknownName(_) => "unknown_name",
            Error::DuplicateName(_) => "duplicate_name",
            Error::ZeroDivisor => "zero_divisor",
            Error::ZeroIdeal => "zero_ideal",
            Error::PositiveDimensional(_) => "positive_dimensional",
            Error::Genericity { .. } => "genericity_failure",
            Error::ImproperIntersection { .. } => "improper_intersection",
            Error::UnresolvedMovingSupport(_) => "unresolved_moving_support",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }

    /// Process exit code: 2 input error, 3 genericity, 4 improper, 5 unresolved moving support.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Genericity { .. } => 3,
            Error::ImproperIntersection { .. } => 4,
            Error::UnresolvedMovingSupport(_) => 5,
            _ => 2,
        }
    }
}
