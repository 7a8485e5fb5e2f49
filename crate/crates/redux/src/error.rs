use thiserror::Error;

/// Errors shared across the crate.
#[derive(Error, Debug)]
pub enum Error {
    #[error("not a prime: {0}")]
    NotPrime(String),
    #[error("invalid variable name `{0}`")]
    BadVarName(String),
    #[error("duplicate variable `{0}` in layout")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("layout mismatch: {0}")]
    LayoutMismatch(String),
    #[error("coefficient field mismatch")]
    FieldMismatch,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("cannot parse coefficient `{0}`")]
    BadCoefficient(String),
    #[error("division by zero in coefficient field")]
    DivisionByZero,
    #[error("{0}")]
    DegreeViolation(String),
    #[error("input system is not in normalized form: {0}")]
    NotNormalized(String),
    #[error("field too small: need more than {need} elements")]
    FieldTooSmall { need: u64 },
    #[error("point is not a solution of the system")]
    NotASolution,
    #[error("enumeration guard exceeded: search space has {space} points, guard is {guard}")]
    GuardExceeded { space: f64, guard: u64 },
    #[error("shift does not sparsify: {before} monomials before, {after} after{}",
        .violated_constraint.map(|i| format!(", linear constraint L{} violated", i + 1)).unwrap_or_default())]
    NotSparsifying {
        before: usize,
        after: usize,
        violated_constraint: Option<usize>,
    },
    #[error("projection does not verify; extraction requires a verified (A, b)")]
    ProjectionRejected,
    #[error("operand is the zero polynomial")]
    ZeroPolynomial,
    #[error("1 - |root|^2 = {0} is not the square of a rational")]
    NotARationalSquare(String),
    #[error("INVARIANT-VIOLATION: {0}")]
    InvariantViolation(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
