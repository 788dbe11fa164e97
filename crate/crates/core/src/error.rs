use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by an interval containing zero")]
    DivisionByIntervalContainingZero,
    #[error("logarithm of a non-positive interval")]
    LogOfNonPositive,
    #[error("argument must be positive")]
    NonPositiveArgument,
    #[error("argument must exceed one")]
    ArgumentNotGreaterThanOne,
    #[error("unsupported modulus {0}")]
    UnsupportedModulus(i64),
    #[error("invalid interval: lower endpoint above upper endpoint")]
    InvalidInterval,
    #[error("malformed catalog at line {line}: {reason}")]
    MalformedCatalog { line: usize, reason: String },
    #[error("invariant violated for {label}: {reason}")]
    InvariantViolation { label: String, reason: String },
    #[error("checksum mismatch for {0}")]
    ChecksumMismatch(String),
    #[error("unsupported field {0}")]
    UnsupportedField(String),
    #[error("unsupported argument: {0}")]
    UnsupportedArgument(String),
    #[error("malformed table at line {line}: {reason}")]
    MalformedTable { line: usize, reason: String },
    #[error("denominator 7.5 log A - 12.99 is not certified positive")]
    DenominatorNotPositive,
    #[error("base condition not certified above one")]
    InfeasibleBase,
    #[error("t must be positive")]
    NonPositiveT,
    #[error("empty table")]
    EmptyTable,
    #[error("no feasible point")]
    NoFeasiblePoint,
    #[error("could not certify: {0}")]
    Uncertified(String),
    #[error("data missing: {0}")]
    DataMissing(String),
    #[error("step {id} failed: {claim}")]
    StepFailed { id: String, claim: String },
    #[error("schema mismatch: expected {expected}, found {found}")]
    SchemaMismatch { expected: String, found: String },
    #[error("tamper detected in step {0}")]
    TamperDetected(String),
    #[error("report could not be parsed: {0}")]
    BadReport(String),
}

pub type Result<T> = std::result::Result<T, Error>;
