use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("pole at specialization point")]
    Pole,
    #[error("value is not in Q(v)")]
    NotInQv,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("generator index {index} out of range for rank {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("not a strict partition: {0}")]
    NotStrict(String),
    #[error("invalid partition or composition: {0}")]
    InvalidShape(String),
    #[error("too few variables: need at least {need}, have {have}")]
    TooFewVariables { need: usize, have: usize },
    #[error("not in the span of Q-functions")]
    NotInQSpan,
    #[error("singular linear system")]
    Singular,
    #[error("trace polynomial is not symmetric at weight {0}")]
    Asymmetric(String),
    #[error("reduction fuel exhausted after {0} steps")]
    FuelExhausted(u64),
    #[error("reduction revisited a term in progress: {0}")]
    ReductionCycle(String),
}
