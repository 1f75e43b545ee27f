use thiserror::Error;

use crate::combinatorics::Partition;

/// Errors raised across the library.
///
/// Variants are grouped by the CLI exit code they map to, see
/// [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("incomparable weights: {left} vs {right}")]
    IncomparableWeights { left: usize, right: usize },

    #[error("no chain exists: {from} is not dominated by {to}")]
    NoChain { from: Partition, to: Partition },

    #[error("{lower} is not dominated by {upper}")]
    NotDominated { lower: Partition, upper: Partition },

    #[error("insufficient variables: need at least {required}, have {available}")]
    InsufficientVariables { required: usize, available: usize },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("variable index x{index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("duplicate index {0}")]
    DuplicateIndex(usize),

    #[error("not divisible")]
    NotDivisible,

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0}! is not invertible in the field")]
    FactorialNotInvertible(u32),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unresolvable generator reference: {0}")]
    UnresolvableGenerator(String),

    #[error("finite-field backend only")]
    NotFiniteField,

    #[error("budget exceeded: {required} evaluations requested, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("solution orbit {representative} has orbit type {orbit_type}, dominated by {mu_perp}")]
    StratumViolation {
        representative: String,
        orbit_type: Partition,
        mu_perp: Partition,
    },
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    /// Process exit code used by the `specht` binary: 1 verification failed,
    /// 2 parse error, 3 precondition violated.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. }
            | Error::InvalidPartition(_)
            | Error::InvalidField(_)
            | Error::InvalidPermutation(_)
            | Error::InvalidTableau(_)
            | Error::Malformed(_)
            | Error::VariableOutOfRange { .. } => 2,
            Error::StratumViolation { .. } => 1,
            _ => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
