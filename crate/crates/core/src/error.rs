use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?} (parts must be weakly decreasing)")]
    NotAPartition(Vec<usize>),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid bracket shape: {0}")]
    InvalidBracket(String),

    #[error("partition {partition} has length {length} > {limit}")]
    TooLong {
        partition: Partition,
        length: usize,
        limit: usize,
    },

    #[error("configuration absent: {0}")]
    ConfigurationAbsent(String),

    /// The closed formula is only asserted for `pi >= floor`; below it nothing is claimed.
    #[error("formula not asserted here: pi = {pi} is below the validity floor {floor}")]
    OutsideValidity { pi: i64, floor: i64 },

    #[error("{0} is not (k-1)-symmetric")]
    NotSymmetric(Partition),

    #[error("unknown lemma tag `{0}`")]
    UnknownLemma(String),

    #[error("fixture line {line}: {message}")]
    Fixture { line: usize, message: String },

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
