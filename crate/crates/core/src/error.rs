use thiserror::Error;

use crate::certificate::Violation;

/// Errors raised by the library.
///
/// A `false` verdict is never an error: it is reported through a
/// [`Certificate`](crate::Certificate). Errors cover malformed input, broken
/// preconditions and internal inconsistencies.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("structure must have at least one element")]
    EmptyCarrier,
    #[error("{table} table is not {order}x{order} (row {row} has {len} entries)")]
    NotSquare {
        table: &'static str,
        order: usize,
        row: usize,
        len: usize,
    },
    #[error("{table} table has {rows} rows, expected {order}")]
    RowCount {
        table: &'static str,
        order: usize,
        rows: usize,
    },
    #[error("{table} table entry ({row}, {col}) = {value} is out of range for order {order}")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element id {id} is out of range for order {order}")]
    IdOutOfRange { id: usize, order: usize },
    #[error("expected {order} labels, got {got}")]
    LabelCount { order: usize, got: usize },
    #[error("not a skew lattice: {0}")]
    NotASkewLattice(Violation),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown predicate `{0}`")]
    UnknownPredicate(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error("order {order} exceeds the configured cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("invalid representation: {0}")]
    Representation(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }
}
