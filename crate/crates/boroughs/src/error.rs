//! Error type shared across the crate.

use crate::two_club::TwoClub;
use thiserror::Error;

/// Everything that can go wrong while parsing input or analysing a graph.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input data, reported with a 1-based line number.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },

    /// A caller-supplied argument violated a precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Cycle enumeration stopped because the cycle cap was reached.
    #[error("cycle cap of {cap} induced cycles exceeded")]
    CycleCapExceeded { cap: usize },

    /// 2-club enumeration ran out of branch budget. The results gathered so
    /// far are carried along, flagged as incomplete.
    #[error("branch budget of {budget} exhausted in scope {scope}; {} clubs collected before giving up", partial.len())]
    BranchBudgetExhausted {
        budget: u64,
        scope: String,
        partial: Vec<TwoClub>,
    },

    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// File I/O failure while reading input or writing exports.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Export serialization failure.
    #[error("serialization error: {0}")]
    Serialize(String),
}

impl Error {
    /// Process exit code for the CLI: 1 input errors, 2 exhausted budgets,
    /// 3 internal invariant violations.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Parse { .. } | Error::InvalidArgument(_) | Error::Io(_) => 1,
            Error::CycleCapExceeded { .. } | Error::BranchBudgetExhausted { .. } => 2,
            Error::Invariant(_) | Error::Serialize(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
