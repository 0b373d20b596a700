use thiserror::Error;

use crate::roots::Root;

/// Errors raised by the placement, order and poset operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root ({row},{col}): a root (i,j) needs i > j >= 1")]
    InvalidRoot { row: usize, col: usize },

    #[error("root {root} does not fit ambient n = {n}")]
    OutOfRange { root: Root, n: usize },

    #[error("rooks {first} and {second} attack each other (shared {line})")]
    Attack {
        first: Root,
        second: Root,
        line: &'static str,
    },

    #[error("placement is not orthogonal: index {index} is used twice")]
    NotOrthogonal { index: usize },

    #[error("ambient sizes differ: {left} vs {right}")]
    Mismatch { left: usize, right: usize },

    #[error("{0}")]
    Domain(String),

    #[error("enumeration of {count} placements exceeds the cap of {cap}")]
    TooLarge { count: u128, cap: u128 },

    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: String },

    #[error("placement {0} is not an element of this poset")]
    NotAMember(String),

    #[error("rank formula produced an odd numerator {numerator} for {placement}")]
    Parity { numerator: usize, placement: String },
}

pub type Result<T> = std::result::Result<T, Error>;
