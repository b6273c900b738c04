//! Bipartitions and symbols for classical groups: labels, generic degrees,
//! a-values and one-box Harish-Chandra branching.

mod bipartition;
mod branching;
mod group;
mod partition;
mod symbol;

pub use bipartition::{Bipartition, ClassicalType, Sign};
pub use branching::{induce_one_box, restrict_one_box};
pub use group::{ClassicalGroup, SeriesLabel};
pub use partition::{format_parts, parse_parts, partitions};
pub use symbol::Symbol;

/// Errors raised by label parsing and degree computation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SymbolError {
    #[error("malformed label `{label}`: {message}")]
    Malformed { label: String, message: String },
    #[error("label `{label}` has rank {found}, expected {expected}")]
    RankMismatch { label: String, expected: u32, found: u32 },
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("degree computation failed: {0}")]
    Degree(#[from] dmw_qpoly::QpolyError),
}
