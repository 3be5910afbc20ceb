//! Acyclic alkane skeletons: a restricted SMILES dialect, canonical tree
//! codes, and exhaustive isomer enumeration.

mod canon;
mod enumerate;
mod smiles;

use thiserror::Error;

pub use canon::{canonical_code, CanonicalCode};
pub use enumerate::{enumerate_alkanes, MAX_CARBONS};
pub use smiles::{parse_alkane, write_alkane};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlkaneError {
    #[error("empty formula")]
    Empty,
    #[error("unexpected character {ch:?} at offset {offset}")]
    UnexpectedChar { ch: char, offset: usize },
    #[error("branch opened at offset {offset} is never closed")]
    UnclosedBranch { offset: usize },
    #[error("unmatched ')' at offset {offset}")]
    UnmatchedClose { offset: usize },
    #[error("empty branch at offset {offset}")]
    EmptyBranch { offset: usize },
    #[error("carbon at offset {atom_offset} exceeds valence 4 (bond at offset {offset})")]
    Valence { atom_offset: usize, offset: usize },
    #[error("graph is not a tree ({vertices} vertices, {edges} edges)")]
    NotTree { vertices: usize, edges: usize },
    #[error("vertex {vertex} has degree {degree}; alkane carbons allow at most 4")]
    DegreeTooHigh { vertex: usize, degree: usize },
    #[error("carbon count {0} outside the supported range 1..={max}", max = MAX_CARBONS)]
    CountOutOfRange(usize),
}
