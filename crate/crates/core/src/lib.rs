//! Neighborhood degree sum topological indices for alkane skeletons.
//!
//! The crate computes the six `ND` indices (and the classic degree-based
//! indices they extend) on hydrogen-suppressed molecular graphs, and ships
//! the tooling to evaluate them as QSPR descriptors:
//!
//! - [`graph`]: validated simple connected graphs and degree profiles
//! - [`indices`]: 19 edge-sum indices with exact integer accumulation
//! - [`alkane`]: carbon-only SMILES, canonical tree codes, isomer enumeration
//! - [`stats`]: linear regression with significance F, correlation matrices
//! - [`degeneracy`]: index sensitivity over isomer families
//! - [`bounds`]: executable inequalities between indices
//! - [`dataset`]: built-in octane and alkane property sets, CSV I/O
//!
//! ```
//! use ndtopo::{alkane::parse_alkane, indices::{compute_index, IndexKind}};
//!
//! let octane = parse_alkane("CCCCCCCC")?;
//! let nd3 = compute_index(&octane, IndexKind::ND3)?;
//! assert_eq!(nd3.value, 612.0);
//! # Ok::<(), ndtopo::Error>(())
//! ```

pub mod alkane;
pub mod bounds;
pub mod dataset;
pub mod degeneracy;
pub mod format;
pub mod graph;
pub mod indices;
pub mod stats;

pub use alkane::{canonical_code, enumerate_alkanes, parse_alkane, write_alkane, AlkaneError};
pub use bounds::{BoundCheck, BoundsError, Proposition};
pub use dataset::{load_builtin, load_csv, Dataset, DatasetError, PropertyKind};
pub use degeneracy::{sensitivity, sensitivity_table, DegeneracyError, SensitivityReport};
pub use graph::{GraphError, MolGraph};
pub use indices::{compute_all, compute_index, IndexError, IndexKind};
pub use stats::{linear_fit, RegressionResult, StatsError};

/// Any error produced by this crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Alkane(#[from] AlkaneError),
    #[error(transparent)]
    Stats(#[from] StatsError),
    #[error(transparent)]
    Degeneracy(#[from] DegeneracyError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Dataset(#[from] DatasetError),
}
