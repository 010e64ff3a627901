//! Inconsistency indices for pairwise comparison matrices and an executable
//! check of the five axioms an index should satisfy.
//!
//! The crate is organised bottom-up:
//!
//! - [`matrix`]: the reciprocal matrix type and its transformations
//!   (relabelling, entry-wise powers, single-entry perturbation);
//! - [`sample`]: seeded generators of consistent and arbitrary matrices;
//! - [`priorities`]: geometric-mean and principal-eigenvector weights;
//! - [`indices`]: CI, CR, GW, GCI, RE, CI*, HCI, NI and the four
//!   independence witnesses `I1`, `I2`, `I4`, `I5`;
//! - [`axioms`]: falsification searches for A1–A5, the conformance table
//!   and the entry and power sweeps;
//! - [`cli`]: the `pcm` command line front end.
//!
//! ```
//! use pcm_axioms::{catalog, indices};
//!
//! let a = catalog::cyclic_triad();
//! assert!((indices::ci_star(&a) - 6.125).abs() < 1e-12);
//! ```

pub mod axioms;
pub mod catalog;
pub mod cli;
pub mod indices;
pub mod io;
pub mod matrix;
pub mod priorities;
pub mod sample;

pub use indices::{IndexDescriptor, IndexError};
pub use matrix::{MatrixError, PairwiseComparisonMatrix, PermutationMap, PerturbationSpec};
pub use priorities::{EigenSolution, PriorityVector};
pub use sample::RngSeed;
