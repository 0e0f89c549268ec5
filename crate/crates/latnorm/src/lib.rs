//! Finite bounded lattices and the operation tables that live on them.
//!
//! The crate builds lattices from covering relations (plus combinators:
//! ordinal and glued sums, direct products, duals, interval restriction,
//! doubling inside a covering square), classifies their structure
//! (modularity, distributivity, 1-distributivity, atomisticity, boolean
//! structure, forbidden sublattices through the top), and works with
//! binary operation tables in the t-norm family: verification of the
//! defining laws with minimal counterexample witnesses, canonical
//! constructions, continuity checks along two independent routes, and
//! complete backtracking searches whose exhausted runs double as
//! nonexistence proofs. A fixed corpus of reference lattices and an
//! exhaustive small-lattice enumerator keep every structural claim
//! cross-checkable.
//!
//! Entry points: [`lattice::FiniteLattice`] for the ground structure,
//! [`analysis`] for classification, [`tnorm`] for table laws and
//! constructions, [`search`] for existence questions, [`corpus`] for the
//! named examples, and [`io`] for the file formats.

pub mod analysis;
pub mod corpus;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod search;
pub mod tnorm;

pub use analysis::{LawKind, Verdict, Witness};
pub use lattice::{BoundKind, FiniteLattice, Interval, LatticeError};
pub use tnorm::{OpTable, TnormError};
