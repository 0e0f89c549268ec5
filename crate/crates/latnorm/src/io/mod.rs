//! Reading and writing the on-disk formats: a line-oriented lattice
//! description, CSV operation tables, Graphviz renderings, and JSON report
//! envelopes.

pub mod dot;
pub mod lat;
pub mod report;
pub mod table;

use thiserror::Error;

use crate::lattice::LatticeError;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown label `{label}`")]
    UnknownLabel { line: usize, label: String },
    #[error("table shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}
