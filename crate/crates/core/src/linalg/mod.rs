//! Exact linear algebra over F_p.
//!
//! Matrices are dense and row-major. Subspaces are kept in reduced
//! row-echelon form, so two subspaces are equal exactly when their stored
//! bases are identical.

mod gf2;
mod matrix;
mod subspace;
pub mod vector;

pub use matrix::Matrix;
pub use subspace::{combine, CombineMode, Combined, Subspace, SubspaceElements};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
}
