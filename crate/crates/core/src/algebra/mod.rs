//! Restricted Lie algebras: structure constants, bracket, the Jacobson
//! p-map, subalgebras and the standard constructions.

mod construct;
mod element;
mod lie;
mod subalgebra;
mod validate;

pub use construct::{from_matrices, matrix_model, semidirect, MatrixAlgebra, Quotient, Restriction};
pub use element::Element;
pub use lie::{BracketEntry, RestrictedLieAlgebra};
pub use subalgebra::{ClosureFlags, ClosureMode, Subalgebra};
pub use validate::{validate, ValidationReport, Violation};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("element of dimension {found} used in an algebra of dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket entry ({i}, {j}) must have i < j")]
    BracketOrder { i: usize, j: usize },
    #[error("duplicate bracket entry ({i}, {j}, {k})")]
    DuplicateBracket { i: usize, j: usize, k: usize },
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("malformed algebra data: {0}")]
    Shape(String),
    #[error("algebra fails the restricted Lie algebra axioms: {0}")]
    Invalid(ValidationReport),
    #[error("subspace is not closed under the bracket")]
    NotBracketClosed,
    #[error("subspace is not an ideal")]
    NotIdeal,
    #[error("subspace is not closed under the p-map")]
    NotPClosed,
}
