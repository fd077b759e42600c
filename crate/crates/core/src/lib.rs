//! Exact computation with finite-dimensional restricted Lie algebras over
//! the prime fields F_2, F_3, F_5 and F_7.

pub mod algebra;
pub mod app;
pub mod cartan;
pub mod corpus;
pub mod dispatch;
pub mod env;
pub mod field;
pub mod io;
pub mod linalg;
pub mod random;
pub mod sampling;
pub mod sstheory;

pub use algebra::{Element, RestrictedLieAlgebra, Subalgebra};
pub use dispatch::AnyAlgebra;
pub use field::{Fp, PrimeField};
pub use linalg::{Matrix, Subspace};

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
