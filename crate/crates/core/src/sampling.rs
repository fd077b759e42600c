//! Seeded sampling of vectors and matrices.

use rand::Rng;

use crate::field::PrimeField;
use crate::linalg::{Matrix, Subspace};

pub fn random_scalar<F: PrimeField, R: Rng + ?Sized>(rng: &mut R) -> F {
    F::from_u64(rng.gen_range(0..F::P as u64))
}

/// Uniformly random vector of the subspace.
pub fn random_vector_in<F: PrimeField, R: Rng + ?Sized>(space: &Subspace<F>, rng: &mut R) -> Vec<F> {
    let coords: Vec<F> = (0..space.dim()).map(|_| random_scalar(rng)).collect();
    space.from_coordinates(&coords)
}

pub fn random_matrix<F: PrimeField, R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Matrix<F> {
    Matrix::from_fn(rows, cols, |_, _| random_scalar(rng))
}
