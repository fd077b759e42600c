//! Seeded random restricted subalgebras of gl_n.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{from_matrices, MatrixAlgebra};
use crate::field::PrimeField;
use crate::sampling::random_matrix;

/// The restricted subalgebra of gl_n generated by `generators` uniformly
/// random matrices drawn from a ChaCha stream seeded with `seed`.
pub fn random_gl_subalgebra<F: PrimeField>(n: usize, generators: usize, seed: u64) -> MatrixAlgebra<F> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<_> = (0..generators).map(|_| random_matrix(n, n, &mut rng)).collect();
    from_matrices(format!("random_gl{n}_p{}_s{seed}", F::P), n, &gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Element, F2, F3};

    #[test]
    fn seeded_and_valid() {
        let a = random_gl_subalgebra::<F2>(2, 1, 9);
        assert!(a.algebra.dim() <= 4);
        assert!(a.algebra.validate().is_valid());
        assert_eq!(a.algebra, random_gl_subalgebra::<F2>(2, 1, 9).algebra);
    }

    #[test]
    fn zero_generators() {
        assert_eq!(random_gl_subalgebra::<F3>(3, 0, 0).algebra.dim(), 0);
    }

    #[test]
    fn p_power_matches_matrix_power() {
        let a = random_gl_subalgebra::<F2>(3, 2, 4);
        let g = &a.algebra;
        for x in crate::Subspace::<F2>::full(g.dim()).elements().take(100) {
            let x = Element::new(x);
            assert_eq!(a.to_matrix(&g.p_power(&x)), a.to_matrix(&x).pow(2));
        }
    }
}
