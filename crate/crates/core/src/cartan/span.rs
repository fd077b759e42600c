use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{RestrictedLieAlgebra, Subalgebra};
use crate::field::PrimeField;
use crate::linalg::Subspace;

use super::{cartan_from_toral, enumerate_torals, maximal_toral};

/// Greedy restarts tried before falling back to exhaustive enumeration.
pub const GREEDY_RESTARTS: usize = 32;

#[derive(Clone, Debug)]
pub struct CartanSpan<F> {
    pub span: Subspace<F>,
    /// Cartan subalgebras that each enlarged the running span, in order.
    pub witnesses: Vec<Subalgebra<F>>,
    /// Whether every maximal toral subalgebra was enumerated.
    pub exhaustive: bool,
}

impl<F: PrimeField> CartanSpan<F> {
    pub fn is_everything(&self) -> bool {
        self.span.is_full()
    }
}

/// Span of the Cartan subalgebras of `g`.
///
/// Accumulates `z_g(T)` over maximal torals `T` found by seeded greedy
/// ascents, stopping as soon as the span is all of `g`; if it is not, and
/// `|g| <= budget`, every maximal toral is enumerated.
pub fn cartan_span<F: PrimeField>(g: &RestrictedLieAlgebra<F>, seed: u64, budget: u64) -> CartanSpan<F> {
    let n = g.dim();
    let mut out = CartanSpan { span: Subspace::zero(n), witnesses: Vec::new(), exhaustive: false };
    let push = |out: &mut CartanSpan<F>, c: Subalgebra<F>| {
        if !c.space().is_subspace_of(&out.span) {
            out.span = out.span.sum(c.space());
            out.witnesses.push(c);
        }
    };
    if n == 0 {
        push(&mut out, g.whole());
        return out;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..GREEDY_RESTARTS {
        let Ok(cert) = maximal_toral(g, rng.gen(), budget) else { break };
        push(&mut out, cert.cartan);
        if out.span.is_full() {
            return out;
        }
    }

    if Subspace::<F>::full(n).cardinality().is_some_and(|c| c <= budget) {
        let e = enumerate_torals(g, seed, budget);
        for t in &e.maximal {
            let c = cartan_from_toral(g, t).expect("enumerated maximal torals are certified");
            push(&mut out, c);
        }
        out.exhaustive = true;
    }
    out
}
