use std::collections::{BTreeSet, HashSet};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, RestrictedLieAlgebra, Subalgebra};
use crate::field::PrimeField;
use crate::linalg::Subspace;
use crate::sampling::random_vector_in;
use crate::sstheory::{jordan, p_closure_space, Exactness};

/// Sample size used when the algebra is too large to sweep.
pub const SAMPLED_SWEEP: u64 = 4096;

/// All toral subalgebras reachable from the swept semisimple elements.
#[derive(Clone, Debug)]
pub struct ToralEnumeration<F> {
    /// Every toral subalgebra found, including 0, in canonical order.
    pub torals: Vec<Subspace<F>>,
    /// The maximal ones among them, in canonical order.
    pub maximal: Vec<Subspace<F>>,
    /// Distinct nonzero semisimple parts seen during the sweep.
    pub semisimple: Vec<Element<F>>,
    pub exactness: Exactness,
}

/// Sweeps `g` (all elements when `|g| <= budget`, otherwise a seeded sample
/// of at most [`SAMPLED_SWEEP`] elements), collects semisimple parts, and grows toral
/// subalgebras depth-first by adjoining the p-closures of commuting
/// semisimple elements. Results are deduplicated by canonical form.
pub fn enumerate_torals<F: PrimeField>(g: &RestrictedLieAlgebra<F>, seed: u64, budget: u64) -> ToralEnumeration<F> {
    let full = Subspace::full(g.dim());
    let exhaustive = full.cardinality().is_some_and(|c| c <= budget);
    let sweep: Box<dyn Iterator<Item = Vec<F>>> = if exhaustive {
        Box::new(full.elements())
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let samples: Vec<Vec<F>> = (0..budget.min(SAMPLED_SWEEP)).map(|_| random_vector_in(&full, &mut rng)).collect();
        Box::new(samples.into_iter())
    };

    let mut semisimple = BTreeSet::new();
    for x in sweep {
        let s = jordan(g, &Element::new(x)).semisimple;
        if !s.is_zero() {
            semisimple.insert(s);
        }
    }
    // Each semisimple element contributes the toral subalgebra it generates.
    let atoms: Vec<Subspace<F>> = semisimple
        .iter()
        .map(|s| p_closure_space(g, s))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let mut seen: HashSet<Subspace<F>> = HashSet::new();
    let mut torals = BTreeSet::new();
    let mut maximal = BTreeSet::new();
    let mut stack = vec![Subspace::zero(g.dim())];
    seen.insert(Subspace::zero(g.dim()));
    while let Some(t) = stack.pop() {
        let mut extended = false;
        for a in &atoms {
            if a.is_subspace_of(&t) || !g.bracket_spaces(a, &t).is_zero() {
                continue;
            }
            extended = true;
            let bigger = t.sum(a);
            if seen.insert(bigger.clone()) {
                stack.push(bigger);
            }
        }
        if !extended {
            maximal.insert(t.clone());
        }
        torals.insert(t);
    }

    ToralEnumeration {
        torals: torals.into_iter().collect(),
        maximal: maximal.into_iter().collect(),
        semisimple: semisimple.into_iter().collect(),
        exactness: if exhaustive { Exactness::Exact } else { Exactness::LowerBound },
    }
}

/// The maximal toral subalgebras of `g`, exact when `|g| <= budget`.
pub fn enumerate_maximal_torals<F: PrimeField>(
    g: &RestrictedLieAlgebra<F>,
    seed: u64,
    budget: u64,
) -> (Vec<Subalgebra<F>>, Exactness) {
    let e = enumerate_torals(g, seed, budget);
    (e.maximal.into_iter().map(|t| g.certify(t)).collect(), e.exactness)
}

/// Cartan subalgebras of `g`: the centralizers of its maximal torals,
/// exact when `|g| <= budget`.
pub fn enumerate_cartans<F: PrimeField>(
    g: &RestrictedLieAlgebra<F>,
    seed: u64,
    budget: u64,
) -> (Vec<Subalgebra<F>>, Exactness) {
    let e = enumerate_torals(g, seed, budget);
    let cartans: BTreeSet<Subspace<F>> = e.maximal.iter().map(|t| g.centralizer(t).into_space()).collect();
    (cartans.into_iter().map(|c| g.certify(c)).collect(), e.exactness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::is_maximal_toral;
    use crate::corpus::{ex44, heisenberg_zero_pmap, sl2};
    use crate::{F2, F3};

    #[test]
    fn ex44_has_two_maximal_torals() {
        let g = ex44::<F2>();
        let (m, ex) = enumerate_maximal_torals(&g, 0, 100);
        assert_eq!(ex, Exactness::Exact);
        let expected: BTreeSet<_> = [g.combo(&[("t", 1)]), g.combo(&[("t", 1), ("x", 1)])]
            .iter()
            .map(|e| g.span(std::slice::from_ref(e)))
            .collect();
        let got: BTreeSet<_> = m.iter().map(|s| s.space().clone()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn p_nilpotent_heisenberg_has_only_zero() {
        let g = heisenberg_zero_pmap::<F3>();
        let (m, _) = enumerate_maximal_torals(&g, 0, 100);
        assert_eq!(m.len(), 1);
        assert!(m[0].is_zero());
    }

    #[test]
    fn sl2_f3_maximal_torals_are_certified() {
        let g = sl2::<F3>();
        let e = enumerate_torals(&g, 0, 100);
        assert_eq!(e.exactness, Exactness::Exact);
        // traceless 2x2 with nonzero determinant: (27 - 9) / 2 lines
        assert_eq!(e.maximal.len(), 9);
        for t in &e.maximal {
            assert_eq!(is_maximal_toral(&g, t), Ok(true));
        }
    }

    #[test]
    fn over_budget_sweep_is_flagged() {
        let g = sl2::<F3>();
        assert_eq!(enumerate_torals(&g, 0, 10).exactness, Exactness::LowerBound);
    }
}
