mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use retla::algebra::RestrictedLieAlgebra;
use retla::cartan::{enumerate_cartans, enumerate_torals, is_cartan, maximal_toral, DEFAULT_BUDGET};
use retla::corpus::{borel_sl2, corpus, ex44, gl_n, heisenberg, heisenberg_zero_pmap, nil_k, sl2, toral_k, vt_weights};
use retla::env::{associativity_violation, augmentation_power_dims, is_local, u_of};
use retla::io::{from_json_str, to_json_string};
use retla::random::random_gl_subalgebra;
use retla::sampling::random_matrix;
use retla::sstheory::{jordan, p_nilpotent_radical, Exactness};
use retla::{with_algebra, AnyAlgebra, Element, Matrix, PrimeField, Subspace, F2, F3, F5, F7};

use common::*;

fn row_space_brute<F: PrimeField>(m: &Matrix<F>) -> BTreeSet<Vec<F>> {
    all_vectors::<F>(m.rows())
        .into_iter()
        .map(|c| {
            let mut v = vec![F::zero(); m.cols()];
            for (ci, row) in c.iter().zip(m.row_iter()) {
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi += *ci * *ri;
                }
            }
            v
        })
        .collect()
}

fn check_linalg<F: PrimeField>(seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for rows in 1..4 {
        for cols in 1..5 {
            let m: Matrix<F> = random_matrix(rows, cols, &mut rng);
            let space = m.row_space();
            let brute = row_space_brute(&m);
            let listed: BTreeSet<Vec<F>> = space.elements().collect();
            assert_eq!(listed, brute);
            assert_eq!(m.rank(), space.dim());
            let kernel: BTreeSet<Vec<F>> =
                all_vectors::<F>(cols).into_iter().filter(|v| m.mul_vec(v).iter().all(|c| c.is_zero())).collect();
            let k = m.kernel();
            assert_eq!(k.elements().collect::<BTreeSet<_>>(), kernel);
            assert_eq!(k.dim() + m.rank(), cols);
        }
    }
}

#[test]
fn row_space_and_kernel_match_enumeration() {
    for seed in 0..10 {
        check_linalg::<F2>(seed);
        check_linalg::<F3>(seed);
        check_linalg::<F5>(seed);
    }
}

#[test]
fn subspace_enumeration_is_complete_and_canonical() {
    for n in 0..5 {
        let all = all_subspaces::<F3>(n);
        assert_eq!(all.len() as u64, subspace_count(n, 3));
        assert_eq!(all.iter().collect::<BTreeSet<_>>().len(), all.len());
    }
    assert_eq!(subspace_count(3, 2), 16);
}

fn check_jordan<F: PrimeField>(g: &RestrictedLieAlgebra<F>) {
    let graph = PMapGraph::new(g);
    for (x, candidates) in graph.elements.iter().zip(brute_jordan(g, &graph)) {
        assert_eq!(candidates.len(), 1, "{}: {x:?}", g.name());
        let pair = jordan(g, &Element::new(x.clone()));
        assert_eq!(pair.semisimple.coords(), &candidates[0][..], "{}: {x:?}", g.name());
    }
}

#[test]
fn jordan_matches_brute_force() {
    check_jordan(&ex44::<F2>());
    check_jordan(&ex44::<F5>());
    check_jordan(&sl2::<F3>());
    check_jordan(&heisenberg::<F3>());
    check_jordan(&borel_sl2::<F3>());
    check_jordan(&nil_k::<F2>(4));
    check_jordan(&random_gl_subalgebra::<F2>(3, 1, 5).algebra);
}

/// Enumerated torals, maximal torals and Cartan subalgebras agree with a
/// census of all subspaces, and the lib's Cartan test agrees with the oracle
/// on every subspace.
fn check_census<F: PrimeField>(g: &RestrictedLieAlgebra<F>) {
    let graph = PMapGraph::new(g);
    let c = census(g, &graph, true);
    let e = enumerate_torals(g, 0, DEFAULT_BUDGET);
    assert_eq!(e.exactness, Exactness::Exact);
    assert_eq!(e.torals, c.torals, "{}", g.name());
    assert_eq!(e.maximal, c.maximal_torals, "{}", g.name());
    let (cartans, _) = enumerate_cartans(g, 0, DEFAULT_BUDGET);
    let mut cartans: Vec<Subspace<F>> = cartans.into_iter().map(|c| c.into_space()).collect();
    cartans.sort();
    assert_eq!(cartans, c.cartans, "{}", g.name());
    for s in all_subspaces::<F>(g.dim()) {
        assert_eq!(is_cartan(g, &s), c.cartans.contains(&s), "{}: {s:?}", g.name());
    }
}

#[test]
fn torals_and_cartans_match_subspace_census() {
    check_census(&ex44::<F2>());
    check_census(&ex44::<F3>());
    check_census(&sl2::<F3>());
    check_census(&borel_sl2::<F3>());
    check_census(&heisenberg::<F2>());
    check_census(&heisenberg_zero_pmap::<F3>());
    check_census(&gl_n::<F2>(2).algebra);
    check_census(&toral_k::<F3>(2));
    check_census(&vt_weights::<F3>(&[1, 2]));
    check_census(&random_gl_subalgebra::<F2>(2, 2, 3).algebra);
}

/// Largest ideal that is p-closed and consists of p-nilpotent elements.
fn check_radical<F: PrimeField>(g: &RestrictedLieAlgebra<F>) {
    let graph = PMapGraph::new(g);
    let candidates: Vec<Subspace<F>> = all_subspaces::<F>(g.dim())
        .into_iter()
        .filter(|s| {
            let elems = elements_of(s);
            elems.iter().all(|v| graph.is_p_nilpotent(v) && s.contains(g.p_power(&Element::new(v.clone())).coords()))
                && elems.iter().all(|v| {
                    (0..g.dim()).all(|i| s.contains(g.bracket(&g.basis_element(i), &Element::new(v.clone())).coords()))
                })
        })
        .collect();
    let largest = candidates.iter().max_by_key(|s| s.dim()).unwrap();
    assert!(candidates.iter().all(|s| s.is_subspace_of(largest)), "{}", g.name());
    let r = p_nilpotent_radical(g, 0, DEFAULT_BUDGET);
    assert_eq!(r.exactness, Exactness::Exact);
    assert_eq!(r.ideal.space(), largest, "{}", g.name());
}

#[test]
fn radical_matches_brute_force() {
    check_radical(&ex44::<F3>());
    check_radical(&borel_sl2::<F3>());
    check_radical(&heisenberg::<F3>());
    check_radical(&heisenberg_zero_pmap::<F2>());
    check_radical(&sl2::<F3>());
    check_radical(&nil_k::<F2>(3));
    check_radical(&vt_weights::<F5>(&[1, 2]));
}

/// In u(g) the relation x^p = x^[p] must hold for every x, and commutators
/// of embedded elements must reproduce the bracket.
fn check_envelope<F: PrimeField>(g: &RestrictedLieAlgebra<F>) {
    let u = u_of(g, 1 << 15).unwrap();
    for x in all_vectors::<F>(g.dim()) {
        let x = Element::new(x);
        assert_eq!(u.pow(&u.embed(&x), F::P as u64), u.embed(&g.p_power(&x)), "{}", g.name());
    }
    for i in 0..g.dim() {
        for j in 0..g.dim() {
            let (a, b) = (g.basis_element(i), g.basis_element(j));
            assert_eq!(u.commutator(&u.embed(&a), &u.embed(&b)), u.embed(&g.bracket(&a, &b)));
        }
    }
    assert_eq!(associativity_violation(&u, 300, 1), None);
}

#[test]
fn envelope_relations() {
    check_envelope(&ex44::<F2>());
    check_envelope(&sl2::<F3>());
    check_envelope(&heisenberg::<F3>());
    check_envelope(&borel_sl2::<F5>());
    check_envelope(&random_gl_subalgebra::<F3>(2, 2, 1).algebra);
}

/// u(g) is local iff every element of g is p-nilpotent; the dense ideal
/// powers reach zero exactly then.
#[test]
fn locality_matches_element_sweep() {
    fn check<F: PrimeField>(g: &RestrictedLieAlgebra<F>) {
        let graph = PMapGraph::new(g);
        let all_nil = graph.nilpotent.iter().all(|b| *b);
        let u = u_of(g, 1 << 15).unwrap();
        assert_eq!(is_local(&u), all_nil, "{}", g.name());
        if u.dim() <= 729 {
            assert_eq!(augmentation_power_dims(&u).last() == Some(&0), all_nil, "{}", g.name());
        }
    }
    check(&nil_k::<F2>(5));
    check(&heisenberg_zero_pmap::<F5>());
    check(&heisenberg::<F3>());
    check(&ex44::<F3>());
    check(&nil_k::<F3>(7));
    check(&heisenberg_zero_pmap::<F7>());
}

#[test]
fn greedy_torals_are_maximal_by_census() {
    for seed in 0..20 {
        let g = random_gl_subalgebra::<F2>(2, 2, seed).algebra;
        let graph = PMapGraph::new(&g);
        let c = census(&g, &graph, false);
        let t = maximal_toral(&g, seed, DEFAULT_BUDGET).unwrap().toral.into_space();
        assert!(c.maximal_torals.contains(&t), "seed {seed}");
    }
}

#[test]
fn corpus_round_trips_through_json() {
    for e in corpus() {
        let g = e.build();
        let back = from_json_str(&to_json_string(&g)).unwrap();
        assert_eq!(to_json_string(&back), to_json_string(&g));
        assert_eq!((back.p(), back.dim(), back.name()), (g.p(), g.dim(), g.name()));
    }
}

#[test]
fn save_and_load() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sl2.json");
    let g: AnyAlgebra = sl2::<F5>().into();
    retla::io::save(&g, &path).unwrap();
    let back = retla::io::load(&path).unwrap();
    assert_eq!(to_json_string(&back), to_json_string(&g));
    assert!(retla::io::load(dir.path().join("missing.json")).is_err());
}

fn same_algebra(a: &AnyAlgebra, b: &AnyAlgebra) -> bool {
    match (a, b) {
        (AnyAlgebra::F2(x), AnyAlgebra::F2(y)) => x == y,
        (AnyAlgebra::F3(x), AnyAlgebra::F3(y)) => x == y,
        (AnyAlgebra::F5(x), AnyAlgebra::F5(y)) => x == y,
        (AnyAlgebra::F7(x), AnyAlgebra::F7(y)) => x == y,
        _ => false,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_algebras_round_trip(seed in 0u64..10_000, n in 1usize..4, gens in 0usize..3) {
        let g: AnyAlgebra = random_gl_subalgebra::<F3>(n, gens, seed).algebra.into();
        let back = from_json_str(&to_json_string(&g)).unwrap();
        prop_assert!(same_algebra(&g, &back));
    }

    #[test]
    fn p_map_matches_matrix_power(seed in 0u64..10_000, x_seed in 0u64..1000) {
        let m = random_gl_subalgebra::<F3>(3, 2, seed);
        let g = &m.algebra;
        let mut rng = ChaCha8Rng::seed_from_u64(x_seed);
        let x = Element::new(retla::sampling::random_vector_in(&Subspace::full(g.dim()), &mut rng));
        prop_assert_eq!(m.to_matrix(&g.p_power(&x)), m.to_matrix(&x).pow(3));
        prop_assert!(g.validate().is_valid());
    }

    #[test]
    fn dimension_formula(seed in 0u64..10_000) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix::<F2, _>(3, 6, &mut rng).row_space();
        let b = random_matrix::<F2, _>(3, 6, &mut rng).row_space();
        prop_assert_eq!(a.sum(&b).dim() + a.intersect(&b).dim(), a.dim() + b.dim());
        let listed: BTreeSet<Vec<F2>> = a.intersect(&b).elements().collect();
        let brute: BTreeSet<Vec<F2>> = a.elements().filter(|v| b.contains(v)).collect();
        prop_assert_eq!(listed, brute);
    }

    #[test]
    fn jordan_parts_commute_and_recombine(seed in 0u64..10_000) {
        let g = random_gl_subalgebra::<F2>(3, 2, seed).algebra;
        let graph = PMapGraph::new(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = retla::sampling::random_vector_in(&Subspace::full(g.dim()), &mut rng);
        let pair = jordan(&g, &Element::new(x.clone()));
        prop_assert!(graph.is_semisimple(pair.semisimple.coords()));
        prop_assert!(graph.is_p_nilpotent(pair.nilpotent.coords()));
        prop_assert!(g.bracket(&pair.semisimple, &pair.nilpotent).is_zero());
        let sum: Vec<F2> = pair.semisimple.coords().iter().zip(pair.nilpotent.coords()).map(|(a, b)| *a + *b).collect();
        prop_assert_eq!(sum, x);
    }
}

#[test]
fn corpus_facts_hold() {
    for e in corpus() {
        let g = e.build();
        let derived = with_algebra!(&g, g => retla::app::derive_facts(g, 0, DEFAULT_BUDGET));
        assert_eq!(derived.nilpotent, e.expected.nilpotent, "{}", e.label());
        assert_eq!(derived.radical_dim, e.expected.radical_dim, "{}", e.label());
        if e.expected.maximal_torals.is_some() {
            assert_eq!(derived.maximal_torals, e.expected.maximal_torals, "{}", e.label());
        }
    }
}
