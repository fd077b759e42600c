//! Semisimple and p-nilpotent elements: p-closures, the Jordan–Chevalley
//! decomposition via Fitting theory, toral parts, and p-nilpotent radicals.
//!
//! Over F_p the p-map restricted to an abelian p-closed subspace `A` is
//! additive and fixes scalars, so it is a linear operator `P` on `A`. With
//! `m = dim A`, `A = im(P^m) ⊕ ker(P^m)` is the Fitting decomposition: the
//! first summand is the toral part, the second consists of p-nilpotent
//! elements.

use std::collections::{BTreeSet, HashMap};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{ClosureMode, Element, RestrictedLieAlgebra, Subalgebra};
use crate::cartan::{maximal_toral, BudgetExceeded};
use crate::field::PrimeField;
use crate::linalg::{Matrix, Subspace};
use crate::sampling::random_vector_in;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SsError {
    #[error("subspace is not abelian")]
    NotAbelian,
    #[error("subspace is not closed under the p-map")]
    NotPClosed,
    #[error("p-nilpotent radical is only a lower bound (candidate sweep was not exhaustive)")]
    NotExact,
    #[error("element sweep of {needed} exceeds budget {budget}")]
    Budget { needed: u64, budget: u64 },
}

impl<F> From<BudgetExceeded<F>> for SsError {
    fn from(e: BudgetExceeded<F>) -> Self {
        SsError::Budget { needed: e.needed, budget: e.budget }
    }
}

/// `x = semisimple + nilpotent` with commuting parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair<F> {
    pub semisimple: Element<F>,
    pub nilpotent: Element<F>,
}

/// Whether an enumeration covered every candidate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Exactness {
    Exact,
    LowerBound,
}

/// The restricted subalgebra generated by `x`: `span{x, x^[p], x^[p^2], ...}`.
pub fn p_closure<F: PrimeField>(g: &RestrictedLieAlgebra<F>, x: &Element<F>) -> Subalgebra<F> {
    g.certify(p_closure_space(g, x))
}

pub(crate) fn p_closure_space<F: PrimeField>(g: &RestrictedLieAlgebra<F>, x: &Element<F>) -> Subspace<F> {
    let mut space = Subspace::zero(g.dim());
    let mut y = x.clone();
    loop {
        let next = space.add_vectors([y.coords()]);
        if next == space {
            return space;
        }
        space = next;
        y = g.p_power(&y);
    }
}

/// Matrix of the p-map on an abelian p-closed subspace, in the echelon
/// coordinates of that subspace.
pub fn p_operator<F: PrimeField>(g: &RestrictedLieAlgebra<F>, a: &Subspace<F>) -> Result<Matrix<F>, SsError> {
    if !g.is_abelian_subspace(a) {
        return Err(SsError::NotAbelian);
    }
    let columns: Option<Vec<Vec<F>>> = a.basis_vectors().map(|v| a.coordinates(&g.p_power_vec(v))).collect();
    let columns = columns.ok_or(SsError::NotPClosed)?;
    Ok(Matrix::from_columns(a.dim(), &columns))
}

/// Fitting decomposition `(im P^m, ker P^m)` of an abelian p-closed subspace,
/// both returned in the ambient coordinates of `g`.
pub fn fitting_decomposition<F: PrimeField>(
    g: &RestrictedLieAlgebra<F>,
    a: &Subspace<F>,
) -> Result<(Subspace<F>, Subspace<F>), SsError> {
    let p = p_operator(g, a)?;
    let m = a.dim();
    let pm = p.pow(m as u32);
    let to_ambient = |s: Subspace<F>| Subspace::span(g.dim(), s.basis_vectors().map(|v| a.from_coordinates(v)));
    let image = to_ambient(pm.column_space());
    let kernel = to_ambient(if m == 0 { Subspace::zero(0) } else { pm.kernel() });
    Ok((image, kernel))
}

/// Jordan–Chevalley decomposition of `x`: project `x` onto the Fitting
/// summands of its p-closure.
pub fn jordan<F: PrimeField>(g: &RestrictedLieAlgebra<F>, x: &Element<F>) -> JordanPair<F> {
    let a = p_closure_space(g, x);
    let (image, kernel) = fitting_decomposition(g, &a).expect("p-closures are abelian and p-closed");
    let (s, n) = image.decompose(&kernel, x.coords()).expect("Fitting summands span the p-closure");
    JordanPair { semisimple: s.into(), nilpotent: n.into() }
}

pub fn is_semisimple<F: PrimeField>(g: &RestrictedLieAlgebra<F>, x: &Element<F>) -> bool {
    jordan(g, x).nilpotent.is_zero()
}

pub fn is_p_nilpotent_element<F: PrimeField>(g: &RestrictedLieAlgebra<F>, x: &Element<F>) -> bool {
    jordan(g, x).semisimple.is_zero()
}

/// The semisimple summand `im(P^dim A)` of an abelian p-closed subalgebra.
pub fn toral_part<F: PrimeField>(g: &RestrictedLieAlgebra<F>, a: &Subspace<F>) -> Result<Subalgebra<F>, SsError> {
    let (image, _) = fitting_decomposition(g, a)?;
    Ok(g.certify(image))
}

/// The p-nilpotent summand `ker(P^dim A)`.
pub fn nil_part<F: PrimeField>(g: &RestrictedLieAlgebra<F>, a: &Subspace<F>) -> Result<Subalgebra<F>, SsError> {
    let (_, kernel) = fitting_decomposition(g, a)?;
    Ok(g.certify(kernel))
}

/// Abelian, p-closed, and the p-map is invertible on it.
pub fn is_toral<F: PrimeField>(g: &RestrictedLieAlgebra<F>, a: &Subspace<F>) -> bool {
    match p_operator(g, a) {
        Ok(p) => p.rank() == a.dim(),
        Err(_) => false,
    }
}

/// Every element of the restricted subalgebra `a` is p-nilpotent, decided by
/// computing a maximal toral subalgebra of `a` and testing it for zero.
pub fn is_p_nilpotent_algebra<F: PrimeField>(
    g: &RestrictedLieAlgebra<F>,
    a: &Subspace<F>,
    seed: u64,
    budget: u64,
) -> Result<bool, SsError> {
    if a.is_zero() {
        return Ok(true);
    }
    if a.is_full() {
        return Ok(maximal_toral(g, seed, budget)?.toral.is_zero());
    }
    let sub = g.restrict(a).map_err(|_| SsError::NotPClosed)?;
    Ok(maximal_toral(&sub.algebra, seed, budget)?.toral.is_zero())
}

#[derive(Clone, Debug)]
pub struct Radical<F> {
    pub ideal: Subalgebra<F>,
    pub exactness: Exactness,
    /// Largest ideal of p-nilpotent elements without requiring p-closure,
    /// reported only when it differs from `ideal` (exact regime only).
    pub plain_ideal_variant: Option<Subalgebra<F>>,
    /// The distinct p-nilpotent p-ideals `closure({x}, p_ideal)` found.
    pub generated: Vec<Subspace<F>>,
}

/// The p-nilpotent radical: the sum of all single-generator p-ideals that
/// are p-nilpotent. Exact when every element of `g` was a candidate.
pub fn p_nilpotent_radical<F: PrimeField>(g: &RestrictedLieAlgebra<F>, seed: u64, budget: u64) -> Radical<F> {
    let n = g.dim();
    let full = Subspace::full(n);
    let exhaustive = full.cardinality().is_some_and(|c| c <= budget);
    let candidates: Vec<Element<F>> = if exhaustive {
        full.elements().map(Element::new).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut c: Vec<Element<F>> = (0..n).map(|i| g.basis_element(i)).collect();
        c.extend((0..1024).map(|_| Element::new(random_vector_in(&full, &mut rng))));
        c
    };

    let mut verdicts: HashMap<Subspace<F>, bool> = HashMap::new();
    let mut found = BTreeSet::new();
    let mut sum = Subspace::zero(n);
    for x in &candidates {
        if x.is_zero() || sum.contains(x.coords()) || !is_p_nilpotent_element(g, x) {
            continue;
        }
        let ideal = g.closure(std::slice::from_ref(x), ClosureMode::PIdeal).into_space();
        let nilpotent = *verdicts
            .entry(ideal.clone())
            .or_insert_with(|| is_p_nilpotent_algebra(g, &ideal, seed, budget).unwrap_or(false));
        if nilpotent {
            sum = sum.sum(&ideal);
            found.insert(ideal);
        }
    }
    // Generators already inside the running sum were skipped above; record
    // the p-ideals they generate as well when sweeping exhaustively, so
    // minimal ideals are visible to callers.
    if exhaustive {
        for x in sum.elements() {
            let x = Element::new(x);
            if x.is_zero() {
                continue;
            }
            let ideal = g.closure(std::slice::from_ref(&x), ClosureMode::PIdeal).into_space();
            found.insert(ideal);
        }
    }

    let plain_ideal_variant = if exhaustive { plain_variant(g, &sum) } else { None };
    Radical {
        ideal: g.certify(sum),
        exactness: if exhaustive { Exactness::Exact } else { Exactness::LowerBound },
        plain_ideal_variant,
        generated: found.into_iter().collect(),
    }
}

/// Sum of the (not necessarily p-closed) ideals generated by single
/// elements whose every element is p-nilpotent, by enumeration.
fn plain_variant<F: PrimeField>(g: &RestrictedLieAlgebra<F>, radical: &Subspace<F>) -> Option<Subalgebra<F>> {
    let full = Subspace::full(g.dim());
    let mut sum = Subspace::zero(g.dim());
    let mut checked: HashMap<Subspace<F>, bool> = HashMap::new();
    for x in full.elements() {
        if sum.contains(&x) {
            continue;
        }
        let x = Element::new(x);
        if !is_p_nilpotent_element(g, &x) {
            continue;
        }
        let ideal = g.closure(std::slice::from_ref(&x), ClosureMode::Ideal).into_space();
        let ok = *checked
            .entry(ideal.clone())
            .or_insert_with(|| ideal.elements().all(|y| is_p_nilpotent_element(g, &Element::new(y))));
        if ok {
            sum = sum.sum(&ideal);
        }
    }
    (sum != *radical).then(|| g.certify(sum))
}

/// A p-ideal of least positive dimension among the single-generator
/// p-ideals inside the radical; `None` iff the radical is zero.
pub fn minimal_p_nilpotent_ideal<F: PrimeField>(
    g: &RestrictedLieAlgebra<F>,
    seed: u64,
    budget: u64,
) -> Result<Option<Subalgebra<F>>, SsError> {
    let radical = p_nilpotent_radical(g, seed, budget);
    if radical.exactness != Exactness::Exact {
        return Err(SsError::NotExact);
    }
    let best = radical
        .generated
        .iter()
        .filter(|s| !s.is_zero())
        .min_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
    Ok(best.map(|s| g.certify(s.clone())))
}
