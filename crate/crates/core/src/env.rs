//! The restricted enveloping algebra `u(g)`.
//!
//! Elements are dense coordinate vectors on the PBW basis
//! `b_1^{e_1} ... b_n^{e_n}`, `0 <= e_i < p`, indexed by `Σ e_i p^(i-1)`.
//! Right multiplication of every monomial by every generator is computed
//! once by straightening:
//!
//! * `m · b_j = (m' · b_j) · b_k + m' · [b_k, b_j]` when `m = m' · b_k`, `k > j`;
//! * `b_j^p = b_j^[p]`.

use std::collections::{BTreeMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Element, RestrictedLieAlgebra};
use crate::field::PrimeField;
use crate::linalg::{vector, Matrix, Subspace};

/// Default cap on `dim u(g) = p^n`.
pub const DEFAULT_U_BUDGET: u64 = 1 << 15;

/// Largest `dim u(g)` for which powers of the augmentation ideal are
/// computed densely.
pub const DENSE_LIMIT: usize = 729;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnvError {
    #[error("u(g) has dimension {needed}, over the budget {budget}")]
    Budget { needed: u64, budget: u64 },
}

type Sparse<F> = Vec<(u32, F)>;

/// `u(g)` with its straightening table.
#[derive(Clone, Debug)]
pub struct UAlgebra<F> {
    g: RestrictedLieAlgebra<F>,
    p: usize,
    n: usize,
    dim: usize,
    radix: Vec<usize>,
    /// `table[m * n + j]` is `m · b_j`.
    table: Vec<Sparse<F>>,
}

/// Builds `u(g)`; fails when `p^n` exceeds `budget`.
pub fn u_of<F: PrimeField>(g: &RestrictedLieAlgebra<F>, budget: u64) -> Result<UAlgebra<F>, EnvError> {
    let n = g.dim();
    let needed = (F::P as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if needed > budget {
        return Err(EnvError::Budget { needed, budget });
    }
    let p = F::P as usize;
    let dim = needed as usize;
    let radix: Vec<usize> = (0..n).map(|i| p.pow(i as u32)).collect();
    let mut builder = Builder { g, p, n, radix: &radix, memo: vec![None; dim * n] };
    for m in 0..dim {
        for j in 0..n {
            builder.times(m, j);
        }
    }
    let table = builder.memo.into_iter().map(|e| e.expect("filled")).collect();
    Ok(UAlgebra { g: g.clone(), p, n, dim, radix, table })
}

struct Builder<'a, F> {
    g: &'a RestrictedLieAlgebra<F>,
    p: usize,
    n: usize,
    radix: &'a [usize],
    memo: Vec<Option<Sparse<F>>>,
}

impl<F: PrimeField> Builder<'_, F> {
    fn exponent(&self, m: usize, i: usize) -> usize {
        (m / self.radix[i]) % self.p
    }

    fn top(&self, m: usize) -> Option<usize> {
        (0..self.n).rev().find(|&i| self.exponent(m, i) > 0)
    }

    /// `m · b_j`. Recursion is on the degree of the product.
    fn times(&mut self, m: usize, j: usize) -> Sparse<F> {
        if let Some(r) = &self.memo[m * self.n + j] {
            return r.clone();
        }
        let mut acc = BTreeMap::new();
        match self.top(m) {
            Some(k) if k > j => {
                let rest = m - self.radix[k];
                for (t, c) in self.times(rest, j) {
                    for (s, d) in self.times(t as usize, k) {
                        add(&mut acc, s, c * d);
                    }
                }
                let bracket = self.g.basis_bracket(k, j).to_vec();
                for (i, c) in bracket.into_iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (s, d) in self.times(rest, i) {
                        add(&mut acc, s, c * d);
                    }
                }
            }
            Some(k) if k == j && self.exponent(m, j) + 1 == self.p => {
                let rest = m - (self.p - 1) * self.radix[j];
                let image = self.g.basis_p_image(j).to_vec();
                for (i, c) in image.into_iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (s, d) in self.times(rest, i) {
                        add(&mut acc, s, c * d);
                    }
                }
            }
            _ => add(&mut acc, (m + self.radix[j]) as u32, F::one()),
        }
        let r: Sparse<F> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        self.memo[m * self.n + j] = Some(r.clone());
        r
    }
}

fn add<F: PrimeField>(acc: &mut BTreeMap<u32, F>, k: u32, c: F) {
    *acc.entry(k).or_insert_with(F::zero) += c;
}

impl<F: PrimeField> UAlgebra<F> {
    pub fn lie_algebra(&self) -> &RestrictedLieAlgebra<F> {
        &self.g
    }

    /// `p^n`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u32 {
        F::P
    }

    pub fn exponents(&self, m: usize) -> Vec<usize> {
        (0..self.n).map(|i| (m / self.radix[i]) % self.p).collect()
    }

    pub fn monomial_index(&self, exponents: &[usize]) -> usize {
        assert_eq!(exponents.len(), self.n);
        exponents.iter().zip(&self.radix).map(|(&e, &r)| {
            assert!(e < self.p, "exponent {e} out of range");
            e * r
        }).sum()
    }

    /// Total degree of a monomial.
    pub fn degree(&self, m: usize) -> usize {
        self.exponents(m).iter().sum()
    }

    pub fn zero(&self) -> Vec<F> {
        vector::zeros(self.dim)
    }

    pub fn one(&self) -> Vec<F> {
        vector::unit(self.dim, 0)
    }

    pub fn monomial(&self, m: usize) -> Vec<F> {
        vector::unit(self.dim, m)
    }

    pub fn generator(&self, i: usize) -> Vec<F> {
        self.monomial(self.radix[i])
    }

    /// The image of `x ∈ g` in `u(g)`.
    pub fn embed(&self, x: &Element<F>) -> Vec<F> {
        let mut out = self.zero();
        for (i, &c) in x.coords().iter().enumerate() {
            out[self.radix[i]] = c;
        }
        out
    }

    /// The degree-one part read back as an element of `g`, if `u` lies in `g`.
    pub fn restrict_to_lie(&self, u: &[F]) -> Option<Element<F>> {
        let coords: Vec<F> = self.radix.iter().map(|&r| u[r]).collect();
        let back = self.embed(&Element::new(coords.clone()));
        (back == u).then(|| Element::new(coords))
    }

    /// Coefficient of the unit monomial.
    pub fn augmentation(&self, u: &[F]) -> F {
        u[0]
    }

    /// `m · b_j` as a sparse list of `(monomial, coefficient)`.
    pub fn monomial_times_generator(&self, m: usize, j: usize) -> &[(u32, F)] {
        &self.table[m * self.n + j]
    }

    pub fn mul_generator(&self, u: &[F], j: usize) -> Vec<F> {
        let mut out = self.zero();
        for (m, &c) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for &(t, d) in self.monomial_times_generator(m, j) {
                out[t as usize] += c * d;
            }
        }
        out
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = self.zero();
        for (m, &c) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mut r = a.to_vec();
            for (i, e) in self.exponents(m).into_iter().enumerate() {
                for _ in 0..e {
                    r = self.mul_generator(&r, i);
                }
            }
            vector::axpy(&mut out, c, &r);
        }
        out
    }

    pub fn pow(&self, a: &[F], mut e: u64) -> Vec<F> {
        let mut base = a.to_vec();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn commutator(&self, a: &[F], b: &[F]) -> Vec<F> {
        vector::sub(&self.mul(a, b), &self.mul(b, a))
    }
}

/// A monomial triple `(a, b, c)` with `(ab)c != a(bc)`, among `samples`
/// seeded random triples.
pub fn associativity_violation<F: PrimeField>(u: &UAlgebra<F>, samples: usize, seed: u64) -> Option<[usize; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).find_map(|_| {
        let t = [rng.gen_range(0..u.dim), rng.gen_range(0..u.dim), rng.gen_range(0..u.dim)];
        let [a, b, c] = t.map(|m| u.monomial(m));
        (u.mul(&u.mul(&a, &b), &c) != u.mul(&a, &u.mul(&b, &c))).then_some(t)
    })
}

/// Dimensions of `I, I^2, ...` for the augmentation ideal `I`, until the
/// power is zero or repeats. Uses `I^k = span{v · b_j : v ∈ I^(k-1)}`.
pub fn augmentation_power_dims<F: PrimeField>(u: &UAlgebra<F>) -> Vec<usize> {
    let mut power = Subspace::span(u.dim, (1..u.dim).map(|m| u.monomial(m)));
    let mut dims = vec![power.dim()];
    while !power.is_zero() {
        let next = Subspace::span(
            u.dim,
            power.basis_vectors().flat_map(|v| (0..u.n).map(move |j| u.mul_generator(v, j))).collect::<Vec<_>>(),
        );
        if next == power {
            break;
        }
        dims.push(next.dim());
        power = next;
    }
    dims
}

/// How locality (or its failure) was established.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Locality<F> {
    /// Powers of the augmentation ideal computed directly: `I^k = 0` at
    /// `k = dims.len()`, or they stabilised at a nonzero space.
    Dense { dims: Vec<usize> },
    /// A basis `c_i` of `g` with weights `w_i >= 1` such that straightening
    /// never lowers weight; then `I^(bound) = 0`.
    Filtration { basis: Vec<Vec<F>>, weights: Vec<usize>, bound: usize },
    /// `x ∈ g` whose associative p-power sequence in `u(g)` cycles without
    /// reaching zero, so `I` is not nil.
    Witness { element: Element<F> },
}

impl<F> Locality<F> {
    pub fn is_local(&self) -> bool {
        match self {
            Locality::Dense { dims } => dims.last() == Some(&0) || dims.is_empty(),
            Locality::Filtration { .. } => true,
            Locality::Witness { .. } => false,
        }
    }
}

/// Whether the augmentation ideal of `u` is nilpotent.
pub fn is_local<F: PrimeField>(u: &UAlgebra<F>) -> bool {
    locality(u).is_local()
}

/// Decides locality: dense ideal powers for small `u`, otherwise a weight
/// filtration certificate or a non-nilpotent witness, falling back to
/// dense powers if neither is found.
pub fn locality<F: PrimeField>(u: &UAlgebra<F>) -> Locality<F> {
    if u.dim <= DENSE_LIMIT {
        return Locality::Dense { dims: augmentation_power_dims(u) };
    }
    if let Some(cert) = filtration_certificate(u) {
        return cert;
    }
    if let Some(element) = non_nilpotent_witness(u) {
        return Locality::Witness { element };
    }
    Locality::Dense { dims: augmentation_power_dims(u) }
}

/// The associative p-power sequence of `x` in `u`: `None` if it reaches
/// zero, otherwise the first repeated term.
pub fn p_power_cycle<F: PrimeField>(u: &UAlgebra<F>, x: &Element<F>) -> Option<Vec<F>> {
    let mut seen = HashSet::new();
    let mut y = u.embed(x);
    while !vector::is_zero(&y) {
        if !seen.insert(y.clone()) {
            return Some(y);
        }
        y = u.pow(&y, F::P as u64);
    }
    None
}

fn non_nilpotent_witness<F: PrimeField>(u: &UAlgebra<F>) -> Option<Element<F>> {
    let n = u.n;
    let basis = (0..n).map(|i| Element::basis(n, i));
    let full = Subspace::<F>::full(n);
    let sweep = full.elements().map(Element::new);
    basis.chain(sweep).find(|x| p_power_cycle(u, x).is_some())
}

/// Restricted Zassenhaus filtration `D_1 = g`,
/// `D_k = [g, D_(k-1)] + span{b^[p] : b ∈ D_⌈k/p⌉}`, until zero or stalled.
fn zassenhaus<F: PrimeField>(g: &RestrictedLieAlgebra<F>) -> Option<Vec<Subspace<F>>> {
    let p = F::P as usize;
    let full = Subspace::full(g.dim());
    let mut d = vec![full.clone(), full];
    loop {
        let k = d.len();
        let prev = &d[k - 1];
        if prev.is_zero() {
            d.pop();
            return Some(d.split_off(1));
        }
        let src = &d[k.div_ceil(p)];
        let powers: Vec<Vec<F>> = src.basis_vectors().map(|b| g.p_power(&Element::new(b.to_vec())).into_coords()).collect();
        let next = g.bracket_spaces(&Subspace::full(g.dim()), prev).add_vectors(powers);
        if next == *src {
            return None;
        }
        d.push(next);
    }
}

fn filtration_certificate<F: PrimeField>(u: &UAlgebra<F>) -> Option<Locality<F>> {
    let g = &u.g;
    let levels = zassenhaus(g)?;
    let n = g.dim();
    let mut span = Subspace::zero(n);
    let mut basis = Vec::new();
    let mut weights = Vec::new();
    for (w, level) in levels.iter().enumerate().rev() {
        for v in level.basis_vectors() {
            if !span.contains(v) {
                span = span.add_vectors([v]);
                basis.push(v.to_vec());
                weights.push(w + 1);
            }
        }
    }
    let labels = (0..n).map(|i| format!("c{i}")).collect();
    let adapted = g.rebase(&basis, labels).ok()?;
    let v = u_of(&adapted, u.dim as u64).ok()?;
    let weight = |m: usize| -> usize { v.exponents(m).iter().zip(&weights).map(|(e, w)| e * w).sum() };
    for m in 0..v.dim {
        let wm = weight(m);
        for (j, wj) in weights.iter().enumerate().take(n) {
            if v.monomial_times_generator(m, j).iter().any(|&(t, _)| weight(t as usize) < wm + wj) {
                return None;
            }
        }
    }
    let bound = weights.iter().map(|w| w * (u.p - 1)).sum::<usize>() + 1;
    Some(Locality::Filtration { basis, weights, bound })
}

/// Commutativity of `u(g)` and, when commutative, bijectivity of `u -> u^p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeparabilityReport {
    pub commutative: bool,
    /// `None` when `u(g)` is not commutative.
    pub frobenius_bijective: Option<bool>,
}

/// Checks generator pairs for commutativity. In the commutative case the
/// p-th power map is a ring endomorphism fixing F_p; for small `u` its
/// matrix on the monomial basis is built and its rank taken, otherwise its
/// image, the subalgebra generated by the `b_i^p`, is measured.
pub fn commutative_separable_check<F: PrimeField>(u: &UAlgebra<F>) -> SeparabilityReport {
    let n = u.n;
    let gens: Vec<Vec<F>> = (0..n).map(|i| u.generator(i)).collect();
    let commutative = (0..n).all(|i| (i + 1..n).all(|j| vector::is_zero(&u.commutator(&gens[i], &gens[j]))));
    if !commutative {
        return SeparabilityReport { commutative, frobenius_bijective: None };
    }
    let images: Vec<Vec<F>> = gens.iter().map(|b| u.pow(b, F::P as u64)).collect();
    let bijective = if u.dim <= DENSE_LIMIT {
        frobenius_matrix(u, &images).rank() == u.dim
    } else {
        generated_subalgebra_dim(u, &images) == u.dim
    };
    SeparabilityReport { commutative, frobenius_bijective: Some(bijective) }
}

/// Columns are the p-th powers of the monomials, `Π (b_i^p)^(e_i)`.
fn frobenius_matrix<F: PrimeField>(u: &UAlgebra<F>, images: &[Vec<F>]) -> Matrix<F> {
    let mut columns = Vec::with_capacity(u.dim);
    for m in 0..u.dim {
        let mut r = u.one();
        for (i, e) in u.exponents(m).into_iter().enumerate() {
            for _ in 0..e {
                r = u.mul(&r, &images[i]);
            }
        }
        columns.push(r);
    }
    Matrix::from_columns(u.dim, &columns)
}

fn generated_subalgebra_dim<F: PrimeField>(u: &UAlgebra<F>, gens: &[Vec<F>]) -> usize {
    let mut s = Subspace::span(u.dim, [u.one()]);
    loop {
        let products: Vec<Vec<F>> =
            s.basis_vectors().flat_map(|v| gens.iter().map(move |y| u.mul(v, y))).collect();
        let next = s.add_vectors(products);
        if next == s {
            return s.dim();
        }
        s = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{ex44, heisenberg_zero_pmap, nil_k, sl2, toral_k};
    use crate::{F2, F3, F5};

    #[test]
    fn one_dim_toral_relation() {
        let g = toral_k::<F5>(1);
        let u = u_of(&g, DEFAULT_U_BUDGET).unwrap();
        assert_eq!(u.dim(), 5);
        let t = u.generator(0);
        assert_eq!(u.pow(&t, 5), t);
        assert!(!is_local(&u));
        assert_eq!(
            commutative_separable_check(&u),
            SeparabilityReport { commutative: true, frobenius_bijective: Some(true) }
        );
    }

    #[test]
    fn one_dim_nil_relation() {
        let g = nil_k::<F3>(1);
        let u = u_of(&g, DEFAULT_U_BUDGET).unwrap();
        assert!(vector::is_zero(&u.pow(&u.generator(0), 3)));
        assert!(is_local(&u));
        assert_eq!(
            commutative_separable_check(&u),
            SeparabilityReport { commutative: true, frobenius_bijective: Some(false) }
        );
    }

    #[test]
    fn ex44_commutator_is_x() {
        let g = ex44::<F2>();
        let u = u_of(&g, 100).unwrap();
        assert_eq!(u.dim(), 4);
        let (x, t) = (u.generator(0), u.generator(1));
        assert_eq!(u.commutator(&t, &x), x);
        assert!(!commutative_separable_check(&u).commutative);
        assert_eq!(commutative_separable_check(&u).frobenius_bijective, None);
    }

    #[test]
    fn zero_algebra_is_local() {
        let g = RestrictedLieAlgebra::<F3>::zero("0");
        let u = u_of(&g, 1).unwrap();
        assert_eq!(u.dim(), 1);
        assert!(is_local(&u));
    }

    #[test]
    fn straightening_is_associative_and_reproduces_bracket() {
        let g = sl2::<F5>();
        let u = u_of(&g, DEFAULT_U_BUDGET).unwrap();
        assert_eq!(associativity_violation(&u, 300, 1), None);
        for i in 0..3 {
            for j in 0..3 {
                let lhs = u.commutator(&u.generator(i), &u.generator(j));
                assert_eq!(lhs, u.embed(&g.bracket(&g.basis_element(i), &g.basis_element(j))));
            }
            assert_eq!(u.pow(&u.generator(i), 5), u.embed(&g.p_power(&g.basis_element(i))));
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(u_of(&sl2::<F5>(), 100).unwrap_err(), EnvError::Budget { needed: 125, budget: 100 });
    }

    #[test]
    fn certificate_and_witness_agree_with_dense() {
        let h = heisenberg_zero_pmap::<F3>();
        let u = u_of(&h, 1000).unwrap();
        assert!(matches!(filtration_certificate(&u), Some(Locality::Filtration { .. })));
        assert!(non_nilpotent_witness(&u).is_none());
        assert!(is_local(&u));

        let s = sl2::<F3>();
        let u = u_of(&s, 1000).unwrap();
        assert!(filtration_certificate(&u).is_none());
        assert!(non_nilpotent_witness(&u).is_some());
        assert!(!is_local(&u));
    }

    #[test]
    fn frobenius_paths_agree() {
        for g in [toral_k::<F3>(2), nil_k::<F3>(2)] {
            let u = u_of(&g, 1000).unwrap();
            let images: Vec<Vec<F3>> = (0..2).map(|i| u.pow(&u.generator(i), 3)).collect();
            let full = frobenius_matrix(&u, &images).rank() == u.dim();
            assert_eq!(full, generated_subalgebra_dim(&u, &images) == u.dim());
        }
    }
}
