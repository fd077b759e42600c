//! Brute-force oracles shared by the integration tests. Everything here
//! works by enumerating elements or subspaces and uses only the bracket and
//! p-map tables of the algebra under test.

#![allow(dead_code)]

use std::collections::HashMap;

use retla::algebra::RestrictedLieAlgebra;
use retla::{Element, PrimeField, Subspace};

/// Every vector of F^n, first coordinate most significant.
pub fn all_vectors<F: PrimeField>(n: usize) -> Vec<Vec<F>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<F>| {
                F::elements().map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// Position of `v` in [`all_vectors`].
pub fn index_of<F: PrimeField>(v: &[F]) -> usize {
    v.iter().fold(0, |acc, c| acc * F::P as usize + c.residue() as usize)
}

pub fn sub<F: PrimeField>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| *x - *y).collect()
}

/// The p-map as a function on the finite set g, with the two orbit
/// properties read off it: x is semisimple iff x^[p^m] = x for some m >= 1,
/// and p-nilpotent iff x^[p^m] = 0 for some m.
pub struct PMapGraph<F> {
    pub elements: Vec<Vec<F>>,
    pub next: Vec<usize>,
    pub semisimple: Vec<bool>,
    pub nilpotent: Vec<bool>,
}

impl<F: PrimeField> PMapGraph<F> {
    pub fn new(g: &RestrictedLieAlgebra<F>) -> Self {
        let elements = all_vectors::<F>(g.dim());
        let next: Vec<usize> =
            elements.iter().map(|v| index_of(g.p_power(&Element::new(v.clone())).coords())).collect();
        let n = elements.len();
        // 0 unseen, 1 on the current path, 2 finished
        let mut state = vec![0u8; n];
        let mut semisimple = vec![false; n];
        for start in 0..n {
            let mut path = Vec::new();
            let mut i = start;
            while state[i] == 0 {
                state[i] = 1;
                path.push(i);
                i = next[i];
            }
            if state[i] == 1 {
                let from = path.iter().position(|&j| j == i).unwrap();
                for &j in &path[from..] {
                    semisimple[j] = true;
                }
            }
            for j in path {
                state[j] = 2;
            }
        }
        let mut nilpotent = vec![false; n];
        for (start, nil) in nilpotent.iter_mut().enumerate() {
            let mut i = start;
            for _ in 0..=n {
                if i == 0 {
                    *nil = true;
                    break;
                }
                i = next[i];
            }
        }
        PMapGraph { elements, next, semisimple, nilpotent }
    }

    pub fn is_semisimple(&self, v: &[F]) -> bool {
        self.semisimple[index_of(v)]
    }

    pub fn is_p_nilpotent(&self, v: &[F]) -> bool {
        self.nilpotent[index_of(v)]
    }

    pub fn semisimple_elements(&self) -> impl Iterator<Item = &Vec<F>> + '_ {
        self.elements.iter().zip(&self.semisimple).filter(|(_, s)| **s).map(|(v, _)| v)
    }
}

/// For each element x, every s with s semisimple, x - s p-nilpotent and
/// [s, x - s] = 0.
pub fn brute_jordan<F: PrimeField>(g: &RestrictedLieAlgebra<F>, graph: &PMapGraph<F>) -> Vec<Vec<Vec<F>>> {
    let ss: Vec<&Vec<F>> = graph.semisimple_elements().collect();
    graph
        .elements
        .iter()
        .map(|x| {
            ss.iter()
                .filter(|s| {
                    let n = sub(x, s);
                    graph.is_p_nilpotent(&n)
                        && g.bracket(&Element::new(s.to_vec()), &Element::new(n)).is_zero()
                })
                .map(|s| (*s).clone())
                .collect()
        })
        .collect()
}

/// Number of subspaces of F_p^n.
pub fn subspace_count(n: usize, p: u64) -> u64 {
    // g[k] = Gaussian binomial (m choose k)_p, built row by row
    let mut g = vec![1u64];
    for m in 1..=n {
        let mut next = vec![1u64; m + 1];
        for k in 1..m {
            next[k] = g[k - 1].saturating_add(p.saturating_pow(k as u32).saturating_mul(g[k]));
        }
        g = next;
    }
    g.iter().fold(0u64, |a, b| a.saturating_add(*b))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Every subspace of F^n, one per reduced echelon form.
pub fn all_subspaces<F: PrimeField>(n: usize) -> Vec<Subspace<F>> {
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let pivots = &pivots;
                    (pivots[r] + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
                })
                .collect();
            for fill in all_vectors::<F>(free.len()) {
                let mut rows = vec![vec![F::zero(); n]; k];
                for (r, &c) in pivots.iter().enumerate() {
                    rows[r][c] = F::one();
                }
                for (&(r, c), v) in free.iter().zip(fill) {
                    rows[r][c] = v;
                }
                out.push(Subspace::span(n, &rows));
            }
        }
    }
    out
}

pub fn elements_of<F: PrimeField>(s: &Subspace<F>) -> Vec<Vec<F>> {
    let basis: Vec<Vec<F>> = s.basis_vectors().map(<[F]>::to_vec).collect();
    all_vectors::<F>(basis.len())
        .into_iter()
        .map(|coeffs| {
            let mut v = vec![F::zero(); s.ambient_dim()];
            for (c, b) in coeffs.iter().zip(&basis) {
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi += *c * *bi;
                }
            }
            v
        })
        .collect()
}

fn basis_elements<F: PrimeField>(s: &Subspace<F>) -> Vec<Element<F>> {
    s.basis_vectors().map(|v| Element::new(v.to_vec())).collect()
}

pub fn is_bracket_closed<F: PrimeField>(g: &RestrictedLieAlgebra<F>, s: &Subspace<F>) -> bool {
    let b = basis_elements(s);
    b.iter().enumerate().all(|(i, x)| b[i + 1..].iter().all(|y| s.contains(g.bracket(x, y).coords())))
}

/// Abelian, p-closed, and every element semisimple.
pub fn is_toral<F: PrimeField>(g: &RestrictedLieAlgebra<F>, graph: &PMapGraph<F>, t: &Subspace<F>) -> bool {
    let b = basis_elements(t);
    let abelian = b.iter().all(|x| b.iter().all(|y| g.bracket(x, y).is_zero()));
    abelian
        && elements_of(t).iter().all(|v| t.contains(g.p_power(&Element::new(v.clone())).coords()) && graph.is_semisimple(v))
}

/// Engel: every ad x restricted to c is nilpotent.
pub fn is_nilpotent<F: PrimeField>(g: &RestrictedLieAlgebra<F>, c: &Subspace<F>) -> bool {
    let b = basis_elements(c);
    elements_of(c).into_iter().all(|x| {
        let x = Element::new(x);
        b.iter().all(|y| {
            let mut z = y.clone();
            for _ in 0..b.len() {
                z = g.bracket(&x, &z);
            }
            z.is_zero()
        })
    })
}

/// Number of y in g with [y, c] contained in c.
pub fn normalizer_size<F: PrimeField>(g: &RestrictedLieAlgebra<F>, c: &Subspace<F>) -> usize {
    let b = basis_elements(c);
    all_vectors::<F>(g.dim())
        .into_iter()
        .filter(|y| {
            let y = Element::new(y.clone());
            b.iter().all(|x| c.contains(g.bracket(&y, x).coords()))
        })
        .count()
}

pub fn is_cartan<F: PrimeField>(g: &RestrictedLieAlgebra<F>, c: &Subspace<F>) -> bool {
    is_bracket_closed(g, c)
        && is_nilpotent(g, c)
        && normalizer_size(g, c) as u64 == (F::P as u64).pow(c.dim() as u32)
}

/// Toral subspaces and Cartan subalgebras of g by exhausting all subspaces.
pub struct SubspaceCensus<F> {
    pub torals: Vec<Subspace<F>>,
    pub maximal_torals: Vec<Subspace<F>>,
    pub cartans: Vec<Subspace<F>>,
}

pub fn census<F: PrimeField>(g: &RestrictedLieAlgebra<F>, graph: &PMapGraph<F>, with_cartans: bool) -> SubspaceCensus<F> {
    let all = all_subspaces::<F>(g.dim());
    let mut torals: Vec<Subspace<F>> = all.iter().filter(|t| is_toral(g, graph, t)).cloned().collect();
    torals.sort();
    let maximal_torals = torals
        .iter()
        .filter(|t| !torals.iter().any(|u| u != *t && t.is_subspace_of(u)))
        .cloned()
        .collect();
    let mut cartans: Vec<Subspace<F>> =
        if with_cartans { all.into_iter().filter(|c| is_cartan(g, c)).collect() } else { Vec::new() };
    cartans.sort();
    SubspaceCensus { torals, maximal_torals, cartans }
}

/// Residue form of a subspace basis, for keying subspaces across fields.
pub fn residues<F: PrimeField>(s: &Subspace<F>) -> Vec<Vec<u32>> {
    s.basis_vectors().map(|v| v.iter().map(|c| c.residue()).collect()).collect()
}

pub fn from_residues<F: PrimeField>(n: usize, rows: &[Vec<u32>]) -> Subspace<F> {
    let rows: Vec<Vec<F>> = rows.iter().map(|r| r.iter().map(|&c| F::from_u64(c as u64)).collect()).collect();
    Subspace::span(n, &rows)
}

/// Groups items by a key, keeping first-seen order of keys.
pub fn group_by<K: std::hash::Hash + Eq + Clone, V>(items: impl IntoIterator<Item = (K, V)>) -> Vec<(K, Vec<V>)> {
    let mut order = Vec::new();
    let mut map: HashMap<K, Vec<V>> = HashMap::new();
    for (k, v) in items {
        if !map.contains_key(&k) {
            order.push(k.clone());
        }
        map.entry(k).or_default().push(v);
    }
    order.into_iter().map(|k| {
        let v = map.remove(&k).unwrap();
        (k, v)
    }).collect()
}
