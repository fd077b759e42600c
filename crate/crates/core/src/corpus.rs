//! Named algebras used as examples and regression fixtures.
//!
//! Every constructor is generic over the field; [`make_named`] picks the
//! field at runtime.

use thiserror::Error;

use crate::algebra::{matrix_model, semidirect, BracketEntry, MatrixAlgebra, RestrictedLieAlgebra};
use crate::dispatch::AnyAlgebra;
use crate::field::{is_supported_prime, PrimeField};
use crate::linalg::{vector, Matrix};
use crate::{F2, F3, F5, F7};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unknown algebra name `{0}`")]
    UnknownName(String),
    #[error("`{name}` is not defined for p = {p}")]
    InadmissiblePrime { name: String, p: u32 },
}

fn e<F: PrimeField>(n: usize, i: usize, j: usize) -> Matrix<F> {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = F::one();
    m
}

fn model<F: PrimeField>(name: &str, labels: &[&str], basis: Vec<Matrix<F>>) -> MatrixAlgebra<F> {
    matrix_model(name, labels, basis).expect("corpus matrix models are closed and valid")
}

/// `x = E12`, `t = E11` in gl_2: `[t, x] = x`, `t^[p] = t`, `x^[p] = 0`.
/// Basis order `(x, t)`.
pub fn ex44_model<F: PrimeField>() -> MatrixAlgebra<F> {
    model("ex44", &["x", "t"], vec![e(2, 0, 1), e(2, 0, 0)])
}

pub fn ex44<F: PrimeField>() -> RestrictedLieAlgebra<F> {
    ex44_model().algebra
}

/// `e = E12`, `h = diag(1, -1)`, `f = E21`.
pub fn sl2_model<F: PrimeField>() -> MatrixAlgebra<F> {
    let h = e(2, 0, 0).sub(&e(2, 1, 1));
    model("sl2", &["e", "h", "f"], vec![e(2, 0, 1), h, e(2, 1, 0)])
}

pub fn sl2<F: PrimeField>() -> RestrictedLieAlgebra<F> {
    sl2_model().algebra
}

/// All of gl_n with the matrix units `Eij` (1-based labels) in row-major order.
pub fn gl_n<F: PrimeField>(n: usize) -> MatrixAlgebra<F> {
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("E{}{}", i + 1, j + 1));
            basis.push(e(n, i, j));
        }
    }
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    model(&format!("gl{n}"), &refs, basis)
}

/// Upper triangular part of sl_2, basis `(h, e)`.
pub fn borel_sl2<F: PrimeField>() -> RestrictedLieAlgebra<F> {
    let h = e(2, 0, 0).sub(&e(2, 1, 1));
    model("borel_sl2", &["h", "e"], vec![h, e(2, 0, 1)]).algebra
}

/// `[x, y] = z` with `z^[p] = z` and `x^[p] = y^[p] = 0`: nilpotent but with a
/// central torus.
pub fn heisenberg<F: PrimeField>() -> RestrictedLieAlgebra<F> {
    let labels = ["x", "y", "z"].map(String::from).to_vec();
    let pmap = vec![vector::zeros(3), vector::zeros(3), vector::unit(3, 2)];
    RestrictedLieAlgebra::new("heisenberg", labels, &[BracketEntry::new(0, 1, 2, 1)], pmap)
        .expect("heisenberg is valid")
}

/// Strictly upper triangular 3x3 matrices: `x = E12`, `y = E23`, `z = E13`.
pub fn heisenberg_zero_pmap<F: PrimeField>() -> RestrictedLieAlgebra<F> {
    model("heisenberg_zero_pmap", &["x", "y", "z"], vec![e(3, 0, 1), e(3, 1, 2), e(3, 0, 2)]).algebra
}

/// `W(1;1)`: derivations `e_i = X^{i+1} d/dX` of `k[X]/(X^p)`, `-1 <= i <= p-2`.
/// Requires `p >= 5`.
pub fn witt<F: PrimeField>() -> Result<RestrictedLieAlgebra<F>, CorpusError> {
    let p = F::P as usize;
    if p < 5 {
        return Err(CorpusError::InadmissiblePrime { name: "witt".into(), p: F::P });
    }
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    for i in -1..=(p as i64 - 2) {
        labels.push(format!("e{i}"));
        // X^m -> m X^{m+i}
        basis.push(Matrix::from_fn(p, p, |r, c| {
            if r as i64 == c as i64 + i {
                F::from_u64(c as u64)
            } else {
                F::zero()
            }
        }));
    }
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    Ok(model("witt", &refs, basis).algebra)
}

/// Abelian, `t_i^[p] = t_i`.
pub fn toral_k<F: PrimeField>(k: usize) -> RestrictedLieAlgebra<F> {
    let labels = (1..=k).map(|i| format!("t{i}")).collect();
    let pmap = (0..k).map(|i| vector::unit(k, i)).collect();
    RestrictedLieAlgebra::new(format!("toral_{k}"), labels, &[], pmap).expect("abelian")
}

/// Abelian, `n_i^[p] = n_{i+1}` and `n_k^[p] = 0`.
pub fn nil_k<F: PrimeField>(k: usize) -> RestrictedLieAlgebra<F> {
    let labels = (1..=k).map(|i| format!("n{i}")).collect();
    let pmap = (0..k).map(|i| if i + 1 < k { vector::unit(k, i + 1) } else { vector::zeros(k) }).collect();
    RestrictedLieAlgebra::new(format!("nil_{k}"), labels, &[], pmap).expect("abelian")
}

/// `v ⋊ kt` with `v` abelian and p-nilpotent and `t` toral acting on `v_i`
/// with weight `w_i`. Basis `(v1, ..., vm, t)`.
pub fn vt_weights<F: PrimeField>(weights: &[i64]) -> RestrictedLieAlgebra<F> {
    let m = weights.len();
    let t = RestrictedLieAlgebra::new("t", vec!["t".into()], &[], vec![vec![F::one()]]).expect("toral");
    let v_labels = (1..=m).map(|i| format!("v{i}")).collect();
    let v = RestrictedLieAlgebra::new("v", v_labels, &[], vec![vector::zeros(m); m]).expect("abelian");
    let mut d = Matrix::zeros(m, m);
    for (i, &w) in weights.iter().enumerate() {
        d[(i, i)] = F::from_i64(w);
    }
    let ws: Vec<String> = weights.iter().map(i64::to_string).collect();
    semidirect(format!("vt_weights({})", ws.join(",")), &t, &v, &[d]).expect("diagonal action by a torus is restricted")
}

/// Name grammar accepted by [`make_named`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Named {
    Ex44,
    Sl2,
    Gl(usize),
    BorelSl2,
    Heisenberg,
    HeisenbergZeroPmap,
    Witt,
    Toral(usize),
    Nil(usize),
    VtWeights(Vec<i64>),
}

impl Named {
    pub fn parse(name: &str) -> Result<Self, CorpusError> {
        let unknown = || CorpusError::UnknownName(name.to_string());
        let count = |s: &str| s.parse::<usize>().ok().filter(|&k| (1..=16).contains(&k)).ok_or_else(unknown);
        Ok(match name {
            "ex44" => Named::Ex44,
            "sl2" => Named::Sl2,
            "gl2" => Named::Gl(2),
            "gl3" => Named::Gl(3),
            "borel_sl2" => Named::BorelSl2,
            "heisenberg" => Named::Heisenberg,
            "heisenberg_zero_pmap" => Named::HeisenbergZeroPmap,
            "witt" => Named::Witt,
            _ => {
                if let Some(k) = name.strip_prefix("toral_") {
                    Named::Toral(count(k)?)
                } else if let Some(k) = name.strip_prefix("nil_") {
                    Named::Nil(count(k)?)
                } else if let Some(rest) = name.strip_prefix("vt_weights(").and_then(|r| r.strip_suffix(')')) {
                    let ws: Result<Vec<i64>, _> = rest.split(',').map(|w| w.trim().parse::<i64>()).collect();
                    let ws = ws.map_err(|_| unknown())?;
                    if ws.is_empty() || ws.len() > 8 {
                        return Err(unknown());
                    }
                    Named::VtWeights(ws)
                } else {
                    return Err(unknown());
                }
            }
        })
    }

    /// The prime used when none is given.
    pub fn default_prime(&self) -> u32 {
        match self {
            Named::Sl2 | Named::Witt => 5,
            _ => 2,
        }
    }

    pub fn build<F: PrimeField>(&self) -> Result<RestrictedLieAlgebra<F>, CorpusError> {
        Ok(match self {
            Named::Ex44 => ex44(),
            Named::Sl2 => sl2(),
            Named::Gl(n) => gl_n(*n).algebra,
            Named::BorelSl2 => borel_sl2(),
            Named::Heisenberg => heisenberg(),
            Named::HeisenbergZeroPmap => heisenberg_zero_pmap(),
            Named::Witt => witt()?,
            Named::Toral(k) => toral_k(*k),
            Named::Nil(k) => nil_k(*k),
            Named::VtWeights(ws) => vt_weights(ws),
        })
    }
}

/// Builds a named algebra over F_p. `p = None` uses the entry's default prime.
pub fn make_named(name: &str, p: Option<u32>) -> Result<AnyAlgebra, CorpusError> {
    let named = Named::parse(name)?;
    let p = p.unwrap_or_else(|| named.default_prime());
    let any = match p {
        2 => AnyAlgebra::F2(named.build::<F2>()?),
        3 => AnyAlgebra::F3(named.build::<F3>()?),
        5 => AnyAlgebra::F5(named.build::<F5>()?),
        7 => AnyAlgebra::F7(named.build::<F7>()?),
        _ => {
            debug_assert!(!is_supported_prime(p));
            return Err(CorpusError::InadmissiblePrime { name: name.to_string(), p });
        }
    };
    Ok(any.renamed(name))
}

/// Facts recorded for regression. They are recomputed, never trusted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedFacts {
    pub nilpotent: bool,
    pub radical_dim: usize,
    /// Number of maximal toral subalgebras, when known exactly.
    pub maximal_torals: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub p: u32,
    pub expected: ExpectedFacts,
}

impl CorpusEntry {
    pub fn build(&self) -> AnyAlgebra {
        make_named(self.name, Some(self.p)).expect("corpus entries are admissible")
    }

    /// Display name including the prime, e.g. `sl2(5)`.
    pub fn label(&self) -> String {
        format!("{}@{}", self.name, self.p)
    }
}

const fn entry(name: &'static str, p: u32, nilpotent: bool, radical_dim: usize, maximal_torals: Option<usize>) -> CorpusEntry {
    CorpusEntry { name, p, expected: ExpectedFacts { nilpotent, radical_dim, maximal_torals } }
}

/// The default corpus.
pub fn corpus() -> Vec<CorpusEntry> {
    vec![
        entry("ex44", 2, false, 1, Some(2)),
        entry("sl2", 5, false, 0, Some(25)),
        entry("gl2", 3, false, 0, Some(9)),
        entry("gl3", 2, false, 0, Some(64)),
        entry("borel_sl2", 3, false, 1, Some(3)),
        entry("heisenberg", 3, true, 0, Some(1)),
        entry("heisenberg_zero_pmap", 3, true, 3, Some(1)),
        entry("witt", 5, false, 0, None),
        entry("toral_2", 3, true, 0, Some(1)),
        entry("nil_3", 2, true, 3, Some(1)),
        entry("vt_weights(1,2)", 5, false, 2, Some(25)),
    ]
}
