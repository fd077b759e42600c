use std::fmt;

use serde::Serialize;

use crate::field::PrimeField;
use crate::linalg::vector;

use super::RestrictedLieAlgebra;

/// A single failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "axiom", rename_all = "snake_case")]
pub enum Violation {
    /// `[b_i, b_j] != -[b_j, b_i]` or `[b_i, b_i] != 0`.
    Antisymmetry { i: usize, j: usize },
    /// Jacobi identity fails on `(b_i, b_j, b_k)`.
    Jacobi { i: usize, j: usize, k: usize },
    /// `ad(b_i^[p]) != (ad b_i)^p`.
    Restrictedness { i: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Antisymmetry { i, j } => write!(f, "antisymmetry fails on (b{i}, b{j})"),
            Violation::Jacobi { i, j, k } => write!(f, "Jacobi identity fails on (b{i}, b{j}, b{k})"),
            Violation::Restrictedness { i } => write!(f, "ad(b{i}^[p]) != (ad b{i})^p"),
        }
    }
}

/// Every violated axiom instance; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(ToString::to_string).collect();
        write!(f, "{} violation(s): {}", parts.len(), parts.join("; "))
    }
}

/// Checks antisymmetry, Jacobi on basis triples `i < j < k`, and
/// `ad(b_i^[p]) = (ad b_i)^p` for every basis vector.
///
/// Jacobi on distinct basis triples suffices by trilinearity once
/// antisymmetry holds.
pub fn validate<F: PrimeField>(g: &RestrictedLieAlgebra<F>) -> ValidationReport {
    let n = g.dim();
    let mut violations = Vec::new();

    for i in 0..n {
        if !vector::is_zero(g.basis_bracket(i, i)) {
            violations.push(Violation::Antisymmetry { i, j: i });
        }
        for j in i + 1..n {
            let sum = vector::add(g.basis_bracket(i, j), g.basis_bracket(j, i));
            if !vector::is_zero(&sum) {
                violations.push(Violation::Antisymmetry { i, j });
            }
        }
    }

    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (bi, bj, bk) = (g.basis_element(i), g.basis_element(j), g.basis_element(k));
                let t1 = g.bracket(&bi, &g.bracket(&bj, &bk));
                let t2 = g.bracket(&bj, &g.bracket(&bk, &bi));
                let t3 = g.bracket(&bk, &g.bracket(&bi, &bj));
                if !(&(&t1 + &t2) + &t3).is_zero() {
                    violations.push(Violation::Jacobi { i, j, k });
                }
            }
        }
    }

    for i in 0..n {
        let lhs = g.ad_vec(g.basis_p_image(i));
        let rhs = g.ad_basis(i).pow(F::P);
        if lhs != rhs {
            violations.push(Violation::Restrictedness { i });
        }
    }

    ValidationReport { violations }
}
