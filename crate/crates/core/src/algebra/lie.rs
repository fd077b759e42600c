use std::collections::HashSet;

use crate::field::PrimeField;
use crate::linalg::{vector, Matrix};

use super::validate::{validate, ValidationReport};
use super::{AlgebraError, Element};

/// One stored structure constant: `[b_i, b_j]` has coefficient `c` on `b_k`,
/// with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BracketEntry<F> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: F,
}

impl<F: PrimeField> BracketEntry<F> {
    pub fn new(i: usize, j: usize, k: usize, c: i64) -> Self {
        BracketEntry { i, j, k, c: F::from_i64(c) }
    }
}

/// A finite-dimensional restricted Lie algebra over F_p.
///
/// Holds the full bracket table (both orders), the p-map images of the
/// basis vectors, and the cached adjoint matrices of the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedLieAlgebra<F> {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<F>>,
    pmap: Vec<Vec<F>>,
    ad_basis: Vec<Matrix<F>>,
}

impl<F: PrimeField> RestrictedLieAlgebra<F> {
    /// Builds and validates an algebra from sparse structure constants.
    ///
    /// Brackets must be listed with `i < j`; pairs not listed bracket to
    /// zero. `pmap[i]` is the coordinate vector of `b_i^[p]`.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: &[BracketEntry<F>],
        pmap: Vec<Vec<F>>,
    ) -> Result<Self, AlgebraError> {
        let g = Self::new_unchecked(name, labels, brackets, pmap)?;
        g.ensure_valid()?;
        Ok(g)
    }

    /// Like [`Self::new`] but only checks the data layout, not the axioms.
    pub fn new_unchecked(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: &[BracketEntry<F>],
        pmap: Vec<Vec<F>>,
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        check_labels(&labels)?;
        if pmap.len() != n {
            return Err(AlgebraError::Shape(format!("pmap has {} entries for dimension {n}", pmap.len())));
        }
        if let Some(bad) = pmap.iter().find(|v| v.len() != n) {
            return Err(AlgebraError::Shape(format!("pmap vector of length {} for dimension {n}", bad.len())));
        }
        let mut table = vec![vector::zeros(n); n * n];
        let mut seen = HashSet::new();
        for e in brackets {
            if e.i >= n || e.j >= n || e.k >= n {
                return Err(AlgebraError::IndexOutOfRange { index: e.i.max(e.j).max(e.k), dim: n });
            }
            if e.i >= e.j {
                return Err(AlgebraError::BracketOrder { i: e.i, j: e.j });
            }
            if !seen.insert((e.i, e.j, e.k)) {
                return Err(AlgebraError::DuplicateBracket { i: e.i, j: e.j, k: e.k });
            }
            table[e.i * n + e.j][e.k] += e.c;
            table[e.j * n + e.i][e.k] -= e.c;
        }
        Ok(Self::from_table(name.into(), labels, table, pmap))
    }

    /// Builds from a full bracket table indexed `i * n + j`; no checks
    /// beyond shapes.
    pub(crate) fn from_table(name: String, labels: Vec<String>, table: Vec<Vec<F>>, pmap: Vec<Vec<F>>) -> Self {
        let n = labels.len();
        debug_assert_eq!(table.len(), n * n);
        let ad_basis = (0..n)
            .map(|i| Matrix::from_fn(n, n, |k, j| table[i * n + j][k]))
            .collect();
        RestrictedLieAlgebra { name, labels, table, pmap, ad_basis }
    }

    pub(crate) fn ensure_valid(&self) -> Result<(), AlgebraError> {
        let report = validate(self);
        if report.is_valid() {
            Ok(())
        } else {
            Err(AlgebraError::Invalid(report))
        }
    }

    /// The zero algebra.
    pub fn zero(name: impl Into<String>) -> Self {
        Self::from_table(name.into(), Vec::new(), Vec::new(), Vec::new())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn basis_bracket(&self, i: usize, j: usize) -> &[F] {
        &self.table[i * self.dim() + j]
    }

    /// Coordinates of `b_i^[p]`.
    pub fn basis_p_image(&self, i: usize) -> &[F] {
        &self.pmap[i]
    }

    /// Nonzero structure constants `(i, j, k, c)` with `i < j`, in index order.
    pub fn bracket_entries(&self) -> Vec<BracketEntry<F>> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for (k, &c) in self.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out.push(BracketEntry { i, j, k, c });
                    }
                }
            }
        }
        out
    }

    pub fn basis_element(&self, i: usize) -> Element<F> {
        Element::basis(self.dim(), i)
    }

    pub fn zero_element(&self) -> Element<F> {
        Element::zero(self.dim())
    }

    /// Element with the given integer coordinates.
    pub fn element(&self, coords: &[i64]) -> Element<F> {
        assert_eq!(coords.len(), self.dim(), "coordinate count");
        Element::from_i64(coords)
    }

    /// Sum of labelled basis vectors with integer coefficients, e.g.
    /// `g.combo(&[("t", 1), ("x", 1)])`.
    pub fn combo(&self, terms: &[(&str, i64)]) -> Element<F> {
        let mut x = self.zero_element();
        for (label, c) in terms {
            let i = self.label_index(label).unwrap_or_else(|| panic!("unknown basis label {label}"));
            x.axpy(F::from_i64(*c), &self.basis_element(i));
        }
        x
    }

    fn check(&self, x: &Element<F>) -> Result<(), AlgebraError> {
        if x.dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim(), found: x.dim() });
        }
        Ok(())
    }

    /// `[x, y]`, or an error if either element has the wrong length.
    pub fn checked_bracket(&self, x: &Element<F>, y: &Element<F>) -> Result<Element<F>, AlgebraError> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.bracket(x, y))
    }

    /// `[x, y]`.
    ///
    /// # Panics
    /// If either element does not belong to this algebra's dimension.
    pub fn bracket(&self, x: &Element<F>, y: &Element<F>) -> Element<F> {
        self.bracket_vec(x.coords(), y.coords()).into()
    }

    pub(crate) fn bracket_vec(&self, x: &[F], y: &[F]) -> Vec<F> {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "element dimension mismatch");
        let mut out = vector::zeros(n);
        for (i, &a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                vector::axpy(&mut out, a * b, &self.table[i * n + j]);
            }
        }
        out
    }

    /// Matrix of `ad x = [x, -]`; column `j` holds `[x, b_j]`.
    pub fn ad_matrix(&self, x: &Element<F>) -> Matrix<F> {
        self.ad_vec(x.coords())
    }

    pub(crate) fn ad_vec(&self, x: &[F]) -> Matrix<F> {
        let n = self.dim();
        assert_eq!(x.len(), n, "element dimension mismatch");
        let mut m = Matrix::zeros(n, n);
        for (i, &a) in x.iter().enumerate() {
            if !a.is_zero() {
                m = m.add(&self.ad_basis[i].scale(a));
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> &Matrix<F> {
        &self.ad_basis[i]
    }

    /// `x^[p]`, checked form.
    pub fn checked_p_power(&self, x: &Element<F>) -> Result<Element<F>, AlgebraError> {
        self.check(x)?;
        Ok(self.p_power(x))
    }

    /// The p-map on an arbitrary element.
    ///
    /// Writes `x = Σ λ_i b_i` and folds the terms in one at a time with
    /// Jacobson's formula `(a + b)^[p] = a^[p] + b^[p] + Σ s_i(a, b)`. Since
    /// λ^p = λ in F_p, `(λ b_i)^[p] = λ b_i^[p]`.
    pub fn p_power(&self, x: &Element<F>) -> Element<F> {
        self.p_power_vec(x.coords()).into()
    }

    pub(crate) fn p_power_vec(&self, x: &[F]) -> Vec<F> {
        let n = self.dim();
        assert_eq!(x.len(), n, "element dimension mismatch");
        let mut acc = vector::zeros(n);
        let mut acc_p = vector::zeros(n);
        for (i, &lambda) in x.iter().enumerate() {
            if lambda.is_zero() {
                continue;
            }
            let b = vector::scale(lambda, &vector::unit(n, i));
            if !vector::is_zero(&acc) {
                let corr = self.jacobson_correction(&acc, &b);
                vector::axpy(&mut acc_p, F::one(), &corr);
            }
            vector::axpy(&mut acc_p, lambda, &self.pmap[i]);
            vector::axpy(&mut acc, F::one(), &b);
        }
        acc_p
    }

    /// `Σ_{i=1}^{p-1} s_i(a, b)` where `i·s_i(a, b)` is the coefficient of
    /// τ^(i-1) in `ad(τa + b)^(p-1)(a)`.
    ///
    /// Computed as a polynomial in τ with vector coefficients: start from
    /// the constant `a`, apply `τ·ad a + ad b` p-1 times.
    pub fn jacobson_correction(&self, a: &[F], b: &[F]) -> Vec<F> {
        let n = self.dim();
        let p = F::P as usize;
        let ad_a = self.ad_vec(a);
        let ad_b = self.ad_vec(b);
        let mut poly: Vec<Vec<F>> = vec![a.to_vec()];
        for _ in 0..p - 1 {
            let mut next = vec![vector::zeros(n); poly.len() + 1];
            for (deg, coeff) in poly.iter().enumerate() {
                vector::axpy(&mut next[deg], F::one(), &ad_b.mul_vec(coeff));
                vector::axpy(&mut next[deg + 1], F::one(), &ad_a.mul_vec(coeff));
            }
            poly = next;
        }
        let mut out = vector::zeros(n);
        for i in 1..p {
            let inv_i = F::from_u64(i as u64).inverse().expect("i < p is invertible");
            vector::axpy(&mut out, inv_i, &poly[i - 1]);
        }
        out
    }

    /// Iterated p-map `x^[p^k]`.
    pub fn p_power_iter(&self, x: &Element<F>, k: usize) -> Element<F> {
        let mut y = x.clone();
        for _ in 0..k {
            y = self.p_power(&y);
        }
        y
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self)
    }

    /// Human-readable form such as `2*e + h`.
    pub fn format_element(&self, x: &Element<F>) -> String {
        let terms: Vec<String> = x
            .coords()
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| if c.is_one() { l.clone() } else { format!("{c}*{l}") })
            .collect();
        if terms.is_empty() {
            "0".to_owned()
        } else {
            terms.join(" + ")
        }
    }
}

pub(super) fn check_labels(labels: &[String]) -> Result<(), AlgebraError> {
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(AlgebraError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}
