use std::cmp::Ordering;

use crate::field::PrimeField;

use super::matrix::Matrix;
use super::{vector, LinalgError};

/// A linear subspace of F_p^n, stored as its reduced row-echelon basis.
///
/// The representation is canonical: equal subspaces have identical basis
/// matrices, so `==` and `Hash` are set-level.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: PrimeField> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors, each of length `ambient`.
    pub fn span<V: AsRef<[F]>>(ambient: usize, vectors: impl IntoIterator<Item = V>) -> Self {
        Self::from_matrix(&Matrix::from_rows(ambient, vectors))
    }

    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix<F>) -> Self {
        let (r, pivots) = m.rref();
        let basis = Matrix::from_rows(m.cols(), r.row_iter().take(pivots.len()));
        Subspace { ambient: m.cols(), basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl ExactSizeIterator<Item = &[F]> + '_ {
        self.basis.row_iter()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots; the standard basis vectors at these
    /// positions span a complement.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// `v` minus its component along this subspace with respect to the
    /// pivot complement. Zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut r = v.to_vec();
        for (row, &pc) in self.basis.row_iter().zip(&self.pivots) {
            let c = r[pc];
            if !c.is_zero() {
                vector::axpy(&mut r, -c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &[F]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        self.contains(v).then(|| self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    pub fn from_coordinates(&self, coords: &[F]) -> Vec<F> {
        assert_eq!(coords.len(), self.dim());
        let mut v = vector::zeros(self.ambient);
        for (row, &c) in self.basis.row_iter().zip(coords) {
            vector::axpy(&mut v, c, row);
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis_vectors().all(|v| other.contains(v))
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    /// # Panics
    /// On ambient-dimension mismatch; see [`combine`] for the checked form.
    pub fn sum(&self, other: &Self) -> Self {
        self.check_ambient(other).expect("subspace sum");
        Self::from_matrix(&self.basis.vstack(&other.basis))
    }

    pub fn add_vectors<V: AsRef<[F]>>(&self, vectors: impl IntoIterator<Item = V>) -> Self {
        self.sum(&Self::span(self.ambient, vectors))
    }

    /// # Panics
    /// On ambient-dimension mismatch; see [`combine`] for the checked form.
    pub fn intersect(&self, other: &Self) -> Self {
        self.check_ambient(other).expect("subspace intersection");
        if self.is_zero() || other.is_full() {
            return self.clone();
        }
        // x = a·B_U lies in W iff every annihilating functional of W kills it.
        let ann = other.annihilator();
        let system = &ann.basis * &self.basis.transpose();
        let kernel = system.kernel();
        Self::span(
            self.ambient,
            kernel.basis_vectors().map(|a| self.from_coordinates(a)),
        )
    }

    /// `{y : <y, v> = 0 for all v in self}`.
    pub fn annihilator(&self) -> Self {
        if self.is_zero() {
            return Self::full(self.ambient);
        }
        self.basis.kernel()
    }

    /// Linear map F^n -> F^(n - dim) whose kernel is exactly this subspace:
    /// rows span the annihilator.
    pub fn quotient_functionals(&self) -> Matrix<F> {
        self.annihilator().basis.clone()
    }

    /// Splits `v` as `u + w` with `u ∈ self`, `w ∈ other`, when the sum is
    /// direct and contains `v`.
    pub fn decompose(&self, other: &Self, v: &[F]) -> Option<(Vec<F>, Vec<F>)> {
        let columns: Vec<&[F]> = self.basis_vectors().chain(other.basis_vectors()).collect();
        let m = Matrix::from_columns(self.ambient, &columns);
        let x = m.solve(v)?;
        let u = self.from_coordinates(&x[..self.dim()]);
        let w = other.from_coordinates(&x[self.dim()..]);
        Some((u, w))
    }

    /// Image of the subspace under the linear map `m` (columns are images of
    /// the standard basis).
    pub fn image_under(&self, m: &Matrix<F>) -> Self {
        assert_eq!(m.cols(), self.ambient);
        Self::span(m.rows(), self.basis_vectors().map(|v| m.mul_vec(v)))
    }

    /// Every vector of the subspace, `p^dim` of them, in lexicographic order
    /// of their coordinates.
    pub fn elements(&self) -> SubspaceElements<'_, F> {
        SubspaceElements {
            space: self,
            next: 0,
            total: vector::count::<F>(self.dim()).unwrap_or(u64::MAX),
        }
    }

    /// Number of vectors, if it fits in a `u64`.
    pub fn cardinality(&self) -> Option<u64> {
        vector::count::<F>(self.dim())
    }
}

impl<F: PrimeField> PartialOrd for Subspace<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by ambient dimension, then dimension, then basis entries.
impl<F: PrimeField> Ord for Subspace<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

pub struct SubspaceElements<'a, F> {
    space: &'a Subspace<F>,
    next: u64,
    total: u64,
}

impl<F: PrimeField> Iterator for SubspaceElements<'_, F> {
    type Item = Vec<F>;

    fn next(&mut self) -> Option<Vec<F>> {
        if self.next >= self.total {
            return None;
        }
        let coords = vector::from_index::<F>(self.next, self.space.dim());
        self.next += 1;
        Some(self.space.from_coordinates(&coords))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CombineMode<'a, F> {
    Sum,
    Intersect,
    Member(&'a [F]),
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Combined<F> {
    Space(Subspace<F>),
    Bool(bool),
}

/// Checked binary operations on subspaces of the same ambient space.
pub fn combine<F: PrimeField>(
    u: &Subspace<F>,
    w: &Subspace<F>,
    mode: CombineMode<'_, F>,
) -> Result<Combined<F>, LinalgError> {
    u.check_ambient(w)?;
    Ok(match mode {
        CombineMode::Sum => Combined::Space(u.sum(w)),
        CombineMode::Intersect => Combined::Space(u.intersect(w)),
        CombineMode::Member(v) => {
            if v.len() != u.ambient {
                return Err(LinalgError::DimensionMismatch { left: u.ambient, right: v.len() });
            }
            Combined::Bool(u.contains(v) && w.contains(v))
        }
        CombineMode::Equal => Combined::Bool(u == w),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F3, F5};

    fn v3(a: &[i64]) -> Vec<F3> {
        a.iter().map(|&x| F3::from_i64(x)).collect()
    }

    #[test]
    fn idempotent_sum_and_intersection() {
        let u = Subspace::span(3, [v3(&[1, 2, 0]), v3(&[0, 1, 1])]);
        assert_eq!(u.sum(&u), u);
        assert_eq!(u.intersect(&u), u);
    }

    #[test]
    fn complementary_lines_in_the_plane() {
        let a = Subspace::span(2, [v3(&[1, 0])]);
        let b = Subspace::span(2, [v3(&[1, 1])]);
        assert!(a.sum(&b).is_full());
        assert!(a.intersect(&b).is_zero());
    }

    #[test]
    fn combine_rejects_mismatched_ambients() {
        let a = Subspace::<F5>::full(2);
        let b = Subspace::<F5>::full(3);
        assert_eq!(
            combine(&a, &b, CombineMode::Sum),
            Err(LinalgError::DimensionMismatch { left: 2, right: 3 })
        );
        assert_eq!(combine(&a, &a, CombineMode::Equal), Ok(Combined::Bool(true)));
    }

    #[test]
    fn elements_enumerates_every_vector_once() {
        let u = Subspace::span(3, [vec![F2::new(1), F2::new(1), F2::new(0)], vec![F2::new(0), F2::new(0), F2::new(1)]]);
        let all: std::collections::HashSet<Vec<F2>> = u.elements().collect();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|v| u.contains(v)));
    }

    #[test]
    fn decompose_direct_sum() {
        let u = Subspace::span(2, [v3(&[1, 0])]);
        let w = Subspace::span(2, [v3(&[1, 1])]);
        let (a, b) = u.decompose(&w, &v3(&[2, 1])).unwrap();
        assert_eq!(a, v3(&[1, 0]));
        assert_eq!(b, v3(&[1, 1]));
    }
}
