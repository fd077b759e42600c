use serde::Serialize;

use crate::field::PrimeField;
use crate::linalg::{Matrix, Subspace};

use super::{AlgebraError, Element, RestrictedLieAlgebra};

/// A subspace of an algebra together with the closure properties it was
/// certified to have.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subalgebra<F> {
    space: Subspace<F>,
    pub flags: ClosureFlags,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct ClosureFlags {
    pub bracket_closed: bool,
    pub ideal: bool,
    pub p_closed: bool,
}

impl<F: PrimeField> Subalgebra<F> {
    pub fn space(&self) -> &Subspace<F> {
        &self.space
    }

    pub fn into_space(self) -> Subspace<F> {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn contains(&self, x: &Element<F>) -> bool {
        self.space.contains(x.coords())
    }

    pub fn basis_elements(&self) -> Vec<Element<F>> {
        self.space.basis_vectors().map(|v| Element::new(v.to_vec())).collect()
    }

    pub fn is_restricted_subalgebra(&self) -> bool {
        self.flags.bracket_closed && self.flags.p_closed
    }
}

/// What [`RestrictedLieAlgebra::closure`] saturates under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosureMode {
    Subalgebra,
    Ideal,
    PSubalgebra,
    PIdeal,
}

impl<F: PrimeField> RestrictedLieAlgebra<F> {
    /// Tags a subspace with the closure properties it actually has.
    pub fn certify(&self, space: Subspace<F>) -> Subalgebra<F> {
        assert_eq!(space.ambient_dim(), self.dim(), "subspace ambient dimension");
        let flags = ClosureFlags {
            bracket_closed: self.is_bracket_closed(&space),
            ideal: self.is_ideal(&space),
            p_closed: self.is_p_closed(&space),
        };
        Subalgebra { space, flags }
    }

    /// Human-readable form such as `span(t, x + t)`, or `0`.
    pub fn format_subspace(&self, s: &Subspace<F>) -> String {
        if s.is_zero() {
            return "0".to_owned();
        }
        let parts: Vec<String> = s.basis_vectors().map(|v| self.format_element(&Element::new(v.to_vec()))).collect();
        format!("span({})", parts.join(", "))
    }

    pub fn whole(&self) -> Subalgebra<F> {
        self.certify(Subspace::full(self.dim()))
    }

    pub fn zero_subalgebra(&self) -> Subalgebra<F> {
        self.certify(Subspace::zero(self.dim()))
    }

    pub fn span(&self, elements: &[Element<F>]) -> Subspace<F> {
        Subspace::span(self.dim(), elements.iter().map(Element::coords))
    }

    /// `span{[u, w] : u ∈ U, w ∈ W}`.
    pub fn bracket_spaces(&self, u: &Subspace<F>, w: &Subspace<F>) -> Subspace<F> {
        let mut vectors = Vec::new();
        for a in u.basis_vectors() {
            for b in w.basis_vectors() {
                vectors.push(self.bracket_vec(a, b));
            }
        }
        Subspace::span(self.dim(), vectors)
    }

    pub fn is_bracket_closed(&self, v: &Subspace<F>) -> bool {
        let basis: Vec<&[F]> = v.basis_vectors().collect();
        basis.iter().enumerate().all(|(i, a)| basis[i + 1..].iter().all(|b| v.contains(&self.bracket_vec(a, b))))
    }

    pub fn is_ideal(&self, v: &Subspace<F>) -> bool {
        v.basis_vectors().all(|a| (0..self.dim()).all(|i| v.contains(&self.ad_basis(i).mul_vec(a))))
    }

    /// Basis p-images lie in `v`. Together with bracket closure this gives
    /// closure under the p-map on all of `v`.
    pub fn is_p_closed(&self, v: &Subspace<F>) -> bool {
        v.basis_vectors().all(|a| v.contains(&self.p_power_vec(a)))
    }

    /// `{x : [x, s] = 0 for all s ∈ S}`: kernel of the stacked `ad s`.
    pub fn centralizer(&self, s: &Subspace<F>) -> Subalgebra<F> {
        let n = self.dim();
        let mut stacked = Matrix::zeros(0, n);
        for v in s.basis_vectors() {
            stacked = stacked.vstack(&self.ad_vec(v));
        }
        let kernel = if stacked.rows() == 0 { Subspace::full(n) } else { stacked.kernel() };
        self.certify(kernel)
    }

    pub fn centralizer_of(&self, x: &Element<F>) -> Subalgebra<F> {
        self.centralizer(&self.span(std::slice::from_ref(x)))
    }

    /// `{x : [x, h] ⊆ h}`, computed as the kernel of "bracket with each
    /// basis vector of h, then project onto g/h".
    pub fn normalizer(&self, h: &Subspace<F>) -> Result<Subalgebra<F>, AlgebraError> {
        if !self.is_bracket_closed(h) {
            return Err(AlgebraError::NotBracketClosed);
        }
        Ok(self.normalizer_unchecked(h))
    }

    pub(crate) fn normalizer_unchecked(&self, h: &Subspace<F>) -> Subalgebra<F> {
        let n = self.dim();
        let project = h.quotient_functionals();
        if project.rows() == 0 {
            return self.whole();
        }
        let mut stacked = Matrix::zeros(0, n);
        for v in h.basis_vectors() {
            // [x, v] = -ad(v) x
            stacked = stacked.vstack(&(&project * &self.ad_vec(v)));
        }
        let kernel = if stacked.rows() == 0 { Subspace::full(n) } else { stacked.kernel() };
        self.certify(kernel)
    }

    pub fn center(&self) -> Subalgebra<F> {
        self.centralizer(&Subspace::full(self.dim()))
    }

    /// Center of the subalgebra `c` itself: `c ∩ z_g(c)`.
    pub fn center_of(&self, c: &Subspace<F>) -> Subalgebra<F> {
        self.certify(self.centralizer(c).space.intersect(c))
    }

    /// `g, [g,g], [[g,g],[g,g]], ...` up to and including the stable term.
    pub fn derived_series(&self) -> Vec<Subalgebra<F>> {
        self.series(&Subspace::full(self.dim()), |cur| self.bracket_spaces(cur, cur))
    }

    /// `g, [g,g], [g,[g,g]], ...` up to and including the stable term.
    pub fn lower_central_series(&self) -> Vec<Subalgebra<F>> {
        self.lower_central_series_of(&Subspace::full(self.dim()))
    }

    /// Lower central series of the subalgebra `c`, computed inside `g`.
    pub fn lower_central_series_of(&self, c: &Subspace<F>) -> Vec<Subalgebra<F>> {
        self.series(c, |cur| self.bracket_spaces(c, cur))
    }

    fn series(&self, start: &Subspace<F>, mut step: impl FnMut(&Subspace<F>) -> Subspace<F>) -> Vec<Subalgebra<F>> {
        let mut out = vec![self.certify(start.clone())];
        loop {
            let cur = out.last().expect("non-empty").space.clone();
            let next = step(&cur);
            if next == cur {
                return out;
            }
            out.push(self.certify(next));
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_nilpotent_subalgebra(&Subspace::full(self.dim()))
    }

    /// Whether the bracket-closed subspace `c` is a nilpotent Lie algebra.
    pub fn is_nilpotent_subalgebra(&self, c: &Subspace<F>) -> bool {
        let mut cur = c.clone();
        loop {
            if cur.is_zero() {
                return true;
            }
            let next = self.bracket_spaces(c, &cur);
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    pub fn is_abelian_subspace(&self, a: &Subspace<F>) -> bool {
        self.bracket_spaces(a, a).is_zero()
    }

    /// Smallest subspace containing `vectors` and closed under the
    /// operations selected by `mode`, computed by saturation.
    pub fn closure(&self, vectors: &[Element<F>], mode: ClosureMode) -> Subalgebra<F> {
        let start = self.span(vectors);
        self.certify(self.saturate(start, mode))
    }

    pub fn closure_of_space(&self, start: &Subspace<F>, mode: ClosureMode) -> Subalgebra<F> {
        self.certify(self.saturate(start.clone(), mode))
    }

    fn saturate(&self, mut cur: Subspace<F>, mode: ClosureMode) -> Subspace<F> {
        let n = self.dim();
        let ideal = matches!(mode, ClosureMode::Ideal | ClosureMode::PIdeal);
        let restricted = matches!(mode, ClosureMode::PSubalgebra | ClosureMode::PIdeal);
        loop {
            let basis: Vec<Vec<F>> = cur.basis_vectors().map(<[F]>::to_vec).collect();
            let mut new = Vec::new();
            if ideal {
                for v in &basis {
                    for i in 0..n {
                        new.push(self.ad_basis(i).mul_vec(v));
                    }
                }
            } else {
                for (i, a) in basis.iter().enumerate() {
                    for b in &basis[i + 1..] {
                        new.push(self.bracket_vec(a, b));
                    }
                }
            }
            if restricted {
                for v in &basis {
                    new.push(self.p_power_vec(v));
                }
            }
            let next = cur.add_vectors(new);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }
}
