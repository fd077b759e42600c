//! Quotients, restrictions to subalgebras, semidirect products and
//! matrix-generated algebras.

use crate::field::PrimeField;
use crate::linalg::{vector, Matrix, Subspace};

use super::{AlgebraError, BracketEntry, Element, RestrictedLieAlgebra};

/// `g / I` together with the projection `g -> g / I`.
#[derive(Clone, Debug)]
pub struct Quotient<F> {
    pub algebra: RestrictedLieAlgebra<F>,
    /// `dim(g/I) × dim(g)`; column `j` is the image of `b_j`.
    pub projection: Matrix<F>,
    /// Indices of the basis vectors of `g` whose images form the quotient basis.
    pub complement: Vec<usize>,
    pub ideal: Subspace<F>,
}

impl<F: PrimeField> Quotient<F> {
    pub fn project(&self, x: &Element<F>) -> Element<F> {
        self.projection.mul_vec(x.coords()).into()
    }

    pub fn project_space(&self, s: &Subspace<F>) -> Subspace<F> {
        s.image_under(&self.projection)
    }

    /// Full preimage `π^{-1}(s)`: lifts of a basis of `s` plus the ideal.
    pub fn preimage(&self, s: &Subspace<F>) -> Subspace<F> {
        let lifts: Vec<Vec<F>> = s.basis_vectors().map(|v| self.lift(v)).collect();
        self.ideal.add_vectors(lifts)
    }

    /// The section sending quotient basis vector `a` to `b_{complement[a]}`.
    pub fn lift(&self, v: &[F]) -> Vec<F> {
        let mut out = vector::zeros(self.projection.cols());
        for (&c, &idx) in v.iter().zip(&self.complement) {
            out[idx] = c;
        }
        out
    }
}

/// A restricted subalgebra viewed as an algebra in its own right.
#[derive(Clone, Debug)]
pub struct Restriction<F> {
    pub algebra: RestrictedLieAlgebra<F>,
    /// The subalgebra inside the parent; its echelon basis is the new basis.
    pub space: Subspace<F>,
}

impl<F: PrimeField> Restriction<F> {
    pub fn embed(&self, x: &Element<F>) -> Element<F> {
        self.space.from_coordinates(x.coords()).into()
    }

    pub fn embed_space(&self, s: &Subspace<F>) -> Subspace<F> {
        Subspace::span(self.space.ambient_dim(), s.basis_vectors().map(|v| self.space.from_coordinates(v)))
    }

    /// Coordinates in the restricted algebra, if `x` lies in the subalgebra.
    pub fn pull(&self, x: &Element<F>) -> Option<Element<F>> {
        self.space.coordinates(x.coords()).map(Element::new)
    }

    pub fn pull_space(&self, s: &Subspace<F>) -> Option<Subspace<F>> {
        let vs: Option<Vec<Vec<F>>> = s.basis_vectors().map(|v| self.space.coordinates(v)).collect();
        vs.map(|vs| Subspace::span(self.space.dim(), vs))
    }
}

/// An algebra realised inside gl_n, with its basis matrices.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra<F> {
    pub algebra: RestrictedLieAlgebra<F>,
    pub basis: Vec<Matrix<F>>,
    pub n: usize,
}

impl<F: PrimeField> MatrixAlgebra<F> {
    pub fn to_matrix(&self, x: &Element<F>) -> Matrix<F> {
        let mut m = Matrix::zeros(self.n, self.n);
        for (c, b) in x.coords().iter().zip(&self.basis) {
            if !c.is_zero() {
                m = m.add(&b.scale(*c));
            }
        }
        m
    }
}

impl<F: PrimeField> RestrictedLieAlgebra<F> {
    /// `g / I` for a p-closed ideal `I`. The quotient basis is the images of
    /// the basis vectors at the non-pivot columns of `I`'s echelon basis.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<Quotient<F>, AlgebraError> {
        if !self.is_ideal(ideal) {
            return Err(AlgebraError::NotIdeal);
        }
        if !self.is_p_closed(ideal) {
            return Err(AlgebraError::NotPClosed);
        }
        let n = self.dim();
        let complement = ideal.non_pivots();
        let m = complement.len();
        let project = |v: &[F]| -> Vec<F> {
            let r = ideal.reduce(v);
            complement.iter().map(|&c| r[c]).collect()
        };
        let projection = Matrix::from_columns(m, &(0..n).map(|j| project(&vector::unit(n, j))).collect::<Vec<_>>());
        let mut table = vec![vector::zeros(m); m * m];
        for (a, &ia) in complement.iter().enumerate() {
            for (b, &ib) in complement.iter().enumerate() {
                table[a * m + b] = project(self.basis_bracket(ia, ib));
            }
        }
        let pmap = complement.iter().map(|&i| project(self.basis_p_image(i))).collect();
        let labels = complement.iter().map(|&i| self.labels()[i].clone()).collect();
        let algebra = RestrictedLieAlgebra::from_table(format!("{}/I", self.name()), labels, table, pmap);
        algebra.ensure_valid()?;
        Ok(Quotient { algebra, projection, complement, ideal: ideal.clone() })
    }

    /// A bracket- and p-closed subspace as an algebra on its echelon basis.
    pub fn restrict(&self, space: &Subspace<F>) -> Result<Restriction<F>, AlgebraError> {
        if !self.is_bracket_closed(space) {
            return Err(AlgebraError::NotBracketClosed);
        }
        if !self.is_p_closed(space) {
            return Err(AlgebraError::NotPClosed);
        }
        let basis: Vec<Vec<F>> = space.basis_vectors().map(<[F]>::to_vec).collect();
        let m = basis.len();
        let coords = |v: Vec<F>| space.coordinates(&v).expect("closed subspace");
        let mut table = vec![vector::zeros(m); m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = coords(self.bracket_vec(&basis[a], &basis[b]));
            }
        }
        let pmap = basis.iter().map(|v| coords(self.p_power_vec(v))).collect();
        let labels = basis.iter().map(|v| self.format_element(&Element::new(v.clone()))).collect::<Vec<_>>();
        let labels = dedupe_labels(labels);
        let algebra = RestrictedLieAlgebra::from_table(format!("{}|sub", self.name()), labels, table, pmap);
        Ok(Restriction { algebra, space: space.clone() })
    }
}

impl<F: PrimeField> RestrictedLieAlgebra<F> {
    /// The same algebra on a new basis, given as coordinate vectors in the
    /// current one.
    pub fn rebase(&self, basis: &[Vec<F>], labels: Vec<String>) -> Result<RestrictedLieAlgebra<F>, AlgebraError> {
        let n = self.dim();
        if basis.len() != n || labels.len() != n || basis.iter().any(|b| b.len() != n) {
            return Err(AlgebraError::Shape(format!("a basis change needs {n} vectors of length {n}")));
        }
        let change = Matrix::from_columns(n, basis);
        let inverse = change.inverse().ok_or_else(|| AlgebraError::Shape("basis vectors are dependent".into()))?;
        let mut table = vec![vector::zeros(n); n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = inverse.mul_vec(&self.bracket_vec(&basis[a], &basis[b]));
            }
        }
        let pmap = basis.iter().map(|v| inverse.mul_vec(&self.p_power_vec(v))).collect();
        super::lie::check_labels(&labels)?;
        Ok(RestrictedLieAlgebra::from_table(self.name().to_string(), labels, table, pmap))
    }
}

fn dedupe_labels(labels: Vec<String>) -> Vec<String> {
    let mut seen = std::collections::HashSet::new();
    labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| if seen.insert(l.clone()) { l } else { format!("s{i}") })
        .collect()
}

/// `v ⋊ t`: basis of `v` first, then basis of `t`. `action[i]` is the
/// derivation of `v` by which `t`'s basis vector `i` acts
/// (`[t_i, v_a] = action[i] · v_a`).
pub fn semidirect<F: PrimeField>(
    name: impl Into<String>,
    t: &RestrictedLieAlgebra<F>,
    v: &RestrictedLieAlgebra<F>,
    action: &[Matrix<F>],
) -> Result<RestrictedLieAlgebra<F>, AlgebraError> {
    let (nt, nv) = (t.dim(), v.dim());
    if action.len() != nt || action.iter().any(|d| d.rows() != nv || d.cols() != nv) {
        return Err(AlgebraError::Shape(format!("action needs {nt} matrices of size {nv}x{nv}")));
    }
    let n = nv + nt;
    let mut brackets = Vec::new();
    for e in v.bracket_entries() {
        brackets.push(BracketEntry { i: e.i, j: e.j, k: e.k, c: e.c });
    }
    for e in t.bracket_entries() {
        brackets.push(BracketEntry { i: nv + e.i, j: nv + e.j, k: nv + e.k, c: e.c });
    }
    // [v_a, t_i] = -[t_i, v_a] = -D_i v_a, stored with the v index first.
    for (i, d) in action.iter().enumerate() {
        for a in 0..nv {
            for k in 0..nv {
                let c = d[(k, a)];
                if !c.is_zero() {
                    brackets.push(BracketEntry { i: a, j: nv + i, k, c: -c });
                }
            }
        }
    }
    let mut pmap = Vec::with_capacity(n);
    for a in 0..nv {
        let mut img = v.basis_p_image(a).to_vec();
        img.extend(vector::zeros::<F>(nt));
        pmap.push(img);
    }
    for i in 0..nt {
        let mut img = vector::zeros::<F>(nv);
        img.extend_from_slice(t.basis_p_image(i));
        pmap.push(img);
    }
    let labels = v.labels().iter().chain(t.labels()).cloned().collect();
    RestrictedLieAlgebra::new(name, labels, &brackets, pmap)
}

/// Closure of `generators` inside gl_n under commutators and p-th powers,
/// as an abstract algebra on the canonical (echelon) basis of the span.
pub fn from_matrices<F: PrimeField>(
    name: impl Into<String>,
    n: usize,
    generators: &[Matrix<F>],
) -> MatrixAlgebra<F> {
    let mut span = Subspace::span(n * n, generators.iter().map(Matrix::flatten));
    loop {
        let mats: Vec<Matrix<F>> = span.basis_vectors().map(|v| Matrix::unflatten(n, n, v)).collect();
        let mut new = Vec::new();
        for (i, a) in mats.iter().enumerate() {
            for b in &mats[i + 1..] {
                new.push(a.commutator(b).flatten());
            }
            new.push(a.pow(F::P).flatten());
        }
        let next = span.add_vectors(new);
        if next == span {
            break;
        }
        span = next;
    }
    let basis: Vec<Matrix<F>> = span.basis_vectors().map(|v| Matrix::unflatten(n, n, v)).collect();
    let labels = (0..basis.len()).map(|i| format!("m{i}")).collect();
    let coords = |m: Matrix<F>| span.coordinates(&m.flatten()).expect("span is closed");
    let algebra = build_from_matrix_basis(name.into(), labels, &basis, coords);
    MatrixAlgebra { algebra, basis, n }
}

/// An algebra with a prescribed matrix basis. Fails if the matrices are
/// dependent or their span is not closed under commutators and p-th powers.
pub fn matrix_model<F: PrimeField>(
    name: impl Into<String>,
    labels: &[&str],
    basis: Vec<Matrix<F>>,
) -> Result<MatrixAlgebra<F>, AlgebraError> {
    let n = basis.first().map_or(0, Matrix::rows);
    if labels.len() != basis.len() || basis.iter().any(|b| b.rows() != n || !b.is_square()) {
        return Err(AlgebraError::Shape("labels and square basis matrices must match".into()));
    }
    let columns: Vec<Vec<F>> = basis.iter().map(Matrix::flatten).collect();
    let system = Matrix::from_columns(n * n, &columns);
    if system.rank() != basis.len() {
        return Err(AlgebraError::Shape("basis matrices are linearly dependent".into()));
    }
    let mut failure = None;
    let coords = |m: Matrix<F>| match system.solve(&m.flatten()) {
        Some(c) => c,
        None => {
            failure = Some(());
            vector::zeros(basis.len())
        }
    };
    let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let algebra = build_from_matrix_basis(name.into(), labels, &basis, coords);
    if failure.is_some() {
        return Err(AlgebraError::Shape("span of the basis matrices is not a restricted subalgebra of gl_n".into()));
    }
    algebra.ensure_valid()?;
    Ok(MatrixAlgebra { algebra, basis, n })
}

fn build_from_matrix_basis<F: PrimeField>(
    name: String,
    labels: Vec<String>,
    basis: &[Matrix<F>],
    mut coords: impl FnMut(Matrix<F>) -> Vec<F>,
) -> RestrictedLieAlgebra<F> {
    let m = basis.len();
    let mut table = vec![vector::zeros(m); m * m];
    for a in 0..m {
        for b in 0..m {
            table[a * m + b] = coords(basis[a].commutator(&basis[b]));
        }
    }
    let pmap = basis.iter().map(|b| coords(b.pow(F::P))).collect();
    RestrictedLieAlgebra::from_table(name, labels, table, pmap)
}
