use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{Element, RestrictedLieAlgebra, Subalgebra};
use crate::field::PrimeField;
use crate::linalg::Subspace;
use crate::sampling::random_vector_in;
use crate::sstheory::{is_semisimple, is_toral, jordan, p_closure_space, toral_part};

use super::{BudgetExceeded, CartanError, SAMPLES_PER_ROUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateChecks {
    pub cartan_is_nilpotent: bool,
    pub central_toral_part_equals_toral: bool,
}

/// A toral subalgebra, its centralizer, and the two checks that together
/// certify maximality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalToralCertificate<F> {
    pub toral: Subalgebra<F>,
    pub cartan: Subalgebra<F>,
    pub checks: CertificateChecks,
}

impl<F: PrimeField> MaximalToralCertificate<F> {
    pub fn is_valid(&self) -> bool {
        self.checks.cartan_is_nilpotent && self.checks.central_toral_part_equals_toral
    }
}

/// Evaluates the maximality certificate for a toral subspace `t`. Also
/// returns the toral part of the center of its centralizer (when the
/// centralizer is nilpotent), which is the natural enlargement of `t`.
pub(crate) fn evaluate<F: PrimeField>(
    g: &RestrictedLieAlgebra<F>,
    t: &Subspace<F>,
) -> (MaximalToralCertificate<F>, Option<Subspace<F>>) {
    let cartan = g.centralizer(t);
    let nilpotent = g.is_nilpotent_subalgebra(cartan.space());
    let central_toral = toral_part(g, g.center_of(cartan.space()).space())
        .expect("the center of a restricted subalgebra is abelian and p-closed")
        .into_space();
    let checks = CertificateChecks {
        cartan_is_nilpotent: nilpotent,
        central_toral_part_equals_toral: central_toral == *t,
    };
    let cert = MaximalToralCertificate { toral: g.certify(t.clone()), cartan, checks };
    (cert, nilpotent.then_some(central_toral))
}

/// The certificate for an arbitrary toral subalgebra (valid or not).
pub fn certify_toral<F: PrimeField>(
    g: &RestrictedLieAlgebra<F>,
    t: &Subspace<F>,
) -> Result<MaximalToralCertificate<F>, CartanError<F>> {
    if !is_toral(g, t) {
        return Err(CartanError::NotToral);
    }
    Ok(evaluate(g, t).0)
}

/// Greedy ascent to a maximal toral subalgebra.
///
/// Starting from `T = 0`: if the centralizer `c` of `T` is nilpotent, the
/// toral part of `z(c)` contains `T`, and either equals it (done) or is the
/// next `T`. Otherwise `c` holds a semisimple element outside `T`; it is
/// searched for with [`SAMPLES_PER_ROUND`] seeded samples, then by an
/// exhaustive sweep of `c` when `|c| <= budget`, and `T` grows by the
/// p-closure of its semisimple part. `dim T` strictly increases each round.
pub fn maximal_toral<F: PrimeField>(
    g: &RestrictedLieAlgebra<F>,
    seed: u64,
    budget: u64,
) -> Result<MaximalToralCertificate<F>, BudgetExceeded<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Subspace::zero(g.dim());
    loop {
        let (cert, enlargement) = evaluate(g, &t);
        if cert.is_valid() {
            return Ok(cert);
        }
        if let Some(bigger) = enlargement {
            debug_assert!(t.is_subspace_of(&bigger) && bigger != t);
            t = bigger;
            continue;
        }
        let c = cert.cartan.space();
        let outside_t = |y: Vec<F>| {
            let s = jordan(g, &Element::new(y)).semisimple;
            (!t.contains(s.coords())).then_some(s)
        };
        let mut found = (0..SAMPLES_PER_ROUND).find_map(|_| outside_t(random_vector_in(c, &mut rng)));
        if found.is_none() {
            let size = c.cardinality().unwrap_or(u64::MAX);
            if size > budget {
                return Err(BudgetExceeded { partial: g.certify(t), needed: size, budget });
            }
            found = c.elements().find_map(outside_t);
        }
        let s = found.expect("a non-nilpotent centralizer of a toral subalgebra holds a semisimple element outside it");
        t = t.sum(&p_closure_space(g, &s));
    }
}

/// Evaluates the maximality certificate for a toral subalgebra.
pub fn is_maximal_toral<F: PrimeField>(g: &RestrictedLieAlgebra<F>, t: &Subspace<F>) -> Result<bool, CartanError<F>> {
    Ok(certify_toral(g, t)?.is_valid())
}

/// `z_g(T)` for a maximal toral `T`.
pub fn cartan_from_toral<F: PrimeField>(
    g: &RestrictedLieAlgebra<F>,
    t: &Subspace<F>,
) -> Result<Subalgebra<F>, CartanError<F>> {
    let cert = certify_toral(g, t)?;
    if !cert.is_valid() {
        return Err(CartanError::NotMaximalToral);
    }
    Ok(cert.cartan)
}

/// Toral part of the center of a Cartan subalgebra.
pub fn toral_from_cartan<F: PrimeField>(
    g: &RestrictedLieAlgebra<F>,
    c: &Subspace<F>,
) -> Result<Subalgebra<F>, CartanError<F>> {
    if !is_cartan(g, c) {
        return Err(CartanError::NotCartan);
    }
    Ok(toral_part(g, g.center_of(c).space()).expect("center of a Cartan subalgebra is abelian and p-closed"))
}

/// Nilpotent and self-normalizing.
pub fn is_cartan<F: PrimeField>(g: &RestrictedLieAlgebra<F>, c: &Subspace<F>) -> bool {
    g.is_bracket_closed(c) && g.is_nilpotent_subalgebra(c) && g.normalizer_unchecked(c).space() == c
}

/// Enlarges a Cartan subalgebra `c` of `z_g(s)` (for semisimple `s`) to a
/// Cartan subalgebra of `g` containing it: the toral part of `z(c)` is
/// maximal toral in `g`, and its centralizer is the answer.
pub fn extend_cartan<F: PrimeField>(
    g: &RestrictedLieAlgebra<F>,
    s: &Element<F>,
    c: &Subspace<F>,
) -> Result<Subalgebra<F>, CartanError<F>> {
    if !is_semisimple(g, s) {
        return Err(CartanError::NotSemisimple);
    }
    let zs = g.centralizer_of(s);
    if !c.is_subspace_of(zs.space()) {
        return Err(CartanError::NotCartanOfCentralizer);
    }
    let local = g.restrict(zs.space()).expect("centralizers are restricted subalgebras");
    let c_local = local.pull_space(c).expect("c lies in the centralizer");
    if !is_cartan(&local.algebra, &c_local) {
        return Err(CartanError::NotCartanOfCentralizer);
    }
    let t = toral_part(g, g.center_of(c).space()).expect("center of a Cartan subalgebra is abelian and p-closed");
    let cert = evaluate(g, t.space()).0;
    if !cert.is_valid() {
        return Err(CartanError::ExtensionFailed { toral: t });
    }
    let out = cert.cartan;
    if !c.is_subspace_of(out.space()) || !out.contains(s) || !is_cartan(g, out.space()) {
        return Err(CartanError::ExtensionFailed { toral: t });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{ex44, heisenberg_zero_pmap, sl2};
    use crate::{F2, F3, F5};

    #[test]
    fn ex44_greedy_lands_on_one_of_two_torals() {
        let g = ex44::<F2>();
        let t = g.span(&[g.combo(&[("t", 1)])]);
        let tx = g.span(&[g.combo(&[("t", 1), ("x", 1)])]);
        let mut seen = std::collections::BTreeSet::new();
        for seed in 0..16 {
            let cert = maximal_toral(&g, seed, 100).unwrap();
            assert!(cert.is_valid());
            let s = cert.toral.space().clone();
            assert!(s == t || s == tx);
            seen.insert(s);
        }
        assert_eq!(seen.len(), 2, "both maximal torals are reachable");
    }

    #[test]
    fn p_nilpotent_algebra_has_zero_maximal_toral() {
        let g = heisenberg_zero_pmap::<F3>();
        let cert = maximal_toral(&g, 0, 1000).unwrap();
        assert!(cert.toral.is_zero());
        assert!(cert.cartan.space().is_full());
        assert_eq!(is_maximal_toral(&g, &Subspace::zero(3)), Ok(true));
    }

    #[test]
    fn zero_is_not_maximal_in_ex44() {
        let g = ex44::<F2>();
        assert_eq!(is_maximal_toral(&g, &Subspace::zero(2)), Ok(false));
        let x = g.span(&[g.combo(&[("x", 1)])]);
        assert_eq!(is_maximal_toral(&g, &x), Err(CartanError::NotToral));
    }

    #[test]
    fn sl2_cartan_round_trip() {
        let g = sl2::<F5>();
        let h = g.span(&[g.combo(&[("h", 1)])]);
        assert_eq!(is_maximal_toral(&g, &h), Ok(true));
        let c = cartan_from_toral(&g, &h).unwrap();
        assert_eq!(c.space(), &h);
        assert!(is_cartan(&g, &h));
        assert_eq!(toral_from_cartan(&g, &h).unwrap().space(), &h);
    }

    #[test]
    fn is_cartan_examples() {
        let g = ex44::<F5>();
        let x = g.span(&[g.combo(&[("x", 1)])]);
        assert!(!is_cartan(&g, &x));
        let n = heisenberg_zero_pmap::<F3>();
        assert!(is_cartan(&n, &Subspace::full(3)));
    }

    #[test]
    fn extend_cartan_rejects_non_semisimple() {
        let g = ex44::<F2>();
        let x = g.combo(&[("x", 1)]);
        let c = g.span(std::slice::from_ref(&x));
        assert_eq!(extend_cartan(&g, &x, &c), Err(CartanError::NotSemisimple));
        let t = g.combo(&[("t", 1)]);
        let ct = g.span(std::slice::from_ref(&t));
        assert_eq!(extend_cartan(&g, &t, &ct).unwrap().space(), &ct);
    }
}
