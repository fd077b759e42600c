//! Claim-by-claim verification against brute-force oracles.
//!
//! Every check is a pure function of `(g, seed, budget)`. A failing check
//! carries witnesses that can be re-checked on their own; a check whose
//! oracle is out of budget is reported as inconclusive.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{ClosureMode, Element, RestrictedLieAlgebra, Subalgebra};
use crate::env::{is_local, u_of, DEFAULT_U_BUDGET};
use crate::field::PrimeField;
use crate::linalg::Subspace;
use crate::sampling::random_vector_in;
use crate::sstheory::{is_p_nilpotent_element, minimal_p_nilpotent_ideal, p_nilpotent_radical, toral_part, Exactness};

use super::{
    cartan_from_toral, cartan_span, enumerate_cartans, enumerate_torals, extend_cartan, is_cartan, maximal_toral,
    toral_from_cartan, ToralEnumeration,
};

/// Elements drawn outside each Cartan subalgebra for the maximality check.
pub const OUTSIDE_SAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// Nilpotent ⟺ unique maximal toral ⟺ every toral central.
    Thm15,
    /// Toral ↔ Cartan round trips.
    Cor13,
    /// Torals normalizing a Cartan centralize it; Cartans are maximal nilpotent.
    Thm12v,
    /// Maximal toral zero ⟺ every element p-nilpotent ⟺ u(g) local.
    Lemma32,
    /// g is spanned by its Cartan subalgebras.
    Lemma43,
    /// Cartans of centralizers of semisimple elements extend to Cartans of g.
    Cor42,
    /// Preimages of Cartans under central quotients are Cartans.
    Case1CentralQuotient,
    /// Cartans of quotients lift to Cartans of g.
    Case2Lift,
}

impl Claim {
    pub const ALL: [Claim; 8] = [
        Claim::Thm15,
        Claim::Cor13,
        Claim::Thm12v,
        Claim::Lemma32,
        Claim::Lemma43,
        Claim::Cor42,
        Claim::Case1CentralQuotient,
        Claim::Case2Lift,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Thm15 => "thm1.5",
            Claim::Cor13 => "cor1.3",
            Claim::Thm12v => "thm1.2.v",
            Claim::Lemma32 => "lemma3.2",
            Claim::Lemma43 => "lemma4.3",
            Claim::Cor42 => "cor4.2",
            Claim::Case1CentralQuotient => "case1.central_quotient",
            Claim::Case2Lift => "case2.lift",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| format!("unknown claim `{s}`; expected one of {}", Claim::ALL.map(Claim::id).join(", ")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

/// A subspace or element, as residue vectors in the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub role: String,
    pub display: String,
    pub vectors: Vec<Vec<u32>>,
}

impl Witness {
    pub fn subspace<F: PrimeField>(g: &RestrictedLieAlgebra<F>, role: impl Into<String>, s: &Subspace<F>) -> Self {
        Witness {
            role: role.into(),
            display: g.format_subspace(s),
            vectors: s.basis_vectors().map(residues).collect(),
        }
    }

    pub fn element<F: PrimeField>(g: &RestrictedLieAlgebra<F>, role: impl Into<String>, x: &Element<F>) -> Self {
        Witness { role: role.into(), display: g.format_element(x), vectors: vec![residues(x.coords())] }
    }
}

fn residues<F: PrimeField>(v: &[F]) -> Vec<u32> {
    v.iter().map(|c| c.residue()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim_id: &'static str,
    pub algebra: String,
    pub p: u32,
    pub status: Status,
    pub summary: String,
    pub witnesses: Vec<Witness>,
    pub seed: u64,
    pub budget: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub budget: u64,
    /// Record wall-clock time per claim. Off by default so that reports are
    /// reproducible byte for byte.
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { seed: 0, budget: super::DEFAULT_BUDGET, timings: false }
    }
}

struct Outcome {
    status: Status,
    summary: String,
    witnesses: Vec<Witness>,
}

fn outcome(status: Status, summary: impl Into<String>, witnesses: Vec<Witness>) -> Outcome {
    Outcome { status, summary: summary.into(), witnesses }
}

/// Shared oracles, computed at most once per algebra.
struct Context<'a, F> {
    g: &'a RestrictedLieAlgebra<F>,
    opts: VerifyOptions,
    torals: OnceLock<ToralEnumeration<F>>,
    cartans: OnceLock<Vec<Subalgebra<F>>>,
}

impl<'a, F: PrimeField> Context<'a, F> {
    fn torals(&self) -> &ToralEnumeration<F> {
        self.torals.get_or_init(|| enumerate_torals(self.g, self.opts.seed, self.opts.budget))
    }

    fn exact(&self) -> bool {
        self.torals().exactness == Exactness::Exact
    }

    /// Centralizers of the enumerated maximal torals.
    fn cartans(&self) -> &[Subalgebra<F>] {
        self.cartans.get_or_init(|| {
            let mut out: Vec<Subalgebra<F>> =
                self.torals().maximal.iter().map(|t| self.g.centralizer(t)).collect();
            out.sort_by(|a, b| a.space().cmp(b.space()));
            out.dedup_by(|a, b| a.space() == b.space());
            out
        })
    }

    fn sub(&self, role: &str, s: &Subspace<F>) -> Witness {
        Witness::subspace(self.g, role, s)
    }

    /// Inconclusive unless the enumeration was exhaustive.
    fn universal(&self, checked: usize, what: &str) -> Outcome {
        if self.exact() {
            outcome(Status::Pass, format!("{checked} {what} checked (exhaustive)"), Vec::new())
        } else {
            outcome(
                Status::Inconclusive,
                format!("{checked} {what} checked; element sweep exceeds budget {}", self.opts.budget),
                Vec::new(),
            )
        }
    }
}

/// Runs the selected claims on `g`, in the order given.
pub fn verify_theorems<F: PrimeField>(
    g: &RestrictedLieAlgebra<F>,
    claims: &[Claim],
    opts: VerifyOptions,
) -> Vec<VerificationReport> {
    let ctx = Context { g, opts, torals: OnceLock::new(), cartans: OnceLock::new() };
    claims
        .iter()
        .map(|&claim| {
            let start = Instant::now();
            let o = match claim {
                Claim::Thm15 => thm15(&ctx),
                Claim::Cor13 => cor13(&ctx),
                Claim::Thm12v => thm12v(&ctx),
                Claim::Lemma32 => lemma32(&ctx),
                Claim::Lemma43 => lemma43(&ctx),
                Claim::Cor42 => cor42(&ctx),
                Claim::Case1CentralQuotient => case1(&ctx),
                Claim::Case2Lift => case2(&ctx),
            };
            VerificationReport {
                claim_id: claim.id(),
                algebra: g.name().to_string(),
                p: F::P,
                status: o.status,
                summary: o.summary,
                witnesses: o.witnesses,
                seed: opts.seed,
                budget: opts.budget,
                millis: opts.timings.then(|| start.elapsed().as_millis() as u64),
            }
        })
        .collect()
}

fn thm15<F: PrimeField>(ctx: &Context<F>) -> Outcome {
    let g = ctx.g;
    let e = ctx.torals();
    let nilpotent = g.is_nilpotent();
    let center = g.center().into_space();
    let non_central = e.torals.iter().find(|t| !t.is_subspace_of(&center));
    let unique = e.maximal.len() == 1;
    let all_central = non_central.is_none();
    let count = e.maximal.len();
    let plural = if count == 1 { "" } else { "s" };
    let mut witnesses = Vec::new();
    let mut summary = format!(
        "{}, {count} maximal toral{plural}",
        if nilpotent { "nilpotent" } else { "not nilpotent" }
    );
    if let Some(t) = non_central {
        summary += &format!(", non-central toral witness {}", g.format_subspace(t));
        witnesses.push(ctx.sub("non-central toral", t));
    } else if unique {
        summary = format!(
            "{}, unique maximal toral {}",
            if nilpotent { "nilpotent" } else { "not nilpotent" },
            g.format_subspace(&e.maximal[0])
        );
        witnesses.push(ctx.sub("maximal toral", &e.maximal[0]));
    }
    if nilpotent == unique && unique == all_central {
        if ctx.exact() {
            return outcome(Status::Pass, summary, witnesses);
        }
        return outcome(Status::Inconclusive, format!("{summary} (sampled enumeration)"), witnesses);
    }
    // The enumeration only ever under-reports torals, so disagreement
    // found in a sample is already a counterexample unless it rests on
    // uniqueness, which a sample cannot certify.
    if !ctx.exact() && unique {
        return outcome(Status::Inconclusive, format!("{summary} (sampled enumeration)"), witnesses);
    }
    for t in &e.maximal {
        witnesses.push(ctx.sub("maximal toral", t));
    }
    outcome(Status::Fail, format!("predicates disagree: {summary}"), witnesses)
}

fn cor13<F: PrimeField>(ctx: &Context<F>) -> Outcome {
    let g = ctx.g;
    let mut torals: Vec<Subspace<F>> = ctx.torals().maximal.clone();
    if let Ok(cert) = maximal_toral(g, ctx.opts.seed, ctx.opts.budget) {
        if !torals.contains(cert.toral.space()) {
            torals.push(cert.toral.into_space());
        }
    }
    for t in &torals {
        let c = match cartan_from_toral(g, t) {
            Ok(c) => c,
            Err(e) => return outcome(Status::Fail, format!("maximal toral rejected: {e}"), vec![ctx.sub("toral", t)]),
        };
        if !is_cartan(g, c.space()) {
            return outcome(Status::Fail, "centralizer of a maximal toral is not Cartan", vec![ctx.sub("toral", t)]);
        }
        let back = match toral_from_cartan(g, c.space()) {
            Ok(b) => b,
            Err(e) => return outcome(Status::Fail, e.to_string(), vec![ctx.sub("cartan", c.space())]),
        };
        if back.space() != t {
            return outcome(
                Status::Fail,
                "toral_from_cartan(cartan_from_toral(T)) != T",
                vec![ctx.sub("toral", t), ctx.sub("cartan", c.space()), ctx.sub("round trip", back.space())],
            );
        }
        match cartan_from_toral(g, back.space()) {
            Ok(c2) if c2.space() == c.space() => {}
            _ => {
                return outcome(
                    Status::Fail,
                    "cartan_from_toral(toral_from_cartan(C)) != C",
                    vec![ctx.sub("cartan", c.space())],
                )
            }
        }
    }
    ctx.universal(torals.len(), "maximal torals")
}

fn thm12v<F: PrimeField>(ctx: &Context<F>) -> Outcome {
    let g = ctx.g;
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.opts.seed);
    let full = Subspace::full(g.dim());
    let cartans = ctx.cartans();
    for c in cartans {
        let c = c.space();
        for t in &ctx.torals().torals {
            let tc = g.bracket_spaces(t, c);
            if tc.is_subspace_of(c) && !tc.is_zero() {
                return outcome(
                    Status::Fail,
                    "a toral normalizing a Cartan does not centralize it",
                    vec![ctx.sub("cartan", c), ctx.sub("toral", t)],
                );
            }
        }
        if c.is_full() {
            continue;
        }
        let mut drawn = 0;
        for _ in 0..OUTSIDE_SAMPLES * 16 {
            if drawn == OUTSIDE_SAMPLES {
                break;
            }
            let x = random_vector_in(&full, &mut rng);
            if c.contains(&x) {
                continue;
            }
            drawn += 1;
            let x = Element::new(x);
            let mut gens: Vec<Element<F>> = c.basis_vectors().map(|v| Element::new(v.to_vec())).collect();
            gens.push(x.clone());
            let closure = g.closure(&gens, ClosureMode::Subalgebra);
            if g.is_nilpotent_subalgebra(closure.space()) {
                return outcome(
                    Status::Fail,
                    "a subalgebra strictly containing a Cartan is nilpotent",
                    vec![ctx.sub("cartan", c), Witness::element(g, "outside element", &x)],
                );
            }
        }
    }
    ctx.universal(cartans.len(), "Cartan subalgebras")
}

fn lemma32<F: PrimeField>(ctx: &Context<F>) -> Outcome {
    let g = ctx.g;
    let (seed, budget) = (ctx.opts.seed, ctx.opts.budget);
    let toral = match maximal_toral(g, seed, budget) {
        Ok(cert) => cert.toral.into_space(),
        Err(e) => return outcome(Status::Inconclusive, e.to_string(), Vec::new()),
    };
    let full = Subspace::<F>::full(g.dim());
    if full.cardinality().is_none_or(|c| c > budget) {
        return outcome(Status::Inconclusive, format!("element sweep exceeds budget {budget}"), Vec::new());
    }
    let non_nilpotent = full.elements().map(Element::new).find(|x| !is_p_nilpotent_element(g, x));
    let u = match u_of(g, DEFAULT_U_BUDGET) {
        Ok(u) => u,
        Err(e) => return outcome(Status::Inconclusive, e.to_string(), Vec::new()),
    };
    let local = is_local(&u);
    let a = toral.is_zero();
    let b = non_nilpotent.is_none();
    let summary = format!(
        "maximal toral {}; every element p-nilpotent: {b}; u(g) local: {local}",
        g.format_subspace(&toral)
    );
    let mut witnesses = vec![ctx.sub("maximal toral", &toral)];
    if let Some(x) = &non_nilpotent {
        witnesses.push(Witness::element(g, "non-p-nilpotent element", x));
    }
    let status = if a == b && b == local { Status::Pass } else { Status::Fail };
    outcome(status, summary, witnesses)
}

fn lemma43<F: PrimeField>(ctx: &Context<F>) -> Outcome {
    let g = ctx.g;
    let cs = cartan_span(g, ctx.opts.seed, ctx.opts.budget);
    let witnesses: Vec<Witness> = cs.witnesses.iter().map(|c| ctx.sub("cartan", c.space())).collect();
    let summary = format!("span of {} Cartan subalgebras has dimension {} of {}", cs.witnesses.len(), cs.span.dim(), g.dim());
    if cs.is_everything() {
        outcome(Status::Pass, summary, witnesses)
    } else if cs.exhaustive {
        let mut w = witnesses;
        w.push(ctx.sub("span", &cs.span));
        outcome(Status::Fail, summary, w)
    } else {
        outcome(Status::Inconclusive, format!("{summary}; enumeration not exhaustive"), witnesses)
    }
}

fn cor42<F: PrimeField>(ctx: &Context<F>) -> Outcome {
    let g = ctx.g;
    let mut checked = 0;
    let mut cache: std::collections::HashMap<Subspace<F>, (Vec<Subspace<F>>, Exactness)> = Default::default();
    let mut exact = ctx.exact();
    for s in &ctx.torals().semisimple {
        let z = g.centralizer_of(s).into_space();
        if !cache.contains_key(&z) {
            let local = g.restrict(&z).expect("centralizers are restricted subalgebras");
            let (cs, ex) = enumerate_cartans(&local.algebra, ctx.opts.seed, ctx.opts.budget);
            let embedded = cs.iter().map(|c| local.embed_space(c.space())).collect();
            cache.insert(z.clone(), (embedded, ex));
        }
        let (cs, ex) = &cache[&z];
        exact &= *ex == Exactness::Exact;
        for c in cs {
            checked += 1;
            let fail = |why: String| {
                outcome(Status::Fail, why, vec![Witness::element(g, "semisimple", s), ctx.sub("cartan of centralizer", c)])
            };
            match extend_cartan(g, s, c) {
                Ok(out) => {
                    if !is_cartan(g, out.space()) || !c.is_subspace_of(out.space()) {
                        return fail("extension is not a Cartan subalgebra containing c".into());
                    }
                }
                Err(e) => return fail(e.to_string()),
            }
        }
    }
    let summary = format!("{checked} (semisimple, Cartan of centralizer) pairs extended");
    if exact {
        outcome(Status::Pass, summary + " (exhaustive)", Vec::new())
    } else {
        outcome(Status::Inconclusive, summary + "; enumeration not exhaustive", Vec::new())
    }
}

/// Preimage check for one central p-ideal.
fn central_preimages<F: PrimeField>(ctx: &Context<F>, z: &Subspace<F>, role: &str) -> Result<(usize, bool), Outcome> {
    let g = ctx.g;
    let q = g.quotient(z).expect("central p-closed subspaces are p-ideals");
    let (cs, ex) = enumerate_cartans(&q.algebra, ctx.opts.seed, ctx.opts.budget);
    for c in &cs {
        let pre = q.preimage(c.space());
        if !is_cartan(g, &pre) {
            return Err(outcome(
                Status::Fail,
                format!("preimage of a Cartan of g/{role} is not Cartan"),
                vec![ctx.sub(role, z), ctx.sub("preimage", &pre)],
            ));
        }
    }
    Ok((cs.len(), ex == Exactness::Exact))
}

fn case1<F: PrimeField>(ctx: &Context<F>) -> Outcome {
    let g = ctx.g;
    let center = g.center().into_space();
    let toral = toral_part(g, &center).expect("the center is abelian and p-closed").into_space();
    let mut ideals = vec![("central toral part", toral)];
    if center != ideals[0].1 {
        ideals.push(("center", center));
    }
    let mut parts = Vec::new();
    let mut exact = true;
    let mut witnesses = Vec::new();
    for (role, z) in ideals.iter().filter(|(_, z)| !z.is_zero()) {
        match central_preimages(ctx, z, role) {
            Ok((n, ex)) => {
                exact &= ex;
                parts.push(format!("{n} Cartans of g/{role}"));
                witnesses.push(ctx.sub(role, z));
            }
            Err(o) => return o,
        }
    }
    if parts.is_empty() {
        return outcome(Status::Pass, "center is zero; nothing to check", Vec::new());
    }
    let summary = format!("preimages are Cartan: {}", parts.join(", "));
    if exact {
        outcome(Status::Pass, summary, witnesses)
    } else {
        outcome(Status::Inconclusive, summary + "; enumeration not exhaustive", witnesses)
    }
}

/// Nonzero proper p-ideals: the p-nilpotent radical, a minimal p-nilpotent
/// ideal, the toral part of the center, and the p-ideal generated by `[g, g]`.
pub fn curated_ideals<F: PrimeField>(g: &RestrictedLieAlgebra<F>, seed: u64, budget: u64) -> Vec<(&'static str, Subspace<F>)> {
    let full = Subspace::full(g.dim());
    let mut out: Vec<(&'static str, Subspace<F>)> = Vec::new();
    let radical = p_nilpotent_radical(g, seed, budget);
    out.push(("p-nilpotent radical", radical.ideal.into_space()));
    if let Ok(Some(m)) = minimal_p_nilpotent_ideal(g, seed, budget) {
        out.push(("minimal p-nilpotent ideal", m.into_space()));
    }
    let center = g.center().into_space();
    out.push(("central toral part", toral_part(g, &center).expect("abelian, p-closed").into_space()));
    let derived = g.bracket_spaces(&full, &full);
    out.push(("p-ideal of [g,g]", g.closure_of_space(&derived, ClosureMode::PIdeal).into_space()));
    let mut seen = std::collections::HashSet::new();
    out.retain(|(_, s)| !s.is_zero() && !s.is_full() && seen.insert(s.clone()));
    out
}

fn case2<F: PrimeField>(ctx: &Context<F>) -> Outcome {
    let g = ctx.g;
    let ideals = curated_ideals(g, ctx.opts.seed, ctx.opts.budget);
    if ideals.is_empty() {
        return outcome(Status::Pass, "no nonzero proper curated p-ideal", Vec::new());
    }
    let mut exact = ctx.exact();
    let mut lifted = 0;
    let mut witnesses = Vec::new();
    for (role, ideal) in &ideals {
        let q = g.quotient(ideal).expect("curated ideals are p-ideals");
        let (targets, ex) = enumerate_cartans(&q.algebra, ctx.opts.seed, ctx.opts.budget);
        exact &= ex == Exactness::Exact;
        for target in &targets {
            let hit = ctx.cartans().iter().find(|c| q.project_space(c.space()) == *target.space());
            match hit {
                Some(_) => lifted += 1,
                None => {
                    let status = if ctx.exact() { Status::Fail } else { Status::Inconclusive };
                    return outcome(
                        status,
                        format!("no Cartan of g maps onto a Cartan of g/({role})"),
                        vec![ctx.sub(role, ideal), ctx.sub("preimage of target", &q.preimage(target.space()))],
                    );
                }
            }
        }
        witnesses.push(ctx.sub(role, ideal));
    }
    let summary = format!("{lifted} Cartans lifted across {} quotients", ideals.len());
    if exact {
        outcome(Status::Pass, summary, witnesses)
    } else {
        outcome(Status::Inconclusive, summary + "; enumeration not exhaustive", witnesses)
    }
}
