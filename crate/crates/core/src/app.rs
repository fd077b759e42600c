//! Orchestration shared by the command-line tool and the tests.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::RestrictedLieAlgebra;
use crate::cartan::verify::{verify_theorems, Claim, Status, VerificationReport, VerifyOptions, Witness};
use crate::cartan::{enumerate_maximal_torals, maximal_toral};
use crate::corpus::{CorpusEntry, ExpectedFacts};
use crate::dispatch::AnyAlgebra;
use crate::field::PrimeField;
use crate::sstheory::{p_nilpotent_radical, Exactness};
use crate::with_algebra;

/// Process exit code for a set of statuses: 0 all pass, 1 any fail,
/// 2 any inconclusive and no fail.
pub fn exit_code<'a>(statuses: impl IntoIterator<Item = &'a Status>) -> i32 {
    let mut code = 0;
    for s in statuses {
        match s {
            Status::Fail => return 1,
            Status::Inconclusive => code = 2,
            Status::Pass => {}
        }
    }
    code
}

/// Recomputes the regression facts of an algebra. `maximal_torals` is
/// `None` when the enumeration was not exhaustive.
pub fn derive_facts<F: PrimeField>(g: &RestrictedLieAlgebra<F>, seed: u64, budget: u64) -> ExpectedFacts {
    let radical = p_nilpotent_radical(g, seed, budget);
    let (torals, exactness) = enumerate_maximal_torals(g, seed, budget);
    ExpectedFacts {
        nilpotent: g.is_nilpotent(),
        radical_dim: radical.ideal.dim(),
        maximal_torals: (exactness == Exactness::Exact).then_some(torals.len()),
    }
}

/// Compares recorded facts with recomputed ones. A recorded `None` for
/// the toral count is not compared.
pub fn facts_report(entry: &CorpusEntry, opts: VerifyOptions) -> VerificationReport {
    let g = entry.build();
    let derived = with_algebra!(&g, g => derive_facts(g, opts.seed, opts.budget));
    let expected = &entry.expected;
    let torals_ok = expected.maximal_torals.is_none() || expected.maximal_torals == derived.maximal_torals;
    let ok = derived.nilpotent == expected.nilpotent && derived.radical_dim == expected.radical_dim && torals_ok;
    let show = |f: &ExpectedFacts| {
        format!(
            "nilpotent {}, radical dim {}, maximal torals {}",
            f.nilpotent,
            f.radical_dim,
            f.maximal_torals.map_or("unknown".to_string(), |n| n.to_string())
        )
    };
    VerificationReport {
        claim_id: "corpus.facts",
        algebra: g.name().to_string(),
        p: g.p(),
        status: if ok { Status::Pass } else { Status::Fail },
        summary: if ok {
            show(&derived)
        } else {
            format!("recorded {}; derived {}", show(expected), show(&derived))
        },
        witnesses: Vec::new(),
        seed: opts.seed,
        budget: opts.budget,
        millis: None,
    }
}

pub fn verify_any(g: &AnyAlgebra, claims: &[Claim], opts: VerifyOptions) -> Vec<VerificationReport> {
    with_algebra!(g, g => verify_theorems(g, claims, opts))
}

/// Verifies every entry (facts first, then the claims), in parallel over
/// entries with `jobs` threads; output keeps the entry order.
pub fn verify_corpus(
    entries: &[CorpusEntry],
    claims: &[Claim],
    opts: VerifyOptions,
    jobs: usize,
) -> Vec<VerificationReport> {
    let run = |e: &CorpusEntry| {
        let mut out = vec![facts_report(e, opts)];
        out.extend(verify_any(&e.build(), claims, opts));
        out
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool");
    let per_entry: Vec<Vec<VerificationReport>> = pool.install(|| entries.par_iter().map(run).collect());
    per_entry.into_iter().flatten().collect()
}

/// Structural summary printed by `retla analyze`.
#[derive(Clone, Debug, Serialize)]
pub struct Analysis {
    pub name: String,
    pub p: u32,
    pub dim: usize,
    pub center: Witness,
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
    pub nilpotent: bool,
    pub solvable: bool,
    pub radical: Witness,
    pub radical_exactness: Exactness,
    pub radical_plain_variant: Option<Witness>,
    pub maximal_toral: Option<Witness>,
    pub certificate: Option<crate::cartan::CertificateChecks>,
    pub cartan: Option<Witness>,
}

pub fn analyze<F: PrimeField>(g: &RestrictedLieAlgebra<F>, seed: u64, budget: u64) -> Analysis {
    let derived: Vec<usize> = g.derived_series().iter().map(|s| s.dim()).collect();
    let lcs: Vec<usize> = g.lower_central_series().iter().map(|s| s.dim()).collect();
    let radical = p_nilpotent_radical(g, seed, budget);
    let cert = maximal_toral(g, seed, budget).ok();
    Analysis {
        name: g.name().to_string(),
        p: F::P,
        dim: g.dim(),
        center: Witness::subspace(g, "center", g.center().space()),
        solvable: derived.last() == Some(&0),
        nilpotent: lcs.last() == Some(&0),
        derived_series: derived,
        lower_central_series: lcs,
        radical: Witness::subspace(g, "p-nilpotent radical", radical.ideal.space()),
        radical_exactness: radical.exactness,
        radical_plain_variant: radical.plain_ideal_variant.map(|s| Witness::subspace(g, "plain ideal variant", s.space())),
        maximal_toral: cert.as_ref().map(|c| Witness::subspace(g, "maximal toral", c.toral.space())),
        certificate: cert.as_ref().map(|c| c.checks),
        cartan: cert.as_ref().map(|c| Witness::subspace(g, "cartan", c.cartan.space())),
    }
}
