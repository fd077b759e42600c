//! Maximal toral subalgebras, Cartan subalgebras and the correspondence
//! between them, plus the claim-verification harness.
//!
//! A toral subalgebra `T` is certified maximal when its centralizer `c` is
//! nilpotent and the toral part of the center of `c` is `T` itself: any
//! toral `T' ⊇ T` is abelian, hence lies in `c`; in a nilpotent algebra
//! toral elements are central, so `T'` lands in the toral part of `z(c)`.

mod enumerate;
mod span;
mod toral;
pub mod verify;

pub use enumerate::{enumerate_cartans, enumerate_maximal_torals, enumerate_torals, ToralEnumeration};
pub use span::{cartan_span, CartanSpan};
pub use toral::{
    cartan_from_toral, certify_toral, extend_cartan, is_cartan, is_maximal_toral, maximal_toral,
    toral_from_cartan, CertificateChecks, MaximalToralCertificate,
};

use thiserror::Error;

use crate::algebra::Subalgebra;

/// Default cap on exhaustive element sweeps.
pub const DEFAULT_BUDGET: u64 = 300_000;

/// Random samples drawn per ascent round before sweeping exhaustively.
pub const SAMPLES_PER_ROUND: usize = 64;

/// An exhaustive sweep would have exceeded the element budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("sweep of {needed} elements exceeds budget {budget}")]
pub struct BudgetExceeded<F> {
    /// Toral subalgebra reached before giving up.
    pub partial: Subalgebra<F>,
    pub needed: u64,
    pub budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CartanError<F> {
    #[error("subalgebra is not toral")]
    NotToral,
    #[error("toral subalgebra is not maximal")]
    NotMaximalToral,
    #[error("subalgebra is not a Cartan subalgebra")]
    NotCartan,
    #[error("element is not semisimple")]
    NotSemisimple,
    #[error("subalgebra is not a Cartan subalgebra of the centralizer")]
    NotCartanOfCentralizer,
    /// The central toral part of `c` was not maximal toral in `g`, or the
    /// resulting Cartan failed its checks. Carries the offending toral.
    #[error("extension of a Cartan subalgebra failed its checks")]
    ExtensionFailed { toral: Subalgebra<F> },
}
