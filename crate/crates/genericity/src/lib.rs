//! Codimension bookkeeping for "a general member avoids this" arguments:
//! linear conditions on coefficients, dimensions of parametrized loci by
//! exact Jacobian rank at random rational points, and the incidence rule.

mod ledger;
mod locus;
mod space;

pub use ledger::{quartic_section_ledger, LedgerEntry, CUBIC_TERM_OFFSET};
pub use locus::{avoid_generic, locus_codim, IncidenceSetup, LocusReport, Parametrization, SAMPLE_BOUND};
pub use space::{linear_codim, CoeffSpace};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("monomial {0:?} is not in the coefficient space")]
    UnknownMonomial(Vec<u32>),
    #[error("parametrization does not map into the space: {0}")]
    NotInto(String),
    #[error("need at least one trial")]
    NoTrials,
}
