//! Log canonical thresholds of hypersurface germs.
//!
//! Exact values for plane curves come from an embedded resolution
//! ([`curve_lct`]); everything else is a one-sided bound carrying its
//! certificate ([`weighted_bound`], [`sum_lct`], [`pencil_klt_certificate`]).

mod curve;
mod pencil;
mod sum;
mod threshold;
mod weights;

pub use curve::{binomial, curve_lct, resolve, Node, ResolutionTree};
pub use pencil::{pencil_klt_certificate, restrict_pencil, PencilCertificate, PENCIL_SEED};
pub use sum::{double_point_klt, sum_lct};
pub use threshold::{Certificate, Kind, Threshold};
pub use weights::{facet_normals, newton_support, newton_vertices, primitive, weight_search, weighted_bound};

use polyring::PolyError;
use singclass::SingError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LctError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Sing(#[from] SingError),
    #[error("zero germ")]
    ZeroGerm,
    #[error("germ does not vanish at the origin")]
    NotThroughOrigin,
    #[error("expected {expected} variables, got {got}")]
    WrongVars { expected: usize, got: usize },
    #[error("curve is not reduced (or its singularity is not isolated)")]
    NonReduced,
    #[error("a singular point of a strict transform is not rational")]
    IrrationalCenter,
    #[error("truncation order {order} is too low to resolve; rerun at higher order")]
    Truncation { order: u32 },
    #[error("resolution did not terminate")]
    TooManyBlowups,
    #[error("thresholds refer to overlapping variables")]
    OverlappingVars,
    #[error("cannot add an upper bound to a lower bound")]
    IncompatibleKinds,
    #[error("bad pencil ({0}, {1})")]
    BadPencil(usize, usize),
    #[error("restriction is non-reduced for {locus}")]
    PencilNonReduced { locus: String },
    #[error("internal: {0}")]
    Internal(String),
}
