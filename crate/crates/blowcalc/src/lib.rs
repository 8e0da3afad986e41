//! Intersection numbers for the blow-up arguments: classes on Hirzebruch
//! surfaces, exceptional divisors over rational curves in threefolds,
//! the Picard lattice of a blown-up plane, and the discriminant of the
//! anticanonical pencil of a degree 1 del Pezzo surface.

mod dp1;
mod hirz;
mod p2k;

pub use dp1::{dp1_discriminant, DiscriminantReport};
pub use hirz::{
    curve_blowup, hirz_intersect, hirz_is_ample, zero_stratum_certificate, zero_stratum_from_classes, BlowupResult,
    HirzClass, NormalBundle,
};
pub use p2k::{bezout_requirement, canonical_class, infeasible, p2k_intersect, P2kClass};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BlowError {
    #[error("classes live on F_{0} and F_{1}")]
    IndexMismatch(u32, u32),
    #[error("classes on blow-ups at {0} and {1} points")]
    LengthMismatch(usize, usize),
    #[error("splitting type needs a <= b, got ({0}, {1})")]
    BadSplitting(i64, i64),
    #[error("expected a binary form of degree {expected}")]
    WrongDegree { expected: usize },
    #[error(transparent)]
    Poly(#[from] polyring::PolyError),
}
