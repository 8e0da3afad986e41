//! Classification of hypersurface germs by their low-degree Taylor data.
//!
//! - [`hessian_split`]: rank of the quadratic part and the residual germ.
//! - [`classify_cubic`]: orbit type of a ternary cubic.
//! - [`strict_lc1_screen`], [`strict_lc2_screen`]: necessary conditions for
//!   `(C^3, D)` resp. `(C^3, D/2)` to be strictly log canonical, with klt
//!   certificates where one applies.

mod cubic;
mod normal;
mod screens;
mod split;

pub use cubic::{classify_cubic, essential_vars, normalize_double_line, vertex_space, CubicType};
pub use normal::{normal_form, NormalFormKind};
pub use screens::{strict_lc1_screen, strict_lc2_screen, Lc1Verdict, Lc2Certificate, Lc2Verdict};
pub use split::{diagonalize, hessian_split, QuadReport};

use polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SingError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("germ has a nonzero constant or linear part")]
    NotSingular,
    #[error("zero germ (not reduced)")]
    NonReduced,
    #[error("expected a homogeneous cubic")]
    NotHomogeneousCubic,
    #[error("expected {expected} variables, got {got}")]
    WrongVars { expected: usize, got: usize },
    #[error("invalid normal form: {0}")]
    BadNormalForm(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}
