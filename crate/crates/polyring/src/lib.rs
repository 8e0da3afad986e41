//! Exact rational polynomial germs.
//!
//! A [`Germ`] is a polynomial in `x1..xn` kept up to a truncation order.
//! Everything is exact: coefficients are big rationals and anything that
//! could depend on dropped high-degree terms errors instead of guessing.

pub mod germ;
pub mod linalg;
pub mod ops;
pub mod parse;
pub mod rat;
pub mod univariate;

pub use germ::{Germ, LinearChange, Monomial, WeightVector, DEFAULT_ORDER};
pub use linalg::Matrix;
pub use ops::{blowup_chart, implicit_eliminate, residual_order};
pub use parse::{parse_germ, parse_germ_auto, parse_germ_with_order};
pub use rat::{fmt_rat, parse_rat, rat, Rat};
pub use univariate::{BinaryForm, UPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("degree {k} exceeds truncation order {order}")]
    Truncation { k: u32, order: u32 },
    #[error("answer could depend on terms dropped above order {0}")]
    DroppedTerms(u32),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("linear change is not invertible")]
    Singular,
    #[error("the zero germ has no order")]
    ZeroGerm,
    #[error("replacement involves x{}", .0 + 1)]
    ReplacementInvolvesVar(usize),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("system germ {0} is not x_j plus terms of degree at least 2")]
    NotSolvedForm(usize),
    #[error("elimination stalled with residual order {0}")]
    Stalled(u32),
    #[error("germ does not vanish along the center")]
    NotOnCenter,
    #[error("bad blow-up center: {0}")]
    BadCenter(String),
    #[error("weights must be positive, one per variable")]
    BadWeights,
    #[error("variable index {0} out of range")]
    VarIndex(usize),
    #[error("not homogeneous of degree {0}")]
    NotHomogeneous(u32),
    #[error("integer too large to factor")]
    TooLarge,
}
