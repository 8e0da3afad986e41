//! Dual complexes of simple normal crossing boundaries, regularity, and
//! the torus-invariant boundary of toric varieties.

mod complex;
mod fan;
mod reg;
pub mod toric;

pub use complex::{Cell, DualComplex, SncConfig, Stratum};
pub use fan::Fan;
pub use reg::{coreg_verdict, regularity, CoregVerdict, RegReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DualError {
    #[error("stratum {0:?} is empty")]
    EmptyStratum(Vec<usize>),
    #[error("stratum {0:?} has no irreducible components")]
    ZeroCount(Vec<usize>),
    #[error("stratum {set:?} meets more components than the dimension {n} allows")]
    StratumTooBig { set: Vec<usize>, n: usize },
    #[error("unknown component {0}")]
    UnknownComponent(usize),
    #[error("stratum {0:?} listed twice")]
    DuplicateStratum(Vec<usize>),
    #[error("stratum {0:?} is missing although a larger stratum contains it")]
    MissingFace(Vec<usize>),
    #[error("face index out of range for stratum {0:?}")]
    BadFaceIndex(Vec<usize>),
    #[error("bad fan: {0}")]
    BadFan(String),
    #[error("cone {0:?} is not simplicial")]
    NotSimplicial(Vec<usize>),
    #[error("fan is not complete: {0}")]
    NotComplete(String),
    #[error("fan is not Fano: {0}")]
    NotFano(String),
    #[error("regularity {reg} outside [-1, {max}]")]
    RegOutOfRange { reg: i64, max: i64 },
}
