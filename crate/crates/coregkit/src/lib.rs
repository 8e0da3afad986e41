//! Scenario runner, Fano threefold family catalog and the operations behind
//! the `coregkit` command line.

pub mod builtin;
pub mod catalog;
pub mod codim;
pub mod ops;
pub mod scenario;

pub use builtin::{verify_builtin, Status, VerifyReport};
pub use catalog::{catalog, family, table_query, tallies, Construction, FamilyRecord, Filter, Tallies, Verdict};
pub use scenario::{run_scenario, run_scenario_str, Expectation, Outcome, Report, Scenario, Step, Tag};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoregError {
    #[error("input error: {0}")]
    Input(String),
    #[error("unknown operation {0:?}")]
    UnknownOp(String),
    #[error("unknown family id {0:?}")]
    UnknownId(String),
    #[error("expectation {0} has no provenance tag")]
    Untagged(usize),
    #[error("unbound reference {0:?}")]
    BadRef(String),
    #[error("family {id} has no encodable construction; verdict recorded by citation: {}", evidence.join("; "))]
    NotEncodable { id: String, evidence: Vec<String> },
    #[error("{0}")]
    Compute(String),
}

impl CoregError {
    /// Every error is an input error as far as the exit status goes.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

macro_rules! compute_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CoregError {
            fn from(e: $t) -> Self {
                CoregError::Compute(e.to_string())
            }
        }
    )*};
}

compute_error!(
    polyring::PolyError,
    singclass::SingError,
    lct::LctError,
    dualcx::DualError,
    blowcalc::BlowError,
    genericity::GenError
);

impl From<serde_json::Error> for CoregError {
    fn from(e: serde_json::Error) -> Self {
        CoregError::Input(e.to_string())
    }
}
