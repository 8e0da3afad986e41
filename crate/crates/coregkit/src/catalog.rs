use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::CoregError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    CoregZeroAll,
    CoregZeroGeneral,
    CoregAtLeastOneGeneral,
    Coreg1EqualsTwoGeneral,
    CoregAtMostOneGeneral,
}

impl Verdict {
    pub const ALL: [Verdict; 5] = [
        Verdict::CoregZeroAll,
        Verdict::CoregZeroGeneral,
        Verdict::CoregAtLeastOneGeneral,
        Verdict::Coreg1EqualsTwoGeneral,
        Verdict::CoregAtMostOneGeneral,
    ];

    /// Does a general member have coregularity 0?
    pub fn general_coreg_zero(self) -> bool {
        matches!(self, Verdict::CoregZeroAll | Verdict::CoregZeroGeneral)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Verdict {
    type Err = CoregError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Verdict::ALL
            .into_iter()
            .find(|v| v.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| CoregError::Input(format!("unknown verdict {s:?}")))
    }
}

/// How `verify` rebuilds a boundary for the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    Toric,
    /// Two boundary components meeting in a line and a residual curve; the
    /// line is blown up. `pullback`: "none" (the boundary lives on X),
    /// "line" (X is the blow-up of the line), "cited" (X blows up some other
    /// curve inside a component).
    LinePair {
        ambient: String,
        normals: Vec<[i64; 2]>,
        ldot: [i64; 2],
        pullback: String,
        residual: String,
    },
    /// General members of `|d_i H|`, `Σ d_i` the index of the ambient space.
    Sections {
        ambient: String,
        h_cubed: usize,
        degrees: Vec<usize>,
        pullback: String,
    },
    /// `P^1 × S` with `S` a del Pezzo surface of the given degree.
    Product {
        dp_degree: u32,
    },
    /// A degree 1 del Pezzo section with a nodal anticanonical curve.
    Dp1Nodal,
    RecordedRegs {
        reg1: i64,
        reg2: i64,
    },
    RecordedReg1 {
        reg1: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub id: String,
    pub picard_rank: u32,
    pub index: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
    pub verdict: Verdict,
    pub toric: bool,
    pub evidence: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reg1: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coreg1: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Catalog {
    pub version: String,
    pub families: Vec<FamilyRecord>,
}

const FAMILIES_JSON: &str = include_str!("../data/families.json");

pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| serde_json::from_str(FAMILIES_JSON).expect("embedded family data parses"))
}

pub fn family(id: &str) -> Result<&'static FamilyRecord, CoregError> {
    catalog().families.iter().find(|f| f.id == id).ok_or_else(|| CoregError::UnknownId(id.to_string()))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filter {
    #[serde(default)]
    pub id: Option<String>,
    #[serde(default)]
    pub rank: Option<u32>,
    /// Any of these verdicts; empty means no restriction.
    #[serde(default)]
    pub verdicts: Vec<Verdict>,
    #[serde(default)]
    pub toric: Option<bool>,
}

pub fn table_query(filter: &Filter) -> Result<Vec<&'static FamilyRecord>, CoregError> {
    if let Some(id) = &filter.id {
        family(id)?;
    }
    Ok(catalog()
        .families
        .iter()
        .filter(|f| filter.id.as_ref().is_none_or(|id| &f.id == id))
        .filter(|f| filter.rank.is_none_or(|r| f.picard_rank == r))
        .filter(|f| filter.verdicts.is_empty() || filter.verdicts.contains(&f.verdict))
        .filter(|f| filter.toric.is_none_or(|t| f.toric == t))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tallies {
    pub total: usize,
    pub general_coreg_zero: usize,
    pub per_verdict: Vec<(Verdict, usize)>,
    pub toric: usize,
}

pub fn tallies() -> Tallies {
    let fams = &catalog().families;
    Tallies {
        total: fams.len(),
        general_coreg_zero: fams.iter().filter(|f| f.verdict.general_coreg_zero()).count(),
        per_verdict: Verdict::ALL.iter().map(|&v| (v, fams.iter().filter(|f| f.verdict == v).count())).collect(),
        toric: fams.iter().filter(|f| f.toric).count(),
    }
}
