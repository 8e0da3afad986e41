//! Codimension files: loci in coefficient spaces, each with the offset that
//! translates its codimension into a condition on the original equation.

use genericity::{linear_codim, locus_codim, CoeffSpace, Parametrization};
use polyring::{fmt_rat, Monomial};
use serde::{Deserialize, Serialize};

use crate::CoregError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Locus {
    /// Prescribed coefficients vanish.
    Linear { nvars: usize, degrees: Vec<u32>, vanishing: Vec<Vec<u32>> },
    /// Products `Π l_i^{e_i}` of linear forms.
    Product { nvars: usize, exponents: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocusSpec {
    pub name: String,
    #[serde(flatten)]
    pub locus: Locus,
    #[serde(default)]
    pub offset: i64,
    #[serde(default)]
    pub stated: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodimFile {
    pub name: String,
    pub citation: String,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_trials")]
    pub trials: usize,
    pub loci: Vec<LocusSpec>,
}

fn default_trials() -> usize {
    3
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocusResult {
    pub name: String,
    pub codim: usize,
    pub offset: i64,
    pub on_f: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stated: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure_bound: Option<String>,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodimReport {
    pub name: String,
    pub citation: String,
    pub seed: u64,
    pub loci: Vec<LocusResult>,
}

impl CodimReport {
    pub fn ok(&self) -> bool {
        self.loci.iter().all(|l| l.matches)
    }
}

pub fn run_codim(file: &CodimFile) -> Result<CodimReport, CoregError> {
    let mut loci = Vec::new();
    for entry in &file.loci {
        let (codim, failure_bound) = match &entry.locus {
            Locus::Linear { nvars, degrees, vanishing } => {
                let space = CoeffSpace::graded(*nvars, degrees);
                let mons: Vec<Monomial> = vanishing.iter().cloned().map(Monomial).collect();
                (linear_codim(&space, &mons)?, None)
            }
            Locus::Product { nvars, exponents } => {
                let r =
                    locus_codim(&Parametrization::product_of_linear_forms(*nvars, exponents)?, file.trials, file.seed)?;
                (r.codim, Some(fmt_rat(&r.failure_bound)))
            }
        };
        let on_f = codim as i64 - entry.offset;
        loci.push(LocusResult {
            name: entry.name.clone(),
            codim,
            offset: entry.offset,
            on_f,
            stated: entry.stated,
            failure_bound,
            matches: entry.stated.is_none_or(|s| s == on_f),
        });
    }
    Ok(CodimReport { name: file.name.clone(), citation: file.citation.clone(), seed: file.seed, loci })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_quartic_chain() {
        let file: CodimFile = serde_json::from_str(include_str!("../codim/quartic_sections.json")).unwrap();
        let r = run_codim(&file).unwrap();
        assert!(r.ok(), "{r:?}");
        let on_f: Vec<i64> = r.loci.iter().map(|l| l.on_f).collect();
        assert_eq!(on_f, vec![6, 7, 4, 2, 5]);
    }
}
