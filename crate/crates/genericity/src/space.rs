use std::collections::BTreeSet;

use polyring::Monomial;
use serde::Serialize;

use crate::GenError;

/// Coefficients of forms of the given degrees in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoeffSpace {
    pub nvars: usize,
    pub degrees: Vec<u32>,
    pub basis: Vec<Vec<u32>>,
}

fn monomials(nvars: usize, deg: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![deg]];
    }
    let mut out = Vec::new();
    for first in (0..=deg).rev() {
        for mut rest in monomials(nvars - 1, deg - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl CoeffSpace {
    pub fn forms(nvars: usize, deg: u32) -> Self {
        Self::graded(nvars, &[deg])
    }

    pub fn graded(nvars: usize, degrees: &[u32]) -> Self {
        let basis = degrees.iter().flat_map(|&d| monomials(nvars, d)).collect();
        CoeffSpace { nvars, degrees: degrees.to_vec(), basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the projectivization (forms up to scaling).
    pub fn projective_dim(&self) -> usize {
        self.dim() - 1
    }

    pub fn index_of(&self, m: &[u32]) -> Option<usize> {
        self.basis.iter().position(|b| b == m)
    }
}

/// Vanishing of the listed coefficients: independent linear conditions.
pub fn linear_codim(space: &CoeffSpace, vanishing: &[Monomial]) -> Result<usize, GenError> {
    let mut seen = BTreeSet::new();
    for m in vanishing {
        let i = space.index_of(&m.0).ok_or_else(|| GenError::UnknownMonomial(m.0.clone()))?;
        seen.insert(i);
    }
    Ok(seen.len())
}
