//! Codimension chain for the quartic double solid: conditions on the cubic
//! term of the restricted equation, translated to conditions on `f`.

use polyring::Monomial;
use serde::Serialize;

use crate::{linear_codim, locus_codim, CoeffSpace, GenError, Parametrization};

/// The cubic term absorbs `f_2 · l` for a free linear form `l` (three
/// coefficients), so a condition of codimension `c` on it costs `c - 3`
/// on the coefficients of `f`.
pub const CUBIC_TERM_OFFSET: i64 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LedgerEntry {
    pub name: &'static str,
    /// Codimension computed in its own coefficient space.
    pub computed: usize,
    pub offset: i64,
    /// `computed - offset`, the cost on the coefficients of `f`.
    pub on_f: i64,
    /// The value stated in the source argument.
    pub stated: i64,
}

impl LedgerEntry {
    fn new(name: &'static str, computed: usize, offset: i64, stated: i64) -> Self {
        LedgerEntry { name, computed, offset, on_f: computed as i64 - offset, stated }
    }

    pub fn matches(&self) -> bool {
        self.on_f == self.stated
    }
}

pub fn quartic_section_ledger(trials: usize, seed: u64) -> Result<Vec<LedgerEntry>, GenError> {
    let cubics = CoeffSpace::forms(3, 3);
    let all_cubic: Vec<Monomial> = cubics.basis.iter().cloned().map(Monomial).collect();
    let triple = locus_codim(&Parametrization::product_of_linear_forms(3, &[3])?, trials, seed)?;
    let double = locus_codim(&Parametrization::product_of_linear_forms(3, &[2, 1])?, trials, seed)?;
    // a_0..a_4: the x2, x3 quartic coefficients after the cubic term is x1^2 x2
    let quartics = CoeffSpace::forms(3, 4);
    let binary: Vec<Monomial> = (0..=4).map(|i| Monomial(vec![0, 4 - i, i])).collect();
    let quadrics = CoeffSpace::forms(3, 2);
    let all_quadric: Vec<Monomial> = quadrics.basis.iter().cloned().map(Monomial).collect();
    Ok(vec![
        LedgerEntry::new("quadric term of a plane section vanishes", linear_codim(&quadrics, &all_quadric)?, 0, 6),
        LedgerEntry::new("cubic term vanishes", linear_codim(&cubics, &all_cubic)?, CUBIC_TERM_OFFSET, 7),
        LedgerEntry::new("cubic term is a triple line", triple.codim, CUBIC_TERM_OFFSET, 4),
        LedgerEntry::new("cubic term is a double line plus a line", double.codim, CUBIC_TERM_OFFSET, 2),
        LedgerEntry::new("all a_i vanish", linear_codim(&quartics, &binary)?, 0, 5),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproduces_the_chain() {
        let ledger = quartic_section_ledger(3, 7).unwrap();
        let on_f: Vec<i64> = ledger.iter().map(|e| e.on_f).collect();
        assert_eq!(on_f, vec![6, 7, 4, 2, 5]);
        assert!(ledger.iter().all(LedgerEntry::matches));
    }
}
