use std::collections::BTreeMap;

use num_traits::{One, Zero};
use polyring::{Germ, Matrix, Monomial, Rat};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{CoeffSpace, GenError};

/// Sample points have integer coordinates in `[-SAMPLE_BOUND, SAMPLE_BOUND]`.
pub const SAMPLE_BOUND: i64 = 10_000;

/// A polynomial map from affine `source_dim`-space into a coefficient
/// space; `coords[i]` is the coefficient of `target.basis[i]`. The map is
/// homogeneous, so its image is a cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization {
    pub source_dim: usize,
    pub target: CoeffSpace,
    pub coords: Vec<Germ>,
}

impl Parametrization {
    /// From a form in `source_dim + target.nvars` variables, source first.
    pub fn from_form(source_dim: usize, target: &CoeffSpace, form: &Germ) -> Result<Self, GenError> {
        let n = target.nvars;
        if form.nvars() != source_dim + n {
            return Err(GenError::NotInto(format!("form has {} variables", form.nvars())));
        }
        let mut parts: BTreeMap<usize, Vec<(Monomial, Rat)>> = BTreeMap::new();
        for (m, c) in form.terms() {
            let x = &m.0[source_dim..];
            let i = target.index_of(x).ok_or_else(|| GenError::NotInto(format!("monomial {x:?}")))?;
            parts.entry(i).or_default().push((Monomial(m.0[..source_dim].to_vec()), c.clone()));
        }
        let coords = (0..target.dim())
            .map(|i| Germ::exact_from_terms(source_dim, parts.remove(&i).unwrap_or_default()))
            .collect::<Vec<_>>();
        let degrees: std::collections::BTreeSet<u32> = coords.iter().filter_map(|c| c.is_homogeneous()).collect();
        if degrees.len() > 1 || coords.iter().any(|c| !c.is_zero() && c.is_homogeneous().is_none()) {
            return Err(GenError::NotInto("map is not homogeneous".into()));
        }
        Ok(Parametrization { source_dim, target: target.clone(), coords })
    }

    /// `Π l_k^{e_k}` for independent linear forms `l_k` in `nvars` variables.
    pub fn product_of_linear_forms(nvars: usize, exponents: &[u32]) -> Result<Self, GenError> {
        let source_dim = nvars * exponents.len();
        let total = source_dim + nvars;
        let deg: u32 = exponents.iter().sum();
        let order = 2 * deg + 1;
        let mut form = Germ::constant(total, order, Rat::one());
        for (k, &e) in exponents.iter().enumerate() {
            let mut l = Germ::zero(total, order);
            for i in 0..nvars {
                l = l.add(&Germ::var(total, order, k * nvars + i).mul(&Germ::var(total, order, source_dim + i)));
            }
            form = form.mul(&l.pow(e));
        }
        Self::from_form(source_dim, &CoeffSpace::forms(nvars, deg), &form)
    }

    pub fn degree(&self) -> u32 {
        self.coords.iter().filter_map(Germ::degree).max().unwrap_or(0)
    }

    fn jacobian_rank(&self, point: &[Rat]) -> usize {
        let rows =
            self.coords.iter().map(|c| (0..self.source_dim).map(|j| c.partial(j).eval(point)).collect()).collect();
        Matrix::from_rows(rows).rank()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocusReport {
    /// Rank of the Jacobian: dimension of the image cone.
    pub affine_dim: usize,
    /// Dimension of the image in the projectivized space.
    pub image_dim: usize,
    pub target_dim: usize,
    pub codim: usize,
    /// Running maximum of the rank after each trial.
    pub ranks: Vec<usize>,
    /// Upper bound on the probability that every trial underestimated the
    /// rank (Schwartz-Zippel).
    #[serde(with = "polyring::rat::serde_rat")]
    pub failure_bound: Rat,
}

pub fn locus_codim(p: &Parametrization, trials: usize, seed: u64) -> Result<LocusReport, GenError> {
    if trials == 0 {
        return Err(GenError::NoTrials);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ranks = Vec::with_capacity(trials);
    let mut best = 0;
    for _ in 0..trials {
        let point: Vec<Rat> =
            (0..p.source_dim).map(|_| Rat::from_integer(rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND).into())).collect();
        best = best.max(p.jacobian_rank(&point));
        ranks.push(best);
    }
    // a maximal nonzero minor has degree <= r (deg - 1) in the point
    let r = p.source_dim.min(p.target.dim()) as i64;
    let per_trial = Rat::new((r * (i64::from(p.degree()) - 1).max(0)).into(), (2 * SAMPLE_BOUND + 1).into());
    let failure_bound = (0..trials).fold(Rat::one(), |acc, _| acc * &per_trial).min(Rat::one());
    let image_dim = best.saturating_sub(1);
    let target_dim = p.target.projective_dim();
    Ok(LocusReport {
        affine_dim: best,
        image_dim,
        target_dim,
        codim: if best.is_zero() { target_dim + 1 } else { target_dim - image_dim },
        ranks,
        failure_bound,
    })
}

/// Incidence `I = {(P, X) : P ∈ X} ⊂ P^n × |O(d)|` and a bad locus `S ⊂ I`
/// whose fibre over each `P` has codimension `fiber_codim` in that of `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IncidenceSetup {
    pub n: usize,
    pub fiber_codim: usize,
}

/// `dim S <= dim I - n = dim |O(d)| - 1`, so a general member avoids `S`.
pub fn avoid_generic(setup: IncidenceSetup) -> bool {
    setup.fiber_codim >= setup.n
}
