//! Klt certificates for `(C^3, D/2)` from a pencil of plane sections.
//!
//! The section `{x_b = λ·x_a}` through the origin restricts `g` to a plane
//! curve germ; when that curve has threshold above 1/2, inversion of
//! adjunction makes the ambient pair klt. The curve is checked exactly at
//! sampled `λ`, and a witness polynomial in `λ` records which parameters
//! keep the generic Newton polygon.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use polyring::{Germ, Monomial, Rat, UPoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curve::curve_lct;
use crate::threshold::{Certificate, Kind, Threshold};
use crate::weights::newton_vertices;
use crate::LctError;

pub const PENCIL_SEED: u64 = 0x5eed_0001;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilCertificate {
    /// `(a, b)`: the section is `x_b = λ·x_a`.
    pub pencil: (usize, usize),
    pub samples: Vec<Rat>,
    pub thresholds: Vec<Threshold>,
    /// Product of the coefficients (in `λ`) of the generic Newton vertices.
    pub witness: UPoly,
    pub certified: bool,
    pub failure: Option<String>,
}

impl PencilCertificate {
    /// `lct > 1/2` when certified.
    pub fn to_threshold(&self) -> Option<Threshold> {
        self.certified.then(|| Threshold {
            value: Rat::new(1.into(), 2.into()),
            kind: Kind::LowerBound,
            certificate: Certificate::Pencil(Box::new(self.clone())),
        })
    }
}

/// Kept variables, and coefficients in `Q[λ]` keyed by exponent.
pub type Restriction = (Vec<usize>, BTreeMap<Vec<u32>, UPoly>);

/// Restriction of `g` to `x_b = λ·x_a` as a polynomial in the two remaining
/// variables with coefficients in `Q[λ]`.
pub fn restrict_pencil(g: &Germ, a: usize, b: usize) -> Result<Restriction, LctError> {
    if g.nvars() != 3 {
        return Err(LctError::WrongVars { expected: 3, got: g.nvars() });
    }
    if a == b || a > 2 || b > 2 {
        return Err(LctError::BadPencil(a, b));
    }
    let order = g.order() + 1;
    let images: Vec<Germ> = (0..3)
        .map(|i| {
            if i == b {
                let mut e = vec![0; 4];
                e[a] = 1;
                e[3] = 1;
                Germ::monomial(order, &e, Rat::one())
            } else {
                Germ::var(4, order, i)
            }
        })
        .collect();
    let mut lifted = g.clone();
    if !g.is_truncated() {
        lifted = g.with_order(order)?;
    }
    let h = lifted.compose(&images)?;
    let keep: Vec<usize> = (0..3).filter(|&i| i != b).collect();
    let mut coeffs: BTreeMap<Vec<u32>, Vec<Rat>> = BTreeMap::new();
    for (m, c) in h.terms() {
        let key: Vec<u32> = keep.iter().map(|&i| m.0[i]).collect();
        let l = m.0[3] as usize;
        let v = coeffs.entry(key).or_default();
        if v.len() <= l {
            v.resize(l + 1, Rat::zero());
        }
        v[l] += c;
    }
    let out = coeffs.into_iter().map(|(k, v)| (k, UPoly::new(v))).filter(|(_, p)| !p.is_zero()).collect();
    Ok((keep, out))
}

fn specialize(g: &Germ, coeffs: &BTreeMap<Vec<u32>, UPoly>, lambda: &Rat) -> Germ {
    let terms = coeffs.iter().map(|(m, p)| (Monomial(m.clone()), p.eval(lambda)));
    let mut h = Germ::from_terms(2, g.order(), terms);
    if g.is_truncated() {
        h = h.mark_truncated();
    }
    h
}

pub fn pencil_klt_certificate(g: &Germ, pencil: (usize, usize), samples: usize) -> Result<PencilCertificate, LctError> {
    let (a, b) = pencil;
    let (_, coeffs) = restrict_pencil(g, a, b)?;
    let support: Vec<Vec<u32>> = coeffs.keys().cloned().collect();
    let witness = newton_vertices(&support).iter().fold(UPoly::one(), |w, v| w.mul(&coeffs[v]));
    let mut cert = PencilCertificate {
        pencil,
        samples: Vec::new(),
        thresholds: Vec::new(),
        witness: witness.clone(),
        certified: false,
        failure: None,
    };
    if coeffs.is_empty() || witness.is_zero() {
        cert.failure = Some("restriction vanishes identically".into());
        return Ok(cert);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(PENCIL_SEED);
    let mut tries = 0;
    while cert.samples.len() < samples {
        tries += 1;
        if tries > 10_000 {
            return Err(LctError::Internal("could not draw pencil parameters".into()));
        }
        let lambda = Rat::new(rng.gen_range(-30i64..=30).into(), rng.gen_range(1i64..=6).into());
        if cert.samples.contains(&lambda) || witness.eval(&lambda).is_zero() {
            continue;
        }
        cert.samples.push(lambda);
    }
    let half = Rat::new(1.into(), 2.into());
    let mut non_reduced = 0;
    for lambda in cert.samples.clone() {
        let curve = specialize(g, &coeffs, &lambda);
        match curve_lct(&curve) {
            Ok(t) => {
                if t.value <= half && cert.failure.is_none() {
                    cert.failure = Some(format!(
                        "lct {} <= 1/2 at λ = {}",
                        polyring::fmt_rat(&t.value),
                        polyring::fmt_rat(&lambda)
                    ));
                }
                cert.thresholds.push(t);
            }
            Err(LctError::NonReduced) => non_reduced += 1,
            Err(e) => return Err(e),
        }
    }
    if non_reduced == samples && samples > 0 {
        return Err(LctError::PencilNonReduced { locus: "all λ".into() });
    }
    if non_reduced > 0 && cert.failure.is_none() {
        cert.failure = Some(format!("{non_reduced} sampled sections are non-reduced"));
    }
    cert.certified = cert.failure.is_none();
    Ok(cert)
}
