use num_traits::{One, Zero};
use polyring::{BinaryForm, Germ, Monomial, Rat, UPoly, DEFAULT_ORDER};
use serde::{Deserialize, Serialize};

use crate::SingError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NormalFormKind {
    /// `x1^p + x2^q + x3^r + x1 x2 x3`
    Cusp { p: u32, q: u32, r: u32 },
    /// `x1^2 + q(x2, x3)` with `q = Σ c_i x2^i x3^(4-i)` squarefree.
    SimpleEllipticQuartic {
        #[serde(with = "polyring::rat::serde_rat_vec")]
        q: Vec<Rat>,
    },
    /// `x1^2 + x2^3 + a x2 x3^4 + b x3^6` with `4a^3 + 27b^2 != 0`.
    SimpleEllipticSextic {
        #[serde(with = "polyring::rat::serde_rat")]
        a: Rat,
        #[serde(with = "polyring::rat::serde_rat")]
        b: Rat,
    },
}

fn mono(e: [u32; 3]) -> Monomial {
    Monomial(e.to_vec())
}

pub fn normal_form(kind: &NormalFormKind) -> Result<Germ, SingError> {
    let bad = |s: &str| Err(SingError::BadNormalForm(s.to_string()));
    match kind {
        NormalFormKind::Cusp { p, q, r } => {
            let (p, q, r) = (*p, *q, *r);
            if p == 0 || !(p <= q && q <= r) {
                return bad("need 0 < p <= q <= r");
            }
            // 1/p + 1/q + 1/r < 1  <=>  qr + pr + pq < pqr
            let (p64, q64, r64) = (p as u64, q as u64, r as u64);
            if q64 * r64 + p64 * r64 + p64 * q64 >= p64 * q64 * r64 {
                return bad("need 1/p + 1/q + 1/r < 1");
            }
            let mut g = Germ::zero(3, DEFAULT_ORDER.max(r));
            for m in [[p, 0, 0], [0, q, 0], [0, 0, r], [1, 1, 1]] {
                g.add_term(mono(m), Rat::one());
            }
            Ok(g)
        }
        NormalFormKind::SimpleEllipticQuartic { q } => {
            if q.len() != 5 {
                return bad("quartic needs 5 coefficients");
            }
            let form = BinaryForm::new(4, UPoly::new(q.clone()));
            let groups = form.root_groups();
            if form.is_zero() || groups.iter().any(|g| g.mult > 1) || form.num_points() != Some(4) {
                return bad("quartic must have 4 distinct roots");
            }
            let mut g = Germ::zero(3, DEFAULT_ORDER);
            g.add_term(mono([2, 0, 0]), Rat::one());
            for (i, c) in q.iter().enumerate() {
                g.add_term(mono([0, i as u32, 4 - i as u32]), c.clone());
            }
            Ok(g)
        }
        NormalFormKind::SimpleEllipticSextic { a, b } => {
            let disc = Rat::from_integer(4.into()) * a * a * a + Rat::from_integer(27.into()) * b * b;
            if disc.is_zero() {
                return bad("need 4a^3 + 27b^2 != 0");
            }
            let mut g = Germ::zero(3, DEFAULT_ORDER);
            g.add_term(mono([2, 0, 0]), Rat::one());
            g.add_term(mono([0, 3, 0]), Rat::one());
            g.add_term(mono([0, 1, 4]), a.clone());
            g.add_term(mono([0, 0, 6]), b.clone());
            Ok(g)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyring::{parse_germ, rat};

    #[test]
    fn cusp_forms() {
        let g = normal_form(&NormalFormKind::Cusp { p: 2, q: 3, r: 7 }).unwrap();
        assert_eq!(g, parse_germ("x1^2 + x2^3 + x3^7 + x1*x2*x3", 3).unwrap());
        assert!(normal_form(&NormalFormKind::Cusp { p: 3, q: 3, r: 3 }).is_err());
        assert!(normal_form(&NormalFormKind::Cusp { p: 2, q: 4, r: 4 }).is_err());
        assert!(normal_form(&NormalFormKind::Cusp { p: 3, q: 2, r: 7 }).is_err());
        assert_eq!(normal_form(&NormalFormKind::Cusp { p: 2, q: 3, r: 11 }).unwrap().order(), 11);
    }

    #[test]
    fn elliptic_forms() {
        let g = normal_form(&NormalFormKind::SimpleEllipticSextic { a: rat(0, 1), b: rat(1, 1) }).unwrap();
        assert_eq!(g, parse_germ("x1^2 + x2^3 + x3^6", 3).unwrap());
        assert!(normal_form(&NormalFormKind::SimpleEllipticSextic { a: rat(-3, 1), b: rat(2, 1) }).is_err());
        let q = [1, 0, -5, 0, 4].map(|c| rat(c, 1)).to_vec(); // (x2^2-x3^2)(x2^2-4x3^2)
        assert!(normal_form(&NormalFormKind::SimpleEllipticQuartic { q }).is_ok());
        let q = [0, 0, 1, 0, 1].map(|c| rat(c, 1)).to_vec();
        assert!(normal_form(&NormalFormKind::SimpleEllipticQuartic { q }).is_err());
    }
}
