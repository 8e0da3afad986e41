use num_traits::Zero;
use polyring::Rat;
use serde::{Deserialize, Serialize};

use crate::BlowError;

/// `d·H - Σ m_i E_i` on the plane blown up at `k = m.len()` points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P2kClass {
    #[serde(with = "polyring::rat::serde_rat")]
    pub d: Rat,
    #[serde(with = "polyring::rat::serde_rat_vec")]
    pub m: Vec<Rat>,
}

impl P2kClass {
    pub fn new(d: i64, m: &[i64]) -> Self {
        P2kClass { d: Rat::from_integer(d.into()), m: m.iter().map(|&x| Rat::from_integer(x.into())).collect() }
    }

    /// The plane class `d·H` pulled back, no multiplicities.
    pub fn plane(d: Rat, k: usize) -> Self {
        P2kClass { d, m: vec![Rat::zero(); k] }
    }
}

/// `K = -3H + Σ E_i`, i.e. `(-3; -1, …, -1)` in the `(d; m)` notation.
pub fn canonical_class(k: usize) -> P2kClass {
    P2kClass::new(-3, &vec![-1; k])
}

pub fn p2k_intersect(c1: &P2kClass, c2: &P2kClass) -> Result<Rat, BlowError> {
    if c1.m.len() != c2.m.len() {
        return Err(BlowError::LengthMismatch(c1.m.len(), c2.m.len()));
    }
    Ok(&c1.d * &c2.d - c1.m.iter().zip(&c2.m).map(|(a, b)| a * b).sum::<Rat>())
}

/// Least possible intersection number of a curve through the points with
/// multiplicities `curve.m` and a divisor with multiplicities `mults` at the
/// same points, plus `extra` from further known common points.
pub fn bezout_requirement(curve: &P2kClass, mults: &[Rat], extra: Rat) -> Result<Rat, BlowError> {
    if curve.m.len() != mults.len() {
        return Err(BlowError::LengthMismatch(curve.m.len(), mults.len()));
    }
    Ok(curve.m.iter().zip(mults).map(|(a, b)| a * b).sum::<Rat>() + extra)
}

/// The pairing falls short of what the local data forces.
pub fn infeasible(b: &P2kClass, c: &P2kClass, required: &Rat) -> Result<bool, BlowError> {
    Ok(&p2k_intersect(b, c)? < required)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyring::rat;

    #[test]
    fn canonical_degree() {
        for k in 0..=8 {
            let kx = canonical_class(k);
            assert_eq!(p2k_intersect(&kx, &kx).unwrap(), rat(9 - k as i64, 1));
        }
    }

    #[test]
    fn conic_through_five_points() {
        // a conic B3 (pulled back) against the conic C2 through five points
        // where B3 has multiplicity >= 1
        let b3 = P2kClass::new(2, &[0; 8]);
        let c2 = P2kClass::new(2, &[1, 1, 1, 1, 1, 0, 0, 0]);
        let need = bezout_requirement(&c2, &vec![rat(1, 1); 8], rat(0, 1)).unwrap();
        assert_eq!((p2k_intersect(&b3, &c2).unwrap(), need.clone()), (rat(4, 1), rat(5, 1)));
        assert!(infeasible(&b3, &c2, &need).unwrap());
        // after removing C2/2 the line B4 keeps multiplicity >= 1/2 there
        let b4 = P2kClass::new(1, &[0; 8]);
        let need = bezout_requirement(&c2, &vec![rat(1, 2); 8], rat(0, 1)).unwrap();
        assert_eq!((p2k_intersect(&b4, &c2).unwrap(), need.clone()), (rat(2, 1), rat(5, 2)));
        assert!(infeasible(&b4, &c2, &need).unwrap());
    }

    #[test]
    fn cubic_against_sextic() {
        // sextic with two triple points and six double points at the blown-up
        // points, cubic through all eight and one more point of the sextic
        let c = P2kClass::new(3, &[1; 8]);
        let b3 = P2kClass::plane(rat(6, 1), 8);
        let mults: Vec<Rat> = [3, 3, 2, 2, 2, 2, 2, 2].iter().map(|&x| rat(x, 1)).collect();
        let need = bezout_requirement(&c, &mults, rat(1, 1)).unwrap();
        assert_eq!((p2k_intersect(&c, &b3).unwrap(), need.clone()), (rat(18, 1), rat(19, 1)));
        assert!(infeasible(&b3, &c, &need).unwrap());
        // one triple point only: no contradiction
        let mults: Vec<Rat> = [3, 2, 2, 2, 2, 2, 2, 2].iter().map(|&x| rat(x, 1)).collect();
        let need = bezout_requirement(&c, &mults, rat(1, 1)).unwrap();
        assert!(!infeasible(&b3, &c, &need).unwrap());
        // proper transforms pair to 1 in that configuration
        let b = P2kClass::new(6, &[3, 2, 2, 2, 2, 2, 2, 2]);
        assert_eq!(p2k_intersect(&c, &b).unwrap(), rat(1, 1));
    }

    #[test]
    fn length_mismatch() {
        let a = P2kClass::new(1, &[0; 2]);
        let b = P2kClass::new(1, &[0; 3]);
        assert_eq!(p2k_intersect(&a, &b), Err(BlowError::LengthMismatch(2, 3)));
    }
}
