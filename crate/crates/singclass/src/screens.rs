use num_traits::Zero;
use polyring::{BinaryForm, Germ, LinearChange, Rat};
use serde::Serialize;

use crate::cubic::{classify_cubic, normalize_double_line, CubicType};
use crate::split::{check_singular, hessian_split};
use crate::SingError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Lc1Verdict {
    /// `f2 = 0`
    MultAtLeast3,
    /// `f2 = l^2` and the cubic term of the residual germ vanishes.
    RankOneCubicZero,
    /// `f2 = l^2`, residual cubic `m^3`, residual quartic zero on `m = 0`.
    RankOneCubicCube,
    NotStrictlyLc,
}

/// Which lemma licenses a klt verdict for `(C^3, D/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lc2Certificate {
    /// `mult_0 D = 1`.
    SmoothPoint,
    /// `mult_0 D = 2`: the double point lemma.
    DoublePoint,
    /// `f3` without a double line, and `{f3 = 0}` lc: the cone over it has
    /// threshold 1, witnessed by weights `(1,1,1)`.
    TriplePointLcCone { cubic: CubicType },
    /// `f3` without a double line but not lc: threshold above 1/2 recorded
    /// from the literature, not recomputed here.
    TriplePointRecorded { cubic: CubicType },
    /// `f3 = x1^2 x2` in the new coordinates and `f4` not divisible by `x1`.
    DoubleLineCorollary { change: LinearChange },
    /// `f3 = x1^3` in the new coordinates and `f4` not divisible by `x1^2`.
    TripleLineCorollary { change: LinearChange },
}

impl Lc2Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Lc2Certificate::SmoothPoint => "smooth point",
            Lc2Certificate::DoublePoint => "double point lemma",
            Lc2Certificate::TriplePointLcCone { .. } => "triple point lemma (lc cubic cone)",
            Lc2Certificate::TriplePointRecorded { .. } => "triple point lemma (recorded threshold)",
            Lc2Certificate::DoubleLineCorollary { .. } => "double line corollary",
            Lc2Certificate::TripleLineCorollary { .. } => "triple line corollary",
        }
    }

    /// Weights whose bound witnesses the certificate, if it is a weighted one.
    pub fn weights(&self) -> Option<[i64; 3]> {
        match self {
            Lc2Certificate::TriplePointLcCone { .. } => Some([1, 1, 1]),
            Lc2Certificate::DoubleLineCorollary { .. } => Some([3, 2, 2]),
            Lc2Certificate::TripleLineCorollary { .. } => Some([4, 3, 3]),
            _ => None,
        }
    }

    /// Coordinates in which [`Self::weights`] apply.
    pub fn change(&self) -> Option<&LinearChange> {
        match self {
            Lc2Certificate::DoubleLineCorollary { change } | Lc2Certificate::TripleLineCorollary { change } => {
                Some(change)
            }
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Lc2Verdict {
    CubicZero,
    /// `f3 = x1^2 x2` and `x1 | f4`.
    DoubleLinePlusLineCase,
    /// `f3 = x1^3` and `x1^2 | f4`.
    TripleLineCase,
    KltCertified(Lc2Certificate),
    NotStrictlyLc,
}

impl Lc2Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Lc2Verdict::CubicZero => "CubicZero",
            Lc2Verdict::DoubleLinePlusLineCase => "DoubleLinePlusLineCase",
            Lc2Verdict::TripleLineCase => "TripleLineCase",
            Lc2Verdict::KltCertified(_) => "KltCertified",
            Lc2Verdict::NotStrictlyLc => "NotStrictlyLc",
        }
    }
}

fn require_three(g: &Germ) -> Result<(), SingError> {
    if g.nvars() != 3 {
        return Err(SingError::WrongVars { expected: 3, got: g.nvars() });
    }
    Ok(())
}

pub fn strict_lc1_screen(g: &Germ) -> Result<Lc1Verdict, SingError> {
    require_three(g)?;
    let rep = hessian_split(g)?;
    match rep.rank {
        0 => return Ok(Lc1Verdict::MultAtLeast3),
        1 => {}
        _ => return Ok(Lc1Verdict::NotStrictlyLc),
    }
    let tail = rep.tail.expect("rank 1 leaves a tail");
    let t3 = tail.taylor_component(3)?;
    if t3.is_zero() {
        return Ok(Lc1Verdict::RankOneCubicZero);
    }
    let form = BinaryForm::from_germ(&t3, 3)?;
    let groups = form.root_groups();
    if groups.len() != 1 || groups[0].mult != 3 {
        return Ok(Lc1Verdict::NotStrictlyLc);
    }
    // t3 = m^3; evaluate the quartic at the point where m vanishes
    let grp = &groups[0];
    let point = if grp.at_infinity {
        vec![Rat::from_integer(1.into()), Rat::zero()]
    } else {
        vec![-grp.finite.coeff(0) / grp.finite.coeff(1), Rat::from_integer(1.into())]
    };
    let t4 = tail.taylor_component(4)?;
    if t4.eval(&point).is_zero() {
        Ok(Lc1Verdict::RankOneCubicCube)
    } else {
        Ok(Lc1Verdict::NotStrictlyLc)
    }
}

pub fn strict_lc2_screen(g: &Germ) -> Result<Lc2Verdict, SingError> {
    require_three(g)?;
    if g.is_zero() {
        return Err(SingError::NonReduced);
    }
    if !g.coeff_of(&[0, 0, 0]).is_zero() {
        return Err(SingError::NotSingular);
    }
    if check_singular(g).is_err() {
        return Ok(Lc2Verdict::KltCertified(Lc2Certificate::SmoothPoint));
    }
    if !g.taylor_component(2)?.is_zero() {
        return Ok(Lc2Verdict::KltCertified(Lc2Certificate::DoublePoint));
    }
    let f3 = g.taylor_component(3)?;
    let ty = classify_cubic(&f3)?;
    match ty {
        CubicType::Zero => Ok(Lc2Verdict::CubicZero),
        t if t.is_lc() => Ok(Lc2Verdict::KltCertified(Lc2Certificate::TriplePointLcCone { cubic: t })),
        CubicType::CuspidalCubic | CubicType::ConicPlusTangentLine | CubicType::ThreeConcurrentLines => {
            Ok(Lc2Verdict::KltCertified(Lc2Certificate::TriplePointRecorded { cubic: ty }))
        }
        CubicType::DoubleLinePlusLine | CubicType::TripleLine => {
            let (_, change) = normalize_double_line(&f3)?;
            let f4 = g.substitute(&change)?.taylor_component(4)?;
            // least power of x1 over the quartic's monomials
            let min_x1 = f4.terms().map(|(m, _)| m.0[0]).min();
            let need = if ty == CubicType::TripleLine { 2 } else { 1 };
            match min_x1 {
                Some(e) if e < need => Ok(Lc2Verdict::KltCertified(if need == 1 {
                    Lc2Certificate::DoubleLineCorollary { change }
                } else {
                    Lc2Certificate::TripleLineCorollary { change }
                })),
                _ if need == 1 => Ok(Lc2Verdict::DoubleLinePlusLineCase),
                _ => Ok(Lc2Verdict::TripleLineCase),
            }
        }
        t => Err(SingError::Internal(format!("unhandled cubic type {t}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyring::parse_germ;

    fn g(s: &str) -> Germ {
        parse_germ(s, 3).unwrap()
    }

    #[test]
    fn lc1_examples() {
        for k in 2..8 {
            let s = format!("x1^2 + x2^2 + x3^{k}");
            assert_eq!(strict_lc1_screen(&g(&s)).unwrap(), Lc1Verdict::NotStrictlyLc);
        }
        assert_eq!(strict_lc1_screen(&g("x1^3 + x2^3 + x3^3")).unwrap(), Lc1Verdict::MultAtLeast3);
        assert_eq!(strict_lc1_screen(&g("x1^2 + x2^3 + x3^7 + x1*x2*x3")).unwrap(), Lc1Verdict::RankOneCubicCube);
        assert_eq!(strict_lc1_screen(&g("x1^2 + x2^4 + x3^4")).unwrap(), Lc1Verdict::RankOneCubicZero);
        // D4: cubic of the tail has three roots
        assert_eq!(strict_lc1_screen(&g("x1^2 + x2^3 + x3^3")).unwrap(), Lc1Verdict::NotStrictlyLc);
        // E6: cube with nonzero quartic on its line
        assert_eq!(strict_lc1_screen(&g("x1^2 + x2^3 + x3^4")).unwrap(), Lc1Verdict::NotStrictlyLc);
    }

    #[test]
    fn lc2_examples() {
        let v = strict_lc2_screen(&g("x1^2 + x2^5 + x3^5")).unwrap();
        assert_eq!(v, Lc2Verdict::KltCertified(Lc2Certificate::DoublePoint));
        let v = strict_lc2_screen(&g("x1*x2*x3 + x1^4 + x2^4 + x3^4")).unwrap();
        assert_eq!(v, Lc2Verdict::KltCertified(Lc2Certificate::TriplePointLcCone { cubic: CubicType::Triangle }));
        let v = strict_lc2_screen(&g("x1^2*x2 + x2^4 + x3^5")).unwrap();
        assert!(matches!(v, Lc2Verdict::KltCertified(Lc2Certificate::DoubleLineCorollary { .. })));
        let v = strict_lc2_screen(&g("x1^2*x2 + x1*x3^3 + x3^5")).unwrap();
        assert_eq!(v, Lc2Verdict::DoubleLinePlusLineCase);
        let v = strict_lc2_screen(&g("x1^3 + x1*x2^3 + x3^5")).unwrap();
        assert!(matches!(v, Lc2Verdict::KltCertified(Lc2Certificate::TripleLineCorollary { .. })));
        let v = strict_lc2_screen(&g("x1^3 + x1^2*x2^2 + x3^5")).unwrap();
        assert_eq!(v, Lc2Verdict::TripleLineCase);
        assert_eq!(strict_lc2_screen(&g("x1^4 + x2^4 + x3^4")).unwrap(), Lc2Verdict::CubicZero);
        let v = strict_lc2_screen(&g("x2^2*x3 - x1^3 + x1^5")).unwrap();
        assert!(matches!(v, Lc2Verdict::KltCertified(Lc2Certificate::TriplePointRecorded { .. })));
    }

    #[test]
    fn lc2_after_coordinate_change() {
        // (x1+x3)^2 x2 + x2^4: double line not along a coordinate axis
        let v = strict_lc2_screen(&g("x1^2*x2 + 2*x1*x2*x3 + x2*x3^2 + x2^4")).unwrap();
        assert!(matches!(v, Lc2Verdict::KltCertified(Lc2Certificate::DoubleLineCorollary { .. })));
    }
}
