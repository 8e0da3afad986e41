//! Orbit type of a ternary cubic form.
//!
//! Decided by three exact invariants: the number of essential variables
//! (rank of the span of the partials), the Hilbert polynomial of the Jacobian
//! ideal (dimension and length of the singular scheme), and whether the
//! Hessian matrix drops to rank one at some singular point.

use std::fmt;

use num_traits::Zero;
use polyring::{BinaryForm, Germ, LinearChange, Matrix, Monomial, Rat};
use serde::Serialize;

use crate::SingError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CubicType {
    Zero,
    SmoothCubic,
    NodalCubic,
    CuspidalCubic,
    ConicPlusTransversalLine,
    ConicPlusTangentLine,
    Triangle,
    ThreeConcurrentLines,
    DoubleLinePlusLine,
    TripleLine,
}

impl CubicType {
    /// Whether the plane cubic is log canonical.
    pub fn is_lc(self) -> bool {
        matches!(
            self,
            CubicType::SmoothCubic | CubicType::NodalCubic | CubicType::ConicPlusTransversalLine | CubicType::Triangle
        )
    }

    pub fn has_double_line(self) -> bool {
        matches!(self, CubicType::DoubleLinePlusLine | CubicType::TripleLine)
    }

    pub const ALL: [CubicType; 10] = [
        CubicType::Zero,
        CubicType::SmoothCubic,
        CubicType::NodalCubic,
        CubicType::CuspidalCubic,
        CubicType::ConicPlusTransversalLine,
        CubicType::ConicPlusTangentLine,
        CubicType::Triangle,
        CubicType::ThreeConcurrentLines,
        CubicType::DoubleLinePlusLine,
        CubicType::TripleLine,
    ];
}

impl fmt::Display for CubicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

fn monomials(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

/// Coefficient vectors of homogeneous forms of degree `d` as matrix rows.
fn coeff_rows(forms: &[Germ], d: u32) -> Matrix {
    let basis = monomials(3, d);
    Matrix::from_rows(forms.iter().map(|f| basis.iter().map(|m| f.coeff(m)).collect()).collect())
}

/// `dim (S/I)_d` for an ideal generated by homogeneous forms in 3 variables.
fn hilbert(gens: &[Germ], d: u32) -> usize {
    let total = monomials(3, d).len();
    let mut rows = Vec::new();
    for g in gens {
        let Some(k) = g.is_homogeneous() else { continue };
        if k > d {
            continue;
        }
        for m in monomials(3, d - k) {
            let shifted = Germ::from_terms(3, d.max(g.order()), g.terms().map(|(e, c)| (e.mul(&m), c.clone())));
            rows.push(shifted);
        }
    }
    if rows.is_empty() {
        return total;
    }
    total - coeff_rows(&rows, d).rank()
}

fn check_cubic(c: &Germ) -> Result<(), SingError> {
    if c.nvars() != 3 {
        return Err(SingError::WrongVars { expected: 3, got: c.nvars() });
    }
    if c.is_zero() || c.is_homogeneous() == Some(3) {
        Ok(())
    } else {
        Err(SingError::NotHomogeneousCubic)
    }
}

fn partials(c: &Germ) -> Vec<Germ> {
    (0..3).map(|i| c.partial(i)).collect()
}

/// Number of essential variables: rank of the span of the partials.
pub fn essential_vars(c: &Germ) -> usize {
    coeff_rows(&partials(c), 2).rank()
}

const HF_DEGREE: u32 = 5;

pub fn classify_cubic(c: &Germ) -> Result<CubicType, SingError> {
    check_cubic(c)?;
    if c.is_zero() {
        return Ok(CubicType::Zero);
    }
    let jac = partials(c);
    let ess = coeff_rows(&jac, 2).rank();
    if ess == 1 {
        return Ok(CubicType::TripleLine);
    }
    let h0 = hilbert(&jac, HF_DEGREE);
    let h1 = hilbert(&jac, HF_DEGREE + 1);
    if h1 > h0 {
        // singular along a curve: a double line
        return Ok(CubicType::DoubleLinePlusLine);
    }
    if ess == 2 {
        return Ok(CubicType::ThreeConcurrentLines);
    }
    let tau = h1;
    let cuspidal_point = || {
        let mut gens = jac.clone();
        gens.extend(hessian_minors(c));
        hilbert(&gens, HF_DEGREE + 1) > 0
    };
    match tau {
        0 => Ok(CubicType::SmoothCubic),
        1 => Ok(CubicType::NodalCubic),
        2 if cuspidal_point() => Ok(CubicType::CuspidalCubic),
        2 => Ok(CubicType::ConicPlusTransversalLine),
        3 if cuspidal_point() => Ok(CubicType::ConicPlusTangentLine),
        3 => Ok(CubicType::Triangle),
        t => Err(SingError::Internal(format!("reduced cubic with Tjurina total {t}"))),
    }
}

/// The nine 2×2 minors of the Hessian matrix (quadrics).
fn hessian_minors(c: &Germ) -> Vec<Germ> {
    let h: Vec<Vec<Germ>> = (0..3).map(|i| (0..3).map(|j| c.partial(i).partial(j)).collect()).collect();
    let mut out = Vec::new();
    for (r1, r2) in [(0, 1), (0, 2), (1, 2)] {
        for (c1, c2) in [(0, 1), (0, 2), (1, 2)] {
            let m = h[r1][c1].mul(&h[r2][c2]).sub(&h[r1][c2].mul(&h[r2][c1]));
            if !m.is_zero() {
                out.push(m);
            }
        }
    }
    out
}

/// Directions `v` with `∂_v c ≡ 0` (the vertex space of a cone).
pub fn vertex_space(c: &Germ) -> Vec<Vec<Rat>> {
    // columns: coefficient vectors of ∂_i c
    coeff_rows(&partials(c), 2).transpose().kernel()
}

fn complete_basis(fixed: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    // prepend standard vectors until the set spans Q^3
    let mut basis: Vec<Vec<Rat>> = Vec::new();
    for i in 0..3 {
        let mut e = vec![Rat::zero(); 3];
        e[i] = Rat::from_integer(1.into());
        let mut trial = basis.clone();
        trial.push(e.clone());
        trial.extend(fixed.iter().cloned());
        if Matrix::from_rows(trial.clone()).rank() == trial.len() {
            basis.push(e);
        }
        if basis.len() + fixed.len() == 3 {
            break;
        }
    }
    basis.extend(fixed.iter().cloned());
    basis
}

fn change_from_columns(cols: &[Vec<Rat>]) -> LinearChange {
    LinearChange::new(Matrix::from_rows(cols.to_vec()).transpose()).expect("completed basis is invertible")
}

/// Linear change after which a double-line cubic reads `k·x1²x2`, or a
/// triple line reads `k·x1³`.
pub fn normalize_double_line(c: &Germ) -> Result<(CubicType, LinearChange), SingError> {
    let ty = classify_cubic(c)?;
    match ty {
        CubicType::TripleLine => {
            let ker = vertex_space(c);
            Ok((ty, change_from_columns(&complete_basis(&ker))))
        }
        CubicType::DoubleLinePlusLine => {
            let ker = vertex_space(c);
            let cols = complete_basis(&ker);
            let p = change_from_columns(&cols);
            let b = c.substitute(&p)?.select_vars(&[0, 1])?;
            let form = BinaryForm::from_germ(&b, 3)?;
            let groups = form.root_groups();
            let line_of = |mult: usize| -> Result<Vec<Rat>, SingError> {
                let g = groups
                    .iter()
                    .find(|g| g.mult == mult)
                    .ok_or_else(|| SingError::Internal("double line not found".into()))?;
                // linear form vanishing at the group's single point
                Ok(if g.at_infinity {
                    vec![Rat::zero(), Rat::from_integer(1.into())]
                } else {
                    let r = -g.finite.coeff(0) / g.finite.coeff(1);
                    vec![Rat::from_integer(1.into()), -r]
                })
            };
            let l1 = line_of(2)?;
            let l2 = line_of(1)?;
            // new coordinates z = M y on the (y1, y2) plane, y3 untouched
            let zero = Rat::zero();
            let one = Rat::from_integer(1.into());
            let m = Matrix::from_rows(vec![
                vec![l1[0].clone(), l1[1].clone(), zero.clone()],
                vec![l2[0].clone(), l2[1].clone(), zero.clone()],
                vec![zero.clone(), zero, one],
            ]);
            let inv = LinearChange::new(m.inverse().expect("distinct lines"))?;
            Ok((ty, p.then(&inv)))
        }
        _ => Err(SingError::Internal(format!("{ty} has no double line"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyring::parse_germ;

    fn ty(s: &str) -> CubicType {
        classify_cubic(&parse_germ(s, 3).unwrap()).unwrap()
    }

    #[test]
    fn representatives() {
        assert_eq!(ty("x1*x2*x3"), CubicType::Triangle);
        assert_eq!(ty("x1^2*x2"), CubicType::DoubleLinePlusLine);
        assert_eq!(ty("x2^2*x3 - x1^3"), CubicType::CuspidalCubic);
        assert_eq!(ty("x1^3 + x2^3 + x3^3"), CubicType::SmoothCubic);
        assert_eq!(ty("x2^2*x3 - x1^3 - x1^2*x3"), CubicType::NodalCubic);
        assert_eq!(ty("x1*x2*x3 - x2^3"), CubicType::ConicPlusTransversalLine);
        assert_eq!(ty("x1*x3^2 - x2^2*x3"), CubicType::ConicPlusTangentLine);
        assert_eq!(ty("x2^2*x3 - x1^2*x2"), CubicType::ConicPlusTangentLine);
        assert_eq!(ty("x1^3 - x1*x2^2"), CubicType::ThreeConcurrentLines);
        assert_eq!(ty("x1^3"), CubicType::TripleLine);
        assert!(classify_cubic(&Germ::zero(3, 8)).unwrap() == CubicType::Zero);
        assert_eq!(classify_cubic(&parse_germ("x1^2 + x2^3", 3).unwrap()), Err(SingError::NotHomogeneousCubic));
    }

    #[test]
    fn lc_flags() {
        let lc: Vec<_> = CubicType::ALL.iter().filter(|t| t.is_lc()).collect();
        assert_eq!(lc.len(), 4);
        assert!(!CubicType::CuspidalCubic.is_lc());
    }

    #[test]
    fn double_line_normalization() {
        for s in ["x1^2*x2", "x2^2*x3 + 2*x1*x2*x3 + x1^2*x3", "x1^2*x3 - x1^2*x2"] {
            let c = parse_germ(s, 3).unwrap();
            let (t, p) = normalize_double_line(&c).unwrap();
            assert_eq!(t, CubicType::DoubleLinePlusLine);
            let n = c.substitute(&p).unwrap();
            assert_eq!(n.num_terms(), 1, "{s} -> {n}");
            assert_eq!(n.terms().next().unwrap().0 .0, vec![2, 1, 0]);
        }
        let c = parse_germ("x1^3 + 3*x1^2*x2 + 3*x1*x2^2 + x2^3", 3).unwrap();
        let (t, p) = normalize_double_line(&c).unwrap();
        assert_eq!(t, CubicType::TripleLine);
        let n = c.substitute(&p).unwrap();
        assert_eq!(n.terms().map(|(m, _)| m.0.clone()).collect::<Vec<_>>(), vec![vec![3, 0, 0]]);
    }
}
