//! Dense univariate polynomials over Q and binary forms built on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::germ::{Germ, Monomial};
use crate::rat::{denom_lcm, Rat};
use crate::PolyError;

/// Coefficients from the constant term up; never has a zero leading entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(Vec<Rat>);

impl UPoly {
    pub fn new(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| crate::rat::int(x)).collect())
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![Rat::one()])
    }

    /// `t - r`
    pub fn linear_root(r: &Rat) -> Self {
        UPoly(vec![-r.clone(), Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.0.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn lead(&self) -> Rat {
        self.0.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        self.add(&o.scale(&-Rat::one()))
    }

    pub fn scale(&self, c: &Rat) -> UPoly {
        UPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UPoly::new(c)
    }

    pub fn pow(&self, e: u32) -> UPoly {
        (0..e).fold(UPoly::one(), |acc, _| acc.mul(self))
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.scale(&self.lead().recip())
    }

    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.0.len() - 1;
        let inv = d.lead().recip();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (UPoly::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.0.iter().enumerate() {
                let v = &c * dj;
                r[k + j] -= v;
            }
            q[k] = c;
        }
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    /// Exact division; panics if `d` does not divide.
    pub fn div_exact(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(self.0.iter().enumerate().skip(1).map(|(i, c)| c * Rat::from_integer(i.into())).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.0.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Yun's algorithm: `self = lead · Π P_i^i` with squarefree, pairwise
    /// coprime monic `P_i`; returns the non-constant `(P_i, i)`.
    pub fn squarefree(&self) -> Vec<(UPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0);
        let mut d = df.div_exact(&a0).sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a);
            d = d.div_exact(&a).sub(&b.derivative());
            i += 1;
        }
        out
    }

    /// Integer polynomial with the same roots, content removed.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let l = denom_lcm(self.0.iter());
        let v: Vec<BigInt> = self.0.iter().map(|c| (c * Rat::from_integer(l.clone())).to_integer()).collect();
        let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return v;
        }
        v.into_iter().map(|x| x / &g).collect()
    }

    /// All distinct rational roots, via the rational root theorem.
    pub fn rational_roots(&self) -> Result<Vec<Rat>, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroGerm);
        }
        let mut roots = Vec::new();
        let mut p = self.clone();
        let mut lowest = 0;
        while lowest < p.0.len() && p.0[lowest].is_zero() {
            lowest += 1;
        }
        if lowest > 0 {
            roots.push(Rat::zero());
            p = UPoly::new(p.0[lowest..].to_vec());
        }
        if p.degree().unwrap_or(0) == 0 {
            return Ok(roots);
        }
        // work on the squarefree part to keep coefficients small
        let sq = p.div_exact(&p.gcd(&p.derivative()));
        if sq.degree() == Some(1) {
            roots.push(-sq.coeff(0) / sq.coeff(1));
            roots.sort();
            return Ok(roots);
        }
        let ints = sq.primitive_integer();
        let a0 = ints[0].abs();
        let an = ints.last().unwrap().abs();
        let dp = divisors(&a0)?;
        let dq = divisors(&an)?;
        for q in &dq {
            for pn in &dp {
                if pn.gcd(q) != BigInt::one() {
                    continue;
                }
                for s in [1, -1] {
                    let r = Rat::new(pn * BigInt::from(s), q.clone());
                    if sq.eval(&r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        roots.dedup();
        Ok(roots)
    }
}

const FACTOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Result<Vec<BigInt>, PolyError> {
    let v = n.to_u64().filter(|&v| v <= FACTOR_LIMIT).ok_or(PolyError::TooLarge)?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            small.push(BigInt::from(d));
            if d * d != v {
                large.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// `F(x1, x2) = Σ p_i x1^i x2^(deg-i)`; the affine coordinate is `t = x1/x2`
/// and `[1:0]` is the point at infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    pub deg: usize,
    pub poly: UPoly,
}

/// A squarefree piece of a binary form: the points it carries and the
/// multiplicity they share.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootGroup {
    pub mult: usize,
    pub finite: UPoly,
    pub at_infinity: bool,
}

impl RootGroup {
    pub fn count(&self) -> usize {
        self.finite.degree().unwrap_or(0) + usize::from(self.at_infinity)
    }
}

impl BinaryForm {
    pub fn new(deg: usize, poly: UPoly) -> Self {
        assert!(poly.degree().unwrap_or(0) <= deg, "degree exceeds form degree");
        BinaryForm { deg, poly }
    }

    /// From a germ in two variables homogeneous of degree `deg` (or zero).
    pub fn from_germ(g: &Germ, deg: usize) -> Result<Self, PolyError> {
        if g.nvars() != 2 {
            return Err(PolyError::Dimension { expected: 2, got: g.nvars() });
        }
        let mut c = vec![Rat::zero(); deg + 1];
        for (m, a) in g.terms() {
            if m.degree() as usize != deg {
                return Err(PolyError::NotHomogeneous(deg as u32));
            }
            c[m.0[0] as usize] = a.clone();
        }
        Ok(BinaryForm::new(deg, UPoly::new(c)))
    }

    pub fn to_germ(&self, order: u32) -> Germ {
        let terms = (0..=self.deg).map(|i| (Monomial(vec![i as u32, (self.deg - i) as u32]), self.poly.coeff(i)));
        Germ::from_terms(2, order, terms)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn infinity_mult(&self) -> usize {
        match self.poly.degree() {
            Some(d) => self.deg - d,
            None => self.deg,
        }
    }

    pub fn mul(&self, o: &BinaryForm) -> BinaryForm {
        BinaryForm::new(self.deg + o.deg, self.poly.mul(&o.poly))
    }

    pub fn add(&self, o: &BinaryForm) -> BinaryForm {
        assert_eq!(self.deg, o.deg, "adding forms of different degree");
        BinaryForm::new(self.deg, self.poly.add(&o.poly))
    }

    pub fn scale(&self, c: &Rat) -> BinaryForm {
        BinaryForm::new(self.deg, self.poly.scale(c))
    }

    pub fn pow(&self, e: u32) -> BinaryForm {
        BinaryForm::new(self.deg * e as usize, self.poly.pow(e))
    }

    /// Squarefree decomposition over P^1, infinity included. Empty for the
    /// zero form and for nonzero constants.
    pub fn root_groups(&self) -> Vec<RootGroup> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut groups: Vec<RootGroup> = self
            .poly
            .squarefree()
            .into_iter()
            .map(|(p, m)| RootGroup { mult: m, finite: p, at_infinity: false })
            .collect();
        let inf = self.infinity_mult();
        if inf > 0 {
            match groups.iter_mut().find(|g| g.mult == inf) {
                Some(g) => g.at_infinity = true,
                None => groups.push(RootGroup { mult: inf, finite: UPoly::one(), at_infinity: true }),
            }
        }
        groups.sort_by_key(|g| g.mult);
        groups
    }

    /// Distinct points of P^1 where the form vanishes (`None` for zero).
    pub fn num_points(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let finite: usize = self.poly.squarefree().iter().map(|(p, _)| p.degree().unwrap()).sum();
        Some(finite + usize::from(self.infinity_mult() > 0))
    }

    /// Number of common points in P^1 (`None` if both forms are zero).
    pub fn common_points(&self, o: &BinaryForm) -> Option<usize> {
        match (self.is_zero(), o.is_zero()) {
            (true, true) => None,
            (true, false) => o.num_points(),
            (false, true) => self.num_points(),
            (false, false) => {
                let g = BinaryForm::new(self.poly.gcd(&o.poly).degree().unwrap_or(0), self.poly.gcd(&o.poly));
                let inf = self.infinity_mult() > 0 && o.infinity_mult() > 0;
                Some(g.num_points().unwrap_or(0) + usize::from(inf))
            }
        }
    }
}
