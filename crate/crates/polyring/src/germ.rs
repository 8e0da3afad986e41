use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::linalg::Matrix;
use crate::rat::{fmt_rat, Rat};
use crate::PolyError;

pub const DEFAULT_ORDER: u32 = 8;

/// Exponent vector, one entry per ambient variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn weight(&self, w: &[Rat]) -> Rat {
        self.0.iter().zip(w).filter(|(e, _)| **e > 0).map(|(e, wi)| wi * Rat::from_integer((*e).into())).sum()
    }
}

/// Positive rational weights, one per variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(Vec<Rat>);

impl WeightVector {
    pub fn new(w: Vec<Rat>) -> Result<Self, PolyError> {
        if w.is_empty() || w.iter().any(|x| !x.is_positive()) {
            return Err(PolyError::BadWeights);
        }
        Ok(WeightVector(w))
    }

    pub fn from_ints(w: &[i64]) -> Result<Self, PolyError> {
        Self::new(w.iter().map(|&x| crate::rat::int(x)).collect())
    }

    pub fn as_slice(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> Rat {
        self.0.iter().sum()
    }
}

/// Invertible linear change `x_i -> sum_j m[i][j] x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    matrix: Matrix,
}

impl LinearChange {
    pub fn new(matrix: Matrix) -> Result<Self, PolyError> {
        if matrix.rows() != matrix.cols() {
            return Err(PolyError::Dimension { expected: matrix.rows(), got: matrix.cols() });
        }
        if matrix.det().is_zero() {
            return Err(PolyError::Singular);
        }
        Ok(LinearChange { matrix })
    }

    pub fn identity(n: usize) -> Self {
        LinearChange { matrix: Matrix::identity(n) }
    }

    pub fn permutation(perm: &[usize]) -> Result<Self, PolyError> {
        let n = perm.len();
        let mut m = Matrix::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            if j >= n {
                return Err(PolyError::VarIndex(j));
            }
            m[(i, j)] = Rat::one();
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn inverse(&self) -> LinearChange {
        LinearChange { matrix: self.matrix.inverse().expect("invertible by construction") }
    }

    /// `(self then other)`: substituting by `self` and then by `other`
    /// equals substituting by the returned change.
    pub fn then(&self, other: &LinearChange) -> LinearChange {
        LinearChange { matrix: self.matrix.mul(&other.matrix) }
    }

    /// Image of variable `i` as a linear form.
    pub fn image(&self, i: usize, order: u32) -> Germ {
        let n = self.dim();
        let mut g = Germ::zero(n, order);
        for j in 0..n {
            g.add_term(Monomial::var(n, j), self.matrix[(i, j)].clone());
        }
        g
    }
}

/// Truncated multivariate polynomial over the rationals.
///
/// Terms above `order` are never stored. `truncated` records that some
/// operation may have thrown such terms away, so the germ is only known up to
/// `order`; otherwise the stored terms are the whole polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Germ {
    nvars: usize,
    order: u32,
    terms: BTreeMap<Monomial, Rat>,
    truncated: bool,
}

impl Germ {
    pub fn zero(nvars: usize, order: u32) -> Self {
        assert!(nvars > 0, "germs need at least one variable");
        Germ { nvars, order, terms: BTreeMap::new(), truncated: false }
    }

    pub fn constant(nvars: usize, order: u32, c: Rat) -> Self {
        let mut g = Self::zero(nvars, order);
        g.add_term(Monomial::one(nvars), c);
        g
    }

    pub fn var(nvars: usize, order: u32, i: usize) -> Self {
        let mut g = Self::zero(nvars, order);
        g.add_term(Monomial::var(nvars, i), Rat::one());
        g
    }

    pub fn monomial(order: u32, exps: &[u32], c: Rat) -> Self {
        let mut g = Self::zero(exps.len(), order);
        g.add_term(Monomial(exps.to_vec()), c);
        g
    }

    pub fn from_terms(nvars: usize, order: u32, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut g = Self::zero(nvars, order);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial length");
            g.add_term(m, c);
        }
        g
    }

    /// Smallest order that stores every term, but never below the default.
    pub fn exact_from_terms(nvars: usize, terms: Vec<(Monomial, Rat)>) -> Self {
        let deg = terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        Self::from_terms(nvars, deg.max(DEFAULT_ORDER), terms)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeff_of(&self, exps: &[u32]) -> Rat {
        self.coeff(&Monomial(exps.to_vec()))
    }

    /// Adds `c·m`, dropping it (and flagging) if it lies above the order.
    pub fn add_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        if m.degree() > self.order {
            self.truncated = true;
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn mark_truncated(mut self) -> Self {
        self.truncated = true;
        self
    }

    /// Raises the storage order of a germ that has dropped nothing.
    pub fn with_order(&self, order: u32) -> Result<Germ, PolyError> {
        if order == self.order {
            return Ok(self.clone());
        }
        if order > self.order {
            if self.truncated {
                return Err(PolyError::DroppedTerms(self.order));
            }
            let mut g = self.clone();
            g.order = order;
            return Ok(g);
        }
        let mut g = Germ::zero(self.nvars, order);
        g.truncated = self.truncated;
        for (m, c) in &self.terms {
            g.add_term(m.clone(), c.clone());
        }
        Ok(g)
    }

    /// Largest stored total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Ordinary multiplicity at the origin, `None` for zero.
    pub fn mult(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    /// Multiplicity that also accounts for dropped terms: errors when the
    /// answer could be changed by them.
    pub fn certain_mult(&self) -> Result<u32, PolyError> {
        match (self.mult(), self.truncated) {
            (Some(m), _) => Ok(m),
            (None, true) => Err(PolyError::DroppedTerms(self.order)),
            (None, false) => Err(PolyError::ZeroGerm),
        }
    }

    pub fn is_homogeneous(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.0[i] > 0)
    }

    /// Degree-`k` homogeneous part.
    pub fn taylor_component(&self, k: u32) -> Result<Germ, PolyError> {
        if k > self.order {
            return Err(PolyError::Truncation { k, order: self.order });
        }
        let mut g = Germ::zero(self.nvars, self.order);
        for (m, c) in &self.terms {
            if m.degree() == k {
                g.terms.insert(m.clone(), c.clone());
            }
        }
        Ok(g)
    }

    /// Terms of degree at most `k`, same storage order.
    pub fn jet(&self, k: u32) -> Germ {
        let mut g = Germ::zero(self.nvars, self.order);
        g.truncated = self.truncated || self.degree().is_some_and(|d| d > k);
        for (m, c) in &self.terms {
            if m.degree() <= k {
                g.terms.insert(m.clone(), c.clone());
            }
        }
        g
    }

    fn combined(&self, other: &Germ) -> Germ {
        assert_eq!(self.nvars, other.nvars, "germs live in different rings");
        let order = match (self.truncated, other.truncated) {
            (false, false) => self.order.max(other.order),
            (true, false) => self.order,
            (false, true) => other.order,
            (true, true) => self.order.min(other.order),
        };
        let mut g = Germ::zero(self.nvars, order);
        g.truncated = self.truncated || other.truncated;
        g
    }

    pub fn add(&self, other: &Germ) -> Germ {
        let mut g = self.combined(other);
        for (m, c) in self.terms.iter().chain(other.terms.iter()) {
            g.add_term(m.clone(), c.clone());
        }
        g
    }

    pub fn sub(&self, other: &Germ) -> Germ {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Germ {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, c: &Rat) -> Germ {
        let mut g = Germ::zero(self.nvars, self.order);
        g.truncated = self.truncated;
        if c.is_zero() {
            return g;
        }
        for (m, a) in &self.terms {
            g.terms.insert(m.clone(), a * c);
        }
        g
    }

    pub fn mul(&self, other: &Germ) -> Germ {
        let mut g = self.combined(other);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                g.add_term(m1.mul(m2), c1 * c2);
            }
        }
        g
    }

    pub fn pow(&self, e: u32) -> Germ {
        let mut acc = Germ::constant(self.nvars, self.order, Rat::one());
        acc.truncated = self.truncated;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Partial derivative; a truncated germ loses one degree of validity.
    pub fn partial(&self, i: usize) -> Germ {
        let order = if self.truncated { self.order.saturating_sub(1).max(1) } else { self.order };
        let mut g = Germ::zero(self.nvars, order);
        g.truncated = self.truncated;
        for (m, c) in &self.terms {
            if m.0[i] > 0 {
                let mut e = m.clone();
                let k = e.0[i];
                e.0[i] -= 1;
                g.add_term(e, c * Rat::from_integer(k.into()));
            }
        }
        g
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        total
    }

    /// Substitutes `x_i -> images[i]`. The result lives in the images' ring
    /// and keeps this germ's order (lowered to any truncated image's order).
    pub fn compose(&self, images: &[Germ]) -> Result<Germ, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::Dimension { expected: self.nvars, got: images.len() });
        }
        let nv = images.first().map(|g| g.nvars).unwrap_or(1);
        let mut order = self.order;
        let mut truncated = self.truncated;
        for im in images {
            if im.nvars != nv {
                return Err(PolyError::Dimension { expected: nv, got: im.nvars });
            }
            if im.truncated {
                order = order.min(im.order);
                truncated = true;
            }
            if self.truncated && !im.coeff(&Monomial::one(nv)).is_zero() {
                // dropped terms of high degree would feed every lower degree
                return Err(PolyError::DroppedTerms(self.order));
            }
        }
        let mut out = Germ::zero(nv, order);
        out.truncated = truncated;
        let mut powers: Vec<Vec<Germ>> = images
            .iter()
            .map(|im| {
                let mut one = Germ::constant(nv, order, Rat::one());
                one.truncated = im.truncated;
                vec![one]
            })
            .collect();
        for (m, c) in &self.terms {
            let mut t = Germ::constant(nv, order, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i].with_cap(order));
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            out.truncated |= t.truncated;
            for (mm, cc) in t.terms {
                out.add_term(mm, cc);
            }
        }
        Ok(out)
    }

    fn with_cap(&self, order: u32) -> Germ {
        if order >= self.order && !self.truncated {
            let mut g = self.clone();
            g.order = order;
            g
        } else {
            self.with_order(order).unwrap_or_else(|_| self.clone())
        }
    }

    /// Composition with an invertible linear change.
    pub fn substitute(&self, change: &LinearChange) -> Result<Germ, PolyError> {
        if change.dim() != self.nvars {
            return Err(PolyError::Dimension { expected: self.nvars, got: change.dim() });
        }
        let images: Vec<Germ> = (0..self.nvars).map(|i| change.image(i, self.order)).collect();
        self.compose(&images)
    }

    /// Replaces `x_var` by `replacement` (zero when `None`).
    pub fn restrict(&self, var: usize, replacement: Option<&Germ>) -> Result<Germ, PolyError> {
        if var >= self.nvars {
            return Err(PolyError::VarIndex(var));
        }
        let rep = match replacement {
            Some(r) => {
                if r.nvars != self.nvars {
                    return Err(PolyError::Dimension { expected: self.nvars, got: r.nvars });
                }
                if r.uses_var(var) {
                    return Err(PolyError::ReplacementInvolvesVar(var));
                }
                r.clone()
            }
            None => Germ::zero(self.nvars, self.order),
        };
        let images: Vec<Germ> = (0..self.nvars)
            .map(|i| if i == var { rep.clone() } else { Germ::var(self.nvars, self.order, i) })
            .collect();
        self.compose(&images)
    }

    /// Same polynomial viewed in the variables `keep` (in that order);
    /// every other variable must be absent.
    pub fn select_vars(&self, keep: &[usize]) -> Result<Germ, PolyError> {
        for i in 0..self.nvars {
            if !keep.contains(&i) && self.uses_var(i) {
                return Err(PolyError::ReplacementInvolvesVar(i));
            }
        }
        let mut g = Germ::zero(keep.len().max(1), self.order);
        g.truncated = self.truncated;
        for (m, c) in &self.terms {
            let e: Vec<u32> = if keep.is_empty() { vec![0] } else { keep.iter().map(|&i| m.0[i]).collect() };
            g.add_term(Monomial(e), c.clone());
        }
        Ok(g)
    }

    /// Embeds into `nvars` variables, variable `i` going to `slots[i]`.
    pub fn embed(&self, nvars: usize, slots: &[usize]) -> Germ {
        assert_eq!(slots.len(), self.nvars);
        let mut g = Germ::zero(nvars, self.order);
        g.truncated = self.truncated;
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &s) in slots.iter().enumerate() {
                e[s] += m.0[i];
            }
            g.add_term(Monomial(e), c.clone());
        }
        g
    }

    fn check_weights(&self, w: &WeightVector) -> Result<(), PolyError> {
        if w.len() != self.nvars {
            return Err(PolyError::Dimension { expected: self.nvars, got: w.len() });
        }
        Ok(())
    }

    fn raw_weighted_order(&self, w: &WeightVector) -> Result<Rat, PolyError> {
        self.check_weights(w)?;
        let min = self.terms.keys().map(|m| m.weight(w.as_slice())).min().ok_or(if self.truncated {
            PolyError::DroppedTerms(self.order)
        } else {
            PolyError::ZeroGerm
        })?;
        if self.truncated {
            // a dropped term has degree > order, hence weight above this floor
            let wmin = w.as_slice().iter().min().unwrap().clone();
            let floor = wmin * Rat::from_integer((self.order + 1).into());
            if min >= floor {
                return Err(PolyError::DroppedTerms(self.order));
            }
        }
        Ok(min)
    }

    pub fn weighted_order(&self, w: &WeightVector) -> Result<Rat, PolyError> {
        self.raw_weighted_order(w)
    }

    pub fn weighted_leading(&self, w: &WeightVector) -> Result<Germ, PolyError> {
        let min = self.raw_weighted_order(w)?;
        let mut g = Germ::zero(self.nvars, self.order);
        for (m, c) in &self.terms {
            if m.weight(w.as_slice()) == min {
                g.terms.insert(m.clone(), c.clone());
            }
        }
        Ok(g)
    }

    /// Symmetric matrix `Q` with `f_2(x) = x^T Q x`.
    pub fn quadratic_matrix(&self) -> Matrix {
        let n = self.nvars;
        let mut q = Matrix::zeros(n, n);
        let half = crate::rat::rat(1, 2);
        for (m, c) in &self.terms {
            if m.degree() != 2 {
                continue;
            }
            let idx: Vec<usize> = (0..n).flat_map(|i| std::iter::repeat_n(i, m.0[i] as usize)).collect();
            let (i, j) = (idx[0], idx[1]);
            if i == j {
                q[(i, i)] = c.clone();
            } else {
                q[(i, j)] = c * &half;
                q[(j, i)] = c * &half;
            }
        }
        q
    }

    fn fmt_term(m: &Monomial, c: &Rat, first: bool, out: &mut String) {
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut parts = Vec::new();
        if !a.is_one() || m.degree() == 0 {
            parts.push(fmt_rat(&a));
        }
        for (i, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("x{}", i + 1)),
                _ => parts.push(format!("x{}^{}", i + 1, e)),
            }
        }
        out.push_str(&parts.join("*"));
    }

    /// Terms in print order: by degree, then larger early exponents first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then(b.0.cmp(&a.0)));
        v
    }
}

impl fmt::Display for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            Germ::fmt_term(m, c, k == 0, &mut s);
        }
        f.write_str(&s)
    }
}

impl std::ops::Add for &Germ {
    type Output = Germ;
    fn add(self, rhs: &Germ) -> Germ {
        Germ::add(self, rhs)
    }
}

impl std::ops::Sub for &Germ {
    type Output = Germ;
    fn sub(self, rhs: &Germ) -> Germ {
        Germ::sub(self, rhs)
    }
}

impl std::ops::Mul for &Germ {
    type Output = Germ;
    fn mul(self, rhs: &Germ) -> Germ {
        Germ::mul(self, rhs)
    }
}

impl std::ops::Neg for &Germ {
    type Output = Germ;
    fn neg(self) -> Germ {
        Germ::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_germ;
    use crate::rat::{int, rat};

    fn g(s: &str, n: usize) -> Germ {
        parse_germ(s, n).unwrap()
    }

    #[test]
    fn taylor_split() {
        let f = parse_germ("x4 + x1*x2", 4).unwrap().with_order(4).unwrap();
        assert_eq!(f.taylor_component(2).unwrap(), g("x1*x2", 4).with_order(4).unwrap());
        assert!(f.taylor_component(5).is_err());
        let t = g("x1^2 + x2^3 + x3^7 + x1*x2*x3", 3);
        assert_eq!(t.taylor_component(2).unwrap().to_string(), "x1^2");
    }

    #[test]
    fn linear_changes() {
        let swap = LinearChange::permutation(&[1, 0]).unwrap();
        assert_eq!(g("x1^2", 2).substitute(&swap).unwrap(), g("x2^2", 2));
        let m = Matrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(-1)]]);
        let ch = LinearChange::new(m).unwrap();
        assert_eq!(g("x1^2 - x2^2", 2).substitute(&ch).unwrap(), g("4*x1*x2", 2));
        assert!(LinearChange::new(Matrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn restriction() {
        let f = g("x1^2*x2 + x2^4 + x1*x2^3", 2);
        assert_eq!(f.restrict(0, None).unwrap(), g("x2^4", 2));
        let x1 = g("x1", 2);
        assert_eq!(f.restrict(0, Some(&x1)), Err(PolyError::ReplacementInvolvesVar(0)));
    }

    #[test]
    fn weighted_orders() {
        let w = WeightVector::from_ints(&[3, 2]).unwrap();
        let f = g("x1^2*x2 + x2^4", 2);
        assert_eq!(f.weighted_order(&w).unwrap(), int(8));
        assert_eq!(f.weighted_leading(&w).unwrap(), f);
        let w = WeightVector::from_ints(&[4, 3]).unwrap();
        let f = g("x1^3 + x2^4 + x1*x2^3", 2);
        assert_eq!(f.weighted_order(&w).unwrap(), int(12));
        assert_eq!(f.weighted_leading(&w).unwrap(), g("x1^3 + x2^4", 2));
        assert_eq!(Germ::zero(2, 8).weighted_order(&w), Err(PolyError::ZeroGerm));
        assert!(WeightVector::new(vec![rat(1, 2), int(0)]).is_err());
    }

    #[test]
    fn truncation_is_flagged() {
        let x = Germ::var(1, 4, 0);
        let p = x.pow(5);
        assert!(p.is_zero() && p.is_truncated());
        let w = WeightVector::from_ints(&[1]).unwrap();
        assert_eq!(p.weighted_order(&w), Err(PolyError::DroppedTerms(4)));
        // x^4 stored, but x^5-terms were dropped: order 4 < 5 is still certain
        let q = x.pow(4).add(&p);
        assert_eq!(q.weighted_order(&w).unwrap(), int(4));
    }

    #[test]
    fn display_round_trip() {
        let f = g("-3/2*x1^2*x3 + x2 - 7 + 1/5*x1*x2^2*x3^3", 3);
        assert_eq!(f.to_string(), "-7 + x2 - 3/2*x1^2*x3 + 1/5*x1*x2^2*x3^3");
        assert_eq!(parse_germ(&f.to_string(), 3).unwrap(), f);
    }
}
