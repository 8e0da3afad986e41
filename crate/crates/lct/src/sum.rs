use num_traits::One;
use polyring::{Germ, Rat};

use crate::threshold::{Certificate, Threshold};
use crate::LctError;

/// `lct(f(x) + g(y)) = min(1, lct(f) + lct(g))` for germs in disjoint
/// variable sets `vars1`, `vars2`.
pub fn sum_lct(t1: &Threshold, vars1: &[usize], t2: &Threshold, vars2: &[usize]) -> Result<Threshold, LctError> {
    if vars1.iter().any(|v| vars2.contains(v)) {
        return Err(LctError::OverlappingVars);
    }
    let kind = t1.kind.combine(t2.kind).ok_or(LctError::IncompatibleKinds)?;
    let value = (&t1.value + &t2.value).min(Rat::one());
    Ok(Threshold { value, kind, certificate: Certificate::Sum(Box::new(t1.clone()), Box::new(t2.clone())) })
}

/// `(C^n, D/2)` is klt at a double point of a reduced `D`.
pub fn double_point_klt(g: &Germ) -> Result<bool, LctError> {
    if g.is_zero() {
        return Err(LctError::ZeroGerm);
    }
    Ok(g.certain_mult()? == 2)
}
