use serde::{Deserialize, Serialize};

use crate::BlowError;

/// `a·s + b·f` on `F_n`, with `s^2 = -n`, `s·f = 1`, `f^2 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HirzClass {
    pub n: u32,
    pub a: i64,
    pub b: i64,
}

impl HirzClass {
    pub fn new(n: u32, a: i64, b: i64) -> Self {
        HirzClass { n, a, b }
    }

    /// Effective and meeting a fibre once: `s + b·f` with `b >= 0`.
    pub fn is_effective_section(&self) -> bool {
        self.a == 1 && self.b >= 0
    }
}

impl std::fmt::Display for HirzClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let term = |c: i64, sym: &str| match c {
            1 => sym.to_string(),
            -1 => format!("-{sym}"),
            c => format!("{c}{sym}"),
        };
        match (self.a, self.b) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "{}", term(a, "s")),
            (0, b) => write!(f, "{}", term(b, "f")),
            (a, b) if b > 0 => write!(f, "{}+{}", term(a, "s"), term(b, "f")),
            (a, b) => write!(f, "{}-{}", term(a, "s"), term(-b, "f")),
        }
    }
}

pub fn hirz_intersect(c1: &HirzClass, c2: &HirzClass) -> Result<i64, BlowError> {
    if c1.n != c2.n {
        return Err(BlowError::IndexMismatch(c1.n, c2.n));
    }
    Ok(-(c1.n as i64) * c1.a * c2.a + c1.a * c2.b + c1.b * c2.a)
}

/// Nakai-Moishezon on `F_n`: positive on `s`, on `f` and on itself, which
/// reduces to `a > 0` and `b > n·a`.
pub fn hirz_is_ample(c: &HirzClass) -> bool {
    c.a > 0 && c.b > c.n as i64 * c.a
}

/// Splitting type `O(a) + O(b)` of a normal bundle, `a <= b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalBundle {
    pub a: i64,
    pub b: i64,
}

impl NormalBundle {
    pub fn new(a: i64, b: i64) -> Result<Self, BlowError> {
        if a > b {
            return Err(BlowError::BadSplitting(a, b));
        }
        Ok(NormalBundle { a, b })
    }

    pub fn degree(&self) -> i64 {
        self.a + self.b
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupResult {
    pub hirzebruch_index: u32,
    /// `E|_E = -s - c·f`.
    pub c: i64,
    pub e_self: HirzClass,
    /// Restriction of the strict transform of a surface through the curve.
    pub d_restrict: HirzClass,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Blow-up of a smooth rational curve `L` with normal bundle `N` in a smooth
/// threefold; `ldot` is `L·D` for a surface `D` smooth along `L`.
///
/// `E = P(N) = F_{b-a}`. Solving `(-s - c f)^2 = E^3 = -deg N` gives
/// `c = -a`, and `(L·D) f = E·g^*D = E|_E + D'|_E` gives the restriction.
pub fn curve_blowup(nb: NormalBundle, ldot: i64) -> BlowupResult {
    let n = (nb.b - nb.a) as u32;
    let c = -nb.a;
    BlowupResult {
        hirzebruch_index: n,
        c,
        e_self: HirzClass::new(n, -1, -c),
        d_restrict: HirzClass::new(n, 1, ldot + c),
        note: (n == 0).then(|| "E = P^1 x P^1; s and f are the two rulings, f the fibre over the curve".to_string()),
    }
}

/// Do the two surfaces through the blown-up curve still meet on `E`, giving
/// a zero-dimensional stratum of `D'_1 + D'_2 + E`?
pub fn zero_stratum_from_classes(d1: &HirzClass, d2: &HirzClass) -> Result<bool, BlowError> {
    let pairing = hirz_intersect(d1, d2)?;
    Ok(pairing > 0 && (hirz_is_ample(d1) || (d1.is_effective_section() && d2.is_effective_section())))
}

pub fn zero_stratum_certificate(r: &BlowupResult, other: &HirzClass) -> Result<bool, BlowError> {
    zero_stratum_from_classes(&r.d_restrict, other)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nb(a: i64, b: i64) -> NormalBundle {
        NormalBundle::new(a, b).unwrap()
    }

    #[test]
    fn pairing_and_ampleness() {
        let e = HirzClass::new(2, -1, -1);
        assert_eq!(hirz_intersect(&e, &e), Ok(0));
        let c = HirzClass::new(1, 1, 2);
        assert_eq!(hirz_intersect(&c, &c), Ok(3));
        assert!(hirz_is_ample(&c));
        let c = HirzClass::new(2, 1, 1);
        assert_eq!(hirz_intersect(&c, &HirzClass::new(2, 1, 0)), Ok(-1));
        assert!(!hirz_is_ample(&c));
        assert_eq!(hirz_intersect(&c, &HirzClass::new(1, 1, 0)), Err(BlowError::IndexMismatch(2, 1)));
    }

    #[test]
    fn restriction_classes() {
        let r = curve_blowup(nb(0, 0), 1);
        assert_eq!(
            (r.hirzebruch_index, r.e_self, r.d_restrict),
            (0, HirzClass::new(0, -1, 0), HirzClass::new(0, 1, 1))
        );
        let r = curve_blowup(nb(0, 1), 2);
        assert_eq!((r.hirzebruch_index, r.c, r.d_restrict), (1, 0, HirzClass::new(1, 1, 2)));
        let r = curve_blowup(nb(-1, 1), 1);
        assert_eq!((r.hirzebruch_index, r.c, r.d_restrict), (2, 1, HirzClass::new(2, 1, 2)));
        // O(1)+O(1) with L·D = 3: E|_E = -s+f, so D'|_E = s+2f
        let r = curve_blowup(nb(1, 1), 3);
        assert_eq!((r.hirzebruch_index, r.c), (0, -1));
        assert_eq!(r.e_self.to_string(), "-s+f");
        assert_eq!(r.d_restrict.to_string(), "s+2f");
        assert!(r.note.is_some());
    }

    #[test]
    fn zero_strata() {
        let r = curve_blowup(nb(0, 1), 2);
        assert_eq!(zero_stratum_certificate(&r, &r.d_restrict), Ok(true));
        let r = curve_blowup(nb(-1, 1), 1);
        assert!(!hirz_is_ample(&r.d_restrict));
        assert_eq!(zero_stratum_certificate(&r, &r.d_restrict), Ok(true));
        let f = HirzClass::new(1, 0, 1);
        assert_eq!(zero_stratum_from_classes(&f, &f), Ok(false));
    }

    #[test]
    fn splitting_order() {
        assert_eq!(NormalBundle::new(1, 0), Err(BlowError::BadSplitting(1, 0)));
    }
}
