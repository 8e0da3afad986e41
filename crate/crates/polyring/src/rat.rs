//! Exact rationals and their `p/q` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::PolyError;

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator by `num-rational`.
pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// `p/q`, or just `p` for integers.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat, PolyError> {
    let s = s.trim();
    let bad = |msg: &str| PolyError::Parse { pos: 0, msg: format!("{msg}: {s:?}") };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad("bad numerator"))?;
    let d: BigInt = d.parse().map_err(|_| bad("bad denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rat::new(n, d))
}

/// Least common multiple of denominators, useful for clearing fractions.
pub fn denom_lcm<'a>(it: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    use num_integer::Integer;
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn abs(r: &Rat) -> Rat {
    r.abs()
}

/// Serde adapter: a single rational as a `"p/q"` string.
pub mod serde_rat {
    use super::*;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rat, D::Error> {
        let v = RatRepr::deserialize(d)?;
        v.into_rat().map_err(D::Error::custom)
    }

    #[derive(serde::Deserialize)]
    #[serde(untagged)]
    pub(crate) enum RatRepr {
        Int(i64),
        Str(String),
    }

    impl RatRepr {
        pub(crate) fn into_rat(self) -> Result<Rat, PolyError> {
            match self {
                RatRepr::Int(n) => Ok(int(n)),
                RatRepr::Str(s) => parse_rat(&s),
            }
        }
    }
}

/// Serde adapter: a list of rationals.
pub mod serde_rat_vec {
    use super::serde_rat::RatRepr;
    use super::*;
    use serde::{de::Error, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&fmt_rat(r))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rat>, D::Error> {
        let v = Vec::<RatRepr>::deserialize(d)?;
        v.into_iter().map(|r| r.into_rat().map_err(D::Error::custom)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for (n, d) in [(5, 8), (-7, 12), (0, 3), (4, 2), (-1, 1)] {
            let r = rat(n, d);
            assert_eq!(parse_rat(&fmt_rat(&r)).unwrap(), r);
        }
        assert_eq!(fmt_rat(&rat(10, -4)), "-5/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
