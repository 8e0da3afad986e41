//! Text syntax: sums of `c*x1^a*x2^b` with rational `c` written `p/q`.

use num_bigint::BigInt;
use num_traits::One;

use crate::germ::{Germ, Monomial};
use crate::rat::Rat;
use crate::PolyError;

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn small(&mut self) -> Result<u32, PolyError> {
        let n = self.digits()?;
        match u32::try_from(n) {
            Ok(v) => Ok(v),
            Err(_) => self.err("integer too large"),
        }
    }
}

/// Largest variable index `k` such that `xk` occurs in `text` (0 if none).
pub fn max_var(text: &str) -> usize {
    let b = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let mut j = i + 1;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(k) = text[i + 1..j].parse::<usize>() {
                best = best.max(k);
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

/// Parses into an exact germ whose order is the larger of the default and
/// the text's degree.
pub fn parse_germ(text: &str, nvars: usize) -> Result<Germ, PolyError> {
    let terms = parse_terms(text, nvars)?;
    Ok(Germ::exact_from_terms(nvars, terms))
}

/// Parses with a fixed order; terms above it are dropped and flagged.
pub fn parse_germ_with_order(text: &str, nvars: usize, order: u32) -> Result<Germ, PolyError> {
    let terms = parse_terms(text, nvars)?;
    Ok(Germ::from_terms(nvars, order, terms))
}

/// Parses with `nvars` inferred from the highest variable mentioned.
pub fn parse_germ_auto(text: &str) -> Result<Germ, PolyError> {
    parse_germ(text, max_var(text).max(1))
}

fn parse_terms(text: &str, nvars: usize) -> Result<Vec<(Monomial, Rat)>, PolyError> {
    if nvars == 0 {
        return Err(PolyError::Parse { pos: 0, msg: "need at least one variable".into() });
    }
    let mut lx = Lexer { s: text.as_bytes(), pos: 0 };
    let mut out = Vec::new();
    let mut first = true;
    loop {
        let sign = match lx.peek() {
            None if first => return lx.err("empty expression"),
            None => break,
            Some(b'+') => {
                lx.pos += 1;
                1
            }
            Some(b'-') => {
                lx.pos += 1;
                -1
            }
            Some(_) if first => 1,
            Some(c) => return lx.err(format!("expected + or -, found {:?}", c as char)),
        };
        first = false;
        let (m, c) = parse_term(&mut lx, nvars)?;
        out.push((m, if sign < 0 { -c } else { c }));
    }
    Ok(out)
}

fn parse_term(lx: &mut Lexer<'_>, nvars: usize) -> Result<(Monomial, Rat), PolyError> {
    let mut coeff = Rat::one();
    let mut exps = vec![0u32; nvars];
    let mut factors = 0;
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = lx.digits()?;
                let d = if lx.peek() == Some(b'/') {
                    lx.pos += 1;
                    let d = lx.digits()?;
                    if d == BigInt::from(0) {
                        return lx.err("zero denominator");
                    }
                    d
                } else {
                    BigInt::one()
                };
                coeff *= Rat::new(n, d);
            }
            Some(b'x') => {
                lx.pos += 1;
                let k = lx.small()? as usize;
                if k == 0 || k > nvars {
                    return lx.err(format!("variable x{k} outside x1..x{nvars}"));
                }
                let e = if lx.peek() == Some(b'^') {
                    lx.pos += 1;
                    lx.small()?
                } else {
                    1
                };
                exps[k - 1] += e;
            }
            Some(c) => return lx.err(format!("unexpected {:?}", c as char)),
            None => return lx.err("dangling operator"),
        }
        factors += 1;
        if lx.peek() == Some(b'*') {
            lx.pos += 1;
        } else {
            break;
        }
    }
    debug_assert!(factors > 0);
    Ok((Monomial(exps), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn parses_coefficients_and_powers() {
        let g = parse_germ("3/4*x1^2*x2 - x2^3 + 2", 2).unwrap();
        assert_eq!(g.coeff_of(&[2, 1]), rat(3, 4));
        assert_eq!(g.coeff_of(&[0, 3]), rat(-1, 1));
        assert_eq!(g.coeff_of(&[0, 0]), rat(2, 1));
        assert_eq!(parse_germ("x1*x1", 1).unwrap().coeff_of(&[2]), rat(1, 1));
        assert_eq!(parse_germ("-x1 + x1", 1).unwrap().num_terms(), 0);
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x3", "x1 +", "x1 ** 2", "1/0*x1", "x1 x2", "y"] {
            assert!(parse_germ(bad, 2).is_err(), "{bad}");
        }
    }

    #[test]
    fn order_handling() {
        let g = parse_germ("x1^10", 1).unwrap();
        assert_eq!(g.order(), 10);
        assert!(!g.is_truncated());
        let h = parse_germ_with_order("x1^10 + x1^2", 1, 8).unwrap();
        assert!(h.is_truncated());
        assert_eq!(h.num_terms(), 1);
        assert_eq!(max_var("x1^2 + x12*x3"), 12);
    }
}
