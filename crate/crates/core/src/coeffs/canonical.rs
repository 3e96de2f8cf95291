//! The canonical text form of coefficients and its parser.
//!
//! Polynomials are written with ascending exponents, e.g.
//! `-q^2 + q^6 + q^8 - q^10`; rational functions as `(num)/(den)`, with the
//! denominator omitted when it is 1.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{LaurentPoly, RationalFunction};
use crate::error::{Error, Result};

pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, p: &LaurentPoly) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (n, (e, c)) in p.terms().enumerate() {
        match (n, c.is_negative()) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let mag = c.abs();
        if e == 0 {
            write!(f, "{mag}")?;
            continue;
        }
        if !mag.is_one() {
            write!(f, "{mag}")?;
        }
        f.write_str("q")?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

pub(crate) fn write_rational(f: &mut fmt::Formatter<'_>, r: &RationalFunction) -> fmt::Result {
    if r.den().is_one() {
        write_poly(f, r.num())
    } else {
        f.write_str("(")?;
        write_poly(f, r.num())?;
        f.write_str(")/(")?;
        write_poly(f, r.den())?;
        f.write_str(")")
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, b: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn term(&mut self) -> Result<(i64, BigInt)> {
        self.skip_ws();
        let coeff = self.digits().map(|d| d.parse::<BigInt>().unwrap());
        if self.peek() != Some(b'q') {
            return match coeff {
                Some(c) => Ok((0, c)),
                None => self.err("expected a coefficient or `q`"),
            };
        }
        self.pos += 1;
        let mut exp = 1i64;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = self.peek() == Some(b'-');
            if neg {
                self.pos += 1;
            }
            let Some(d) = self.digits() else {
                return self.err("expected an exponent after `^`");
            };
            exp = match d.parse::<i64>() {
                Ok(v) if neg => -v,
                Ok(v) => v,
                Err(_) => return self.err("exponent out of range"),
            };
        }
        Ok((exp, coeff.unwrap_or_else(BigInt::one)))
    }

    fn poly(&mut self) -> Result<LaurentPoly> {
        let mut terms = Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            let (e, c) = self.term()?;
            terms.push((e, if neg { -c } else { c }));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                break;
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }

    fn parenthesized(&mut self) -> Result<LaurentPoly> {
        if !self.eat(b'(') {
            return self.err("expected `(`");
        }
        let p = self.poly()?;
        if !self.eat(b')') {
            return self.err("expected `)`");
        }
        Ok(p)
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos == self.s.len() {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }
}

pub fn parse_poly(s: &str) -> Result<LaurentPoly> {
    let mut cur = Cursor { s: s.as_bytes(), pos: 0 };
    let p = cur.poly()?;
    cur.finish()?;
    Ok(p)
}

pub fn parse_rational(s: &str) -> Result<RationalFunction> {
    let mut cur = Cursor { s: s.as_bytes(), pos: 0 };
    cur.skip_ws();
    let num = if cur.peek() == Some(b'(') {
        cur.parenthesized()?
    } else {
        cur.poly()?
    };
    let den = if cur.eat(b'/') {
        cur.parenthesized()?
    } else {
        LaurentPoly::one()
    };
    cur.finish()?;
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(RationalFunction::new(num, den))
}

impl std::str::FromStr for LaurentPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

impl std::str::FromStr for RationalFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn renders_spec_example() {
        let x = p(&[(2, -1), (6, 1), (8, 1), (10, -1)]);
        assert_eq!(x.to_string(), "-q^2 + q^6 + q^8 - q^10");
    }

    #[test]
    fn renders_edge_cases() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::one().to_string(), "1");
        assert_eq!(p(&[(0, -1)]).to_string(), "-1");
        assert_eq!(p(&[(1, 1)]).to_string(), "q");
        assert_eq!(p(&[(-2, 3), (0, -2), (1, -1)]).to_string(), "3q^-2 - 2 - q");
    }

    #[test]
    fn renders_rational() {
        let r = RationalFunction::new(LaurentPoly::one(), p(&[(0, 1), (2, -1)]));
        assert_eq!(r.to_string(), "(1)/(1 - q^2)");
        assert_eq!(RationalFunction::one().to_string(), "1");
    }

    #[test]
    fn parses_back() {
        for s in ["0", "1", "-q", "q^-1 + q", "-q^2 + q^6 + q^8 - q^10", "(q)/(1 - q^2)", "2q^-3 - 17q^5"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("q^").is_err());
        assert!(parse_rational("1 +").is_err());
        assert!(parse_rational("(1)/(0)").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -20i64..20), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn canonical_string_round_trips(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let r = RationalFunction::new(a, b);
            let s = r.to_string();
            prop_assert_eq!(parse_rational(&s).unwrap(), r);
        }
    }
}
