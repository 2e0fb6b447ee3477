//! Recursive-descent parser for the polynomial expression grammar:
//!
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' uint)?
//! base     := rational | variable | '(' expr ')'
//! rational := '-'? uint ('/' uint)?
//! ```
//!
//! A leading `-` that is not followed by a digit negates the whole term, so
//! `-x1^2` reads as `-(x1^2)`, while `-3^2` is the literal `-3` squared.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::multi_index::MultiIndex;
use super::polynomial::{Polynomial, Rational};
use super::{ParseErrorKind, PolyError};

/// Parse `text` as a polynomial in `x1 .. x{d}`.
pub fn parse_poly(text: &str, d: usize) -> Result<Polynomial, PolyError> {
    parse_poly_with(text, d, "x")
}

/// Parse with variables named `{prefix}1 .. {prefix}{d}`.
pub fn parse_poly_with(text: &str, d: usize, prefix: &str) -> Result<Polynomial, PolyError> {
    if d == 0 {
        return Err(PolyError::DimensionMismatch {
            expected: 1,
            found: 0,
        });
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        d,
        prefix: prefix.as_bytes(),
    };
    p.skip_ws();
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.err(ParseErrorKind::Syntax(String::from(
            "unexpected trailing input",
        ))));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    d: usize,
    prefix: &'a [u8],
}

impl Parser<'_> {
    fn err(&self, kind: ParseErrorKind) -> PolyError {
        PolyError::Parse {
            position: self.pos,
            kind,
        }
    }

    fn syntax(&self, msg: &str) -> PolyError {
        self.err(ParseErrorKind::Syntax(msg.to_string()))
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.signed_term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn signed_term(&mut self) -> Result<Polynomial, PolyError> {
        self.skip_ws();
        if self.peek() == Some(b'-') {
            let next = self.src[self.pos + 1..]
                .iter()
                .copied()
                .find(|c| !c.is_ascii_whitespace());
            if !matches!(next, Some(b'0'..=b'9')) {
                self.pos += 1;
                self.skip_ws();
                return Ok(-self.term()?);
            }
        }
        self.term()
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if self.peek() != Some(b'*') {
                return Ok(acc);
            }
            self.pos += 1;
            self.skip_ws();
            let f = self.factor()?;
            acc = &acc * &f;
        }
    }

    fn factor(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.base()?;
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'0'..=b'9') => {}
            _ => return Err(self.err(ParseErrorKind::BadExponent)),
        }
        let digits = self.digits();
        let e: u32 = core::str::from_utf8(digits)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or(PolyError::Parse {
                position: start,
                kind: ParseErrorKind::BadExponent,
            })?;
        // a fractional exponent such as x^1/2 would otherwise parse as (x^1)/2
        if self.peek() == Some(b'/') || self.peek() == Some(b'.') {
            return Err(PolyError::Parse {
                position: start,
                kind: ParseErrorKind::BadExponent,
            });
        }
        Ok(base.pow(e))
    }

    fn base(&mut self) -> Result<Polynomial, PolyError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.syntax("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'-' | b'0'..=b'9') => {
                let c = self.rational()?;
                Ok(Polynomial::constant(self.d, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.variable(),
            Some(_) => Err(self.syntax("unexpected character")),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    fn digits(&mut self) -> &[u8] {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn uint(&mut self) -> Result<BigInt, PolyError> {
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.syntax("expected an integer"));
        }
        let s = core::str::from_utf8(digits).expect("ascii digits");
        Ok(s.parse::<BigInt>().expect("valid digits"))
    }

    fn rational(&mut self) -> Result<Rational, PolyError> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        };
        let num = self.uint()?;
        let mut den = BigInt::one();
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            den = self.uint()?;
            if den.is_zero() {
                return Err(PolyError::Parse {
                    position: at,
                    kind: ParseErrorKind::Syntax(String::from("zero denominator")),
                });
            }
        }
        let r = Rational::new(num, den);
        Ok(if neg { -r } else { r })
    }

    fn variable(&mut self) -> Result<Polynomial, PolyError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        let name = &self.src[start..self.pos];
        let unknown = || PolyError::Parse {
            position: start,
            kind: ParseErrorKind::UnknownVariable(String::from_utf8_lossy(name).into_owned()),
        };
        let Some(rest) = name.strip_prefix(self.prefix) else {
            return Err(unknown());
        };
        if rest.is_empty() || rest[0] == b'0' || !rest.iter().all(u8::is_ascii_digit) {
            return Err(unknown());
        }
        let idx: usize = core::str::from_utf8(rest)
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(unknown)?;
        if idx == 0 || idx > self.d {
            return Err(unknown());
        }
        let mut v: Vec<u32> = alloc::vec![0; self.d];
        v[idx - 1] = 1;
        Ok(Polynomial::monomial(MultiIndex::new(v), Rational::one()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::polynomial::{rat, ratio};

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn cusp_terms() {
        let f = parse_poly("x1^3 - x2^2", 2).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.coeff(&mi(&[3, 0])), rat(1));
        assert_eq!(f.coeff(&mi(&[0, 2])), rat(-1));
    }

    #[test]
    fn zero_and_fractions() {
        assert!(parse_poly("0", 3).unwrap().is_zero());
        let f = parse_poly("(1/2)*x1*x2 + x1", 2).unwrap();
        assert_eq!(f.coeff(&mi(&[1, 1])), ratio(1, 2));
        assert_eq!(f.coeff(&mi(&[1, 0])), rat(1));
        assert_eq!(f.num_terms(), 2);
    }

    #[test]
    fn unary_minus() {
        assert_eq!(parse_poly("-3^2", 1).unwrap(), parse_poly("9", 1).unwrap());
        assert_eq!(
            parse_poly("-x1^2", 1).unwrap(),
            Polynomial::monomial(mi(&[2]), rat(-1))
        );
        assert_eq!(
            parse_poly("x1*-2", 1).unwrap(),
            parse_poly("-2*x1", 1).unwrap()
        );
        assert_eq!(
            parse_poly("-(x1 + 1)", 1).unwrap(),
            parse_poly("-x1 - 1", 1).unwrap()
        );
    }

    #[test]
    fn round_trip_through_display() {
        for s in [
            "x1^3 - x2^2",
            "1/2*x1*x2 + x1",
            "-7/3",
            "x1*x2*x3 - 2*x3^5 + 1",
        ] {
            let f = parse_poly(s, 3).unwrap();
            assert_eq!(parse_poly(&f.to_string(), 3).unwrap(), f);
        }
        let g = parse_poly_with("y1^2*y2 - y2", 2, "y").unwrap();
        assert_eq!(parse_poly_with(&g.to_text("y"), 2, "y").unwrap(), g);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_poly("x1 + x3", 2) {
            Err(PolyError::Parse {
                position: 5,
                kind: ParseErrorKind::UnknownVariable(v),
            }) => assert_eq!(v, "x3"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_poly("x1^-1", 2),
            Err(PolyError::Parse {
                position: 3,
                kind: ParseErrorKind::BadExponent
            })
        ));
        assert!(matches!(
            parse_poly("x1^1/2", 2),
            Err(PolyError::Parse {
                kind: ParseErrorKind::BadExponent,
                ..
            })
        ));
        assert!(matches!(
            parse_poly("x1 +", 2),
            Err(PolyError::Parse {
                position: 4,
                kind: ParseErrorKind::Syntax(_)
            })
        ));
        assert!(matches!(
            parse_poly("(x1", 2),
            Err(PolyError::Parse {
                kind: ParseErrorKind::Syntax(_),
                ..
            })
        ));
        assert!(parse_poly("y1", 2).is_err());
        assert!(parse_poly("x01", 2).is_err());
        assert!(parse_poly("1/0", 2).is_err());
    }
}
