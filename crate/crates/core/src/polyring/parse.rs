//! Text form of polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := item ('*' item)*
//! item   := coeff | 'x' INT ['^' INT]
//! coeff  := INT ['/' INT]
//! ```
//!
//! Whitespace is insignificant. A coefficient that vanishes in the field is
//! legal and makes its term zero; a denominator that vanishes is an error.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::polyring::{FieldSpec, Monomial, Polynomial, Scalar};

pub fn parse_polynomial(text: &str, field: FieldSpec, nvars: usize) -> Result<Polynomial> {
    let mut parser = Parser {
        src: text.as_bytes(),
        pos: 0,
        field,
        nvars,
    };
    let terms = parser.expr()?;
    Polynomial::from_terms(field, nvars, terms)
}

/// Parses a single monomial such as `x2*x4^4*x5^2` (coefficient 1 allowed).
pub fn parse_monomial(text: &str, nvars: usize) -> Result<Monomial> {
    let p = parse_polynomial(text, FieldSpec::Rational, nvars)?;
    match p.terms().collect::<Vec<_>>().as_slice() {
        [(m, c)] if c.is_one() => Ok((*m).clone()),
        _ => Err(Error::parse(
            0,
            format!("{text:?} is not a single monomial"),
        )),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: FieldSpec,
    nvars: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.pos, message))
    }

    fn expr(&mut self) -> Result<Vec<(Monomial, Scalar)>> {
        let mut terms = Vec::new();
        let mut negate = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negate { -&c } else { c }));
            match self.peek() {
                None => return Ok(terms),
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                Some(c) => return self.err(format!("unexpected {:?}", c as char)),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Monomial, Scalar)> {
        let mut coeff = self.field.one();
        let mut mono = Monomial::one();
        loop {
            match self.peek() {
                Some(b'x' | b'X') => {
                    self.pos += 1;
                    let at = self.pos;
                    let index = self.small_int("variable index")?;
                    if index == 0 || index > self.nvars as u64 {
                        return Err(Error::parse(
                            at,
                            format!("variable x{index} outside x1..x{}", self.nvars),
                        ));
                    }
                    let exp = if self.eat(b'^') {
                        u32::try_from(self.small_int("exponent")?)
                            .or_else(|_| self.err("exponent too large"))?
                    } else {
                        1
                    };
                    mono = mono.mul(&Monomial::from_pairs([(index as usize, exp)]));
                }
                Some(c) if c.is_ascii_digit() => {
                    let num = self.big_int()?;
                    let value = if self.eat(b'/') {
                        let at = self.pos;
                        let den = self.big_int()?;
                        self.field.from_ratio(&num, &den).map_err(|_| {
                            Error::parse(at, format!("denominator {den} is not invertible"))
                        })?
                    } else {
                        self.field.from_bigint(&num)
                    };
                    coeff = &coeff * &value;
                }
                Some(c) => {
                    return self.err(format!(
                        "expected a coefficient or variable, found {:?}",
                        c as char
                    ))
                }
                None => return self.err("unexpected end of input"),
            }
            if !self.eat(b'*') {
                return Ok((mono, coeff));
            }
        }
    }

    fn digits(&mut self, what: &str) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(format!("expected {what}"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn small_int(&mut self, what: &str) -> Result<u64> {
        let at = self.pos;
        self.digits(what)?
            .parse()
            .map_err(|_| Error::parse(at, format!("{what} too large")))
    }

    fn big_int(&mut self) -> Result<BigInt> {
        Ok(self.digits("integer")?.parse().expect("decimal digits"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_terms() {
        let p = parse_polynomial("x1^2*x2 - 1", FieldSpec::Rational, 3).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(
            p.coefficient(&Monomial::from_pairs([(1, 2), (2, 1)])),
            FieldSpec::Rational.one()
        );
        assert_eq!(
            p.coefficient(&Monomial::one()),
            FieldSpec::Rational.from_i64(-1)
        );
        assert_eq!(p.to_string(), "x1^2*x2 - 1");
    }

    #[test]
    fn collects_like_terms() {
        let p = parse_polynomial("2*x1 + 3*x1", FieldSpec::Rational, 1).unwrap();
        assert_eq!(p.to_string(), "5*x1");
    }

    #[test]
    fn reduces_coefficients_mod_p() {
        let p = parse_polynomial("5*x1", FieldSpec::Prime(5), 1).unwrap();
        assert!(p.is_zero());
        let q = parse_polynomial("x1 - 1", FieldSpec::Prime(5), 1).unwrap();
        assert_eq!(q.to_string(), "x1 + 4");
    }

    #[test]
    fn rational_coefficients() {
        let p = parse_polynomial("-3/6*x2 + 1/3", FieldSpec::Rational, 2).unwrap();
        assert_eq!(p.to_string(), "-1/2*x2 + 1/3");
        assert!(matches!(
            parse_polynomial("1/5*x1", FieldSpec::Prime(5), 1),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn reports_positions() {
        assert_eq!(
            parse_polynomial("x1 + x4", FieldSpec::Rational, 3),
            Err(Error::parse(6, "variable x4 outside x1..x3"))
        );
        assert!(matches!(
            parse_polynomial("x1 + ", FieldSpec::Rational, 3),
            Err(Error::Parse { position: 5, .. })
        ));
        assert!(matches!(
            parse_polynomial("x1 $ x2", FieldSpec::Rational, 3),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(parse_polynomial("x", FieldSpec::Rational, 3).is_err());
    }

    #[test]
    fn monomials() {
        assert_eq!(
            parse_monomial("x2*x4^4*x5^2", 12).unwrap(),
            Monomial::from_pairs([(2, 1), (4, 4), (5, 2)])
        );
        assert!(parse_monomial("x1 + x2", 2).is_err());
        assert!(parse_monomial("2*x1", 2).is_err());
    }
}
