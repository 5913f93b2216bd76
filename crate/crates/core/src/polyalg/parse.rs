//! Parser for arithmetic expressions over ℚ or ℚ(t):
//! integers, one optional variable, `+ - * / ^` and parentheses.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::Rational;

use super::field::Field;

struct Parser<'a, F> {
    src: &'a str,
    bytes: &'a [u8],
    pos: usize,
    var: Option<(&'a str, F)>,
}

pub fn parse_expr<F: Field>(s: &str, var: Option<(&str, F)>) -> Result<F> {
    let mut p = Parser {
        src: s,
        bytes: s.as_bytes(),
        pos: 0,
        var,
    };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error());
    }
    Ok(v)
}

impl<F: Field> Parser<'_, F> {
    fn error(&self) -> Error {
        Error::Parse {
            what: "expression",
            input: self.src.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<F> {
        let mut acc = self.term()?;
        while let Some(c @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == b'+' {
                acc.add(&rhs)
            } else {
                acc.sub(&rhs)
            };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<F> {
        let mut acc = self.unary()?;
        while let Some(c @ (b'*' | b'/')) = self.peek() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if c == b'*' {
                acc.mul(&rhs)
            } else {
                acc.div(&rhs).map_err(|_| self.error())?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<F> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<F> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            let exp: u32 = digits.parse().map_err(|_| self.error())?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<F> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error());
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let n: BigInt = self.digits().parse().map_err(|_| self.error())?;
                Ok(F::from_rational(&Rational::from_integer(n)))
            }
            Some(_) => {
                if let Some((name, value)) = &self.var {
                    if self.src[self.pos..].starts_with(name) {
                        let end = self.pos + name.len();
                        let boundary = self
                            .bytes
                            .get(end)
                            .map_or(true, |b| !b.is_ascii_alphanumeric() && *b != b'_');
                        if boundary {
                            self.pos = end;
                            return Ok(value.clone());
                        }
                    }
                }
                Err(self.error())
            }
            None => Err(self.error()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::RationalFunction;

    #[test]
    fn parses_rationals_and_functions() {
        let r: Rational = parse_expr("(-48 - 840 + 707*2)/16", None).unwrap();
        assert_eq!(r, Rational::frac(526, 16));
        let t = RationalFunction::t();
        let f = parse_expr("(t+1)^2 - t^2 - 2*t", Some(("t", t.clone()))).unwrap();
        assert_eq!(f, RationalFunction::one());
        assert!(parse_expr::<Rational>("1/0", None).is_err());
        assert!(parse_expr::<Rational>("t", None).is_err());
        assert!(parse_expr("tt", Some(("t", t.clone()))).is_err());
        assert!(parse_expr("(t", Some(("t", t))).is_err());
    }
}
