//! Recursive-descent parser for polynomial text.
//!
//! Grammar: sums and differences of products of factors, where a factor is
//! an integer or `a/b` literal, a variable name, or a parenthesized
//! expression, optionally raised to a non-negative integer power.

use num_bigint::BigInt;

use super::polynomial::Polynomial;
use super::scalar::Scalar;
use super::vars::Vars;
use super::AlgError;

pub(super) fn parse(vars: &Vars, src: &str) -> Result<Polynomial, AlgError> {
    let mut p = Parser { vars, src: src.as_bytes(), pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let out = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    vars: &'a Vars,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn error(&self, msg: &str) -> AlgError {
        AlgError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial, AlgError> {
        let mut acc = self.product()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.product()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial, AlgError> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, AlgError> {
        if self.eat(b'-') {
            Ok(-self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Polynomial, AlgError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent out of range"))?;
            Ok(base.pow(e))
        } else {
            Ok(base)
        }
    }

    fn integer(&mut self) -> Result<BigInt, AlgError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| self.error("bad integer"))
    }

    fn atom(&mut self) -> Result<Polynomial, AlgError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Scalar::from_bigint(num);
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        return Err(self.error("zero denominator"));
                    }
                    value = value / Scalar::from_bigint(den);
                }
                Ok(Polynomial::constant(self.vars, value))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                Polynomial::var(self.vars, name)
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::exactalg::{AlgError, Polynomial, VariableSet};

    #[test]
    fn parses_factored_and_expanded_forms() {
        let b = VariableSet::blowup(3, 2);
        let f = Polynomial::parse(&b, "(k-eta)^4 - eta").unwrap();
        let g = Polynomial::parse(&b, "k^4 - 4*k^3*eta + 6*k^2*eta^2 - 4*k*eta^3 + eta^4 - eta").unwrap();
        assert_eq!(f, g);
        let v = VariableSet::bundle(3, 2);
        assert_eq!(Polynomial::parse(&v, "-(xi - 2*h)*q2 + h^4").unwrap().to_string(), "h^4 - xi*q2 + 2*h*q2");
        assert_eq!(Polynomial::parse(&v, " 3 / 6 * h ").unwrap().to_string(), "1/2*h");
    }

    #[test]
    fn reports_errors() {
        let v = VariableSet::bundle(3, 2);
        assert!(matches!(Polynomial::parse(&v, ""), Err(AlgError::Parse { .. })));
        assert!(matches!(Polynomial::parse(&v, "h^"), Err(AlgError::Parse { .. })));
        assert!(matches!(Polynomial::parse(&v, "(h"), Err(AlgError::Parse { .. })));
        assert!(matches!(Polynomial::parse(&v, "h h"), Err(AlgError::Parse { .. })));
        assert!(matches!(Polynomial::parse(&v, "1/0"), Err(AlgError::Parse { .. })));
        assert_eq!(Polynomial::parse(&v, "k"), Err(AlgError::UnknownVariable("k".into())));
    }
}
