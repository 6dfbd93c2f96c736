//! Recursive-descent parser for polynomial expressions such as
//! `3/2*x^2*y - (x + 1)^2`.

use num_bigint::BigInt;
use num_traits::One;

use super::polynomial::Polynomial;
use super::ring::Ring;
use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("{msg} at offset {offset}")]
    Syntax { offset: usize, msg: String },
    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { offset: usize, name: String },
}

impl ExprError {
    pub fn offset(&self) -> usize {
        match self {
            ExprError::Syntax { offset, .. } | ExprError::UnknownVariable { offset, .. } => *offset,
        }
    }
}

pub fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial, ExprError> {
    parse_with_product(text, ring, &|a, b| a * b)
}

/// Parse with a caller-supplied product, e.g. a graded-commutative one.
pub fn parse_with_product(
    text: &str,
    ring: &Ring,
    mul: &dyn Fn(&Polynomial, &Polynomial) -> Polynomial,
) -> Result<Polynomial, ExprError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        ring,
        mul,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
    mul: &'a dyn Fn(&Polynomial, &Polynomial) -> Polynomial,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ExprError {
        ExprError::Syntax {
            offset: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ExprError> {
        let mut acc = self.unary()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.unary()?;
            acc = (self.mul)(&acc, &f);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial, ExprError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial, ExprError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.integer()?;
            let e: u32 = n
                .try_into()
                .map_err(|_| self.err("exponent too large"))?;
            let mut acc = Polynomial::one(self.ring);
            for _ in 0..e {
                acc = (self.mul)(&acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt, ExprError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn atom(&mut self) -> Result<Polynomial, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut den = BigInt::one();
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    den = self.integer()?;
                    if den == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                }
                Ok(Polynomial::constant(self.ring, Rational::new(num, den)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.index_of(name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(ExprError::UnknownVariable {
                        offset: start,
                        name: name.to_string(),
                    }),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
