//! Recursive-descent parser for the canonical polynomial grammar.
//!
//! Accepts what `Display` prints plus implicit multiplication and
//! parentheses: `2x^2y - 3/4*a[1,2,0](y + 1)^2`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{ParamTag, PolyError, Polynomial, Rational, Var, VariableSet};

pub fn parse_rational(text: &str) -> Result<Rational, PolyError> {
    let s = text.trim();
    let err = |msg: &str| PolyError::Parse { pos: 0, msg: format!("{msg}: `{s}`") };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let d: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

pub(super) fn parse_polynomial(
    ambient: &Arc<VariableSet>,
    text: &str,
) -> Result<Polynomial, PolyError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ambient };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ambient: &'a Arc<VariableSet>,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> PolyError {
        PolyError::Parse { pos: self.pos, msg: msg.to_string() }
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

    fn expr(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = Polynomial::zero(self.ambient);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial, PolyError> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.unsigned()?;
            let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial, PolyError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.unsigned()?;
                let mut value = Rational::from_integer(n);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.unsigned()?;
                    if d.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    value /= Rational::from_integer(d);
                }
                Ok(Polynomial::constant(self.ambient, value))
            }
            Some(b'a') => {
                let start = self.pos;
                let close = self.src[start..]
                    .iter()
                    .position(|&c| c == b']')
                    .ok_or_else(|| self.error("unterminated parameter"))?;
                let text = std::str::from_utf8(&self.src[start..start + close + 1])
                    .map_err(|_| self.error("invalid utf-8"))?;
                let tag: ParamTag = text.parse()?;
                self.pos = start + close + 1;
                Polynomial::var(self.ambient, Var::Param(tag))
            }
            Some(c) => {
                let v = match c {
                    b'x' => Var::X,
                    b'y' => Var::Y,
                    b't' => Var::T,
                    b'u' => Var::U,
                    _ => return Err(self.error("unexpected character")),
                };
                self.pos += 1;
                Polynomial::var(self.ambient, v)
            }
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn unsigned(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits"))
    }
}
