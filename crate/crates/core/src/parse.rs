//! Recursive descent parser for the polynomial expression language.
//!
//! Grammar:
//! ```text
//! expr     := term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | var ('^' uint)? | '(' expr ')' | '-' factor
//! rational := uint ('/' uint)?
//! ```
//! Whitespace is insignificant. Implicit multiplication is rejected. The
//! only variables are the eight reserved single letters; callers restrict
//! them further through `allowed_vars`.

use crate::poly::{MultiPoly, Rational};
use crate::vars::Var;
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("variable '{var}' is not allowed here (position {position})")]
    ForbiddenVariable { var: char, position: usize },
}

pub fn parse_poly(src: &str, allowed_vars: &[Var]) -> Result<MultiPoly, ParseError> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        allowed: allowed_vars,
    };
    p.skip_ws();
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
    allowed: &'a [Var],
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError::Syntax {
            position: self.pos,
            message: msg.to_string(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    self.skip_ws();
                    acc = acc.add_ref(&self.term()?);
                }
                Some(b'-') => {
                    self.bump();
                    self.skip_ws();
                    acc = acc.sub_ref(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    self.skip_ws();
                    acc = acc.mul_ref(&self.factor()?);
                }
                // reject implicit multiplication explicitly for a clear message
                Some(c) if c.is_ascii_alphanumeric() || c == b'(' => {
                    return Err(self.err("expected an operator (implicit multiplication is not allowed)"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some(b'-') => {
                self.bump();
                Ok(self.factor()?.neg_ref())
            }
            Some(b'(') => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let r = self.rational()?;
                Ok(MultiPoly::constant(r))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let position = self.pos;
                let ch = c as char;
                let var = Var::from_char(ch)
                    .ok_or(ParseError::ForbiddenVariable { var: ch, position })?;
                if !self.allowed.contains(&var) {
                    return Err(ParseError::ForbiddenVariable { var: ch, position });
                }
                self.bump();
                let mut exp = 1u32;
                self.skip_ws();
                if self.peek() == Some(b'^') {
                    self.bump();
                    self.skip_ws();
                    exp = self.uint()?;
                }
                Ok(MultiPoly::var(var).pow(exp))
            }
            Some(_) => Err(self.err("expected a number, variable, '(' or '-'")),
        }
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.bigint_digits()?;
        if self.peek() == Some(b'/') {
            self.bump();
            let denom_pos = self.pos;
            let denom = self.bigint_digits()?;
            if denom.is_zero() {
                return Err(ParseError::Syntax {
                    position: denom_pos,
                    message: "zero denominator in rational literal".to_string(),
                });
            }
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }

    fn bigint_digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(text.parse::<BigInt>().unwrap())
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an exponent"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<u32>().map_err(|_| ParseError::Syntax {
            position: start,
            message: "exponent out of range".to_string(),
        })
    }
}
