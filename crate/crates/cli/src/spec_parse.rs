//! Ring specification grammar (case-insensitive):
//!
//! ```text
//! spec    := factor ('x' factor)*          left-associative product
//! factor  := 'Z' int | 'GF(' int ['^' int] ')' | 'M' int '(' spec ')'
//!          | 'CHAIN(' int ')' | '(' spec ')'
//! ```

use frobcode_core::ring::{prime_power, ring_cap, RingSpec};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("ring spec {text:?}, column {column}: {message}")]
    Syntax { text: String, column: usize, message: String },
    #[error("ring spec {text:?}: {message}")]
    Invalid { text: String, message: String },
}

struct Parser<'a> {
    text: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T, SpecError> {
        Err(SpecError::Syntax { text: self.text.to_string(), column: self.pos + 1, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.to_ascii_uppercase())
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        let end = self.pos + word.len();
        if end <= self.chars.len() && self.chars[self.pos..end].iter().map(|c| c.to_ascii_uppercase()).eq(word.chars()) {
            self.pos = end;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<u32, SpecError> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().or_else(|_| {
            self.pos = start;
            self.err("integer out of range")
        })
    }

    fn spec(&mut self) -> Result<RingSpec, SpecError> {
        let mut left = self.factor()?;
        while self.eat('X') {
            let right = self.factor()?;
            left = RingSpec::prod(left, right);
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<RingSpec, SpecError> {
        let start = self.pos;
        if self.eat('(') {
            let inner = self.spec()?;
            self.expect(')')?;
            return Ok(inner);
        }
        if self.keyword("CHAIN") {
            self.expect('(')?;
            let q = self.int()?;
            self.expect(')')?;
            return Ok(RingSpec::chain(q));
        }
        if self.keyword("GF") {
            self.expect('(')?;
            let at = self.pos;
            let base = self.int()?;
            let spec = if self.eat('^') {
                RingSpec::gf(base, self.int()?)
            } else {
                match prime_power(base as u64) {
                    Some((p, k)) => RingSpec::gf(p, k),
                    None => {
                        self.pos = at;
                        return self.err(format!("{base} is not a prime power"));
                    }
                }
            };
            self.expect(')')?;
            return Ok(spec);
        }
        match self.peek() {
            Some('Z') => {
                self.pos += 1;
                Ok(RingSpec::zm(self.int()?))
            }
            Some('M') => {
                self.pos += 1;
                let n = self.int()?;
                self.expect('(')?;
                let inner = self.spec()?;
                self.expect(')')?;
                Ok(RingSpec::mat(n, inner))
            }
            Some(c) => {
                self.pos = start;
                self.skip_ws();
                self.err(format!("unsupported constructor starting with '{c}'"))
            }
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses and validates a ring specification against the current size cap.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec, SpecError> {
    let mut p = Parser { text, chars: text.chars().collect(), pos: 0 };
    let spec = p.spec()?;
    if p.peek().is_some() {
        return p.err("unexpected trailing input");
    }
    spec.validate(ring_cap())
        .map_err(|e| SpecError::Invalid { text: text.to_string(), message: e.to_string() })?;
    Ok(spec)
}
