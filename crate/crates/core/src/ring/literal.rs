//! Text literals for ring elements.
//!
//! | ring        | literal                                   | example (value)      |
//! |-------------|-------------------------------------------|----------------------|
//! | `Zm`        | decimal integer, reduced mod `m`          | `3`, `-1`            |
//! | `GF(p)`     | decimal integer, reduced mod `p`          | `4`                  |
//! | `GF(p^k)`   | `k` base-36 coefficient digits, low first | `01` (= t)           |
//! | `Mn(S)`     | `[e11;e12;...;enn]`, row-major            | `[1;0;0;1]`          |
//! | `AxB`       | `a|b`                                     | `1|2`                |
//! | `CHAIN(q)`  | two field literals `ab`, or `a+bu`        | `01`, `0+1u` (= u)   |

use super::{Elem, Layout, Ring};
use crate::error::{Error, Result};

fn bad(literal: &str, reason: impl Into<String>) -> Error {
    Error::BadLiteral { literal: literal.to_string(), reason: reason.into() }
}

fn digit_char(d: usize) -> char {
    std::char::from_digit(d as u32, 36).expect("digit below 36")
}

/// Splits at top-level occurrences of `sep` (outside brackets).
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl Ring {
    /// Number of top-level `|` separators in this ring's literals.
    fn pipe_arity(&self) -> usize {
        match &self.layout {
            Layout::Prod { left, right } => left.pipe_arity() + right.pipe_arity() + 1,
            _ => 0,
        }
    }

    /// Canonical literal of `x`; [`Ring::parse_elem`] accepts it back.
    pub fn format_elem(&self, x: Elem) -> String {
        let coords = self.coordinates(x);
        match &self.layout {
            Layout::Zm => coords[0].to_string(),
            Layout::Field(m) if m.degree() == 1 => coords[0].to_string(),
            Layout::Field(_) => coords.iter().map(|&d| digit_char(d)).collect(),
            Layout::Mat { inner, .. } => {
                let cells: Vec<String> = coords.iter().map(|&c| inner.format_elem(Elem(c as u16))).collect();
                format!("[{}]", cells.join(";"))
            }
            Layout::Prod { left, right } => {
                format!("{}|{}", left.format_elem(Elem(coords[0] as u16)), right.format_elem(Elem(coords[1] as u16)))
            }
            Layout::Chain { field } => {
                let (a, b) = (Elem(coords[0] as u16), Elem(coords[1] as u16));
                format!("{}{}", field.fixed_width_literal(a), field.fixed_width_literal(b))
            }
        }
    }

    /// Field literal padded to the field degree, one base-36 digit per coefficient.
    fn fixed_width_literal(&self, x: Elem) -> String {
        self.coordinates(x).iter().map(|&d| digit_char(d)).collect()
    }

    fn field_degree(&self) -> usize {
        match &self.layout {
            Layout::Field(m) => m.degree(),
            _ => unreachable!("chain rings are built over fields"),
        }
    }

    pub fn parse_elem(&self, literal: &str) -> Result<Elem> {
        let s = literal.trim();
        if s.is_empty() {
            return Err(bad(literal, "empty literal"));
        }
        match &self.layout {
            Layout::Zm => self.parse_integer(s, self.size),
            Layout::Field(m) if m.degree() == 1 => self.parse_integer(s, m.p as usize),
            Layout::Field(m) => {
                if s.chars().count() > m.degree() {
                    return Err(bad(literal, format!("expected at most {} coefficient digits", m.degree())));
                }
                let mut coords = vec![0usize; m.degree()];
                for (i, ch) in s.chars().enumerate() {
                    let d = ch
                        .to_digit(36)
                        .filter(|&d| d < m.p)
                        .ok_or_else(|| bad(literal, format!("{ch:?} is not a digit mod {}", m.p)))?;
                    coords[i] = d as usize;
                }
                Ok(self.from_coordinates(&coords).expect("coordinates in range"))
            }
            Layout::Mat { n, inner } => {
                let body = s
                    .strip_prefix('[')
                    .and_then(|b| b.strip_suffix(']'))
                    .ok_or_else(|| bad(literal, "matrix literal must be bracketed"))?;
                let cells = split_top(body, ';');
                if cells.len() != n * n {
                    return Err(bad(literal, format!("expected {} entries, found {}", n * n, cells.len())));
                }
                let coords = cells
                    .iter()
                    .map(|c| inner.parse_elem(c).map(|e| e.index()))
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.from_coordinates(&coords).expect("coordinates in range"))
            }
            Layout::Prod { left, right } => {
                let parts = split_top(s, '|');
                let right_pipes = right.pipe_arity();
                if parts.len() != self.pipe_arity() + 1 {
                    return Err(bad(literal, format!("expected {} '|'-separated parts", self.pipe_arity() + 1)));
                }
                let cut = parts.len() - right_pipes - 1;
                let l = left.parse_elem(&parts[..cut].join("|"))?;
                let r = right.parse_elem(&parts[cut..].join("|"))?;
                Ok(self.from_coordinates(&[l.index(), r.index()]).expect("coordinates in range"))
            }
            Layout::Chain { field } => {
                let (a, b) = if let Some(pos) = s.find('+') {
                    let b = s[pos + 1..]
                        .strip_suffix('u')
                        .ok_or_else(|| bad(literal, "expected a+bu"))?;
                    (field.parse_elem(&s[..pos])?, field.parse_elem(b)?)
                } else if let Some(b) = s.strip_suffix('u') {
                    (Elem::ZERO, field.parse_elem(if b.is_empty() { "1" } else { b })?)
                } else {
                    let width = field.field_degree();
                    let chars: Vec<char> = s.chars().collect();
                    if chars.len() != 2 * width {
                        return Err(bad(literal, format!("expected {} digits (two field literals)", 2 * width)));
                    }
                    let a: String = chars[..width].iter().collect();
                    let b: String = chars[width..].iter().collect();
                    (field.parse_fixed(&a, literal)?, field.parse_fixed(&b, literal)?)
                };
                Ok(self.from_coordinates(&[a.index(), b.index()]).expect("coordinates in range"))
            }
        }
    }

    fn parse_fixed(&self, digits: &str, literal: &str) -> Result<Elem> {
        let p = match &self.layout {
            Layout::Field(m) => m.p,
            _ => unreachable!(),
        };
        let coords = digits
            .chars()
            .map(|ch| ch.to_digit(36).filter(|&d| d < p).map(|d| d as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| bad(literal, format!("invalid field digits {digits:?}")))?;
        Ok(self.from_coordinates(&coords).expect("coordinates in range"))
    }

    fn parse_integer(&self, s: &str, modulus: usize) -> Result<Elem> {
        let v: i64 = s.parse().map_err(|_| bad(s, "expected an integer"))?;
        let r = v.rem_euclid(modulus as i64) as usize;
        Ok(self.from_coordinates(&[r]).expect("residue in range"))
    }
}
