//! Parsing and printing of degree terms.
//!
//! The syntax extends the ordinal grammar with the atom `W`:
//!
//! ```text
//! mexpr    := msummand ('+' msummand)*
//! msummand := 'W' ('^' factor)? ('*' factor)*
//!           | ordinal-term
//! ```
//!
//! `factor` and `ordinal-term` are the factor and product levels of the
//! ordinal grammar, so exponents and coefficients are ordinals; `W` cannot
//! appear inside them. Summands fold with meta-ordinal addition, so input
//! need not be in normal form. Printing emits the normal form, which parses
//! back to itself.

use crate::MetaOrdinal;
use ordinal::{parse_factor_prefix, parse_term_prefix, Ordinal, ParseError};
use std::fmt;
use std::str::FromStr;

impl FromStr for MetaOrdinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = MetaParser { src: s, pos: 0 };
        let mut acc = p.summand()?;
        while p.peek() == Some(b'+') {
            p.pos += 1;
            acc = acc.add(&p.summand()?);
        }
        p.skip_ws();
        if p.pos != s.len() {
            return Err(ParseError {
                pos: p.pos,
                msg: "unexpected trailing input".into(),
            });
        }
        Ok(acc)
    }
}

struct MetaParser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> MetaParser<'a> {
    fn skip_ws(&mut self) {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    /// Runs an ordinal prefix parser at the current position, shifting error
    /// offsets into this string's coordinates.
    fn ordinal_at(
        &mut self,
        parse: fn(&str) -> Result<(Ordinal, usize), ParseError>,
    ) -> Result<Ordinal, ParseError> {
        let base = self.pos;
        match parse(&self.src[base..]) {
            Ok((value, used)) => {
                self.pos = base + used;
                Ok(value)
            }
            Err(e) => Err(ParseError {
                pos: base + e.pos,
                msg: e.msg,
            }),
        }
    }

    fn summand(&mut self) -> Result<MetaOrdinal, ParseError> {
        match self.peek() {
            Some(b'W') => {
                let next = self.src.as_bytes().get(self.pos + 1);
                if next.is_some_and(|c| c.is_ascii_alphanumeric()) {
                    return Err(ParseError {
                        pos: self.pos,
                        msg: "unknown name starting with 'W'".into(),
                    });
                }
                self.pos += 1;
                let exponent = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.ordinal_at(parse_factor_prefix)?
                } else {
                    Ordinal::one()
                };
                let mut coefficient = Ordinal::one();
                while self.peek() == Some(b'*') {
                    self.pos += 1;
                    coefficient = coefficient.mul(&self.ordinal_at(parse_factor_prefix)?);
                }
                Ok(MetaOrdinal::omega_term(exponent, coefficient))
            }
            Some(_) => Ok(MetaOrdinal::from_ordinal(
                self.ordinal_at(parse_term_prefix)?,
            )),
            None => Err(ParseError {
                pos: self.pos,
                msg: "expected a degree term".into(),
            }),
        }
    }
}

/// Formats an ordinal in factor position: parenthesized unless it parses as
/// a single factor already.
fn factor_display(x: &Ordinal) -> String {
    let atomic = x.as_nat().is_some() || x.parts().len() == 1 && x.parts().next().unwrap().coeff == 1;
    if atomic {
        format!("{x}")
    } else {
        format!("({x})")
    }
}

impl fmt::Display for MetaOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, b) in self.omega_terms() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if a.as_nat() == Some(1) {
                write!(f, "W")?;
            } else {
                write!(f, "W^{}", factor_display(a))?;
            }
            if b.as_nat() != Some(1) {
                write!(f, "*{}", factor_display(b))?;
            }
        }
        if !self.constant().is_zero() {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{}", self.constant())?;
        }
        Ok(())
    }
}
