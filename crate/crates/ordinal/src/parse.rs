//! Recursive descent parser for the ASCII ordinal syntax.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' factor)?
//! atom   := natural | 'w' | 'phi' '(' expr ',' expr ')' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored between tokens. `^` is right associative, so
//! `w^w^w` reads as `w^(w^w)`. Sums and products are evaluated with the
//! normalizing arithmetic, so any syntactically valid input parses straight
//! to normal form.

use crate::Ordinal;
use std::fmt;
use std::str::FromStr;

/// Syntax error with the byte offset where parsing failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

impl FromStr for Ordinal {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { input: s.as_bytes(), pos: 0 };
        let value = p.expr()?;
        p.skip_ws();
        if p.pos != p.input.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(value)
    }
}

/// Parses a leading product of factors, for embedding the ordinal grammar in
/// larger syntaxes. Returns the value and the number of bytes consumed.
pub fn parse_term_prefix(s: &str) -> Result<(Ordinal, usize), ParseError> {
    let mut p = Parser { input: s.as_bytes(), pos: 0 };
    let value = p.term()?;
    Ok((value, p.pos))
}

/// Parses a single leading factor, the unit of `*` and `^` syntax.
pub fn parse_factor_prefix(s: &str) -> Result<(Ordinal, usize), ParseError> {
    let mut p = Parser { input: s.as_bytes(), pos: 0 };
    let value = p.factor()?;
    Ok((value, p.pos))
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    fn expr(&mut self) -> Result<Ordinal, ParseError> {
        let mut acc = self.term()?;
        while self.peek() == Some(b'+') {
            self.pos += 1;
            acc = acc.add(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Ordinal, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Ordinal, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let exp = self.factor()?;
            return base.pow(&exp).map_err(|_| ParseError {
                pos: at,
                msg: "power exceeds the coefficient range".into(),
            });
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ordinal, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.eat(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => self.natural(),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.input.len() && self.input[self.pos].is_ascii_alphabetic() {
                    self.pos += 1;
                }
                match &self.input[start..self.pos] {
                    b"w" => Ok(Ordinal::omega()),
                    b"phi" => {
                        self.eat(b'(')?;
                        let level = self.expr()?;
                        self.eat(b',')?;
                        let index = self.expr()?;
                        self.eat(b')')?;
                        Ok(Ordinal::veblen(&level, &index))
                    }
                    other => {
                        self.pos = start;
                        Err(self.error(format!(
                            "unknown name '{}'",
                            String::from_utf8_lossy(other)
                        )))
                    }
                }
            }
            _ => Err(self.error("expected an ordinal")),
        }
    }

    fn natural(&mut self) -> Result<Ordinal, ParseError> {
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(&c) = self.input.get(self.pos) {
            if !c.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(c - b'0')))
                .ok_or(ParseError {
                    pos: start,
                    msg: "number too large".into(),
                })?;
            self.pos += 1;
        }
        Ok(Ordinal::from_nat(value))
    }
}

#[cfg(test)]
mod tests {
    use crate::Ordinal;

    fn roundtrip(s: &str) {
        let v: Ordinal = s.parse().unwrap();
        assert_eq!(v.to_string(), s, "canonical form should print back");
    }

    #[test]
    fn canonical_forms_roundtrip() {
        for s in [
            "0",
            "1",
            "42",
            "w",
            "w+1",
            "w*2",
            "w*2+5",
            "w^2",
            "w^2*3+w*2+1",
            "w^w",
            "w^w^w",
            "w^(w+1)",
            "w^(w*2)",
            "w^(w^2+w)",
            "phi(1,0)",
            "phi(1,0)*2+w^w*3",
            "phi(1,w+1)",
            "phi(2,0)",
            "phi(w,0)",
            "phi(phi(1,0),w)",
            "w^(phi(1,0)+1)",
        ] {
            roundtrip(s);
        }
    }

    #[test]
    fn whitespace_is_insignificant() {
        let a: Ordinal = " w ^ 2 * 3 + w * 2 + 1 ".parse().unwrap();
        assert_eq!(a.to_string(), "w^2*3+w*2+1");
        let b: Ordinal = "phi( 1 , 0 )".parse().unwrap();
        assert_eq!(b.to_string(), "phi(1,0)");
    }

    #[test]
    fn non_normal_input_normalizes() {
        let a: Ordinal = "1+w".parse().unwrap();
        assert_eq!(a.to_string(), "w");
        let b: Ordinal = "w+w".parse().unwrap();
        assert_eq!(b.to_string(), "w*2");
        let c: Ordinal = "w^0".parse().unwrap();
        assert_eq!(c.to_string(), "1");
        let d: Ordinal = "phi(0,2)".parse().unwrap();
        assert_eq!(d.to_string(), "w^2");
        let e: Ordinal = "phi(1,phi(2,0))".parse().unwrap();
        assert_eq!(e.to_string(), "phi(2,0)");
        let f: Ordinal = "2^w".parse().unwrap();
        assert_eq!(f.to_string(), "w");
        let g: Ordinal = "(w+1)*w".parse().unwrap();
        assert_eq!(g.to_string(), "w^2");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert!("".parse::<Ordinal>().is_err());
        assert!("w+".parse::<Ordinal>().is_err());
        assert!("phi(1)".parse::<Ordinal>().is_err());
        assert!("phi(1,0".parse::<Ordinal>().is_err());
        assert!("omega".parse::<Ordinal>().is_err());
        assert!("w w".parse::<Ordinal>().is_err());
        assert!("99999999999999999999999999".parse::<Ordinal>().is_err());
        let err = "w^".parse::<Ordinal>().unwrap_err();
        assert_eq!(err.pos, 2);
    }
}
