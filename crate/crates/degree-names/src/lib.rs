//! Adjective names for degrees of inaccessibility and Mahloness.
//!
//! Seven words name the first seven powers of `W`: hyper, richly, utterly,
//! deeply, truly, eternally and vastly. A name consists of an optional
//! ordinal constant prefix, a dash-joined run of words with optional ordinal
//! exponents in strictly increasing word-power order, and a final kind word.
//! The name denotes the degree term summing `W^power * exponent` over its
//! words plus the constant: `3-hyper^2-Mahlo` denotes `W*2+3` and
//! `hyper-richly-inaccessible` denotes `W^2+W`.
//!
//! Translation is exact in both directions on the nameable fragment. A term
//! whose `W` exponents are not all naturals between 1 and 7 has no name and
//! translation reports the offending exponent.

use metaordinal::MetaOrdinal;
use ordinal::Ordinal;
use std::fmt;
use std::str::FromStr;

/// The named degree hierarchies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DegreeKind {
    Inaccessible,
    Mahlo,
}

impl DegreeKind {
    fn suffix(self) -> &'static str {
        match self {
            DegreeKind::Inaccessible => "inaccessible",
            DegreeKind::Mahlo => "Mahlo",
        }
    }
}

/// The degree words in power order, hyper = 1 through vastly = 7.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Word {
    Hyper,
    Richly,
    Utterly,
    Deeply,
    Truly,
    Eternally,
    Vastly,
}

const WORDS: [Word; 7] = [
    Word::Hyper,
    Word::Richly,
    Word::Utterly,
    Word::Deeply,
    Word::Truly,
    Word::Eternally,
    Word::Vastly,
];

impl Word {
    /// The `W` power the word stands for, between 1 and 7.
    pub fn power(self) -> u64 {
        self as u64 + 1
    }

    fn from_power(p: u64) -> Option<Word> {
        WORDS.get(p.checked_sub(1)? as usize).copied()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Word::Hyper => "hyper",
            Word::Richly => "richly",
            Word::Utterly => "utterly",
            Word::Deeply => "deeply",
            Word::Truly => "truly",
            Word::Eternally => "eternally",
            Word::Vastly => "vastly",
        }
    }

    fn from_str_exact(s: &str) -> Option<Word> {
        WORDS.into_iter().find(|w| w.as_str() == s)
    }
}

/// A parsed adjective name in canonical form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeName {
    constant_prefix: Ordinal,
    /// `(word, exponent)` pairs in strictly increasing word power; exponents
    /// are nonzero.
    adjectives: Vec<(Word, Ordinal)>,
    kind: DegreeKind,
}

/// The term has a `W` exponent outside the named range 1 through 7.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NotNameable {
    pub exponent: Ordinal,
}

impl fmt::Display for NotNameable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no word names the W power {}", self.exponent)
    }
}

impl std::error::Error for NotNameable {}

/// A name failed to parse; `pos` is a byte offset into the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NameError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for NameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid name at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for NameError {}

impl DegreeName {
    /// The degree term the name denotes: the sum of `W^power * exponent`
    /// over its words plus the constant prefix.
    pub fn to_term(&self) -> MetaOrdinal {
        let raw = self
            .adjectives
            .iter()
            .rev()
            .map(|(word, exponent)| (Ordinal::from_nat(word.power()), exponent.clone()));
        MetaOrdinal::from_parts(raw, self.constant_prefix.clone())
    }

    /// Names a degree term, or reports the first `W` exponent outside the
    /// named range.
    pub fn from_term(t: &MetaOrdinal, kind: DegreeKind) -> Result<DegreeName, NotNameable> {
        let mut adjectives = Vec::new();
        for (a, b) in t.omega_terms() {
            let word = a
                .as_nat()
                .and_then(Word::from_power)
                .ok_or_else(|| NotNameable {
                    exponent: a.clone(),
                })?;
            adjectives.push((word, b.clone()));
        }
        // Term exponents descend, names ascend.
        adjectives.reverse();
        Ok(DegreeName {
            constant_prefix: t.constant().clone(),
            adjectives,
            kind,
        })
    }

    pub fn constant_prefix(&self) -> &Ordinal {
        &self.constant_prefix
    }

    /// The `(word, exponent)` pairs in increasing word power.
    pub fn adjectives(&self) -> impl ExactSizeIterator<Item = (Word, &Ordinal)> {
        self.adjectives.iter().map(|(w, e)| (*w, e))
    }

    pub fn kind(&self) -> DegreeKind {
        self.kind
    }
}

impl fmt::Display for DegreeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.constant_prefix.is_zero() {
            write!(f, "{}-", self.constant_prefix)?;
        }
        for (word, exponent) in &self.adjectives {
            f.write_str(word.as_str())?;
            if exponent.as_nat() != Some(1) {
                write!(f, "^{exponent}")?;
            }
            f.write_str("-")?;
        }
        f.write_str(self.kind.suffix())
    }
}

impl FromStr for DegreeName {
    type Err = NameError;

    fn from_str(s: &str) -> Result<DegreeName, NameError> {
        let error = |pos: usize, msg: &str| NameError {
            pos,
            msg: msg.to_string(),
        };
        let ordinal_at = |pos: usize, text: &str| {
            text.parse::<Ordinal>().map_err(|e| NameError {
                pos: pos + e.pos,
                msg: e.msg,
            })
        };

        let mut name = DegreeName {
            constant_prefix: Ordinal::zero(),
            adjectives: Vec::new(),
            kind: DegreeKind::Inaccessible,
        };
        let mut pos = 0;
        let mut parts = s.split('-').peekable();
        let mut first = true;
        loop {
            // Split yields at least one part, and the loop returns at the
            // final one, so there is always a part here.
            let part = parts.next().expect("split yields a part");
            if parts.peek().is_none() {
                name.kind = match part {
                    "inaccessible" => DegreeKind::Inaccessible,
                    "Mahlo" => DegreeKind::Mahlo,
                    _ => {
                        return Err(error(
                            pos,
                            "expected the final word inaccessible or Mahlo",
                        ))
                    }
                };
                return Ok(name);
            }
            let (base, exponent) = match part.split_once('^') {
                Some((base, raw)) => {
                    let exponent = ordinal_at(pos + base.len() + 1, raw)?;
                    (base, Some(exponent))
                }
                None => (part, None),
            };
            match Word::from_str_exact(base) {
                Some(word) => {
                    let exponent = exponent.unwrap_or_else(Ordinal::one);
                    match name.adjectives.last_mut() {
                        Some((prev, e)) if *prev == word => {
                            // Repeated words stack: hyper-hyper is hyper^2.
                            *e = e.add(&exponent);
                        }
                        Some((prev, _)) if *prev > word => {
                            return Err(error(pos, "words must appear in increasing power order"));
                        }
                        _ if exponent.is_zero() => {
                            // A zero exponent contributes nothing to the
                            // degree, so the word drops out.
                        }
                        _ => name.adjectives.push((word, exponent)),
                    }
                }
                None if first && exponent.is_none() => {
                    name.constant_prefix = ordinal_at(pos, part)?;
                }
                None => return Err(error(pos, "expected a degree word")),
            }
            pos += part.len() + 1;
            first = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn term(s: &str) -> MetaOrdinal {
        s.parse().unwrap()
    }

    fn name(s: &str) -> DegreeName {
        s.parse().unwrap()
    }

    /// The displayed equivalences between powers of W and the degree words,
    /// with the schematic final row instantiated at w.
    const TABLE: [(&str, &str); 11] = [
        ("W", "hyper-inaccessible"),
        ("W^2", "richly-inaccessible"),
        ("W^2+W", "hyper-richly-inaccessible"),
        ("W^3", "utterly-inaccessible"),
        ("W^3+W^2", "richly-utterly-inaccessible"),
        ("W^3*2", "utterly^2-inaccessible"),
        ("W^4", "deeply-inaccessible"),
        ("W^5", "truly-inaccessible"),
        ("W^6", "eternally-inaccessible"),
        ("W^7", "vastly-inaccessible"),
        (
            "W^7+W^6+W^5+W^4+W^3+W^2+W+w",
            "w-hyper-richly-utterly-deeply-truly-eternally-vastly-inaccessible",
        ),
    ];

    #[test]
    fn the_named_rows_translate_both_ways() {
        for (t, n) in TABLE {
            assert_eq!(name(n).to_term(), term(t), "{n}");
            let named = DegreeName::from_term(&term(t), DegreeKind::Inaccessible).unwrap();
            assert_eq!(named.to_string(), n, "{t}");
        }
    }

    #[test]
    fn mahlo_names_use_the_same_words() {
        assert_eq!(name("3-hyper^2-Mahlo").to_term(), term("W*2+3"));
        let named = DegreeName::from_term(&term("W*2+3"), DegreeKind::Mahlo).unwrap();
        assert_eq!(named.to_string(), "3-hyper^2-Mahlo");
        assert_eq!(named.kind(), DegreeKind::Mahlo);
        assert_eq!(name("Mahlo").to_term(), MetaOrdinal::zero());
    }

    #[test]
    fn constant_degrees_have_bare_names() {
        assert_eq!(name("inaccessible").to_term(), MetaOrdinal::zero());
        assert_eq!(name("5-inaccessible").to_term(), term("5"));
        assert_eq!(name("w*2+3-inaccessible").to_term(), term("w*2+3"));
        let five = DegreeName::from_term(&term("5"), DegreeKind::Inaccessible).unwrap();
        assert_eq!(five.to_string(), "5-inaccessible");
        let zero = DegreeName::from_term(&MetaOrdinal::zero(), DegreeKind::Inaccessible).unwrap();
        assert_eq!(zero.to_string(), "inaccessible");
    }

    #[test]
    fn exponents_and_prefixes_range_over_ordinals()  {
        assert_eq!(
            name("phi(1,0)-vastly^w-inaccessible").to_term(),
            term("W^7*w+phi(1,0)")
        );
        let back =
            DegreeName::from_term(&term("W^7*w+phi(1,0)"), DegreeKind::Inaccessible).unwrap();
        assert_eq!(back.to_string(), "phi(1,0)-vastly^w-inaccessible");
        assert_eq!(
            name("hyper^(w+1)-inaccessible").to_term(),
            term("W*(w+1)")
        );
    }

    #[test]
    fn unnameable_exponents_are_reported() {
        let err = DegreeName::from_term(&term("W^w"), DegreeKind::Inaccessible).unwrap_err();
        assert_eq!(err.exponent.to_string(), "w");
        let err = DegreeName::from_term(&term("W^8"), DegreeKind::Inaccessible).unwrap_err();
        assert_eq!(err.exponent.to_string(), "8");
        assert!(DegreeName::from_term(&term("W^7*w+5"), DegreeKind::Inaccessible).is_ok());
    }

    #[test]
    fn parsing_normalizes_stacked_and_vanishing_words() {
        assert_eq!(name("hyper-hyper-inaccessible"), name("hyper^2-inaccessible"));
        assert_eq!(
            name("hyper^2-hyper-inaccessible").to_term(),
            term("W*3")
        );
        assert_eq!(name("hyper^0-inaccessible"), name("inaccessible"));
        assert_eq!(name("hyper^1-inaccessible").to_string(), "hyper-inaccessible");
    }

    #[test]
    fn malformed_names_are_rejected() {
        for bad in [
            "",
            "hyper",
            "inaccessible-hyper",
            "richly-hyper-inaccessible",
            "hyper-3-inaccessible",
            "3^2-inaccessible",
            "Hyper-inaccessible",
            "hyper--inaccessible",
            "hyper-mahlo",
            "w+-inaccessible",
        ] {
            assert!(bad.parse::<DegreeName>().is_err(), "{bad:?} parsed");
        }
    }

    #[test]
    fn parse_errors_locate_the_offending_byte() {
        let err = "hyper^w+-inaccessible".parse::<DegreeName>().unwrap_err();
        assert_eq!(err.pos, 8);
        let err = "richly-hyper-inaccessible".parse::<DegreeName>().unwrap_err();
        assert_eq!(err.pos, 7);
    }
}
