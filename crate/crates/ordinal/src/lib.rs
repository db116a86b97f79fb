//! Ordinal arithmetic below Gamma_0 in two-argument Veblen normal form.
//!
//! Every ordinal is a finite sum of principal terms `phi(level, index) * coeff`
//! with strictly decreasing heads and positive natural coefficients. The head
//! `phi(0, x)` denotes `w^x`, so `phi(0, 0)` is 1 and finite ordinals are
//! sums of the unit head. Heads at level 1 and above denote the usual Veblen
//! fixed-point hierarchy: `phi(1, 0)` is the first epsilon number, `phi(2, 0)`
//! the first eta number, and so on. Normal form requires `index <
//! phi(level, index)` for every head, which rules out exactly the terms that
//! collapse to a higher-level fixed point. Under that restriction the
//! representation is unique, so structural equality is ordinal equality.
//!
//! Coefficients are machine naturals. Arithmetic checks coefficient overflow
//! and panics with a clear message if a computation would exceed `u64`; the
//! sizes involved are unreachable in realistic use. Exponentiation instead
//! reports [`Overflow`], because moderate inputs can genuinely exceed the
//! coefficient width there.

mod fund;
mod parse;
mod pow;

pub use fund::NotALimit;
pub use parse::{parse_factor_prefix, parse_term_prefix, ParseError};
pub use pow::Overflow;

use std::cmp::Ordering;
use std::fmt;

/// An ordinal below Gamma_0 in Veblen normal form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Ordinal {
    /// Terms with strictly decreasing heads; empty means zero.
    terms: Vec<Term>,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Term {
    head: Head,
    coeff: u64,
}

/// A principal head `phi(level, index)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Head {
    level: Ordinal,
    index: Ordinal,
}

/// Borrowed view of one normal-form term, exposed for structural analysis
/// without giving out the representation itself.
#[derive(Clone, Copy, Debug)]
pub struct Part<'a> {
    /// Veblen level of the head. Level 0 means the head is `w^index`.
    pub level: &'a Ordinal,
    /// Veblen index of the head.
    pub index: &'a Ordinal,
    /// Coefficient, at least 1.
    pub coeff: u64,
}

impl Part<'_> {
    /// The exponent `e` with `w^e` equal to this part's head.
    pub fn exponent(&self) -> Ordinal {
        Head {
            level: self.level.clone(),
            index: self.index.clone(),
        }
        .exponent()
    }

    /// True when this part is the finite tail `w^0 * coeff`.
    pub fn is_unit(&self) -> bool {
        self.level.is_zero() && self.index.is_zero()
    }
}

impl Head {
    fn unit() -> Head {
        Head {
            level: Ordinal::zero(),
            index: Ordinal::zero(),
        }
    }

    fn is_unit(&self) -> bool {
        self.level.is_zero() && self.index.is_zero()
    }

    /// The exponent `e` with `w^e` equal to this head. Heads at level 1 and
    /// above are epsilon numbers, so they are their own logarithm.
    fn exponent(&self) -> Ordinal {
        if self.level.is_zero() {
            self.index.clone()
        } else {
            Ordinal {
                terms: vec![Term {
                    head: self.clone(),
                    coeff: 1,
                }],
            }
        }
    }

    /// Orders heads by the ordinals they denote.
    fn cmp_head(&self, other: &Head) -> Ordering {
        match self.level.cmp(&other.level) {
            Ordering::Equal => self.index.cmp(&other.index),
            Ordering::Less => {
                // `other` is a fixed point of every phi below its level, so
                // phi(self.level, x) < other exactly when x < other. Equality
                // of x with `other` cannot occur in normal form.
                match cmp_ordinal_to_head(&self.index, other) {
                    Ordering::Less => Ordering::Less,
                    _ => Ordering::Greater,
                }
            }
            Ordering::Greater => match cmp_ordinal_to_head(&other.index, self) {
                Ordering::Less => Ordering::Greater,
                _ => Ordering::Less,
            },
        }
    }
}

/// Compares an ordinal with the ordinal denoted by a principal head.
fn cmp_ordinal_to_head(x: &Ordinal, h: &Head) -> Ordering {
    let Some(first) = x.terms.first() else {
        // 0 < every head, including the unit.
        return Ordering::Less;
    };
    match first.head.cmp_head(h) {
        // Principal ordinals absorb sums of smaller terms from the left.
        Ordering::Less => Ordering::Less,
        Ordering::Greater => Ordering::Greater,
        Ordering::Equal => {
            if first.coeff == 1 && x.terms.len() == 1 {
                Ordering::Equal
            } else {
                Ordering::Greater
            }
        }
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (s, t) in self.terms.iter().zip(&other.terms) {
            match s.head.cmp_head(&t.head).then(s.coeff.cmp(&t.coeff)) {
                Ordering::Equal => continue,
                diff => return diff,
            }
        }
        // One term list extends the other with strictly smaller terms, so the
        // longer sum is the larger ordinal.
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ordinal {
    pub fn zero() -> Ordinal {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Ordinal {
        Ordinal::from_nat(1)
    }

    pub fn omega() -> Ordinal {
        Ordinal::omega_pow(&Ordinal::one())
    }

    pub fn from_nat(n: u64) -> Ordinal {
        if n == 0 {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![Term {
                    head: Head::unit(),
                    coeff: n,
                }],
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns `Some(n)` when the ordinal is the finite ordinal `n`.
    pub fn as_nat(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.head.is_unit() => Some(t.coeff),
            _ => None,
        }
    }

    /// True for nonzero ordinals with no finite tail.
    pub fn is_limit(&self) -> bool {
        match self.terms.last() {
            None => false,
            Some(t) => !t.head.is_unit(),
        }
    }

    pub fn is_successor(&self) -> bool {
        !self.is_zero() && !self.is_limit()
    }

    /// The immediate predecessor, if one exists.
    pub fn pred(&self) -> Option<Ordinal> {
        let last = self.terms.last()?;
        if !last.head.is_unit() {
            return None;
        }
        let mut r = self.clone();
        if last.coeff == 1 {
            r.terms.pop();
        } else {
            r.terms.last_mut().unwrap().coeff -= 1;
        }
        Some(r)
    }

    /// The finite tail of the normal form (0 when the ordinal is a limit).
    pub fn finite_part(&self) -> u64 {
        match self.terms.last() {
            Some(t) if t.head.is_unit() => t.coeff,
            _ => 0,
        }
    }

    /// The ordinal with its finite tail removed.
    pub fn limit_part(&self) -> Ordinal {
        let mut r = self.clone();
        if let Some(t) = r.terms.last() {
            if t.head.is_unit() {
                r.terms.pop();
            }
        }
        r
    }

    /// Structural view of the normal-form terms, largest head first.
    pub fn parts(&self) -> impl ExactSizeIterator<Item = Part<'_>> {
        self.terms.iter().map(|t| Part {
            level: &t.head.level,
            index: &t.head.index,
            coeff: t.coeff,
        })
    }

    /// The exponent of the leading term, so `w^leading_exponent()` is the
    /// largest principal ordinal not exceeding `self`. None for zero.
    pub fn leading_exponent(&self) -> Option<Ordinal> {
        self.terms.first().map(|t| t.head.exponent())
    }

    /// The exponent of the trailing term. This is the largest `e` such that
    /// `w^e` divides `self` on the right. None for zero.
    pub fn least_exponent(&self) -> Option<Ordinal> {
        self.terms.last().map(|t| t.head.exponent())
    }

    /// Ordinal sum. Leading terms of `self` below the first term of `rhs`
    /// are absorbed. Panics on coefficient overflow; see [`checked_add`]
    /// for the fallible form.
    ///
    /// [`checked_add`]: Ordinal::checked_add
    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        self.checked_add(rhs)
            .expect("coefficient overflow in ordinal addition")
    }

    /// Sum with coefficient overflow reported as `None`.
    pub fn checked_add(&self, rhs: &Ordinal) -> Option<Ordinal> {
        let Some(first) = rhs.terms.first() else {
            return Some(self.clone());
        };
        let mut terms: Vec<Term> = Vec::new();
        for t in &self.terms {
            match t.head.cmp_head(&first.head) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal | Ordering::Less => break,
            }
        }
        let keep = terms.len();
        if self.terms.len() > keep && self.terms[keep].head == first.head {
            terms.push(Term {
                head: first.head.clone(),
                coeff: self.terms[keep].coeff.checked_add(first.coeff)?,
            });
        } else {
            terms.push(first.clone());
        }
        terms.extend(rhs.terms[1..].iter().cloned());
        Some(Ordinal { terms })
    }

    /// Ordinal product, computed by distributing `self` over the normal form
    /// of `rhs` from the left. Panics on coefficient overflow; see
    /// [`checked_mul`] for the fallible form.
    ///
    /// [`checked_mul`]: Ordinal::checked_mul
    pub fn mul(&self, rhs: &Ordinal) -> Ordinal {
        self.checked_mul(rhs)
            .expect("coefficient overflow in ordinal multiplication")
    }

    /// Product with coefficient overflow reported as `None`.
    pub fn checked_mul(&self, rhs: &Ordinal) -> Option<Ordinal> {
        if self.is_zero() || rhs.is_zero() {
            return Some(Ordinal::zero());
        }
        let lead = self.terms[0].head.exponent();
        let mut acc = Ordinal::zero();
        for t in &rhs.terms {
            let piece = if t.head.is_unit() {
                // Right multiplication by a natural scales the leading
                // coefficient and leaves the rest of the sum intact.
                let mut p = self.clone();
                p.terms[0].coeff = p.terms[0].coeff.checked_mul(t.coeff)?;
                p
            } else {
                let mut p = Ordinal::omega_pow(&lead.add(&t.head.exponent()));
                p.terms[0].coeff = t.coeff;
                p
            };
            acc = acc.checked_add(&piece)?;
        }
        Some(acc)
    }

    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// `w^a`, normalized. Epsilon numbers and above are their own power.
    pub fn omega_pow(a: &Ordinal) -> Ordinal {
        Ordinal::veblen(&Ordinal::zero(), a)
    }

    /// The two-argument Veblen function `phi_level(index)`, normalized. An
    /// index that is already a fixed point of the given level collapses, so
    /// for example `phi(1, phi(2, 0))` yields `phi(2, 0)`.
    pub fn veblen(level: &Ordinal, index: &Ordinal) -> Ordinal {
        if let [t] = index.terms.as_slice() {
            if t.coeff == 1 && t.head.level > *level {
                return index.clone();
            }
        }
        Ordinal {
            terms: vec![Term {
                head: Head {
                    level: level.clone(),
                    index: index.clone(),
                },
                coeff: 1,
            }],
        }
    }

    /// Whether `w^a` divides `self` evenly. Zero is divisible by everything;
    /// a nonzero ordinal is divisible exactly when its trailing exponent is
    /// at least `a`.
    pub fn divisible_by_omega_pow(&self, a: &Ordinal) -> bool {
        match self.least_exponent() {
            None => true,
            Some(e) => *a <= e,
        }
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if t.head.is_unit() {
                write!(f, "{}", t.coeff)?;
                continue;
            }
            if t.head.level.is_zero() {
                if t.head.index.as_nat() == Some(1) {
                    write!(f, "w")?;
                } else {
                    write!(f, "w^{}", exponent_display(&t.head.index))?;
                }
            } else {
                write!(f, "phi({},{})", t.head.level, t.head.index)?;
            }
            if t.coeff > 1 {
                write!(f, "*{}", t.coeff)?;
            }
        }
        Ok(())
    }
}

/// Formats an exponent, parenthesized unless it would parse back as a single
/// factor (a natural, a phi term, or a right-nested power of w).
fn exponent_display(e: &Ordinal) -> String {
    let atomic = e.as_nat().is_some() || matches!(e.terms.as_slice(), [t] if t.coeff == 1);
    if atomic {
        format!("{e}")
    } else {
        format!("({e})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn zero_and_naturals() {
        assert!(Ordinal::zero().is_zero());
        assert_eq!(Ordinal::from_nat(7).as_nat(), Some(7));
        assert_eq!(Ordinal::from_nat(0), Ordinal::zero());
        assert!(Ordinal::from_nat(3).is_successor());
        assert!(!Ordinal::from_nat(3).is_limit());
    }

    #[test]
    fn comparison_basics() {
        assert!(ord("w") > ord("1000"));
        assert!(ord("w*2+1") < ord("w^2"));
        assert!(ord("w^2") < ord("w^2+1"));
        assert!(ord("w^w") < ord("phi(1,0)"));
        assert!(ord("phi(1,0)") < ord("phi(1,0)*2"));
        assert!(ord("phi(1,0)*2") < ord("phi(1,1)"));
        assert!(ord("phi(1,w)") < ord("phi(2,0)"));
        assert!(ord("phi(2,0)") < ord("phi(1,phi(2,0)+1)"));
    }

    #[test]
    fn cross_level_head_comparison() {
        // phi(1, x) against phi(2, y) reduces to comparing x with phi(2, y).
        assert!(ord("phi(1,phi(2,0)+1)") > ord("phi(2,0)"));
        assert!(ord("phi(1,5)") < ord("phi(2,0)"));
        // The collapsed form of phi(2, phi(3,0)) is phi(3,0) itself.
        assert_eq!(
            Ordinal::veblen(&ord("2"), &ord("phi(3,0)")),
            ord("phi(3,0)")
        );
    }

    #[test]
    fn addition_absorbs_from_the_left() {
        assert_eq!(ord("3").add(&ord("w")), ord("w"));
        assert_eq!(ord("w").add(&ord("3")), ord("w+3"));
        assert_eq!(ord("w+3").add(&ord("w")), ord("w*2"));
        assert_eq!(ord("w^2+w").add(&ord("w*2+1")), ord("w^2+w*3+1"));
        assert_eq!(ord("phi(1,0)").add(&ord("w^w")), ord("phi(1,0)+w^w"));
        assert_eq!(ord("w^w").add(&ord("phi(1,0)")), ord("phi(1,0)"));
    }

    #[test]
    fn multiplication_distributes_from_the_left() {
        assert_eq!(ord("2").mul(&ord("2")), ord("4"));
        assert_eq!(ord("w").mul(&ord("w")), ord("w^2"));
        assert_eq!(ord("w+1").mul(&ord("w")), ord("w^2"));
        assert_eq!(ord("w+1").mul(&ord("2")), ord("w*2+1"));
        assert_eq!(ord("2").mul(&ord("w")), ord("w"));
        assert_eq!(ord("w*2+3").mul(&ord("w^2*2+w+4")), ord("w^3*2+w^2+w*8+3"));
        assert_eq!(ord("phi(1,0)").mul(&ord("phi(1,0)")), ord("w^(phi(1,0)*2)"));
        assert_eq!(ord("w^2").mul(&ord("w^3*5")), ord("w^5*5"));
    }

    #[test]
    fn successor_and_limit_structure() {
        assert_eq!(ord("w").succ(), ord("w+1"));
        assert!(ord("w").is_limit());
        assert!(ord("w+1").is_successor());
        assert_eq!(ord("w+1").pred(), Some(ord("w")));
        assert_eq!(ord("w").pred(), None);
        assert_eq!(ord("w*2+5").finite_part(), 5);
        assert_eq!(ord("w*2+5").limit_part(), ord("w*2"));
    }

    #[test]
    fn veblen_collapse_and_normality() {
        assert_eq!(
            Ordinal::veblen(&ord("1"), &ord("phi(2,0)")),
            ord("phi(2,0)")
        );
        assert_eq!(Ordinal::omega_pow(&ord("phi(1,0)")), ord("phi(1,0)"));
        // Not a fixed point: coefficient 2 keeps the term from collapsing.
        assert_eq!(
            Ordinal::veblen(&ord("1"), &ord("phi(2,0)*2")),
            ord("phi(1,phi(2,0)*2)")
        );
        assert_eq!(Ordinal::omega_pow(&ord("2")), ord("w^2"));
    }

    #[test]
    fn divisibility_by_omega_powers() {
        assert!(ord("0").divisible_by_omega_pow(&ord("w")));
        assert!(ord("w^3").divisible_by_omega_pow(&ord("2")));
        assert!(!ord("w^3+w").divisible_by_omega_pow(&ord("2")));
        assert!(ord("w^3+w").divisible_by_omega_pow(&ord("1")));
        assert!(!ord("w^3+1").divisible_by_omega_pow(&ord("1")));
        assert!(ord("phi(1,0)").divisible_by_omega_pow(&ord("w^w")));
        // Every ordinal is divisible by w^0.
        assert!(ord("w+3").divisible_by_omega_pow(&ord("0")));
    }

    #[test]
    fn exponent_views() {
        assert_eq!(ord("w^w*3+w^2").leading_exponent(), Some(ord("w")));
        assert_eq!(ord("w^w*3+w^2").least_exponent(), Some(ord("2")));
        assert_eq!(ord("phi(1,0)").least_exponent(), Some(ord("phi(1,0)")));
        assert_eq!(ord("5").least_exponent(), Some(ord("0")));
        assert_eq!(ord("0").least_exponent(), None);
    }
}
