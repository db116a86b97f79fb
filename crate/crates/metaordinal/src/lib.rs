//! Degree terms over an indeterminate `W` that exceeds every ordinal.
//!
//! A term is a finite sum `W^a1*b1 + ... + W^ak*bk + c` with ordinal
//! exponents `a1 > a2 > ... > ak >= 1`, ordinal coefficients `bi >= 1` and an
//! ordinal constant `c`. Terms order essentially lexicographically: compare
//! exponent-coefficient pairs left to right, and when one term list runs out
//! first the side with remaining `W` terms is larger no matter the constants,
//! since `W` exceeds every ordinal. Equal lists compare by constant.
//!
//! A term is admissible at an ordinal `k` when every parameter appearing in
//! it (exponents, coefficients and a nonzero constant) lies strictly below
//! `k`; the zero term has no parameters and is admissible everywhere.
//! [`MetaOrdinal::eval_at`] substitutes `k` for `W` and evaluates with
//! ordinal exponentiation, which is the reading of the term at a concrete
//! stage.

mod enumerate;
mod parse;

pub use enumerate::Exhausted;
pub use ordinal::ParseError;

use ordinal::Ordinal;
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

/// A degree term in normal form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MetaOrdinal {
    /// `(exponent, coefficient)` pairs with strictly decreasing exponents;
    /// exponents and coefficients are nonzero.
    terms: Vec<(Ordinal, Ordinal)>,
    constant: Ordinal,
}

/// Evaluation at a stage can fail two ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    /// Some parameter of the term is not strictly below the stage.
    NotAdmissible,
    /// The value exists but exceeds the representable size.
    Overflow,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::NotAdmissible => {
                write!(f, "term has a parameter at or above the evaluation stage")
            }
            EvalError::Overflow => write!(f, "evaluated ordinal exceeds the supported size"),
        }
    }
}

impl std::error::Error for EvalError {}

impl From<ordinal::Overflow> for EvalError {
    fn from(_: ordinal::Overflow) -> Self {
        EvalError::Overflow
    }
}

impl MetaOrdinal {
    pub fn zero() -> MetaOrdinal {
        MetaOrdinal::default()
    }

    /// The term that is just an ordinal constant.
    pub fn from_ordinal(c: Ordinal) -> MetaOrdinal {
        MetaOrdinal {
            terms: Vec::new(),
            constant: c,
        }
    }

    /// `W^exponent * coefficient`. Zero exponents fold into the constant and
    /// a zero coefficient gives the zero term.
    pub fn omega_term(exponent: Ordinal, coefficient: Ordinal) -> MetaOrdinal {
        if coefficient.is_zero() {
            return MetaOrdinal::zero();
        }
        if exponent.is_zero() {
            return MetaOrdinal::from_ordinal(coefficient);
        }
        MetaOrdinal {
            terms: vec![(exponent, coefficient)],
            constant: Ordinal::zero(),
        }
    }

    /// Folds raw summands into normal form. Items are added left to right
    /// with meta-ordinal addition: a later term with a larger exponent
    /// absorbs everything smaller accumulated so far, equal exponents merge
    /// by ordinal coefficient addition, and any later `W` term absorbs a
    /// pending constant.
    pub fn from_parts(
        raw: impl IntoIterator<Item = (Ordinal, Ordinal)>,
        constant: Ordinal,
    ) -> MetaOrdinal {
        let mut acc = MetaOrdinal::zero();
        for (exponent, coefficient) in raw {
            acc = acc.add(&MetaOrdinal::omega_term(exponent, coefficient));
        }
        acc.add(&MetaOrdinal::from_ordinal(constant))
    }

    /// Meta-ordinal addition, primarily used to normalize raw summands.
    pub fn add(&self, rhs: &MetaOrdinal) -> MetaOrdinal {
        let Some((first, _)) = rhs.terms.first() else {
            return MetaOrdinal {
                terms: self.terms.clone(),
                constant: self.constant.add(&rhs.constant),
            };
        };
        let mut terms: Vec<(Ordinal, Ordinal)> = Vec::new();
        for (a, b) in &self.terms {
            if a > first {
                terms.push((a.clone(), b.clone()));
            } else {
                break;
            }
        }
        let keep = terms.len();
        if self.terms.len() > keep && self.terms[keep].0 == *first {
            let (a, b) = &self.terms[keep];
            terms.push((a.clone(), b.add(&rhs.terms[0].1)));
        } else {
            terms.push(rhs.terms[0].clone());
        }
        terms.extend(rhs.terms[1..].iter().cloned());
        MetaOrdinal {
            terms,
            constant: rhs.constant.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constant.is_zero()
    }

    /// The `W` terms, largest exponent first.
    pub fn omega_terms(&self) -> impl ExactSizeIterator<Item = (&Ordinal, &Ordinal)> {
        self.terms.iter().map(|(a, b)| (a, b))
    }

    pub fn constant(&self) -> &Ordinal {
        &self.constant
    }

    /// Successor: the constant grows by one.
    pub fn succ(&self) -> MetaOrdinal {
        MetaOrdinal {
            terms: self.terms.clone(),
            constant: self.constant.succ(),
        }
    }

    /// Every ordinal parameter of the term: exponents, coefficients and the
    /// constant when it is nonzero. The zero term has no parameters.
    pub fn params(&self) -> BTreeSet<Ordinal> {
        let mut set = BTreeSet::new();
        for (a, b) in &self.terms {
            set.insert(a.clone());
            set.insert(b.clone());
        }
        if !self.constant.is_zero() {
            set.insert(self.constant.clone());
        }
        set
    }

    /// Whether every parameter lies strictly below `k`.
    pub fn admissible_at(&self, k: &Ordinal) -> bool {
        self.params().iter().all(|p| p < k)
    }

    /// Substitutes `k` for `W`. Defined exactly on admissible stages.
    pub fn eval_at(&self, k: &Ordinal) -> Result<Ordinal, EvalError> {
        if !self.admissible_at(k) {
            return Err(EvalError::NotAdmissible);
        }
        let mut acc = Ordinal::zero();
        for (a, b) in &self.terms {
            let power = k.pow(a)?;
            let piece = power.checked_mul(b).ok_or(EvalError::Overflow)?;
            acc = acc.checked_add(&piece).ok_or(EvalError::Overflow)?;
        }
        Ok(acc.add(&self.constant))
    }

    /// The same `W` terms over a different constant.
    fn with_constant(&self, c: Ordinal) -> MetaOrdinal {
        MetaOrdinal {
            terms: self.terms.clone(),
            constant: c,
        }
    }

    /// The `W` part alone.
    fn without_constant(&self) -> MetaOrdinal {
        self.with_constant(Ordinal::zero())
    }

    /// Splits off the least `W` term of a constant-free term, returning its
    /// exponent, its coefficient and the head above it.
    fn split_last(&self) -> Option<(Ordinal, Ordinal, MetaOrdinal)> {
        debug_assert!(self.constant.is_zero());
        let mut terms = self.terms.clone();
        let (exponent, coefficient) = terms.pop()?;
        let head = MetaOrdinal {
            terms,
            constant: Ordinal::zero(),
        };
        Some((exponent, coefficient, head))
    }

    /// Appends a strictly smaller tail to a term that ends in a `W` term.
    /// Callers guarantee the tail's exponents stay below this term's least
    /// exponent and that this term has constant zero.
    fn concat(&self, tail: &MetaOrdinal) -> MetaOrdinal {
        debug_assert!(self.constant.is_zero());
        debug_assert!(match (self.terms.last(), tail.terms.first()) {
            (Some((a, _)), Some((x, _))) => x < a,
            _ => true,
        });
        let mut terms = self.terms.clone();
        terms.extend(tail.terms.iter().cloned());
        MetaOrdinal {
            terms,
            constant: tail.constant.clone(),
        }
    }
}

impl Ord for MetaOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for ((a1, b1), (a2, b2)) in self.terms.iter().zip(&other.terms) {
            match a1.cmp(a2).then_with(|| b1.cmp(b2)) {
                Ordering::Equal => continue,
                diff => return diff,
            }
        }
        // Remaining W terms dominate any constant on the shorter side.
        match self.terms.len().cmp(&other.terms.len()) {
            Ordering::Equal => self.constant.cmp(&other.constant),
            diff => diff,
        }
    }
}

impl PartialOrd for MetaOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Ordinal> for MetaOrdinal {
    fn from(c: Ordinal) -> Self {
        MetaOrdinal::from_ordinal(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mo(s: &str) -> MetaOrdinal {
        s.parse().unwrap()
    }

    #[test]
    fn order_is_essentially_lexicographic() {
        assert!(mo("W") > mo("phi(1,0)"));
        assert!(mo("W^3") < mo("W^3+W^2"));
        assert!(mo("W^3+W^2") < mo("W^3*2"));
        assert!(mo("W^3*2") < mo("W^w"));
        assert!(mo("W^2*w") < mo("W^2*w+1"));
        assert!(mo("W^2*w+1") < mo("W^2*w+W"));
        assert!(mo("W^2*w+W") < mo("W^2*(w+1)"));
        assert!(mo("W*5+3") < mo("W*5+w"));
        assert!(mo("0") < mo("1"));
        assert!(mo("w^w") < mo("W"));
    }

    #[test]
    fn strict_prefixes_are_smaller() {
        let prefix = mo("W^w*2");
        let longer = mo("W^w*2+W^2*5+1");
        assert!(prefix < longer);
        assert_eq!(prefix.cmp(&prefix), Ordering::Equal);
    }

    #[test]
    fn successor_bumps_the_constant() {
        assert_eq!(mo("0").succ(), mo("1"));
        assert_eq!(mo("W^2").succ(), mo("W^2+1"));
        assert_eq!(mo("W+w").succ(), mo("W+w+1"));
    }

    #[test]
    fn normalization_folds_summands() {
        let t = MetaOrdinal::from_parts(
            vec![
                ("1".parse().unwrap(), "3".parse().unwrap()),
                ("2".parse().unwrap(), "1".parse().unwrap()),
                ("2".parse().unwrap(), "2".parse().unwrap()),
                ("1".parse().unwrap(), "1".parse().unwrap()),
            ],
            "5".parse().unwrap(),
        );
        // W*3 is absorbed by the later W^2 terms, which merge; the final W
        // term and the constant survive.
        assert_eq!(t, mo("W^2*3+W+5"));
        let zero_coeff = MetaOrdinal::omega_term("3".parse().unwrap(), Ordinal::zero());
        assert!(zero_coeff.is_zero());
        let folded = MetaOrdinal::from_parts(
            vec![(Ordinal::zero(), "4".parse().unwrap())],
            Ordinal::zero(),
        );
        assert_eq!(folded, mo("4"));
    }

    #[test]
    fn params_collect_every_side() {
        let t = mo("W^2*3+W*w+5");
        let params: Vec<String> = t.params().iter().map(|p| p.to_string()).collect();
        assert_eq!(params, ["1", "2", "3", "5", "w"]);
        assert!(mo("0").params().is_empty());
        assert_eq!(mo("7").params().len(), 1);
    }

    #[test]
    fn admissibility_is_strict() {
        let t = mo("W^2*3+W*w+5");
        assert!(t.admissible_at(&"w+1".parse().unwrap()));
        assert!(!t.admissible_at(&"w".parse().unwrap()));
        assert!(mo("0").admissible_at(&Ordinal::zero()));
        assert!(!mo("1").admissible_at(&Ordinal::one()));
        assert!(mo("1").admissible_at(&"2".parse().unwrap()));
        // The implicit exponent and coefficient of W are both 1.
        assert!(!mo("W").admissible_at(&Ordinal::one()));
        assert!(mo("W").admissible_at(&"2".parse().unwrap()));
    }

    #[test]
    fn evaluation_substitutes_the_stage() {
        let eps0: Ordinal = "phi(1,0)".parse().unwrap();
        assert_eq!(
            mo("W*2").eval_at(&eps0).unwrap().to_string(),
            "phi(1,0)*2"
        );
        assert_eq!(
            mo("W^2").eval_at(&"w".parse().unwrap()).unwrap().to_string(),
            "w^2"
        );
        assert_eq!(
            mo("W*2+3").eval_at(&"w".parse().unwrap()).unwrap().to_string(),
            "w*2+3"
        );
        assert_eq!(
            mo("W^2*3+W*w+5")
                .eval_at(&"phi(1,0)".parse().unwrap())
                .unwrap()
                .to_string(),
            "w^(phi(1,0)*2)*3+w^(phi(1,0)+1)+5"
        );
        assert_eq!(mo("W^3").eval_at(&"2".parse().unwrap()), Err(EvalError::NotAdmissible));
        assert_eq!(mo("5").eval_at(&"w".parse().unwrap()).unwrap().to_string(), "5");
    }

    #[test]
    fn evaluation_reports_overflow() {
        let t = mo("W^90");
        assert_eq!(t.eval_at(&"100".parse().unwrap()), Err(EvalError::Overflow));
    }

    #[test]
    fn evaluation_matches_repeated_multiplication() {
        for stage in ["w", "w^2", "phi(1,0)", "w*2"] {
            let k: Ordinal = stage.parse().unwrap();
            let mut power = Ordinal::one();
            for n in 1..=5u64 {
                power = power.mul(&k);
                let term = MetaOrdinal::omega_term(Ordinal::from_nat(n), Ordinal::one());
                assert_eq!(term.eval_at(&k).unwrap(), power, "W^{n} at {stage}");
            }
        }
    }
}
