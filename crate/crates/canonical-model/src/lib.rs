//! A decidable model for the degree calculus over ordinal notations.
//!
//! Degree terms are read as classes of ordinals: the base class holds the
//! limit ordinals, the step operator sends a class to the set of its limit
//! points inside the base, and the diagonal families bind the iteration
//! stage to the ordinal being classified. Below `W^2` every reachable class
//! has one of two closed forms, captured by [`ClassExpr`]:
//!
//! * `MultOmega(a)` is the class of positive multiples of `w^a`. The base
//!   class is `MultOmega(1)`, and each step raises `a` by one.
//! * `VeblenImage(b, a)` is the image of the multiples of `w^a` under
//!   `phi_b`, excluding index zero once `a` is positive. The diagonal over
//!   constant degrees lands on `VeblenImage(1, 0)`, the fixed points of
//!   `x -> w^x`.
//!
//! Membership, least elements and exact degrees are all computed from these
//! closed forms. The [`probe`] module re-derives membership directly from
//! the definitions via fundamental sequences, and the [`oracle`] module does
//! the same for constant degrees on a separate small-ordinal representation,
//! so the closed forms can be checked against routes that share none of
//! their code.

use metaordinal::MetaOrdinal;
use ordinal::Ordinal;
use std::cmp::Ordering;
use std::fmt;

pub mod oracle;
pub mod probe;

/// Closed form of a degree class below `W^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassExpr {
    /// Positive multiples of `w^a`, for `a >= 1`.
    MultOmega(Ordinal),
    /// Values `phi_level(x)` over indices `x` divisible by `w^divisor`,
    /// with `x = 0` admitted only while the divisor is zero. Level is at
    /// least 1.
    VeblenImage { level: Ordinal, divisor: Ordinal },
}

/// Degree terms from `W^2` upward have no closed form in this model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutOfFragment;

impl fmt::Display for OutOfFragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "the model covers only degree terms below W^2")
    }
}

impl std::error::Error for OutOfFragment {}

/// Why an ordinal has no exact degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DegreeError {
    /// Zero and successors lie outside the base class.
    NotInBase,
    /// Reserved for ordinals whose degree would reach `W^2`. No notation
    /// below Gamma_0 does, so this is never produced here.
    OutOfFragment,
}

impl fmt::Display for DegreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeError::NotInBase => {
                write!(f, "only limit ordinals have a degree")
            }
            DegreeError::OutOfFragment => {
                write!(f, "the degree lies beyond W^2")
            }
        }
    }
}

impl std::error::Error for DegreeError {}

impl ClassExpr {
    /// The base class: `MultOmega(1)`, the limit ordinals.
    pub fn base() -> ClassExpr {
        ClassExpr::MultOmega(Ordinal::one())
    }

    /// One step: the limit points of `self` that lie in the base. Raises
    /// the divisor by one.
    pub fn step(&self) -> ClassExpr {
        self.iterate(&Ordinal::one())
    }

    /// `alpha` steps at once, adding `alpha` to the divisor.
    pub fn iterate(&self, alpha: &Ordinal) -> ClassExpr {
        match self {
            ClassExpr::MultOmega(a) => ClassExpr::MultOmega(a.add(alpha)),
            ClassExpr::VeblenImage { level, divisor } => ClassExpr::VeblenImage {
                level: level.clone(),
                divisor: divisor.add(alpha),
            },
        }
    }

    /// The diagonal over the constant-degree classes: ordinals that survive
    /// `alpha` steps from the base for every `alpha` below themselves.
    /// These are exactly the fixed points of `x -> w^x`.
    pub fn diagonal_const_family() -> ClassExpr {
        ClassExpr::VeblenImage {
            level: Ordinal::one(),
            divisor: Ordinal::zero(),
        }
    }

    /// The diagonal over the step iterates of `VeblenImage(level, _)`,
    /// which lands on the next Veblen level. The level must be at least 1.
    pub fn diagonal_level_family(level: &Ordinal) -> ClassExpr {
        assert!(!level.is_zero(), "diagonal families start at level 1");
        ClassExpr::VeblenImage {
            level: level.succ(),
            divisor: Ordinal::zero(),
        }
    }

    /// Decides membership of `k` from the closed form.
    pub fn contains(&self, k: &Ordinal) -> bool {
        match self {
            ClassExpr::MultOmega(a) => !k.is_zero() && k.divisible_by_omega_pow(a),
            ClassExpr::VeblenImage { level, divisor } => {
                let mut parts = k.parts();
                let Some(first) = parts.next() else {
                    return false;
                };
                if parts.len() > 0 || first.coeff != 1 || first.level < level {
                    return false;
                }
                let index = if first.level == level {
                    first.index.clone()
                } else {
                    k.clone()
                };
                (divisor.is_zero() || !index.is_zero())
                    && index.divisible_by_omega_pow(divisor)
            }
        }
    }

    /// The least element of the class.
    pub fn least(&self) -> Ordinal {
        match self {
            ClassExpr::MultOmega(a) => Ordinal::omega_pow(a),
            ClassExpr::VeblenImage { level, divisor } => {
                let index = if divisor.is_zero() {
                    Ordinal::zero()
                } else {
                    Ordinal::omega_pow(divisor)
                };
                Ordinal::veblen(level, &index)
            }
        }
    }

    /// The least element strictly above `y`. Both classes are unbounded,
    /// so this always exists.
    pub fn next_above(&self, y: &Ordinal) -> Ordinal {
        match self {
            ClassExpr::MultOmega(a) => next_multiple_above(a, y),
            ClassExpr::VeblenImage { level, divisor } => {
                let index = match floor_index(level, y) {
                    Some(floor) => next_multiple_above(divisor, &floor),
                    None if divisor.is_zero() => Ordinal::zero(),
                    None => Ordinal::omega_pow(divisor),
                };
                Ordinal::veblen(level, &index)
            }
        }
    }
}

impl fmt::Display for ClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassExpr::MultOmega(a) => write!(f, "MultOmega({a})"),
            ClassExpr::VeblenImage { level, divisor } => {
                write!(f, "VeblenImage({level}, {divisor})")
            }
        }
    }
}

/// The least multiple of `w^a` strictly above `y`. For `a = 0` this is the
/// successor; otherwise the part of `y` divisible by `w^a` plus one more
/// `w^a` block.
fn next_multiple_above(a: &Ordinal, y: &Ordinal) -> Ordinal {
    if a.is_zero() {
        return y.succ();
    }
    let mut kept = Ordinal::zero();
    for part in y.parts() {
        let e = part.exponent();
        if &e < a {
            break;
        }
        let block = Ordinal::omega_pow(&e).mul(&Ordinal::from_nat(part.coeff));
        kept = kept.add(&block);
    }
    kept.add(&Ordinal::omega_pow(a))
}

/// The largest index `x` with `phi_level(x) <= y`, or None when `y` lies
/// below `phi_level(0)`. Only the leading term of `y` matters: a leading
/// head at the requested level floors to its own index, a higher head is
/// its own fixed point, and anything lower keeps `y` under the whole image.
fn floor_index(level: &Ordinal, y: &Ordinal) -> Option<Ordinal> {
    let first = y.parts().next()?;
    match first.level.cmp(level) {
        Ordering::Less => None,
        Ordering::Equal => Some(first.index.clone()),
        Ordering::Greater => Some(Ordinal::veblen(first.level, first.index)),
    }
}

/// The class a degree term denotes, when the term stays below `W^2`.
pub fn class_of(t: &MetaOrdinal) -> Result<ClassExpr, OutOfFragment> {
    let mut terms = t.omega_terms();
    match terms.next() {
        None => Ok(ClassExpr::MultOmega(
            Ordinal::one().add(t.constant()),
        )),
        Some((exponent, coefficient)) if exponent.as_nat() == Some(1) => {
            Ok(ClassExpr::VeblenImage {
                level: coefficient.clone(),
                divisor: t.constant().clone(),
            })
        }
        Some(_) => Err(OutOfFragment),
    }
}

/// Whether `k` lies in the class denoted by `t`.
pub fn member(t: &MetaOrdinal, k: &Ordinal) -> Result<bool, OutOfFragment> {
    Ok(class_of(t)?.contains(k))
}

/// The least ordinal of degree `t`.
pub fn least(t: &MetaOrdinal) -> Result<Ordinal, OutOfFragment> {
    Ok(class_of(t)?.least())
}

/// The largest degree term whose class contains `k`. Single Veblen heads
/// with coefficient 1 reach `W`-sized degrees through their index; every
/// other limit ordinal has a constant degree read off its trailing
/// exponent.
pub fn exact_degree(k: &Ordinal) -> Result<MetaOrdinal, DegreeError> {
    if !k.is_limit() {
        return Err(DegreeError::NotInBase);
    }
    let mut parts = k.parts();
    let first = parts.next().expect("limit ordinals are nonzero");
    if parts.len() == 0 && first.coeff == 1 && !first.level.is_zero() {
        let level = first.level.clone();
        let divisor = first.index.least_exponent().unwrap_or_else(Ordinal::zero);
        let head = MetaOrdinal::omega_term(Ordinal::one(), level);
        return Ok(head.add(&MetaOrdinal::from_ordinal(divisor)));
    }
    let e = k.least_exponent().expect("limit ordinals are nonzero");
    let degree = match e.as_nat() {
        Some(m) => Ordinal::from_nat(m - 1),
        None => e,
    };
    Ok(MetaOrdinal::from_ordinal(degree))
}
