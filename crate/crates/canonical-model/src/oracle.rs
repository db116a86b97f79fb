//! An independent oracle for constant degrees on small ordinals.
//!
//! Ordinals below `w^8` are re-encoded as digit vectors, one coefficient
//! per power of `w`, and constant-degree membership is decided by unfolding
//! the definition on that encoding: degree 0 is the limit test, and degree
//! `n + 1` demands a degree-`n` point strictly between each of eight
//! approach points and the candidate. Witnesses are found by rounding an
//! approach point up to the next multiple of each `w^step` and verifying
//! the result recursively, largest step first. A refused membership first
//! computes the greatest class point below the candidate, pinning the gap
//! that witnesses could not cross, so negative answers rest on an exact
//! certificate rather than a failed sample.
//!
//! Nothing here touches the normal-form machinery beyond reading the
//! digits in and out, which keeps the oracle a genuinely separate route
//! from [`member`](crate::member) for cross-validation.

use ordinal::Ordinal;
use std::cmp::Ordering;
use std::fmt;

/// Digit positions available to the oracle, so ordinals below `w^8`.
const DIGITS: usize = 8;

/// Largest constant degree the oracle will check.
const MAX_DEGREE: u64 = 6;

/// Approach points examined per cofinality check.
const PROBES: u64 = 8;

/// The oracle covers constant degrees up to 6 on ordinals below `w^8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OutOfRange;

impl fmt::Display for OutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "the oracle covers degrees up to 6 and ordinals below w^8"
        )
    }
}

impl std::error::Error for OutOfRange {}

/// An ordinal below `w^8` as coefficients of `w^0 .. w^7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Small {
    digit: [u64; DIGITS],
}

impl Ord for Small {
    fn cmp(&self, other: &Small) -> Ordering {
        for i in (0..DIGITS).rev() {
            match self.digit[i].cmp(&other.digit[i]) {
                Ordering::Equal => continue,
                unequal => return unequal,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Small {
    fn partial_cmp(&self, other: &Small) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Small {
    fn from_ordinal(k: &Ordinal) -> Option<Small> {
        let mut digit = [0; DIGITS];
        for part in k.parts() {
            let e = part.exponent().as_nat()? as usize;
            if e >= DIGITS {
                return None;
            }
            digit[e] = part.coeff;
        }
        Some(Small { digit })
    }

    fn is_zero(&self) -> bool {
        self.digit.iter().all(|d| *d == 0)
    }

    fn is_limit(&self) -> bool {
        self.digit[0] == 0 && !self.is_zero()
    }

    /// Position of the lowest nonzero digit.
    fn low(&self) -> Option<usize> {
        self.digit.iter().position(|d| *d > 0)
    }

    /// The `i`-th canonical approach point from below: one copy of `w^j`
    /// traded for `i` copies of `w^(j-1)`, where `j` is the low digit.
    fn approach(&self, j: usize, i: u64) -> Small {
        let mut digit = self.digit;
        digit[j] -= 1;
        digit[j - 1] = i;
        Small { digit }
    }

    /// The least multiple of `w^step` strictly above this value, if its
    /// coefficient stays representable.
    fn round_up(&self, step: usize) -> Option<Small> {
        let mut digit = self.digit;
        for d in &mut digit[..step] {
            *d = 0;
        }
        digit[step] = digit[step].checked_add(1)?;
        Some(Small { digit })
    }

    /// The greatest multiple of `w^step` strictly below this value. None
    /// when there is none, or none greatest.
    fn greatest_multiple_below(&self, step: usize) -> Option<Small> {
        let mut digit = self.digit;
        for d in &mut digit[..step] {
            *d = 0;
        }
        let floor = Small { digit };
        if floor != *self {
            return (!floor.is_zero()).then_some(floor);
        }
        // Already a multiple. Stepping down lands one w^step lower when
        // that is the trailing block; below a higher trailing block the
        // multiples are cofinal and have no greatest element.
        match self.low() {
            Some(j) if j == step => {
                let mut digit = self.digit;
                digit[j] -= 1;
                let down = Small { digit };
                (!down.is_zero()).then_some(down)
            }
            _ => None,
        }
    }
}

/// Whether `k` has constant degree at least `n`, for `n <= 6` and `k`
/// below `w^8`.
pub fn member_const(n: u64, k: &Ordinal) -> Result<bool, OutOfRange> {
    if n > MAX_DEGREE {
        return Err(OutOfRange);
    }
    let s = Small::from_ordinal(k).ok_or(OutOfRange)?;
    Ok(member(n, &s))
}

fn member(n: u64, s: &Small) -> bool {
    if !s.is_limit() {
        return false;
    }
    n == 0 || cofinal_in(n - 1, s)
}

/// Whether degree-`m` points are cofinal in `s`, so that `s` earns degree
/// `m + 1`.
fn cofinal_in(m: u64, s: &Small) -> bool {
    let j = s.low().expect("a limit has a nonzero digit");
    'probes: for i in 1..=PROBES {
        let y = s.approach(j, i);
        for step in (1..DIGITS).rev() {
            match y.round_up(step) {
                Some(p) if p < *s && member(m, &p) => continue 'probes,
                _ => {}
            }
        }
        // No witness past this approach point. The greatest degree-m point
        // below s certifies the gap: rounding it upward at any step either
        // leaves the class or overshoots s.
        let gap = greatest_member_below(m, s);
        debug_assert!(gap.map_or(true, |g| {
            g < *s
                && (1..DIGITS).all(|step| match g.round_up(step) {
                    Some(p) => !(p < *s && member(m, &p)),
                    None => true,
                })
        }));
        return false;
    }
    true
}

fn greatest_member_below(m: u64, s: &Small) -> Option<Small> {
    (1..DIGITS)
        .filter_map(|step| s.greatest_multiple_below(step))
        .filter(|g| member(m, g))
        .max()
}
