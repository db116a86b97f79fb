//! Canonical fundamental sequences.
//!
//! Every limit ordinal `k` below Gamma_0 gets a strictly increasing sequence
//! `k[0] < k[1] < ...` with supremum `k`, assigned by recursion on the normal
//! form. The trailing term drives the recursion:
//!
//! * `r + w^e * (c+1)` steps through `r + w^e * c + (w^e)[n]`.
//! * `(w^(x+1))[n] = w^x * n` and `(w^x)[n] = w^(x[n])` at limit `x`.
//! * `phi(L+1, 0)` climbs the tower `w, phi(L, w), phi(L, phi(L, w)), ...`
//!   starting from `w` when `L` is 0 and from `phi(L, 0)` otherwise.
//! * `phi(L+1, x+1)` climbs the same tower started at `phi(L+1, x) + 1`.
//! * `phi(L, x)` at limit `x` is `phi(L, x[n])`, and at limit `L` with a
//!   non-limit index it is `phi(L[n], s)` for the seed `s` the successor
//!   cases would use.
//!
//! The tower cases build nesting of depth `n`, so prefixes of moderate
//! length are the intended use.

use crate::{Head, Ordinal};
use std::fmt;

/// Fundamental sequences exist only at limit ordinals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NotALimit;

impl fmt::Display for NotALimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fundamental sequences are defined only at limit ordinals")
    }
}

impl std::error::Error for NotALimit {}

impl Ordinal {
    /// The `n`-th element of the canonical fundamental sequence.
    pub fn fund_seq(&self, n: u64) -> Result<Ordinal, NotALimit> {
        if !self.is_limit() {
            return Err(NotALimit);
        }
        let last = self.terms.last().unwrap().clone();
        let mut prefix = self.clone();
        prefix.terms.pop();
        if last.coeff >= 2 {
            prefix.terms.push(crate::Term {
                head: last.head.clone(),
                coeff: last.coeff - 1,
            });
        }
        Ok(prefix.add(&fund_principal(&last.head, n)))
    }
}

/// Fundamental sequence of a limit principal head.
fn fund_principal(h: &Head, n: u64) -> Ordinal {
    let fund = |x: &Ordinal| x.fund_seq(n).expect("recursion reaches limits only");
    if h.level.is_zero() {
        // w^x with x >= 1.
        return match h.index.pred() {
            Some(x1) => {
                if n == 0 {
                    Ordinal::zero()
                } else {
                    let mut p = Ordinal::omega_pow(&x1);
                    p.terms[0].coeff = n;
                    p
                }
            }
            None => Ordinal::omega_pow(&fund(&h.index)),
        };
    }

    if h.index.is_limit() {
        return Ordinal::veblen(&h.level, &fund(&h.index));
    }

    // Seed of the climbing tower: the index's predecessor stage plus one, or
    // the base of the hierarchy when the index is 0.
    let seed = match h.index.pred() {
        Some(x1) => Ordinal::veblen(&h.level, &x1).succ(),
        None => Ordinal::zero(),
    };

    match h.level.pred() {
        Some(lower) => {
            let mut acc = if !seed.is_zero() {
                seed
            } else if lower.is_zero() {
                Ordinal::omega()
            } else {
                Ordinal::veblen(&lower, &Ordinal::zero())
            };
            for _ in 0..n {
                acc = Ordinal::veblen(&lower, &acc);
            }
            acc
        }
        None => {
            // Limit level: descend through the levels, keeping the seed.
            Ordinal::veblen(&fund(&h.level), &seed)
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::Ordinal;

    fn ord(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn fs(k: &str, n: u64) -> String {
        ord(k).fund_seq(n).unwrap().to_string()
    }

    #[test]
    fn not_a_limit_is_rejected() {
        assert!(ord("0").fund_seq(3).is_err());
        assert!(ord("5").fund_seq(3).is_err());
        assert!(ord("w+1").fund_seq(3).is_err());
    }

    #[test]
    fn omega_power_sequences() {
        assert_eq!(fs("w", 5), "5");
        assert_eq!(fs("w", 0), "0");
        assert_eq!(fs("w^2", 3), "w*3");
        assert_eq!(fs("w^(w+1)", 2), "w^w*2");
        assert_eq!(fs("w^w", 3), "w^3");
        assert_eq!(fs("w^w", 0), "1");
        assert_eq!(fs("w^(w^w)", 2), "w^w^2");
    }

    #[test]
    fn trailing_term_drives_the_recursion() {
        assert_eq!(fs("w*3", 2), "w*2+2");
        assert_eq!(fs("w^2+w", 4), "w^2+4");
        assert_eq!(fs("w^2*2", 1), "w^2+w");
        assert_eq!(fs("phi(1,0)+w^2", 2), "phi(1,0)+w*2");
    }

    #[test]
    fn epsilon_towers() {
        assert_eq!(fs("phi(1,0)", 0), "w");
        assert_eq!(fs("phi(1,0)", 1), "w^w");
        assert_eq!(fs("phi(1,0)", 2), "w^w^w");
        assert_eq!(fs("phi(1,1)", 0), "phi(1,0)+1");
        assert_eq!(fs("phi(1,1)", 1), "w^(phi(1,0)+1)");
        assert_eq!(fs("phi(1,w)", 5), "phi(1,5)");
    }

    #[test]
    fn higher_level_towers() {
        assert_eq!(fs("phi(2,0)", 0), "phi(1,0)");
        assert_eq!(fs("phi(2,0)", 1), "phi(1,phi(1,0))");
        assert_eq!(fs("phi(2,0)", 2), "phi(1,phi(1,phi(1,0)))");
        assert_eq!(fs("phi(2,1)", 0), "phi(2,0)+1");
        assert_eq!(fs("phi(2,1)", 1), "phi(1,phi(2,0)+1)");
        assert_eq!(fs("phi(w,0)", 4), "phi(4,0)");
        assert_eq!(fs("phi(w,1)", 2), "phi(2,phi(w,0)+1)");
        assert_eq!(fs("phi(w^w,w)", 3), "phi(w^w,3)");
    }

    #[test]
    fn sequences_increase_strictly() {
        for k in ["w", "w^2", "w*4", "phi(1,0)", "phi(2,1)", "phi(1,0)*2", "w^(w^2+1)*3+w^w"] {
            let k = ord(k);
            let mut prev = None;
            for n in 0..6 {
                let v = k.fund_seq(n).unwrap();
                assert!(v < k, "sequence stays below its limit");
                if let Some(p) = prev {
                    assert!(p < v, "sequence increases at {k} step {n}");
                }
                prev = Some(v);
            }
        }
    }
}
