//! Canonical enumeration of admissible terms below a target.
//!
//! The enumeration walks a ladder determined by the target's normal form.
//! At each stage the active position (constant, coefficient or exponent) has
//! a roof, the least of its current value and the admissibility bound. A
//! limit roof yields an infinite strictly increasing climb along the roof's
//! fundamental sequence, cofinal in the supremum of the admissible terms
//! below the target. A successor roof has a greatest admissible element; the
//! ladder emits it and continues below it, so a finite admissible set is
//! enumerated completely and exhaustion is detected exactly.
//!
//! The seed offsets the start of the stream: seed `s` skips its first `s`
//! elements. Seed 0 is the canonical enumeration.

use crate::MetaOrdinal;
use ordinal::Ordinal;
use std::fmt;

/// Fewer admissible terms exist below the target than were requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Exhausted;

impl fmt::Display for Exhausted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not enough admissible terms below the target")
    }
}

impl std::error::Error for Exhausted {}

impl MetaOrdinal {
    /// Enumerates `n` distinct admissible terms strictly below `self`, all
    /// parameters strictly below `bound`, in the canonical ladder order.
    pub fn enumerate_below(
        &self,
        bound: &Ordinal,
        n: usize,
        seed: u64,
    ) -> Result<Vec<MetaOrdinal>, Exhausted> {
        let mut stream = Stream {
            bound: bound.clone(),
            frames: vec![(MetaOrdinal::zero(), Work::Below(self.clone()))],
        };
        let mut skip = seed;
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            match stream.next() {
                None => return Err(Exhausted),
                Some(_) if skip > 0 => skip -= 1,
                Some(t) => out.push(t),
            }
        }
        Ok(out)
    }
}

/// Which position of the term a fundamental-sequence climb is filling.
enum Climb {
    /// Constants `prefix + roof[j]`.
    Constant,
    /// Coefficients `prefix + W^exponent * roof[j]`.
    Coeff(Ordinal),
    /// Exponents `prefix + W^(roof[j])`.
    Exponent,
}

enum Work {
    /// Produce every ladder element strictly below the term.
    Below(MetaOrdinal),
    /// Infinite ascending climb along a limit roof's fundamental sequence.
    Fund { climb: Climb, roof: Ordinal, j: u64 },
}

/// Ladder state: a stack of pending segments. Each frame carries the prefix
/// its emissions are appended to, so nested fills stay cheap.
struct Stream {
    bound: Ordinal,
    frames: Vec<(MetaOrdinal, Work)>,
}

impl Iterator for Stream {
    type Item = MetaOrdinal;

    fn next(&mut self) -> Option<MetaOrdinal> {
        loop {
            let (prefix, work) = self.frames.pop()?;
            match work {
                Work::Fund { climb, roof, j } => {
                    let step = roof.fund_seq(j).expect("climb roofs are limits");
                    let element = match &climb {
                        Climb::Constant => prefix.with_constant(step),
                        Climb::Coeff(e) => {
                            prefix.concat(&MetaOrdinal::omega_term(e.clone(), step))
                        }
                        Climb::Exponent => {
                            prefix.concat(&MetaOrdinal::omega_term(step, Ordinal::one()))
                        }
                    };
                    self.frames
                        .push((prefix, Work::Fund { climb, roof, j: j + 1 }));
                    return Some(element);
                }
                Work::Below(t) => {
                    if t.is_zero() {
                        continue;
                    }
                    if let Some(element) = self.expand(prefix, t) {
                        return Some(element);
                    }
                }
            }
        }
    }
}

impl Stream {
    /// Expands one target into ladder segments. Returns an element when the
    /// segment starts with a greatest admissible term, after queueing the
    /// continuation below it.
    fn expand(&mut self, prefix: MetaOrdinal, t: MetaOrdinal) -> Option<MetaOrdinal> {
        if !t.constant().is_zero() {
            let body = t.without_constant();
            if !body.admissible_at(&self.bound) {
                // No admissible term shares this W part; everything
                // admissible below t is already below the W part alone.
                self.frames.push((prefix, Work::Below(body)));
                return None;
            }
            let roof = std::cmp::min(t.constant().clone(), self.bound.clone());
            return self.reduce_constant(prefix, body, roof);
        }

        // t ends in a W term: split it off.
        let (exponent, coefficient, head) = t.split_last().expect("nonzero term");
        if !head.admissible_at(&self.bound) {
            self.frames.push((prefix, Work::Below(head)));
            return None;
        }

        if exponent < self.bound {
            let roof = std::cmp::min(coefficient.clone(), self.bound.clone());
            if roof.is_limit() {
                let at = prefix.concat(&head);
                self.frames.push((
                    at,
                    Work::Fund { climb: Climb::Coeff(exponent), roof, j: 1 },
                ));
                return None;
            }
            let reduced = roof.pred().unwrap_or_else(Ordinal::zero);
            if !reduced.is_zero() {
                // Greatest coefficient available: fill everything below
                // W^exponent on top of it, then continue below it.
                let base = head.concat(&MetaOrdinal::omega_term(exponent.clone(), reduced));
                let filled = prefix.concat(&base);
                self.frames.push((prefix, Work::Below(base)));
                self.frames.push((
                    filled,
                    Work::Below(MetaOrdinal::omega_term(exponent, Ordinal::one())),
                ));
                return None;
            }
        }

        // The coefficient cannot be lowered: reduce the exponent instead.
        let ceiling = std::cmp::min(exponent, self.bound.clone());
        self.reduce_exponent(prefix, head, ceiling)
    }

    /// Ladder segment for exponents strictly below `ceiling` on top of an
    /// admissible head.
    fn reduce_exponent(
        &mut self,
        prefix: MetaOrdinal,
        head: MetaOrdinal,
        ceiling: Ordinal,
    ) -> Option<MetaOrdinal> {
        if ceiling.is_limit() {
            let at = prefix.concat(&head);
            self.frames.push((
                at,
                Work::Fund { climb: Climb::Exponent, roof: ceiling, j: 1 },
            ));
            return None;
        }
        match ceiling.pred() {
            Some(e) if !e.is_zero() => {
                // Climb coefficients of W^e toward the bound.
                if self.bound.is_limit() {
                    let at = prefix.concat(&head);
                    self.frames.push((
                        at,
                        Work::Fund {
                            climb: Climb::Coeff(e),
                            roof: self.bound.clone(),
                            j: 1,
                        },
                    ));
                    return None;
                }
                let top = self.bound.pred().unwrap_or_else(Ordinal::zero);
                if top.is_zero() {
                    // Bound 1 admits no coefficients at all.
                    return self.reduce_constant(prefix, head, Ordinal::zero());
                }
                let base = head.concat(&MetaOrdinal::omega_term(e.clone(), top));
                let filled = prefix.concat(&base);
                self.frames.push((prefix, Work::Below(base)));
                self.frames.push((
                    filled,
                    Work::Below(MetaOrdinal::omega_term(e, Ordinal::one())),
                ));
                None
            }
            // Only constants fit below W^1.
            _ => {
                let roof = self.bound.clone();
                self.reduce_constant(prefix, head, roof)
            }
        }
    }

    /// Ladder segment for constants strictly below `roof` (with 0 always
    /// available) on top of an admissible body.
    fn reduce_constant(
        &mut self,
        prefix: MetaOrdinal,
        body: MetaOrdinal,
        roof: Ordinal,
    ) -> Option<MetaOrdinal> {
        if roof.is_limit() {
            let at = prefix.concat(&body);
            self.frames.push((
                at,
                Work::Fund { climb: Climb::Constant, roof, j: 1 },
            ));
            return None;
        }
        let constant = roof.pred().unwrap_or_else(Ordinal::zero);
        let greatest = body.with_constant(constant);
        let element = prefix.concat(&greatest);
        self.frames.push((prefix, Work::Below(greatest)));
        Some(element)
    }
}

#[cfg(test)]
mod tests {
    use crate::{Exhausted, MetaOrdinal};
    use ordinal::Ordinal;

    fn mo(s: &str) -> MetaOrdinal {
        s.parse().unwrap()
    }

    fn ord(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    fn run(t: &str, bound: &str, n: usize) -> Result<Vec<String>, Exhausted> {
        mo(t)
            .enumerate_below(&ord(bound), n, 0)
            .map(|v| v.iter().map(|x| x.to_string()).collect())
    }

    #[test]
    fn pinned_examples() {
        assert_eq!(run("W", "w", 3).unwrap(), ["1", "2", "3"]);
        assert_eq!(run("W*2", "w", 2).unwrap(), ["W+1", "W+2"]);
        assert_eq!(run("1", "1", 1).unwrap(), ["0"]);
        assert_eq!(run("0", "w", 1), Err(Exhausted));
    }

    #[test]
    fn finite_sets_enumerate_completely() {
        // Below W at bound 3 the admissible terms are the constants 0, 1, 2.
        assert_eq!(run("W", "3", 3).unwrap(), ["2", "1", "0"]);
        assert_eq!(run("W", "3", 4), Err(Exhausted));
        // Below W*2 at bound 3: W+2, W+1, W, then the constants.
        assert_eq!(
            run("W*2", "3", 6).unwrap(),
            ["W+2", "W+1", "W", "2", "1", "0"]
        );
        assert_eq!(run("W*2", "3", 7), Err(Exhausted));
        assert_eq!(run("5", "w", 5).unwrap(), ["4", "3", "2", "1", "0"]);
        assert_eq!(run("5", "w", 6), Err(Exhausted));
        assert_eq!(run("1", "1", 2), Err(Exhausted));
    }

    #[test]
    fn limit_positions_climb() {
        assert_eq!(run("W^2", "w", 4).unwrap(), ["W", "W*2", "W*3", "W*4"]);
        assert_eq!(run("W^w", "w", 3).unwrap(), ["W", "W^2", "W^3"]);
        assert_eq!(
            run("W*w", "w", 3).unwrap(),
            ["W", "W*2", "W*3"]
        );
        assert_eq!(
            run("W^2*2", "w", 3).unwrap(),
            ["W^2+W", "W^2+W*2", "W^2+W*3"]
        );
        assert_eq!(run("W+w", "w", 3).unwrap(), ["W+1", "W+2", "W+3"]);
        // The roof is the bound when the bound is smaller.
        assert_eq!(run("W*w", "w^2", 3).unwrap(), ["W", "W*2", "W*3"]);
        // A successor roof descends instead.
        assert_eq!(run("W^w*5+3", "w+1", 3).unwrap(), ["W^w*5+2", "W^w*5+1", "W^w*5"]);
    }

    #[test]
    fn inadmissible_positions_are_clamped() {
        // The prefix W^w is out of reach at bound 3, so the ladder drops to
        // terms below it.
        assert_eq!(run("W^w+5", "3", 3).unwrap(), ["W^2*2+W*2+2", "W^2*2+W*2+1", "W^2*2+W*2"]);
        // Exponent w clamps to the bound.
        assert_eq!(run("W^w", "3", 2).unwrap(), ["W^2*2+W*2+2", "W^2*2+W*2+1"]);
    }

    #[test]
    fn seeds_offset_the_stream() {
        assert_eq!(
            mo("W").enumerate_below(&ord("w"), 3, 2).unwrap(),
            ["3", "4", "5"].map(|s| mo(s)).to_vec()
        );
        // Seeds can exhaust a finite pool.
        assert!(mo("W").enumerate_below(&ord("3"), 3, 0).is_ok());
        assert!(mo("W").enumerate_below(&ord("3"), 3, 1).is_err());
    }

    #[test]
    fn outputs_are_admissible_distinct_and_below() {
        for (t, bound) in [
            ("W^w*2+W^2*3+W+7", "w"),
            ("W^(w+1)+W^w*w", "w*2"),
            ("W^3*2+W^2", "w^2"),
            ("W^2+W+1", "4"),
            ("W^phi(1,0)", "w^w"),
        ] {
            let t = mo(t);
            let bound = ord(bound);
            let got = t.enumerate_below(&bound, 12, 0).unwrap();
            for s in &got {
                assert!(s < &t, "{s} not below {t}");
                assert!(s.admissible_at(&bound), "{s} not admissible at {bound}");
            }
            let mut dedup = got.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), got.len(), "duplicates under {t}");
        }
    }
}
