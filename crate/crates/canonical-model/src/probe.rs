//! Direct definitional membership tests.
//!
//! The closed forms in [`ClassExpr`] are rewrite rules: stepping a class
//! raises its divisor, and the diagonal families land one Veblen level up.
//! The functions here decide the same questions straight from the
//! definitions instead. A step asks whether `k` is a limit point of the
//! previous class, checked by walking `k`'s fundamental sequence and asking
//! for a class element strictly between each approach point and `k`. A
//! diagonal asks for membership at every stage below `k`, checked at stage
//! zero and along the fundamental sequence. Tests compare these verdicts
//! against the rewritten classes; the two routes share only the ordinal
//! arithmetic itself.

use crate::ClassExpr;
use ordinal::Ordinal;

/// How far along a fundamental sequence the probes walk. The approach
/// points pass any fixed obstruction within the first few steps, so eight
/// is comfortable.
pub const PROBE_DEPTH: u64 = 8;

/// Whether `k` is a limit point of `class` lying in the base, decided by
/// probing. Each approach point must see a class element before `k`; the
/// first gap refutes, because `next_above` is exact.
pub fn is_limit_point(class: &ClassExpr, k: &Ordinal) -> bool {
    if !k.is_limit() {
        return false;
    }
    for i in 0..PROBE_DEPTH {
        let y = k.fund_seq(i).expect("limit ordinal");
        if &class.next_above(&y) >= k {
            return false;
        }
    }
    true
}

/// Whether `k` lies in every class of the family at stages below `k`,
/// decided by probing stage zero and the fundamental sequence of `k`.
pub fn in_diagonal<F>(family: F, k: &Ordinal) -> bool
where
    F: Fn(&Ordinal) -> ClassExpr,
{
    if !k.is_limit() {
        return false;
    }
    if !family(&Ordinal::zero()).contains(k) {
        return false;
    }
    (0..PROBE_DEPTH).all(|i| {
        let stage = k.fund_seq(i).expect("limit ordinal");
        family(&stage).contains(k)
    })
}
