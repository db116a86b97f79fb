//! Ordinal exponentiation in closed form.
//!
//! The transfinite recursion for `k^a` admits a normal-form computation with
//! three regimes. A finite base `m >= 2` maps the limit part of the exponent
//! through `m^w = w`, shifting every exponent of the exponent down by one
//! from the left. An infinite base raised to a limit exponent `d` gives
//! `w^(e*d)` for `e` the base's leading exponent. Finite powers of an
//! infinite base expand by distributing the product; for a successor base
//! this genuinely multiplies the number of normal-form terms, so results
//! beyond a term budget report [`Overflow`] rather than exhausting memory.

use crate::{Ordinal, Term};
use std::fmt;

/// The result would exceed the coefficient width or the term budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

impl fmt::Display for Overflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ordinal power exceeds the supported size")
    }
}

impl std::error::Error for Overflow {}

/// Largest number of normal-form terms a power is allowed to produce.
const TERM_BUDGET: u64 = 1 << 16;

impl Ordinal {
    /// Ordinal exponentiation `self ^ exp`.
    pub fn pow(&self, exp: &Ordinal) -> Result<Ordinal, Overflow> {
        if exp.is_zero() {
            return Ok(Ordinal::one());
        }
        if self.is_zero() {
            return Ok(Ordinal::zero());
        }
        if let Some(m) = self.as_nat() {
            if m == 1 {
                return Ok(Ordinal::one());
            }
            return finite_base_pow(m, exp);
        }

        let e1 = self.leading_exponent().unwrap();
        let delta = exp.limit_part();
        let n = exp.finite_part();
        let head = Ordinal::omega_pow(&e1.mul(&delta));
        if n == 0 {
            return Ok(head);
        }
        let kn = finite_power_of_infinite(self, &e1, n)?;
        if delta.is_zero() {
            Ok(kn)
        } else {
            Ok(shift_mul(&e1.mul(&delta), &kn))
        }
    }
}

/// `m^exp` for a finite base `m >= 2`.
fn finite_base_pow(m: u64, exp: &Ordinal) -> Result<Ordinal, Overflow> {
    let n = exp.finite_part();
    let c = if n > u64::from(u32::MAX) {
        return Err(Overflow);
    } else {
        m.checked_pow(n as u32).ok_or(Overflow)?
    };
    // m^(w^x * d) is w^(w^x' * d) where 1 + x' = x, since m^w = w and powers
    // multiply exponents. Infinite x are their own predecessor here.
    let mut q = Ordinal::zero();
    for part in exp.limit_part().parts() {
        let x = part.exponent();
        let shifted = match x.as_nat() {
            Some(j) => Ordinal::from_nat(j - 1),
            None => x,
        };
        let mut piece = Ordinal::omega_pow(&shifted);
        piece.terms[0].coeff = part.coeff;
        q = q.add(&piece);
    }
    let mut result = Ordinal::omega_pow(&q);
    result.terms[0].coeff = result.terms[0].coeff.checked_mul(c).ok_or(Overflow)?;
    Ok(result)
}

/// `k^n` for infinite `k` and finite `n >= 1`.
fn finite_power_of_infinite(k: &Ordinal, e1: &Ordinal, n: u64) -> Result<Ordinal, Overflow> {
    if n == 1 {
        return Ok(k.clone());
    }
    let a = k.limit_part();
    let m = k.finite_part();
    if m == 0 {
        // Limit bases stabilize: k^n = w^(e1*(n-1)) * k.
        return Ok(shift_mul(&mul_nat(e1, n - 1)?, k));
    }
    // Successor base k = a + m expands as
    //   k^n = w^(e1*(n-1))*a + w^(e1*i)*(a*m) summed for i from n-2 down to 0,
    // plus the trailing m. Each block sits strictly below the previous one,
    // so the normal form is the concatenation of the blocks.
    let am = mul_nat(&a, m)?;
    let blocks = n - 1;
    let span = (a.terms.len() as u64)
        .checked_add(blocks.checked_mul(am.terms.len() as u64).ok_or(Overflow)?)
        .ok_or(Overflow)?;
    if span + 1 > TERM_BUDGET {
        return Err(Overflow);
    }
    let mut out = shift_mul(&mul_nat(e1, n - 1)?, &a);
    for i in (0..=n - 2).rev() {
        let block = shift_mul(&mul_nat(e1, i)?, &am);
        out.terms.extend(block.terms);
    }
    out.terms.push(Term {
        head: crate::Head::unit(),
        coeff: m,
    });
    debug_assert!(out.terms.windows(2).all(|w| {
        w[0].head.cmp_head(&w[1].head) == std::cmp::Ordering::Greater
    }));
    Ok(out)
}

/// `w^e * x` by mapping each term of `x` through the exponent shift. Left
/// addition of exponents is injective, so the term order is preserved and
/// the result can be built without re-normalizing.
fn shift_mul(e: &Ordinal, x: &Ordinal) -> Ordinal {
    if e.is_zero() {
        return x.clone();
    }
    let mut terms = Vec::with_capacity(x.terms.len());
    for part in x.parts() {
        let mut piece = Ordinal::omega_pow(&e.add(&part.exponent()));
        piece.terms[0].coeff = part.coeff;
        terms.extend(piece.terms);
    }
    Ordinal { terms }
}

/// Right multiplication by a natural with overflow reported instead of the
/// panic used by general arithmetic.
fn mul_nat(x: &Ordinal, n: u64) -> Result<Ordinal, Overflow> {
    if n == 0 || x.is_zero() {
        return Ok(Ordinal::zero());
    }
    let mut r = x.clone();
    r.terms[0].coeff = r.terms[0].coeff.checked_mul(n).ok_or(Overflow)?;
    Ok(r)
}
