//! Exact-arithmetic helpers: integer powers of rationals, cross-powered
//! comparisons, rational brackets for real roots, and float logarithms of
//! big rationals for advisory reports.

use core::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn from_biguint(v: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from_biguint(Sign::Plus, v.clone()))
}

pub fn ratio(num: &BigUint, den: &BigUint) -> Rational {
    Rational::new(
        BigInt::from_biguint(Sign::Plus, num.clone()),
        BigInt::from_biguint(Sign::Plus, den.clone()),
    )
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn pow(base: &Rational, exp: u64) -> Rational {
    let mut result = Rational::one();
    let mut b = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    result
}

pub fn pow_uint(base: u64, exp: u64) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// Compares `a^p` with `b^q`.
pub fn cmp_powers(a: &Rational, p: u64, b: &Rational, q: u64) -> Ordering {
    pow(a, p).cmp(&pow(b, q))
}

/// Natural logarithm of a big unsigned integer, accurate to f64 precision.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return libm::log(x.to_f64().unwrap_or(f64::INFINITY));
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap();
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}

/// Natural logarithm of a positive rational.
pub fn ln(x: &Rational) -> f64 {
    if !x.is_positive() {
        return f64::NAN;
    }
    ln_biguint(x.numer().magnitude()) - ln_biguint(x.denom().magnitude())
}

pub fn to_f64(x: &Rational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let sign = if x.is_negative() { -1.0 } else { 1.0 };
    sign * libm::exp(ln(&x.abs()))
}

/// A rational interval `[lo, hi]` containing `x^(1/e)` for `x >= 0`, of width
/// `2^-bits`.
pub fn root_bracket(x: &Rational, e: u32, bits: u64) -> (Rational, Rational) {
    assert!(!x.is_negative(), "root of a negative rational");
    assert!(e >= 1);
    let scale = BigUint::one() << bits;
    let num = x.numer().magnitude() * num_traits::pow(scale.clone(), e as usize);
    let scaled = num / x.denom().magnitude();
    let r = scaled.nth_root(e);
    let lo = ratio(&r, &scale);
    let hi = ratio(&(r + 1u32), &scale);
    (lo, hi)
}

/// `Some(y)` when `x = y^e` for a rational `y >= 0`.
pub fn exact_root(x: &Rational, e: u32) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().magnitude();
    let d = x.denom().magnitude();
    let rn = n.nth_root(e);
    let rd = d.nth_root(e);
    if &num_traits::pow(rn.clone(), e as usize) == n && &num_traits::pow(rd.clone(), e as usize) == d {
        Some(ratio(&rn, &rd))
    } else {
        None
    }
}

/// Decides `a^(1/e)` against `b^(1/e) + c^(1/e)` for nonnegative rationals,
/// exactly when the answer can be certified. Returns `None` if the two sides
/// could not be separated within `max_bits` of precision (which happens only
/// in equality cases involving irrational roots).
pub fn cmp_root_sum(a: &Rational, b: &Rational, c: &Rational, e: u32, max_bits: u64) -> Option<Ordering> {
    if let (Some(rb), Some(rc)) = (exact_root(b, e), exact_root(c, e)) {
        return Some(a.cmp(&pow(&(rb + rc), e as u64)));
    }
    let mut bits = 32;
    while bits <= max_bits {
        let (blo, bhi) = root_bracket(b, e, bits);
        let (clo, chi) = root_bracket(c, e, bits);
        if a > &pow(&(bhi + chi), e as u64) {
            return Some(Ordering::Greater);
        }
        if a < &pow(&(blo + clo), e as u64) {
            return Some(Ordering::Less);
        }
        bits *= 2;
    }
    None
}
