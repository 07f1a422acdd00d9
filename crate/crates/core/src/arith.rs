//! Small exact integer helpers shared by the other modules.
//!
//! Logarithms are always computed by repeated multiplication, never through
//! floating point.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn require_prime(p: u64) -> Result<u64> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(Error::NotPrime(p))
    }
}

/// `floor(log_base(x))` for `x >= 1`, `base >= 2`.
pub fn floor_log(base: u64, x: u128) -> u32 {
    assert!(base >= 2, "logarithm base must be at least 2");
    assert!(x >= 1, "logarithm argument must be positive");
    let base = base as u128;
    let mut k = 0u32;
    let mut pow = base;
    while pow <= x {
        k += 1;
        pow = match pow.checked_mul(base) {
            Some(v) => v,
            None => break,
        };
    }
    k
}

/// Smallest integer `k` with `2^k * den >= num`, i.e. `ceil(log2(num / den))`.
/// May be negative when `num < den`.
pub fn ceil_log2_ratio(num: u128, den: u128) -> i64 {
    assert!(num > 0 && den > 0);
    let mut k: i64 = 0;
    if num >= den {
        let mut v = den;
        while v < num {
            v *= 2;
            k += 1;
        }
    } else {
        let mut v = num;
        while v * 2 <= den {
            v *= 2;
            k -= 1;
        }
    }
    k
}

/// `p^r` if it fits in an `i64`.
pub fn checked_pow(p: u64, r: u32) -> Option<i64> {
    i64::try_from(p).ok()?.checked_pow(r)
}

pub fn pow_or_overflow(p: u64, r: u32, what: &'static str) -> Result<i64> {
    checked_pow(p, r).ok_or(Error::Overflow(what))
}

/// The largest power of `p` dividing `n` (the `p`-part of `n`).
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut n = n;
    let mut part = 1;
    if n == 0 {
        return 0;
    }
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

pub fn floor_div(a: i64, b: i64) -> i64 {
    num_integer::div_floor(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}
