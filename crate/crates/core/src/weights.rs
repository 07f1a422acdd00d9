//! Weights, `p`-adic digit expansions and the combinatorics built on them.
//!
//! The `q`-shift `λ^{[e]_q}` (for `q = p^r`) is implemented as the cyclic
//! rotation of the `r` digits of `λ` by `e` places: digit `i` of the result is
//! digit `(i - e) mod r` of `λ`. This is the unique `q`-restricted weight that
//! agrees with `p^e λ` on the finite torus, and it makes the shifts an action
//! of `Z/rZ`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{checked_pow, floor_log, p_part, require_prime};
use crate::error::{Error, Result};
use crate::rootsys::RootSystem;

/// An integral weight in the fundamental-weight basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn checked_scale(&self, k: i64) -> Option<Weight> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k))
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }

    pub fn checked_add(&self, other: &Weight) -> Option<Weight> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b))
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses the bracketed literal `"[2,0,1]"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("weight literal `{s}` must be bracketed")))?;
        if inner.trim().is_empty() {
            return Err(Error::Parse("empty weight literal".into()));
        }
        inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coordinate `{}` in `{s}`", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// Render big-integer coordinates in the same bracketed literal format.
pub fn format_big_weight(coords: &[BigInt]) -> String {
    let inner: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(","))
}

/// A `p`-adic expansion `λ = Σ p^i λ_i` with an explicit length `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DigitExpansion {
    pub p: u64,
    pub digits: Vec<Weight>,
}

impl DigitExpansion {
    /// Build from explicit digits, checking each one is `p`-restricted.
    pub fn from_digits(p: u64, digits: Vec<Weight>) -> Result<Self> {
        if let Some(first) = digits.first() {
            let rank = first.rank();
            for d in &digits {
                if d.rank() != rank {
                    return Err(Error::DimensionMismatch {
                        expected: rank,
                        found: d.rank(),
                    });
                }
                if !d.coords().iter().all(|&x| x >= 0 && (x as u64) < p) {
                    return Err(Error::NotRestricted {
                        weight: d.to_string(),
                        p,
                        r: 1,
                    });
                }
            }
        }
        Ok(DigitExpansion { p, digits })
    }

    /// A single-coordinate-per-digit shortcut for rank one: `[1,0,1]` digits.
    pub fn from_rank_one_digits(p: u64, digits: &[i64]) -> Result<Self> {
        Self::from_digits(p, digits.iter().map(|&d| Weight::new(vec![d])).collect())
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.digits.first().map_or(0, |d| d.rank())
    }

    pub fn digit_is_zero(&self, i: usize) -> bool {
        self.digits[i].is_zero()
    }

    /// The weight `Σ p^i λ_i`, if it fits in `i64` coordinates.
    pub fn value(&self, rank: usize) -> Result<Weight> {
        let mut acc = vec![0i64; rank];
        for (i, d) in self.digits.iter().enumerate() {
            if d.is_zero() {
                continue;
            }
            let pw =
                checked_pow(self.p, i as u32).ok_or(Error::Overflow("digit reconstruction"))?;
            for (a, &x) in acc.iter_mut().zip(d.coords()) {
                *a = x
                    .checked_mul(pw)
                    .and_then(|v| a.checked_add(v))
                    .ok_or(Error::Overflow("digit reconstruction"))?;
            }
        }
        Ok(Weight(acc))
    }

    /// The weight `Σ p^i λ_i` with arbitrary-precision coordinates.
    pub fn big_value(&self, rank: usize) -> Vec<BigInt> {
        let mut acc = vec![BigInt::zero(); rank];
        let mut pw = BigInt::one();
        let p = BigInt::from(self.p);
        for d in &self.digits {
            for (a, &x) in acc.iter_mut().zip(d.coords()) {
                *a += &pw * x;
            }
            pw *= &p;
        }
        acc
    }

    pub fn literal(&self, rank: usize) -> String {
        format_big_weight(&self.big_value(rank))
    }

    /// Cyclic rotation of the digits by `e` places (the `q`-shift).
    pub fn rotate(&self, e: u64) -> DigitExpansion {
        let r = self.digits.len();
        if r == 0 {
            return self.clone();
        }
        let e = (e % r as u64) as usize;
        let digits = (0..r)
            .map(|i| self.digits[(i + r - e) % r].clone())
            .collect();
        DigitExpansion { p: self.p, digits }
    }

    /// The same expansion padded with zero digits to length `len`.
    pub fn padded(&self, len: usize, rank: usize) -> DigitExpansion {
        let mut digits = self.digits.clone();
        while digits.len() < len {
            digits.push(Weight::zero(rank));
        }
        DigitExpansion { p: self.p, digits }
    }

    /// Digit positions `i` with `λ_i = 0`.
    pub fn zero_positions(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.digit_is_zero(i)).collect()
    }
}

fn require_rank(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    rs.check_rank(lambda.rank())
}

/// `0 <= λ_i < p^r` for every coordinate. `r = 0` admits only the zero weight.
pub fn is_restricted(rs: &RootSystem, lambda: &Weight, p: u64, r: u32) -> bool {
    if require_rank(rs, lambda).is_err() {
        return false;
    }
    match checked_pow(p, r) {
        Some(bound) => lambda.coords().iter().all(|&x| x >= 0 && x < bound),
        None => lambda.is_dominant(),
    }
}

fn require_restricted(rs: &RootSystem, lambda: &Weight, p: u64, r: u32) -> Result<()> {
    require_rank(rs, lambda)?;
    if !is_restricted(rs, lambda, p, r) {
        return Err(Error::NotRestricted {
            weight: lambda.to_string(),
            p,
            r,
        });
    }
    Ok(())
}

/// `p`-adic digit expansion of a dominant weight.
///
/// With `r = None` the minimal length is used (zero digits for `λ = 0`);
/// otherwise `λ` must be `p^r`-restricted and exactly `r` digits are returned.
pub fn digit_expand(
    rs: &RootSystem,
    lambda: &Weight,
    p: u64,
    r: Option<u32>,
) -> Result<DigitExpansion> {
    require_rank(rs, lambda)?;
    require_prime(p)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let len = match r {
        Some(r) => {
            require_restricted(rs, lambda, p, r)?;
            r as usize
        }
        None => lambda
            .coords()
            .iter()
            .map(|&x| {
                if x == 0 {
                    0
                } else {
                    floor_log(p, x as u128) as usize + 1
                }
            })
            .max()
            .unwrap_or(0),
    };
    let mut rest: Vec<i64> = lambda.coords().to_vec();
    let pi = p as i64;
    let digits = (0..len)
        .map(|_| {
            let d: Vec<i64> = rest.iter().map(|x| x % pi).collect();
            for x in rest.iter_mut() {
                *x /= pi;
            }
            Weight(d)
        })
        .collect();
    Ok(DigitExpansion { p, digits })
}

/// `λ^{[e]_q}` for `q = p^r`, returned as a weight.
pub fn q_shift(rs: &RootSystem, lambda: &Weight, p: u64, r: u32, e: u64) -> Result<Weight> {
    let exp = digit_expand(rs, lambda, p, Some(r))?;
    exp.rotate(e).value(rs.rank())
}

pub fn paired_expansions(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    p: u64,
    r: u32,
) -> Result<(DigitExpansion, DigitExpansion)> {
    Ok((
        digit_expand(rs, lambda, p, Some(r))?,
        digit_expand(rs, mu, p, Some(r))?,
    ))
}

/// Number of digit positions where two expansions of equal length differ.
pub fn digit_difference_of(a: &DigitExpansion, b: &DigitExpansion) -> usize {
    a.digits
        .iter()
        .zip(&b.digits)
        .filter(|(x, y)| x != y)
        .count()
}

/// `|{i < r : λ_i ≠ μ_i}|`.
pub fn digit_difference(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    p: u64,
    r: u32,
) -> Result<usize> {
    let (a, b) = paired_expansions(rs, lambda, mu, p, r)?;
    Ok(digit_difference_of(&a, &b))
}

/// A maximal run of positions where both expansions have zero digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeroRun {
    pub start: usize,
    pub length: usize,
}

/// All maximal common zero runs starting at or after `epsilon`, left to right.
pub fn common_zero_runs(a: &DigitExpansion, b: &DigitExpansion, epsilon: usize) -> Vec<ZeroRun> {
    let r = a.len().min(b.len());
    let mut runs = Vec::new();
    let mut i = epsilon.min(r);
    while i < r {
        if a.digit_is_zero(i) && b.digit_is_zero(i) {
            let start = i;
            while i < r && a.digit_is_zero(i) && b.digit_is_zero(i) {
                i += 1;
            }
            runs.push(ZeroRun {
                start,
                length: i - start,
            });
        } else {
            i += 1;
        }
    }
    runs
}

/// Longest common zero run of two expansions at or after position `epsilon`
/// (leftmost on ties). An empty run is reported as `(epsilon, 0)`.
pub fn longest_common_zero_run_of(
    a: &DigitExpansion,
    b: &DigitExpansion,
    epsilon: usize,
) -> ZeroRun {
    common_zero_runs(a, b, epsilon)
        .into_iter()
        .fold(None::<ZeroRun>, |best, run| match best {
            Some(b) if b.length >= run.length => Some(b),
            _ => Some(run),
        })
        .unwrap_or(ZeroRun {
            start: epsilon,
            length: 0,
        })
}

pub fn longest_common_zero_run(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    p: u64,
    r: u32,
    epsilon: u32,
) -> Result<ZeroRun> {
    let (a, b) = paired_expansions(rs, lambda, mu, p, r)?;
    Ok(longest_common_zero_run_of(&a, &b, epsilon as usize))
}

/// `|(λ, α^∨)| <= b` for every positive root `α`.
pub fn is_b_small(rs: &RootSystem, lambda: &Weight, b: i64) -> bool {
    match rs.max_abs_coroot_pairing(lambda) {
        Ok(v) => v <= b,
        Err(_) => false,
    }
}

/// Dominant-weight shortcut: `(λ, α0^∨) <= b`.
pub fn is_b_small_dominant(rs: &RootSystem, lambda: &Weight, b: i64) -> Result<bool> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    Ok(rs.pairing_alpha0(lambda)? <= b)
}

/// Order data of a weight in `X / ZΦ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeOrder {
    /// `t(λ)`, the order of `λ` modulo the root lattice.
    pub order: u64,
    /// `λ̄ = tλ` in simple-root coordinates, `t` the exponent of `X / ZΦ`.
    pub bar_root_coords: Vec<i64>,
    /// `c(λ̄)`, the largest simple-root coefficient of `λ̄`.
    pub c_bar: i64,
}

impl LatticeOrder {
    /// `t_p(λ)`, the `p`-part of `t(λ)`.
    pub fn p_part(&self, p: u64) -> u64 {
        p_part(self.order, p)
    }
}

pub fn lattice_order(rs: &RootSystem, lambda: &Weight) -> Result<LatticeOrder> {
    let x = rs.weight_to_root_coords(lambda)?;
    let order = x.iter().fold(1u64, |acc, v| {
        crate::arith::lcm(acc, v.denom().unsigned_abs())
    });
    let t = rs.t as i64;
    let bar: Vec<i64> = x
        .iter()
        .map(|v| {
            let s = *v * t;
            debug_assert!(s.is_integer());
            s.to_integer()
        })
        .collect();
    let c_bar = if lambda.is_zero() {
        0
    } else {
        RootSystem::max_coefficient(&bar)
    };
    Ok(LatticeOrder {
        order,
        bar_root_coords: bar,
        c_bar,
    })
}

/// `μ <= λ` in the dominance order: `λ - μ` is a non-negative integer
/// combination of simple roots.
pub fn dominance_leq(rs: &RootSystem, mu: &Weight, lambda: &Weight) -> Result<bool> {
    require_rank(rs, mu)?;
    let diff = lambda.sub(mu);
    let x = rs.weight_to_root_coords(&diff)?;
    Ok(RootSystem::all_integral(&x) && RootSystem::all_nonnegative(&x))
}
