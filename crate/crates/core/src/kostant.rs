//! Graded Kostant partition function, the Weyl dimension formula and the
//! large-prime cohomology dimension formula
//! `dim H^m(G(p), L(μ)) = Σ_w det(w) p_{m/2}(w·μ)` (zero for odd `m`).

use std::collections::HashMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{rho_pairings, RootSystem};
use crate::weights::Weight;
use crate::weyl::{alcove_tests, dot_action, WeylGroup};

/// Default bound on memo entries before giving up with a resource error.
pub const DEFAULT_MEMO_CAP: usize = 4_000_000;

/// Memoized `p_j(ν)`: the number of multisets of exactly `j` positive roots
/// summing to `ν` (simple-root coordinates).
///
/// The memo is keyed on `(root index, remaining vector, remaining parts)` and
/// may be reused across queries on the same root system.
pub struct KostantTable {
    roots: Vec<Vec<i64>>,
    memo: HashMap<(usize, Vec<i64>, u32), u128>,
    cap: usize,
}

impl KostantTable {
    pub fn new(rs: &RootSystem) -> Self {
        Self::with_cap(rs, DEFAULT_MEMO_CAP)
    }

    pub fn with_cap(rs: &RootSystem, cap: usize) -> Self {
        KostantTable {
            roots: rs.positive_roots.clone(),
            memo: HashMap::new(),
            cap,
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `p_j(ν)`. Any negative coordinate gives 0.
    pub fn graded(&mut self, nu: &[i64], j: u32) -> Result<u128> {
        let rank = self.roots.first().map_or(0, |r| r.len());
        if nu.len() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: nu.len(),
            });
        }
        self.count(0, nu.to_vec(), j)
    }

    /// The ungraded count `Σ_j p_j(ν)`.
    pub fn ungraded(&mut self, nu: &[i64]) -> Result<u128> {
        if nu.iter().any(|&x| x < 0) {
            return Ok(0);
        }
        // Every positive root has height at least 1.
        let height: i64 = nu.iter().sum();
        let mut total = 0u128;
        for j in 0..=height as u32 {
            total = total
                .checked_add(self.graded(nu, j)?)
                .ok_or(Error::Overflow("partition count"))?;
        }
        Ok(total)
    }

    fn count(&mut self, i: usize, v: Vec<i64>, k: u32) -> Result<u128> {
        if v.iter().any(|&x| x < 0) {
            return Ok(0);
        }
        if k == 0 {
            return Ok(u128::from(v.iter().all(|&x| x == 0)));
        }
        if i == self.roots.len() {
            return Ok(0);
        }
        let height: i64 = v.iter().sum();
        if height < k as i64 {
            return Ok(0);
        }
        let key = (i, v, k);
        if let Some(&c) = self.memo.get(&key) {
            return Ok(c);
        }
        let (_, v, _) = &key;
        let beta = self.roots[i].clone();
        let mut total = 0u128;
        let mut rest = v.clone();
        let mut used = 0u32;
        loop {
            total = total
                .checked_add(self.count(i + 1, rest.clone(), k - used)?)
                .ok_or(Error::Overflow("partition count"))?;
            if used == k {
                break;
            }
            for (x, b) in rest.iter_mut().zip(&beta) {
                *x -= b;
            }
            if rest.iter().any(|&x| x < 0) {
                break;
            }
            used += 1;
        }
        if self.memo.len() >= self.cap {
            return Err(Error::MemoCapExceeded(self.cap));
        }
        self.memo.insert(key, total);
        Ok(total)
    }
}

/// One-shot `p_j(ν)` with a fresh memo table.
pub fn kostant_graded(rs: &RootSystem, nu: &[i64], j: u32) -> Result<u128> {
    KostantTable::new(rs).graded(nu, j)
}

/// `Π_{α > 0} (λ + ρ, α^∨) / (ρ, α^∨)`, computed exactly.
pub fn weyl_dimension(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    rs.check_rank(lambda.rank())?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let shifted = lambda.add(&rs.rho);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (cor, rho_pair) in rs.positive_coroots.iter().zip(rho_pairings(rs)) {
        num *= rs.pairing(&shifted, cor)? as u64;
        den *= rho_pair as u64;
    }
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "Weyl dimension of {lambda} is not an integer"
        )));
    }
    Ok(q)
}

/// Hypotheses under which the dimension formula is known to hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixValidity {
    /// `p > 12m + 13h - 16`.
    pub prime_large: bool,
    /// `p >= (μ, α0^∨) + h - 1`.
    pub prime_above_weight: bool,
    /// `μ` lies in the closure of the lowest `p`-alcove.
    pub lowest_alcove: bool,
}

impl AppendixValidity {
    pub fn all(&self) -> bool {
        self.prime_large && self.prime_above_weight && self.lowest_alcove
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixDimension {
    pub mu: Weight,
    pub m: u32,
    pub p: u64,
    pub value: i128,
    pub m_odd: bool,
    pub validity: AppendixValidity,
}

/// `Σ_{w ∈ W} det(w) p_{m/2}(w·μ)` for even `m`, and 0 for odd `m`.
///
/// Arguments outside the root lattice or with a negative simple-root
/// coefficient contribute 0.
pub fn appendix_dimension(
    rs: &RootSystem,
    weyl: &WeylGroup,
    table: &mut KostantTable,
    mu: &Weight,
    m: u32,
    p: u64,
) -> Result<AppendixDimension> {
    rs.check_rank(mu.rank())?;
    if !mu.is_dominant() {
        return Err(Error::NotDominant(mu.clone()));
    }
    let h = rs.h;
    let p_i = p as i64;
    let validity = AppendixValidity {
        prime_large: p_i > 12 * m as i64 + 13 * h - 16,
        prime_above_weight: p_i >= rs.pairing_alpha0(mu)? + h - 1,
        lowest_alcove: alcove_tests(rs, mu, p)?.in_closure_lowest_alcove,
    };
    let mut value = 0i128;
    let m_odd = m % 2 == 1;
    if !m_odd {
        for w in &weyl.elements {
            let image = dot_action(rs, w, mu);
            let Some(x) = rs.integral_root_coords(&image)? else {
                continue;
            };
            let count = table.graded(&x, m / 2)?;
            let count = i128::try_from(count).map_err(|_| Error::Overflow("dimension sum"))?;
            value += w.sign() as i128 * count;
        }
    }
    Ok(AppendixDimension {
        mu: mu.clone(),
        m,
        p,
        value,
        m_odd,
        validity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::DEFAULT_WEYL_CAP;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    #[test]
    fn trivial_counts() {
        for label in ["A1", "B3", "G2"] {
            let r = rs(label);
            let n = r.rank();
            let mut t = KostantTable::new(&r);
            assert_eq!(t.graded(&vec![0; n], 0).unwrap(), 1);
            let mut a1 = vec![0; n];
            a1[0] = 1;
            assert_eq!(t.graded(&a1, 0).unwrap(), 0);
            assert_eq!(t.graded(&a1, 1).unwrap(), 1);
        }
    }

    #[test]
    fn rank_one_counts() {
        let a1 = rs("A1");
        assert_eq!(kostant_graded(&a1, &[1], 1).unwrap(), 1);
        assert_eq!(kostant_graded(&a1, &[2], 2).unwrap(), 1);
        assert_eq!(kostant_graded(&a1, &[2], 1).unwrap(), 0);
        assert_eq!(kostant_graded(&a1, &[-1], 0).unwrap(), 0);
    }

    #[test]
    fn a2_counts() {
        let a2 = rs("A2");
        let mut t = KostantTable::new(&a2);
        assert_eq!(t.graded(&[1, 1], 2).unwrap(), 1);
        assert_eq!(t.graded(&[1, 1], 1).unwrap(), 1);
        assert_eq!(t.graded(&[2, 2], 2).unwrap(), 1);
        assert_eq!(t.graded(&[2, 2], 3).unwrap(), 1);
        assert_eq!(t.graded(&[2, 2], 4).unwrap(), 1);
        // Classical ungraded value for A2: min(a, b) + 1.
        assert_eq!(t.ungraded(&[2, 2]).unwrap(), 3);
        assert_eq!(t.ungraded(&[3, 5]).unwrap(), 4);
        assert!(t.graded(&[1], 1).is_err());
    }

    #[test]
    fn memo_cap_is_enforced() {
        let b3 = rs("B3");
        let mut t = KostantTable::with_cap(&b3, 10);
        assert_eq!(t.graded(&[6, 6, 6], 6), Err(Error::MemoCapExceeded(10)));
    }

    #[test]
    fn weyl_dimension_examples() {
        assert_eq!(
            weyl_dimension(&rs("A1"), &Weight::new(vec![0])).unwrap(),
            BigUint::from(1u32)
        );
        assert_eq!(
            weyl_dimension(&rs("A1"), &Weight::new(vec![7])).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(
            weyl_dimension(&rs("A2"), &Weight::new(vec![1, 0])).unwrap(),
            BigUint::from(3u32)
        );
        assert_eq!(
            weyl_dimension(&rs("A2"), &Weight::new(vec![1, 1])).unwrap(),
            BigUint::from(8u32)
        );
        assert_eq!(
            weyl_dimension(&rs("G2"), &Weight::new(vec![1, 0])).unwrap(),
            BigUint::from(7u32)
        );
        assert_eq!(
            weyl_dimension(&rs("G2"), &Weight::new(vec![0, 1])).unwrap(),
            BigUint::from(14u32)
        );
        assert_eq!(
            weyl_dimension(&rs("E8"), &Weight::new(vec![0, 0, 0, 0, 0, 0, 0, 1])).unwrap(),
            BigUint::from(248u32)
        );
        assert_eq!(
            weyl_dimension(&rs("F4"), &Weight::new(vec![0, 0, 0, 1])).unwrap(),
            BigUint::from(26u32)
        );
        assert!(weyl_dimension(&rs("A1"), &Weight::new(vec![-1])).is_err());
    }

    #[test]
    fn appendix_examples() {
        let a1 = rs("A1");
        let g = WeylGroup::new(&a1, DEFAULT_WEYL_CAP).unwrap();
        let mut t = KostantTable::new(&a1);
        let d = appendix_dimension(&a1, &g, &mut t, &Weight::new(vec![2]), 2, 37).unwrap();
        assert_eq!(d.value, 1);
        assert!(d.validity.all());
        let d = appendix_dimension(&a1, &g, &mut t, &Weight::new(vec![0]), 2, 37).unwrap();
        assert_eq!(d.value, 0);
        let d = appendix_dimension(&a1, &g, &mut t, &Weight::new(vec![2]), 3, 37).unwrap();
        assert!(d.m_odd);
        assert_eq!(d.value, 0);
        let d = appendix_dimension(&a1, &g, &mut t, &Weight::new(vec![1]), 2, 37).unwrap();
        assert_eq!(d.value, 0);
        let d = appendix_dimension(&a1, &g, &mut t, &Weight::new(vec![40]), 0, 37).unwrap();
        assert!(!d.validity.lowest_alcove);
        assert!(!d.validity.prime_above_weight);
    }
}
