//! Irreducible root systems A1–E8, F4, G2 with the constants consumed by the
//! bound formulas.
//!
//! Simple roots are numbered as in Bourbaki's planches:
//!
//! | type | diagram (numbering) | notes |
//! |------|---------------------|-------|
//! | `An` | 1 - 2 - ... - n | simply laced |
//! | `Bn` | 1 - ... - (n-1) => n | α_n short |
//! | `Cn` | 1 - ... - (n-1) <= n | α_n long |
//! | `Dn` | 1 - ... - (n-2) < (n-1), n | α_{n-1}, α_n attached to α_{n-2} |
//! | `En` | 1 - 3 - 4 - 5 - ... - n, with 2 attached to 4 | simply laced |
//! | `F4` | 1 - 2 => 3 - 4 | α_1, α_2 long |
//! | `G2` | 1 <= 2 | α_1 short |
//!
//! Coordinates: roots are stored in the simple-root basis, coroots in the
//! simple-coroot basis, weights in the fundamental-weight basis. The Cartan
//! entry `cartan[i][j]` is `(α_j, α_i^∨)`, so the fundamental coordinates of
//! `α_j` are the column `cartan[·][j]`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::lcm;
use crate::error::{Error, Result};
use crate::weights::Weight;

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn rank_range(self) -> (usize, usize) {
        match self {
            Family::A => (1, 8),
            Family::B | Family::C => (2, 8),
            Family::D => (4, 8),
            Family::E => (6, 8),
            Family::F => (4, 4),
            Family::G => (2, 2),
        }
    }
}

/// An irreducible Cartan type such as `A3` or `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let (lo, hi) = family.rank_range();
        if rank < lo || rank > hi {
            return Err(Error::RankOutOfRange {
                family: family.letter(),
                rank,
            });
        }
        Ok(CartanType { family, rank })
    }

    /// Every supported label, in a fixed order.
    pub fn all() -> Vec<CartanType> {
        let mut out = Vec::new();
        for family in [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ] {
            let (lo, hi) = family.rank_range();
            for rank in lo..=hi {
                out.push(CartanType { family, rank });
            }
        }
        out
    }

    /// Order of the Weyl group from the classical product formulas.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::UnknownType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

/// Immutable data for one irreducible root system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    /// `cartan[i][j] = (α_j, α_i^∨)`.
    pub cartan: Vec<Vec<i64>>,
    /// Gram matrix of the simple roots, normalised so short roots have squared length 2.
    pub gram: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, ordered by height then lexicographically.
    pub positive_roots: Vec<Vec<i64>>,
    /// `positive_coroots[k]` is the coroot of `positive_roots[k]`, in simple-coroot coordinates.
    pub positive_coroots: Vec<Vec<i64>>,
    pub rho: Weight,
    /// Highest short root (simple-root coordinates).
    pub alpha0: Vec<i64>,
    /// Coroot of the highest short root (simple-coroot coordinates).
    pub alpha0_coroot: Vec<i64>,
    /// Highest (long) root.
    pub alpha_tilde: Vec<i64>,
    pub h: i64,
    pub t: u64,
    pub c: i64,
    pub c2rho: i64,
    /// `λ*_i = λ_{w0_perm[i]}` where `λ* = -w0 λ`.
    pub w0_perm: Vec<usize>,
    /// Row `i` holds `ω_i` in simple-root coordinates.
    pub fundamental_in_roots: Vec<Vec<Rational>>,
}

#[allow(clippy::needless_range_loop)]
fn simple_gram(ty: CartanType) -> Vec<Vec<i64>> {
    let n = ty.rank;
    let mut g = vec![vec![0i64; n]; n];
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match ty.family {
        Family::A => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n.saturating_sub(1) {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                g[i][i] = 4;
            }
            g[n - 1][n - 1] = 2;
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, -2);
            }
        }
        Family::C => {
            for i in 0..n - 1 {
                g[i][i] = 2;
            }
            g[n - 1][n - 1] = 4;
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 2, n - 1, -2);
        }
        Family::D => {
            for i in 0..n {
                g[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 3, n - 1, -1);
        }
        Family::E => {
            for i in 0..n {
                g[i][i] = 2;
            }
            link(&mut g, 0, 2, -1);
            link(&mut g, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut g, i, i + 1, -1);
            }
        }
        Family::F => {
            g[0][0] = 4;
            g[1][1] = 4;
            g[2][2] = 2;
            g[3][3] = 2;
            link(&mut g, 0, 1, -2);
            link(&mut g, 1, 2, -2);
            link(&mut g, 2, 3, -1);
        }
        Family::G => {
            g[0][0] = 2;
            g[1][1] = 6;
            link(&mut g, 0, 1, -3);
        }
    }
    g
}

/// Exact inverse of an integer matrix over the rationals.
fn rational_inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let pv = a[col][col];
        for j in 0..n {
            a[col][j] /= pv;
            inv[col][j] /= pv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= factor * ac;
                    inv[r][j] -= factor * ic;
                }
            }
        }
    }
    Some(inv)
}

fn height(v: &[i64]) -> i64 {
    v.iter().sum()
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let n = cartan_type.rank;
        let gram = simple_gram(cartan_type);
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();

        let positive_roots = generate_positive_roots(&cartan);
        let norm = |c: &[i64]| -> i64 {
            let mut s = 0;
            for j in 0..n {
                for k in 0..n {
                    s += c[j] * c[k] * gram[j][k];
                }
            }
            s
        };
        let mut positive_coroots = Vec::with_capacity(positive_roots.len());
        for beta in &positive_roots {
            let nb = norm(beta);
            let mut cor = Vec::with_capacity(n);
            for j in 0..n {
                let num = beta[j] * gram[j][j];
                if num % nb != 0 {
                    return Err(Error::Internal(format!(
                        "non-integral coroot coefficient for root {beta:?}"
                    )));
                }
                cor.push(num / nb);
            }
            positive_coroots.push(cor);
        }

        let short_len = (0..n).map(|i| gram[i][i]).min().unwrap_or(2);
        // Roots are sorted by height, so the last of each kind is the highest.
        let (alpha0_idx, _) = positive_roots
            .iter()
            .enumerate()
            .rfind(|(_, r)| norm(r) == short_len)
            .ok_or_else(|| Error::Internal("no short root".into()))?;
        let alpha0 = positive_roots[alpha0_idx].clone();
        let alpha0_coroot = positive_coroots[alpha0_idx].clone();
        let alpha_tilde = positive_roots
            .last()
            .cloned()
            .ok_or_else(|| Error::Internal("no positive roots".into()))?;

        let rho = Weight::new(vec![1; n]);
        let h = alpha0_coroot.iter().sum::<i64>() + 1;
        let c = alpha_tilde.iter().copied().max().unwrap_or(0);
        let mut two_rho = vec![0i64; n];
        for beta in &positive_roots {
            for j in 0..n {
                two_rho[j] += beta[j];
            }
        }
        let c2rho = two_rho.iter().copied().max().unwrap_or(0);

        let inv = rational_inverse(&cartan)
            .ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;
        // x = A^{-1} λ, so ω_i in root coordinates is column i of A^{-1}.
        let fundamental_in_roots: Vec<Vec<Rational>> = (0..n)
            .map(|i| (0..n).map(|j| inv[j][i]).collect())
            .collect();
        let t = fundamental_in_roots
            .iter()
            .flatten()
            .fold(1u64, |acc, x| lcm(acc, x.denom().unsigned_abs()));

        let mut rs = RootSystem {
            cartan_type,
            cartan,
            gram,
            positive_roots,
            positive_coroots,
            rho,
            alpha0,
            alpha0_coroot,
            alpha_tilde,
            h,
            t,
            c,
            c2rho,
            w0_perm: Vec::new(),
            fundamental_in_roots,
        };
        rs.w0_perm = rs.compute_w0_perm()?;
        Ok(rs)
    }

    pub fn from_label(label: &str) -> Result<Self> {
        RootSystem::new(label.parse()?)
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn label(&self) -> String {
        self.cartan_type.to_string()
    }

    pub fn check_rank(&self, len: usize) -> Result<()> {
        if len != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: len,
            });
        }
        Ok(())
    }

    /// `(λ, β^∨)` for `β^∨ = Σ d_i α_i^∨`.
    pub fn pairing(&self, lambda: &Weight, coroot: &[i64]) -> Result<i64> {
        self.check_rank(lambda.rank())?;
        self.check_rank(coroot.len())?;
        Ok(lambda.coords().iter().zip(coroot).map(|(l, d)| l * d).sum())
    }

    /// `(λ, α0^∨)`.
    pub fn pairing_alpha0(&self, lambda: &Weight) -> Result<i64> {
        self.pairing(lambda, &self.alpha0_coroot)
    }

    /// Fundamental-weight coordinates of a root-lattice vector.
    pub fn root_to_weight(&self, root_coords: &[i64]) -> Weight {
        let n = self.rank();
        Weight::new(
            (0..n)
                .map(|k| (0..n).map(|j| self.cartan[k][j] * root_coords[j]).sum())
                .collect(),
        )
    }

    /// Simple-root coordinates of a weight, exactly.
    pub fn weight_to_root_coords(&self, lambda: &Weight) -> Result<Vec<Rational>> {
        self.check_rank(lambda.rank())?;
        let n = self.rank();
        Ok((0..n)
            .map(|j| {
                (0..n)
                    .map(|i| self.fundamental_in_roots[i][j] * lambda.coords()[i])
                    .fold(Rational::zero(), |a, b| a + b)
            })
            .collect())
    }

    /// Simple-root coordinates if the weight lies in the root lattice.
    pub fn integral_root_coords(&self, lambda: &Weight) -> Result<Option<Vec<i64>>> {
        let coords = self.weight_to_root_coords(lambda)?;
        if coords.iter().all(|x| x.is_integer()) {
            Ok(Some(coords.iter().map(|x| x.to_integer()).collect()))
        } else {
            Ok(None)
        }
    }

    /// Apply the simple reflection `s_i` to a weight.
    pub fn reflect_simple(&self, i: usize, lambda: &Weight) -> Weight {
        let li = lambda.coords()[i];
        Weight::new(
            lambda
                .coords()
                .iter()
                .enumerate()
                .map(|(k, &x)| x - li * self.cartan[k][i])
                .collect(),
        )
    }

    /// Matrix of `s_i` acting on fundamental-weight coordinates.
    pub fn simple_reflection_matrix(&self, i: usize) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| {
                        let id = i64::from(k == j);
                        if j == i {
                            id - self.cartan[k][i]
                        } else {
                            id
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Matrix of the reflection in the positive root with index `k`.
    pub fn root_reflection_matrix(&self, root_index: usize) -> Vec<Vec<i64>> {
        let n = self.rank();
        let beta = self.root_to_weight(&self.positive_roots[root_index]);
        let cor = &self.positive_coroots[root_index];
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| i64::from(r == c) - beta.coords()[r] * cor[c])
                    .collect()
            })
            .collect()
    }

    /// `λ* = -w0 λ`.
    pub fn dual(&self, lambda: &Weight) -> Weight {
        Weight::new(self.w0_perm.iter().map(|&j| lambda.coords()[j]).collect())
    }

    pub fn alpha0_index(&self) -> usize {
        self.positive_roots
            .iter()
            .position(|r| *r == self.alpha0)
            .expect("alpha0 is a positive root")
    }

    #[allow(clippy::needless_range_loop)]
    fn compute_w0_perm(&self) -> Result<Vec<usize>> {
        let n = self.rank();
        let mut v = self.rho.clone();
        let mut mat: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        while let Some(i) = v.coords().iter().position(|&x| x > 0) {
            v = self.reflect_simple(i, &v);
            mat = crate::weyl::mat_mul(&self.simple_reflection_matrix(i), &mat);
        }
        let mut perm = vec![usize::MAX; n];
        for (i, slot) in perm.iter_mut().enumerate() {
            for j in 0..n {
                match -mat[i][j] {
                    1 if *slot == usize::MAX => *slot = j,
                    0 => {}
                    _ => {
                        return Err(Error::Internal(
                            "longest element is not minus a permutation".into(),
                        ))
                    }
                }
            }
        }
        Ok(perm)
    }

    /// Squared length of a root-lattice vector, short roots normalised to 2.
    pub fn root_norm(&self, c: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for j in 0..n {
            for k in 0..n {
                s += c[j] * c[k] * self.gram[j][k];
            }
        }
        s
    }

    /// `(λ, λ)` for a weight, exactly, in the same normalisation as [`Self::root_norm`].
    pub fn weight_norm(&self, lambda: &Weight) -> Result<Rational> {
        // (λ, λ) = Σ_j x_j (α_j, λ) = Σ_j x_j (|α_j|²/2) λ_j with x = root coordinates.
        let x = self.weight_to_root_coords(lambda)?;
        Ok(x.iter()
            .enumerate()
            .map(|(j, xj)| *xj * (self.gram[j][j] / 2) * lambda.coords()[j])
            .fold(Rational::zero(), |a, b| a + b))
    }

    /// Largest simple-root coefficient of a root-lattice vector.
    pub fn max_coefficient(coords: &[i64]) -> i64 {
        coords.iter().copied().max().unwrap_or(0)
    }

    pub fn is_dominant(&self, lambda: &Weight) -> bool {
        lambda.coords().iter().all(|&x| x >= 0)
    }

    /// Absolute value of the largest pairing with any positive coroot.
    pub fn max_abs_coroot_pairing(&self, lambda: &Weight) -> Result<i64> {
        self.check_rank(lambda.rank())?;
        let mut best = 0;
        for cor in &self.positive_coroots {
            best = best.max(self.pairing(lambda, cor)?.abs());
        }
        Ok(best)
    }
}

fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut all: HashSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut ordered = simple.clone();
    let mut level = simple;
    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            for i in 0..n {
                // α_i-string through β: β - pα_i, ..., β + qα_i with p - q = (β, α_i^∨).
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if all.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if all.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        next.sort();
        ordered.extend(next.iter().cloned());
        level = next;
    }
    ordered.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| a.cmp(b)));
    ordered
}

/// Positive coroot pairings of `ρ`, used by the dimension formula.
pub(crate) fn rho_pairings(rs: &RootSystem) -> Vec<i64> {
    rs.positive_coroots.iter().map(|c| c.iter().sum()).collect()
}

impl RootSystem {
    /// Whether `x` has all-integer coordinates (for root-coordinate checks).
    pub fn all_integral(x: &[Rational]) -> bool {
        x.iter().all(|v| v.is_integer())
    }

    /// Whether all rational coordinates are non-negative.
    pub fn all_nonnegative(x: &[Rational]) -> bool {
        x.iter().all(|v| !v.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn known_root_count(ty: CartanType) -> usize {
        let n = ty.rank;
        match ty.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    fn known_h(ty: CartanType) -> i64 {
        let n = ty.rank as i64;
        match ty.family {
            Family::A => n + 1,
            Family::B | Family::C => 2 * n,
            Family::D => 2 * n - 2,
            Family::E => match n {
                6 => 12,
                7 => 18,
                _ => 30,
            },
            Family::F => 12,
            Family::G => 6,
        }
    }

    fn known_t(ty: CartanType) -> u64 {
        let n = ty.rank as u64;
        match ty.family {
            Family::A => n + 1,
            Family::B | Family::C => 2,
            Family::D => {
                if n % 2 == 1 {
                    4
                } else {
                    2
                }
            }
            Family::E => match n {
                6 => 3,
                7 => 2,
                _ => 1,
            },
            Family::F | Family::G => 1,
        }
    }

    fn known_c(ty: CartanType) -> i64 {
        match ty.family {
            Family::A => 1,
            Family::B | Family::C | Family::D => 2,
            Family::E => match ty.rank {
                6 => 3,
                7 => 4,
                _ => 6,
            },
            Family::F => 4,
            Family::G => 3,
        }
    }

    #[test]
    fn spot_values() {
        let a1 = RootSystem::from_label("A1").unwrap();
        assert_eq!((a1.h, a1.t, a1.c, a1.c2rho), (2, 2, 1, 1));
        assert_eq!(a1.positive_roots.len(), 1);
        let a2 = RootSystem::from_label("A2").unwrap();
        assert_eq!((a2.h, a2.t, a2.c, a2.c2rho), (3, 3, 1, 2));
        let g2 = RootSystem::from_label("G2").unwrap();
        assert_eq!((g2.h, g2.t), (6, 1));
        assert_eq!(g2.cartan, vec![vec![2, -3], vec![-1, 2]]);
        assert_eq!(g2.c2rho, 10);
        assert_eq!(RootSystem::from_label("E8").unwrap().c2rho, 270);
        assert_eq!(RootSystem::from_label("F4").unwrap().c2rho, 42);
    }

    #[test]
    fn constants_match_tables_for_every_type() {
        for ty in CartanType::all() {
            let rs = RootSystem::new(ty).unwrap();
            assert_eq!(rs.positive_roots.len(), known_root_count(ty), "{ty}");
            assert_eq!(rs.h, known_h(ty), "{ty}");
            assert_eq!(rs.t, known_t(ty), "{ty}");
            assert_eq!(rs.c, known_c(ty), "{ty}");
            if ty.family == Family::A {
                let m = ty.rank as i64 + 1;
                assert_eq!(rs.c2rho, (m / 2) * ((m + 1) / 2), "{ty}");
            }
        }
    }

    #[test]
    fn cartan_shape_and_pairings() {
        for ty in CartanType::all() {
            let rs = RootSystem::new(ty).unwrap();
            let n = rs.rank();
            for i in 0..n {
                assert_eq!(rs.cartan[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!([0, -1, -2, -3].contains(&rs.cartan[i][j]));
                    }
                    // (ω_j, α_i^∨) = δ_ij
                    let mut omega = vec![0; n];
                    omega[j] = 1;
                    let mut cor = vec![0; n];
                    cor[i] = 1;
                    assert_eq!(
                        rs.pairing(&Weight::new(omega), &cor).unwrap(),
                        i64::from(i == j)
                    );
                }
            }
            // h = (ρ, α0^∨) + 1 recomputed from stored data.
            assert_eq!(rs.pairing_alpha0(&rs.rho).unwrap() + 1, rs.h);
        }
    }

    #[test]
    fn opposition_involution() {
        for ty in CartanType::all() {
            let rs = RootSystem::new(ty).unwrap();
            let lambda = Weight::new((1..=rs.rank() as i64).collect());
            let star = rs.dual(&lambda);
            assert!(rs.is_dominant(&star));
            assert_eq!(rs.dual(&star), lambda, "{ty}");
        }
        // A_n: reversal; D_odd swaps the two spin nodes; others trivial.
        let a3 = RootSystem::from_label("A3").unwrap();
        assert_eq!(a3.w0_perm, vec![2, 1, 0]);
        let d5 = RootSystem::from_label("D5").unwrap();
        assert_eq!(d5.w0_perm, vec![0, 1, 2, 4, 3]);
        let e6 = RootSystem::from_label("E6").unwrap();
        assert_eq!(e6.w0_perm, vec![5, 1, 4, 3, 2, 0]);
        let b3 = RootSystem::from_label("B3").unwrap();
        assert_eq!(b3.w0_perm, vec![0, 1, 2]);
    }

    #[test]
    fn pairing_examples() {
        let a1 = RootSystem::from_label("A1").unwrap();
        assert_eq!(a1.pairing_alpha0(&Weight::new(vec![3])).unwrap(), 3);
        let a2 = RootSystem::from_label("A2").unwrap();
        assert_eq!(a2.pairing_alpha0(&a2.rho).unwrap(), a2.h - 1);
        assert_eq!(a2.pairing(&Weight::zero(2), &[1, 1]).unwrap(), 0);
        assert!(matches!(
            a2.pairing(&Weight::new(vec![1]), &[1, 1]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn label_errors() {
        assert!(matches!(
            RootSystem::from_label("X3"),
            Err(Error::UnknownType(_))
        ));
        assert!(matches!(
            RootSystem::from_label("D3"),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(matches!(
            RootSystem::from_label("E9"),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(matches!(
            RootSystem::from_label("A"),
            Err(Error::UnknownType(_))
        ));
    }

    #[test]
    fn alpha0_maximises_dominant_pairings() {
        for ty in CartanType::all().into_iter().filter(|t| t.rank <= 4) {
            let rs = RootSystem::new(ty).unwrap();
            let lambda = Weight::new((0..rs.rank() as i64).map(|i| (i * 7 + 3) % 5).collect());
            let via_all = rs.max_abs_coroot_pairing(&lambda).unwrap();
            assert_eq!(via_all, rs.pairing_alpha0(&lambda).unwrap(), "{ty}");
        }
    }

    #[test]
    fn t_is_exponent_of_weight_lattice_quotient() {
        // Every fundamental weight times t lands in the root lattice, and t is minimal.
        for ty in CartanType::all() {
            let rs = RootSystem::new(ty).unwrap();
            for d in 1..=rs.t {
                let all_integral = rs
                    .fundamental_in_roots
                    .iter()
                    .flatten()
                    .all(|x| (*x * d as i64).is_integer());
                assert_eq!(all_integral, d == rs.t, "{ty} d={d}");
            }
        }
    }
}
