//! Independent oracles shared by the integration tests. Everything here is
//! rebuilt from the Cartan matrix alone and never calls the algorithms it
//! checks.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use num_rational::Rational64;
use rand::rngs::StdRng;
use rand::Rng;

use weylcert::{RootSystem, Weight};

pub fn rs(label: &str) -> RootSystem {
    RootSystem::from_label(label).unwrap()
}

/// Classical Weyl group orders.
pub fn known_weyl_order(label: &str) -> u64 {
    match label {
        "A1" => 2,
        "A2" => 6,
        "A3" => 24,
        "A4" => 120,
        "B2" | "C2" => 8,
        "B3" | "C3" => 48,
        "B4" | "C4" => 384,
        "D4" => 192,
        "F4" => 1152,
        "G2" => 12,
        "E6" => 51_840,
        _ => panic!("no table entry for {label}"),
    }
}

/// Coxeter numbers.
pub fn known_coxeter(label: &str) -> i64 {
    let (family, n) = label.split_at(1);
    let n: i64 = n.parse().unwrap();
    match family {
        "A" => n + 1,
        "B" | "C" => 2 * n,
        "D" => 2 * n - 2,
        "E" => [12, 18, 30][(n - 6) as usize],
        "F" => 12,
        "G" => 6,
        _ => unreachable!(),
    }
}

pub const SMALL_TYPES: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2",
];

pub const RANK_AT_MOST_3: &[&str] = &["A1", "A2", "A3", "B2", "B3", "C3", "G2"];

/// `α_i` in fundamental-weight coordinates is column `i` of the Cartan matrix.
pub fn simple_root_weight(rs: &RootSystem, i: usize) -> Vec<i64> {
    (0..rs.rank()).map(|j| rs.cartan[j][i]).collect()
}

/// Solve `A x = λ` over the rationals.
pub fn root_coords(rs: &RootSystem, lambda: &[i64]) -> Vec<Rational64> {
    let n = rs.rank();
    let mut a: Vec<Vec<Rational64>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rational64> =
                (0..n).map(|j| Rational64::from(rs.cartan[i][j])).collect();
            row.push(Rational64::from(lambda[i]));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0.into()).unwrap();
        a.swap(col, piv);
        let d = a[col][col];
        for x in a[col].iter_mut() {
            *x /= d;
        }
        for r in 0..n {
            if r != col && a[r][col] != 0.into() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n]).collect()
}

/// Positive roots in simple-root coordinates, rebuilt by closing the simple
/// roots under simple reflections.
pub fn positive_roots(rs: &RootSystem) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        for i in 0..n {
            // s_i β = β - (β, α_i^∨) α_i, and (α_j, α_i^∨) = A[i][j].
            let pairing: i64 = (0..n).map(|j| rs.cartan[i][j] * beta[j]).sum();
            let mut img = beta.clone();
            img[i] -= pairing;
            if img.iter().all(|&x| x >= 0) && img.iter().any(|&x| x > 0) && seen.insert(img.clone())
            {
                queue.push_back(img);
            }
        }
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort();
    out
}

type Matrix = Vec<Vec<i64>>;

fn simple_reflection(rs: &RootSystem, i: usize) -> Matrix {
    // s_i(λ) = λ - λ_i α_i on fundamental coordinates.
    let n = rs.rank();
    let alpha = simple_root_weight(rs, i);
    (0..n)
        .map(|r| {
            (0..n)
                .map(|c| i64::from(r == c) - if c == i { alpha[r] } else { 0 })
                .collect()
        })
        .collect()
}

fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn apply(m: &Matrix, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// The Weyl group as a set of matrices, by closure under simple reflections.
pub fn weyl_matrices(rs: &RootSystem) -> Vec<Matrix> {
    let n = rs.rank();
    let gens: Vec<Matrix> = (0..n).map(|i| simple_reflection(rs, i)).collect();
    let id: Matrix = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut seen: HashSet<Matrix> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let x = mul(g, &m);
            if seen.insert(x.clone()) {
                queue.push_back(x);
            }
        }
    }
    seen.into_iter().collect()
}

/// `w·λ = w(λ + ρ) - ρ` with `ρ = (1, ..., 1)`.
pub fn dot(m: &Matrix, lambda: &[i64]) -> Vec<i64> {
    let shifted: Vec<i64> = lambda.iter().map(|x| x + 1).collect();
    apply(m, &shifted).into_iter().map(|x| x - 1).collect()
}

/// Histogram of sums of all multisets of exactly `j` positive roots, for
/// every `j <= jmax`.
pub fn brute_kostant(rs: &RootSystem, jmax: u32) -> HashMap<(Vec<i64>, u32), u128> {
    let roots = positive_roots(rs);
    let n = rs.rank();
    let mut hist = HashMap::new();
    // Non-decreasing index sequences of length j.
    fn rec(
        roots: &[Vec<i64>],
        start: usize,
        left: u32,
        j: u32,
        acc: &mut Vec<i64>,
        hist: &mut HashMap<(Vec<i64>, u32), u128>,
    ) {
        if left == 0 {
            *hist.entry((acc.clone(), j)).or_insert(0) += 1;
            return;
        }
        for k in start..roots.len() {
            for (a, b) in acc.iter_mut().zip(&roots[k]) {
                *a += b;
            }
            rec(roots, k, left - 1, j, acc, hist);
            for (a, b) in acc.iter_mut().zip(&roots[k]) {
                *a -= b;
            }
        }
    }
    for j in 0..=jmax {
        let mut acc = vec![0; n];
        rec(&roots, 0, j, j, &mut acc, &mut hist);
    }
    hist
}

/// Union-find over the integer box `[-bound, bound]^n`, joining points
/// related by an affine reflection `λ ↦ s_α·λ + kpα`. Components inside the
/// box are the `W_p` dot-orbits restricted to it, provided the box leaves a
/// margin of a few alcoves around the weights queried.
pub struct OrbitOracle {
    n: usize,
    bound: i64,
    parent: Vec<usize>,
}

impl OrbitOracle {
    pub fn new(rs: &RootSystem, p: i64, bound: i64) -> Self {
        let n = rs.rank();
        let side = (2 * bound + 1) as usize;
        let size = side.pow(n as u32);
        let mut oracle = OrbitOracle {
            n,
            bound,
            parent: (0..size).collect(),
        };
        // Positive roots as weights, with their coroots' pairings.
        let roots: Vec<(Vec<i64>, Vec<i64>)> = positive_roots(rs)
            .into_iter()
            .map(|beta| {
                let weight: Vec<i64> = (0..n)
                    .map(|j| (0..n).map(|k| rs.cartan[j][k] * beta[k]).sum())
                    .collect();
                (beta, weight)
            })
            .collect();
        let norms: Vec<Rational64> = roots
            .iter()
            .map(|(beta, w)| pair_rational(rs, w, beta))
            .collect();
        for idx in 0..size {
            let lambda = oracle.point(idx);
            let shifted: Vec<i64> = lambda.iter().map(|x| x + 1).collect();
            for ((beta, w), norm) in roots.iter().zip(&norms) {
                // (λ + ρ, β^∨) = 2 (λ + ρ, β) / (β, β)
                let pr = pair_rational(rs, &shifted, beta) * 2 / norm;
                let cor = pr.to_integer();
                for k in -2 * bound / p - 2..=2 * bound / p + 2 {
                    // s_{β,kp}: v ↦ v - ((v, β^∨) - kp) β on v = λ + ρ.
                    let coef = cor - k * p;
                    let img: Vec<i64> = lambda.iter().zip(w).map(|(x, a)| x - coef * a).collect();
                    if let Some(j) = oracle.index(&img) {
                        oracle.union(idx, j);
                    }
                }
            }
        }
        oracle
    }

    fn point(&self, mut idx: usize) -> Vec<i64> {
        let side = (2 * self.bound + 1) as usize;
        let mut v = vec![0; self.n];
        for x in v.iter_mut() {
            *x = (idx % side) as i64 - self.bound;
            idx /= side;
        }
        v
    }

    fn index(&self, v: &[i64]) -> Option<usize> {
        let side = 2 * self.bound + 1;
        let mut idx = 0i64;
        for &x in v.iter().rev() {
            if x.abs() > self.bound {
                return None;
            }
            idx = idx * side + (x + self.bound);
        }
        Some(idx as usize)
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub fn linked(&mut self, a: &[i64], b: &[i64]) -> bool {
        let (ia, ib) = (self.index(a).unwrap(), self.index(b).unwrap());
        self.find(ia) == self.find(ib)
    }
}

/// `(λ, β)` for `λ` in fundamental coordinates and `β` in simple-root
/// coordinates, using the symmetrised form `(ω_i, α_j) = δ_ij (α_j, α_j)/2`.
pub fn pair_rational(rs: &RootSystem, lambda: &[i64], beta: &[i64]) -> Rational64 {
    (0..rs.rank())
        .map(|j| Rational64::new(lambda[j] * beta[j] * rs.gram[j][j], 2))
        .sum()
}

/// Every dominant `ν` with `(ν, α0^∨) <= b`, found by scanning a box.
pub fn small_dominant_scan(rs: &RootSystem, b: i64) -> Vec<Vec<i64>> {
    let n = rs.rank();
    let mut out = Vec::new();
    let mut v = vec![0i64; n];
    loop {
        let layer: i64 = v.iter().zip(&rs.alpha0_coroot).map(|(a, c)| a * c).sum();
        if layer <= b {
            out.push(v.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            v[i] += 1;
            if v[i] <= b {
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

pub fn random_dominant(rng: &mut StdRng, rank: usize, max: i64) -> Weight {
    Weight::new((0..rank).map(|_| rng.gen_range(0..=max)).collect())
}

/// A uniformly random `p^r`-restricted weight.
pub fn random_restricted(rng: &mut StdRng, rank: usize, p: u64, r: u32) -> Weight {
    let q = (p as i64).pow(r);
    Weight::new((0..rank).map(|_| rng.gen_range(0..q)).collect())
}
