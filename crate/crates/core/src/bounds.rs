//! Numeric constants and thresholds, all in exact integer arithmetic.
//!
//! `h` is the Coxeter number, `t` the exponent of `X / ZΦ`, `c` the largest
//! coefficient of the highest root and `c(2ρ)` the largest coefficient of `2ρ`.

use serde::{Deserialize, Serialize};

use crate::arith::{ceil_log2_ratio, floor_div, floor_log};
use crate::cite;
use crate::error::{Error, Result};
use crate::rootsys::{Family, RootSystem};
use crate::weights::{lattice_order, Weight};

/// Parameters shared by the bound formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundContext {
    pub m: u32,
    pub p: Option<u64>,
    pub r: Option<u32>,
    pub epsilon: u32,
    /// Use the refined coefficients available outside type G2 and for odd `p`.
    pub sharp: bool,
    /// Choose `m'` from `3m' + 2h - 2 >= 6m + 6h - 8` instead of the
    /// `3m' + 2h + 2` form.
    pub alt_mprime_inequality: bool,
    /// Smallness `b` of an input module, for the bounds that depend on it.
    pub input_smallness: Option<i64>,
}

impl BoundContext {
    pub fn new(m: u32) -> Self {
        BoundContext {
            m,
            p: None,
            r: None,
            epsilon: 0,
            sharp: false,
            alt_mprime_inequality: false,
            input_smallness: None,
        }
    }

    pub fn with_p(mut self, p: u64) -> Self {
        self.p = Some(p);
        self
    }

    pub fn with_r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_epsilon(mut self, epsilon: u32) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn with_input_smallness(mut self, b: i64) -> Self {
        self.input_smallness = Some(b);
        self
    }

    pub fn sharp(mut self, on: bool) -> Self {
        self.sharp = on;
        self
    }

    pub fn alt_mprime(mut self, on: bool) -> Self {
        self.alt_mprime_inequality = on;
        self
    }

    fn require_p(&self) -> Result<u64> {
        self.p.ok_or(Error::MissingField("p"))
    }

    fn require_r(&self) -> Result<u32> {
        self.r.ok_or(Error::MissingField("r"))
    }

    fn require_b(&self) -> Result<i64> {
        self.input_smallness.ok_or(Error::MissingField("b"))
    }
}

/// One entry of the smallness table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallnessBound {
    pub name: String,
    pub formula: String,
    /// `None` when the value does not fit in 128 bits.
    pub value: Option<i128>,
    pub cite: String,
}

fn pow128(p: u64, r: u32) -> Option<i128> {
    (p as i128).checked_pow(r)
}

/// Smallness bounds for weights of the cohomology and Ext groups of
/// unipotent radicals, Frobenius kernels and tensor products. Entries whose
/// inputs are missing from `ctx` are omitted.
pub fn smallness_bounds(rs: &RootSystem, ctx: &BoundContext) -> Vec<SmallnessBound> {
    let h = rs.h as i128;
    let coef: i128 = if ctx.sharp && rs.cartan_type.family != Family::G {
        2
    } else {
        3
    };
    let m: i128 = match (ctx.sharp, ctx.p) {
        (true, Some(p)) if p > 2 => (ctx.m / 2) as i128,
        _ => ctx.m as i128,
    };
    let km = coef * m;
    let tag = |base: &str| {
        if ctx.sharp {
            format!("{base}+{}", cite::SHARP_REFINEMENT)
        } else {
            base.to_string()
        }
    };
    let mut out = Vec::new();
    let mut push = |name: &str, formula: &str, value: Option<i128>, cite: String| {
        out.push(SmallnessBound {
            name: name.into(),
            formula: formula.into(),
            value,
            cite,
        })
    };
    push("H^m(u)", "3m", Some(km), tag(cite::UNIPOTENT_SMALLNESS));
    let pr = match (ctx.p, ctx.r) {
        (Some(p), Some(r)) => pow128(p, r),
        _ => None,
    };
    if let Some(p) = ctx.p {
        push(
            "H^m(U_1)",
            "3mp",
            km.checked_mul(p as i128),
            tag(cite::FROBENIUS_KERNEL_SMALLNESS),
        );
    }
    if ctx.p.is_some() && ctx.r.is_some() {
        push(
            "H^m(U_r)",
            "3mp^r",
            pr.and_then(|q| km.checked_mul(q)),
            tag(cite::FROBENIUS_KERNEL_SMALLNESS),
        );
        if let Some(b) = ctx.input_smallness {
            let b = b as i128;
            push(
                "H^m(B_r,lambda)",
                "3mp^r+b",
                pr.and_then(|q| km.checked_mul(q))
                    .and_then(|v| v.checked_add(b)),
                tag(cite::BOREL_KERNEL_SMALLNESS),
            );
            // For p^r beyond 128 bits, floor(b / p^r) is 0.
            let quotient = pr.map_or(0, |q| b.div_euclid(q));
            push(
                "H^m(B_r,lambda)^[-r]",
                "3m+[b/p^r]",
                Some(km + quotient),
                tag(cite::BOREL_KERNEL_SMALLNESS),
            );
            push(
                "H^m(G_r,M)^[-r]",
                "3m+[b/p^r]",
                Some(km + quotient),
                tag(cite::G_R_COHOMOLOGY_SMALLNESS),
            );
        }
    }
    push(
        "H^m(G_r,M)^[-r] restricted",
        "3m+h-2",
        Some(km + h - 2),
        tag(cite::G_R_COHOMOLOGY_SMALLNESS),
    );
    push(
        "Ext^m_{G_r}(L,L)^[-r]",
        "3m+2h-3",
        Some(km + 2 * h - 3),
        tag(cite::G_R_EXT_SMALLNESS),
    );
    if ctx.m == 1 {
        push(
            "Ext^1_{G_r}(L,L)^[-r]",
            "h-1",
            Some(h - 1),
            cite::G_R_EXT_SMALLNESS.to_string(),
        );
    }
    if let (Some(p), Some(b)) = (ctx.p, ctx.input_smallness) {
        let b = b as i128;
        let (formula, value) = if (p as i128) >= 2 * h - 2 {
            ("b+1", b + 1)
        } else {
            (
                "b+[log_p(h-1)]+2",
                b + floor_log(p, (h - 1) as u128) as i128 + 2,
            )
        };
        push(
            "restriction level of L(lambda)(x)L(mu)",
            formula,
            Some(value),
            cite::TENSOR_RESTRICTION_LEVEL.to_string(),
        );
    }
    out
}

/// Look up a single smallness entry by name.
pub fn smallness_bound(rs: &RootSystem, ctx: &BoundContext, name: &str) -> Result<i128> {
    if name.contains("U_1") || name.contains("U_r") {
        ctx.require_p()?;
    }
    if name.contains("U_r") || name.contains("B_r") || name == "H^m(G_r,M)^[-r]" {
        ctx.require_r()?;
    }
    if name.contains("B_r") || name == "H^m(G_r,M)^[-r]" || name.starts_with("restriction") {
        ctx.require_b()?;
    }
    if name.starts_with("restriction") {
        ctx.require_p()?;
    }
    smallness_bounds(rs, ctx)
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::Precondition(format!("no smallness bound named `{name}` applies")))?
        .value
        .ok_or(Error::Overflow("smallness bound"))
}

/// `b(Φ, m, p^r) = floor((3m + 3h - 4) / (1 - 1/p^r))`, or the `p`-uniform
/// `6m + 6h - 8` when `pr` is `None`.
pub fn filtration_cutoff_b(rs: &RootSystem, m: u32, pr: Option<(u64, u32)>) -> i64 {
    let k = 3 * m as i64 + 3 * rs.h - 4;
    match pr {
        None => 6 * m as i64 + 6 * rs.h - 8,
        Some((p, r)) => match pow128(p, r) {
            // k q / (q - 1) = k + k / (q - 1)
            Some(q) => k + (k as i128 / (q - 1)) as i64,
            None => k,
        },
    }
}

/// `φ(m, p) = floor(log_p(3m + 2h - 2)) + 1`.
pub fn phi(rs: &RootSystem, m: u32, p: u64) -> i64 {
    floor_log(p, (3 * m as i64 + 2 * rs.h - 2) as u128) as i64 + 1
}

/// `δ(Φ, m, p)`: `δ(0) = φ(0)` and `δ(m) = 2φ(m) + max_{i<m} δ(i)`.
pub fn delta_p(rs: &RootSystem, m: u32, p: u64) -> i64 {
    let mut best = phi(rs, 0, p);
    let mut current = best;
    for i in 1..=m {
        current = 2 * phi(rs, i, p) + best;
        best = best.max(current);
    }
    current
}

/// The `p`-uniform `δ(Φ, m)`, which is the value at `p = 2`.
pub fn delta(rs: &RootSystem, m: u32) -> i64 {
    delta_p(rs, m, 2)
}

/// The `m' >= m` used to pick the digit bound `d`.
pub fn m_prime(rs: &RootSystem, m: u32, alt: bool) -> u32 {
    let target = 6 * m as i64 + 6 * rs.h - 8;
    let offset = if alt { 2 * rs.h - 2 } else { 2 * rs.h + 2 };
    let need = -floor_div(-(target - offset), 3);
    (m as i64).max(need) as u32
}

/// `d(Φ, m) = δ(Φ, m')`, evaluated at `p` when given, otherwise `p`-uniform.
pub fn digit_bound_d(rs: &RootSystem, m: u32, p: Option<u64>, alt: bool) -> i64 {
    delta_p(rs, m_prime(rs, m, alt), p.unwrap_or(2))
}

/// `d' = max(ε, max_{n <= m} d(Φ, n))`.
pub fn d_prime(rs: &RootSystem, m: u32, epsilon: u32, p: Option<u64>, alt: bool) -> i64 {
    (0..=m)
        .map(|n| digit_bound_d(rs, n, p, alt))
        .max()
        .unwrap_or(0)
        .max(epsilon as i64)
}

/// `e(r) = floor((r - 1) / (p - 1))`, unclamped; it is negative for `r <= 0`.
pub fn e_of(r: i64, p: u64) -> i64 {
    floor_div(r - 1, p as i64 - 1)
}

/// `f(r) = floor(log_p(|r| + 1)) + 2`.
pub fn f_of(r: i64, p: u64) -> i64 {
    floor_log(p, r.unsigned_abs() as u128 + 1) as i64 + 2
}

/// The `p`-uniform constants `e0 = ctm`, `f0 = ceil(log2(t c(2ρ) / 2)) + 2`
/// and `g = floor(log2(h - 1)) + 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoarseConstants {
    pub e0: i64,
    pub f0: i64,
    pub g: i64,
}

impl CoarseConstants {
    pub fn run_length(&self) -> i64 {
        self.e0 + self.f0 + self.g
    }
}

pub fn coarse_constants(rs: &RootSystem, m: u32) -> CoarseConstants {
    let t = rs.t as i64;
    CoarseConstants {
        e0: rs.c * t * m as i64,
        f0: ceil_log2_ratio((t * rs.c2rho) as u128, 2) + 2,
        g: floor_log(2, (rs.h - 1) as u128) as i64 + 2,
    }
}

/// Per-weight part of the restriction-isomorphism requirements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRequirement {
    pub weight: Weight,
    /// `c(λ̄)` with `λ̄ = tλ`.
    pub c_bar: i64,
    pub f_required: i64,
    /// `t_p(λ)`, the `p`-part of the order of `λ` in `X / ZΦ`.
    pub t_p: u64,
    /// `e(c t_p(λ)(m - 1)) + 1`, only for odd `p`.
    pub e_required: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CpskRequirement {
    pub p: u64,
    pub m: u32,
    /// `e(ctm)`, unclamped.
    pub e_ctm: i64,
    pub e_min: i64,
    pub f_min: i64,
    /// `p^(e_min + f_min)` when it fits.
    pub q_min: Option<i128>,
    pub per_weight: Vec<WeightRequirement>,
    pub coarse: CoarseConstants,
}

/// Minimal `(e, f)` for the restriction isomorphism
/// `H^n(G, V^[e]) -> H^n(G(p^(e+f)), V)` on modules whose weights (or
/// composition-factor highest weights) are `weights`.
///
/// `e(r)` is used without clamping and the final `e_min` is clamped to
/// `>= 0`; clamping each term separately would overstate the odd-`p`
/// requirement at `m = 0`.
pub fn cpsk_constants(
    rs: &RootSystem,
    m: u32,
    p: u64,
    weights: &[Weight],
) -> Result<CpskRequirement> {
    let t = rs.t as i64;
    let c = rs.c;
    let m_i = m as i64;
    let e_ctm = e_of(c * t * m_i, p);
    let mut e_min = e_ctm;
    let mut f_min = i64::MIN;
    let mut per_weight = Vec::with_capacity(weights.len());
    for lambda in weights {
        rs.check_rank(lambda.rank())?;
        let order = lattice_order(rs, lambda)?;
        let t_p = order.p_part(p);
        let f_required = f_of(order.c_bar, p);
        let e_required = (p != 2).then(|| e_of(c * t_p as i64 * (m_i - 1), p) + 1);
        if let Some(e) = e_required {
            e_min = e_min.max(e);
        }
        f_min = f_min.max(f_required);
        per_weight.push(WeightRequirement {
            weight: lambda.clone(),
            c_bar: order.c_bar,
            f_required,
            t_p,
            e_required,
        });
    }
    let e_min = e_min.max(0);
    let f_min = f_min.max(0);
    let q_min = u32::try_from(e_min + f_min).ok().and_then(|k| pow128(p, k));
    Ok(CpskRequirement {
        p,
        m,
        e_ctm,
        e_min,
        f_min,
        q_min,
        per_weight,
        coarse: coarse_constants(rs, m),
    })
}

/// `r0(Φ, m, ε) = (d' + 1)(e0 + f0 + g + 1) + ε - 1`.
pub fn r0_threshold(rs: &RootSystem, m: u32, epsilon: u32, p: Option<u64>, alt: bool) -> i64 {
    let dp = d_prime(rs, m, epsilon, p, alt);
    let k = coarse_constants(rs, m);
    (dp + 1) * (k.run_length() + 1) + epsilon as i64 - 1
}

/// Prime thresholds for the large-prime statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LargePrimeThresholds {
    /// `p >= h`.
    pub coxeter: i64,
    /// `p >= 6m + 7h - 9`.
    pub decomposition: i64,
    /// `p > 12m + 13h - 16`.
    pub collapse: i64,
    /// `p >= (4m + 1)(h - 1)`.
    pub nonregular_vanishing: i64,
    /// `(ν, α0^∨) <= 2m(h - 1)`.
    pub exception_layer: i64,
}

pub fn large_prime_thresholds(rs: &RootSystem, m: u32) -> LargePrimeThresholds {
    let h = rs.h;
    let m = m as i64;
    LargePrimeThresholds {
        coxeter: h,
        decomposition: 6 * m + 7 * h - 9,
        collapse: 12 * m + 13 * h - 16,
        nonregular_vanishing: (4 * m + 1) * (h - 1),
        exception_layer: 2 * m * (h - 1),
    }
}

/// A labelled constant with the result it comes from, for tabular output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: i64,
    pub cite: String,
}

/// Every digit and threshold constant for `ctx`, in display order.
pub fn bounds_table(rs: &RootSystem, ctx: &BoundContext) -> Vec<NamedValue> {
    let m = ctx.m;
    let alt = ctx.alt_mprime_inequality;
    let nv = |name: &str, value: i64, cite: &str| NamedValue {
        name: name.into(),
        value,
        cite: cite.into(),
    };
    let k = coarse_constants(rs, m);
    let lp = large_prime_thresholds(rs, m);
    let mut out = vec![
        nv("h", rs.h, cite::ROOT_DATUM),
        nv("t", rs.t as i64, cite::ROOT_DATUM),
        nv("c", rs.c, cite::ROOT_DATUM),
        nv("c(2rho)", rs.c2rho, cite::ROOT_DATUM),
    ];
    if let Some(p) = ctx.p {
        out.push(nv("phi(p)", phi(rs, m, p), cite::DIGIT_BOUND_ALGEBRAIC));
        out.push(nv(
            "delta(p)",
            delta_p(rs, m, p),
            cite::DIGIT_BOUND_ALGEBRAIC,
        ));
    }
    out.extend([
        nv("delta", delta(rs, m), cite::DIGIT_BOUND_ALGEBRAIC),
        nv("m'", m_prime(rs, m, alt) as i64, cite::DIGIT_BOUND_FINITE),
        nv(
            "d",
            digit_bound_d(rs, m, None, alt),
            cite::DIGIT_BOUND_FINITE,
        ),
        nv(
            "d'",
            d_prime(rs, m, ctx.epsilon, None, alt),
            cite::SHIFTED_GENERIC,
        ),
        nv("e0", k.e0, cite::COARSE_CPSK),
        nv("f0", k.f0, cite::COARSE_CPSK),
        nv("g", k.g, cite::SHIFTED_GENERIC),
        nv(
            "r0",
            r0_threshold(rs, m, ctx.epsilon, None, alt),
            cite::SHIFTED_GENERIC,
        ),
    ]);
    if let Some(p) = ctx.p {
        out.push(nv(
            "r0(p)",
            r0_threshold(rs, m, ctx.epsilon, Some(p), alt),
            cite::SHIFTED_GENERIC,
        ));
    }
    out.push(nv(
        "b_uniform",
        filtration_cutoff_b(rs, m, None),
        cite::FILTRATION_CUTOFF,
    ));
    if let (Some(p), Some(r)) = (ctx.p, ctx.r) {
        out.push(nv(
            "b(p^r)",
            filtration_cutoff_b(rs, m, Some((p, r))),
            cite::FILTRATION_CUTOFF,
        ));
    }
    out.extend([
        nv("p >= h", lp.coxeter, cite::LARGE_PRIME_DECOMPOSITION),
        nv(
            "p >= 6m+7h-9",
            lp.decomposition,
            cite::LARGE_PRIME_DECOMPOSITION,
        ),
        nv("p > 12m+13h-16", lp.collapse, cite::LARGE_PRIME_COLLAPSE),
        nv(
            "p >= (4m+1)(h-1)",
            lp.nonregular_vanishing,
            cite::NONREGULAR_VANISHING,
        ),
        nv(
            "layer <= 2m(h-1)",
            lp.exception_layer,
            cite::FINITE_EXCEPTION_FORM,
        ),
    ]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    fn lookup(rs: &RootSystem, ctx: &BoundContext, name: &str) -> i128 {
        smallness_bound(rs, ctx, name).unwrap()
    }

    #[test]
    fn smallness_examples() {
        let a1 = rs("A1");
        let ctx = BoundContext::new(1);
        assert_eq!(lookup(&a1, &ctx, "Ext^m_{G_r}(L,L)^[-r]"), 4);
        assert_eq!(lookup(&a1, &ctx, "Ext^1_{G_r}(L,L)^[-r]"), 1);
        let ctx0 = BoundContext::new(0);
        assert_eq!(lookup(&a1, &ctx0, "H^m(G_r,M)^[-r] restricted"), 0);
        assert_eq!(lookup(&rs("E6"), &ctx0, "H^m(G_r,M)^[-r] restricted"), 10);
        assert_eq!(lookup(&a1, &ctx0, "H^m(u)"), 0);
        let g2 = rs("G2");
        let ctx = BoundContext::new(2).with_p(5).with_r(1);
        assert_eq!(lookup(&g2, &ctx, "H^m(U_r)"), 30);
        assert_eq!(lookup(&g2, &ctx, "H^m(U_1)"), 30);
    }

    #[test]
    fn smallness_missing_fields() {
        let a1 = rs("A1");
        let ctx = BoundContext::new(1);
        assert_eq!(
            smallness_bound(&a1, &ctx, "H^m(U_1)"),
            Err(Error::MissingField("p"))
        );
        assert_eq!(
            smallness_bound(&a1, &ctx.clone().with_p(3), "H^m(U_r)"),
            Err(Error::MissingField("r"))
        );
        assert_eq!(
            smallness_bound(&a1, &ctx.with_p(3).with_r(2), "H^m(B_r,lambda)"),
            Err(Error::MissingField("b"))
        );
    }

    #[test]
    fn smallness_with_input_module() {
        let a2 = rs("A2");
        let ctx = BoundContext::new(2)
            .with_p(3)
            .with_r(2)
            .with_input_smallness(20);
        assert_eq!(lookup(&a2, &ctx, "H^m(B_r,lambda)"), 6 * 9 + 20);
        assert_eq!(lookup(&a2, &ctx, "H^m(B_r,lambda)^[-r]"), 6 + 2);
        assert_eq!(lookup(&a2, &ctx, "H^m(G_r,M)^[-r]"), 8);
        // h = 3: p = 3 < 2h - 2 = 4, log_3(2) = 0.
        assert_eq!(
            lookup(&a2, &ctx, "restriction level of L(lambda)(x)L(mu)"),
            22
        );
        let ctx = ctx.with_p(5);
        assert_eq!(
            lookup(&a2, &ctx, "restriction level of L(lambda)(x)L(mu)"),
            21
        );
    }

    #[test]
    fn sharp_mode() {
        let a2 = rs("A2");
        let ctx = BoundContext::new(3).sharp(true);
        assert_eq!(lookup(&a2, &ctx, "H^m(u)"), 6);
        let ctx = ctx.with_p(5);
        assert_eq!(lookup(&a2, &ctx, "H^m(u)"), 2);
        let g2 = rs("G2");
        let ctx = BoundContext::new(3).sharp(true).with_p(2);
        assert_eq!(lookup(&g2, &ctx, "H^m(u)"), 9);
        assert!(smallness_bounds(&g2, &ctx)
            .iter()
            .all(|e| e.cite.contains(cite::SHARP_REFINEMENT)));
    }

    #[test]
    fn huge_prime_power_entries() {
        let a1 = rs("A1");
        let ctx = BoundContext::new(1)
            .with_p(1_000_003)
            .with_r(9)
            .with_input_smallness(7);
        let table = smallness_bounds(&a1, &ctx);
        let ur = table.iter().find(|e| e.name == "H^m(U_r)").unwrap();
        assert_eq!(ur.value, None);
        let untwisted = table
            .iter()
            .find(|e| e.name == "H^m(B_r,lambda)^[-r]")
            .unwrap();
        assert_eq!(untwisted.value, Some(3));
    }

    #[test]
    fn cutoff_examples() {
        let a1 = rs("A1");
        assert_eq!(filtration_cutoff_b(&a1, 1, Some((2, 1))), 10);
        assert_eq!(filtration_cutoff_b(&a1, 1, None), 10);
        assert_eq!(filtration_cutoff_b(&a1, 1, Some((3, 2))), 5);
        assert_eq!(filtration_cutoff_b(&a1, 0, None), 4);
        assert_eq!(filtration_cutoff_b(&a1, 1, Some((2, 200))), 5);
        for ty in crate::rootsys::CartanType::all() {
            let r = RootSystem::new(ty).unwrap();
            for m in 0..5 {
                let uniform = filtration_cutoff_b(&r, m, None);
                assert_eq!(filtration_cutoff_b(&r, m, Some((2, 1))), uniform);
                for (p, e) in [(2, 2), (3, 1), (5, 3), (7, 1)] {
                    assert!(filtration_cutoff_b(&r, m, Some((p, e))) <= uniform);
                }
            }
        }
    }

    #[test]
    fn delta_chain_a1() {
        let a1 = rs("A1");
        assert_eq!(phi(&a1, 0, 2), 2);
        assert_eq!(phi(&a1, 1, 2), 3);
        assert_eq!(phi(&a1, 2, 2), 4);
        assert_eq!(delta(&a1, 0), 2);
        assert_eq!(delta(&a1, 1), 8);
        assert_eq!(delta(&a1, 2), 16);
        assert_eq!(m_prime(&a1, 1, false), 2);
        assert_eq!(m_prime(&a1, 0, false), 0);
        assert_eq!(digit_bound_d(&a1, 1, None, false), 16);
        assert_eq!(digit_bound_d(&a1, 0, None, false), 2);
        assert_eq!(d_prime(&a1, 1, 0, None, false), 16);
        assert_eq!(d_prime(&a1, 0, 5, None, false), 5);
    }

    #[test]
    fn delta_base_case_and_monotonicity() {
        for ty in crate::rootsys::CartanType::all() {
            let r = RootSystem::new(ty).unwrap();
            for p in [2u64, 3, 5, 7, 11] {
                let base = floor_log(p, (2 * r.h - 2) as u128) as i64 + 1;
                assert_eq!(delta_p(&r, 0, p), base);
            }
            for m in 0..6 {
                let mut prev = i64::MAX;
                for p in [2u64, 3, 5, 7, 11, 13] {
                    let d = delta_p(&r, m, p);
                    assert!(d <= prev);
                    prev = d;
                }
                assert!(delta(&r, m + 1) >= delta(&r, m));
                assert!(digit_bound_d(&r, m + 1, None, false) >= digit_bound_d(&r, m, None, false));
                assert!(
                    r0_threshold(&r, m + 1, 0, None, false) >= r0_threshold(&r, m, 0, None, false)
                );
            }
        }
    }

    #[test]
    fn alternate_mprime() {
        let a1 = rs("A1");
        // 3m' + 2 >= 10 gives m' = 3 for m = 1.
        assert_eq!(m_prime(&a1, 1, true), 3);
        let e8 = rs("E8");
        for m in 0..5 {
            let mp = m_prime(&e8, m, false) as i64;
            assert!(3 * mp + 2 * e8.h + 2 >= 6 * m as i64 + 6 * e8.h - 8);
            assert!(mp >= m as i64);
            let mp = m_prime(&e8, m, true) as i64;
            assert!(3 * mp + 2 * e8.h - 2 >= 6 * m as i64 + 6 * e8.h - 8);
        }
    }

    #[test]
    fn e_and_f_functions() {
        assert_eq!(e_of(2, 2), 1);
        assert_eq!(e_of(0, 2), -1);
        assert_eq!(e_of(0, 5), -1);
        assert_eq!(e_of(9, 5), 2);
        assert_eq!(f_of(1, 2), 3);
        assert_eq!(f_of(0, 7), 2);
        assert_eq!(f_of(-8, 3), 4);
        for r in -50i64..200 {
            for p in [2u64, 3, 5, 7] {
                // e(r) <= r - 1 only holds for r >= 1.
                if r >= 1 {
                    assert!(e_of(r, p) < r);
                }
                assert!(f_of(r, p) <= floor_log(2, r.unsigned_abs() as u128 + 1) as i64 + 2);
            }
        }
    }

    #[test]
    fn cpsk_examples() {
        let a1 = rs("A1");
        let req = cpsk_constants(&a1, 1, 2, &[Weight::new(vec![1])]).unwrap();
        assert_eq!(req.e_ctm, 1);
        assert_eq!(req.e_min, 1);
        assert_eq!(req.per_weight[0].c_bar, 1);
        assert_eq!(req.f_min, 3);
        assert_eq!(req.q_min, Some(16));
        let k = coarse_constants(&a1, 3);
        assert_eq!((k.e0, k.f0, k.g), (6, 2, 2));
        let req = cpsk_constants(&a1, 0, 5, &[Weight::new(vec![0])]).unwrap();
        assert_eq!((req.e_min, req.f_min), (0, 2));
    }

    #[test]
    fn r0_examples() {
        let a1 = rs("A1");
        assert_eq!(r0_threshold(&a1, 1, 0, None, false), 118);
        assert_eq!(r0_threshold(&a1, 0, 0, None, false), 14);
        for ty in crate::rootsys::CartanType::all() {
            let r = RootSystem::new(ty).unwrap();
            for eps in 0..4 {
                assert!(r0_threshold(&r, 1, eps, None, false) >= eps as i64);
            }
        }
    }

    #[test]
    fn threshold_examples() {
        let a1 = rs("A1");
        let t = large_prime_thresholds(&a1, 2);
        assert_eq!(
            (
                t.coxeter,
                t.decomposition,
                t.collapse,
                t.nonregular_vanishing,
                t.exception_layer
            ),
            (2, 17, 34, 9, 4)
        );
        let t = large_prime_thresholds(&a1, 0);
        assert_eq!(
            (
                t.decomposition,
                t.collapse,
                t.nonregular_vanishing,
                t.exception_layer
            ),
            (5, 10, 1, 0)
        );
        assert_eq!(large_prime_thresholds(&rs("G2"), 1).decomposition, 39);
    }

    #[test]
    fn table_contains_headline_values() {
        let a1 = rs("A1");
        let table = bounds_table(&a1, &BoundContext::new(1));
        let get = |n: &str| table.iter().find(|e| e.name == n).unwrap().value;
        assert_eq!(get("delta"), 8);
        assert_eq!(get("d"), 16);
        assert_eq!(get("r0"), 118);
        assert_eq!(get("b_uniform"), 10);
        assert!(table.iter().all(|e| cite::is_registered(&e.cite)));
    }
}
