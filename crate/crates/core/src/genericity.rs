//! Certificate engines: digit-bound vanishing, the restriction-isomorphism
//! check, the shifted-generic construction, large-prime collapse, stability
//! after one extra Frobenius power, cohomology classification and the
//! sections of the induced-module filtration.
//!
//! The engines are untrusted. Every certificate carries the intermediate
//! values needed to replay it; see [`crate::verify`].

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::arith::require_prime;
use crate::bounds::{
    coarse_constants, cpsk_constants, d_prime, delta_p, digit_bound_d, filtration_cutoff_b,
    large_prime_thresholds, phi, r0_threshold,
};
use crate::cite;
use crate::error::{Error, Result};
use crate::kostant::weyl_dimension;
use crate::rootsys::RootSystem;
use crate::weights::{
    common_zero_runs, digit_difference_of, digit_expand, format_big_weight,
    longest_common_zero_run_of, DigitExpansion, Weight, ZeroRun,
};
use crate::weyl::{
    alcove_tests, dominant_weights_up_to, dot_action, find_nu_small_conjugate,
    first_small_conjugate, NuMatch, WeylGroup,
};

/// One inequality with the exact values it was checked at.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdRecord {
    pub name: String,
    pub lhs: i64,
    pub relation: String,
    pub rhs: i64,
    pub holds: bool,
}

/// Evaluate `lhs relation rhs` for the relations used in threshold records.
pub fn compare(lhs: i64, relation: &str, rhs: i64) -> bool {
    match relation {
        ">=" => lhs >= rhs,
        ">" => lhs > rhs,
        "<=" => lhs <= rhs,
        "<" => lhs < rhs,
        "==" => lhs == rhs,
        _ => false,
    }
}

impl ThresholdRecord {
    pub fn new(name: impl Into<String>, lhs: i64, relation: &str, rhs: i64) -> Self {
        ThresholdRecord {
            name: name.into(),
            lhs,
            relation: relation.to_string(),
            rhs,
            holds: compare(lhs, relation, rhs),
        }
    }
}

/// A symbolic isomorphism claim and the result it rests on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainLink {
    pub iso: String,
    pub cite: String,
}

fn link(iso: impl Into<String>, cite: &str) -> ChainLink {
    ChainLink {
        iso: iso.into(),
        cite: cite.to_string(),
    }
}

fn expand(rs: &RootSystem, lambda: &Weight, p: u64, r: u32) -> Result<DigitExpansion> {
    digit_expand(rs, lambda, p, Some(r))
}

// ---------------------------------------------------------------------------
// Digit-bound vanishing

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DigitVanishing {
    pub digit_difference: usize,
    /// `d(Φ, m)`, the digit bound for the finite group.
    pub d: i64,
    pub delta_p: i64,
    pub phi_p: i64,
    /// `Ext^m_{G(q)}(L(λ), L(μ)) = 0` is guaranteed.
    pub finite_group_vanishes: bool,
    /// `Ext^m_G(L(λ), L(μ)) = 0` is guaranteed (difference above `δ - φ`).
    pub algebraic_group_vanishes: bool,
    pub thresholds: Vec<ThresholdRecord>,
}

impl DigitVanishing {
    pub fn verdict(&self) -> &'static str {
        if self.finite_group_vanishes {
            "vanishes"
        } else {
            "may-be-nonzero"
        }
    }
}

pub fn digit_vanishing_check(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    p: u64,
    r: u32,
    m: u32,
) -> Result<DigitVanishing> {
    require_prime(p)?;
    let a = expand(rs, lambda, p, r)?;
    let b = expand(rs, mu, p, r)?;
    let diff = digit_difference_of(&a, &b);
    let d = digit_bound_d(rs, m, None, false);
    let dp = delta_p(rs, m, p);
    let ph = phi(rs, m, p);
    let finite = ThresholdRecord::new("digit difference > d", diff as i64, ">", d);
    let algebraic = ThresholdRecord::new(
        "digit difference > delta(p) - phi(p)",
        diff as i64,
        ">",
        dp - ph,
    );
    Ok(DigitVanishing {
        digit_difference: diff,
        d,
        delta_p: dp,
        phi_p: ph,
        finite_group_vanishes: finite.holds,
        algebraic_group_vanishes: algebraic.holds,
        thresholds: vec![finite, algebraic],
    })
}

// ---------------------------------------------------------------------------
// Restriction-isomorphism requirements

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CpskReport {
    pub p: u64,
    pub m: u32,
    pub e: u32,
    pub f: u32,
    pub passed: bool,
    /// `p^(e+f)` when it fits.
    pub q: Option<i128>,
    pub checks: Vec<ThresholdRecord>,
    pub chain: Vec<ChainLink>,
}

impl CpskReport {
    pub fn violations(&self) -> impl Iterator<Item = &ThresholdRecord> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Check whether `(e, f)` satisfy the restriction-isomorphism hypotheses for
/// a module whose composition-factor highest weights are `weights`.
pub fn cpsk_check(
    rs: &RootSystem,
    weights: &[Weight],
    m: u32,
    p: u64,
    e: u32,
    f: u32,
) -> Result<CpskReport> {
    require_prime(p)?;
    if weights.is_empty() {
        return Err(Error::Precondition("weight list is empty".into()));
    }
    let req = cpsk_constants(rs, m, p, weights)?;
    let mut checks = vec![ThresholdRecord::new(
        "e >= e(ctm)",
        e as i64,
        ">=",
        req.e_ctm,
    )];
    for w in &req.per_weight {
        checks.push(ThresholdRecord::new(
            format!("f >= f(c(bar {}))", w.weight),
            f as i64,
            ">=",
            w.f_required,
        ));
        if let Some(er) = w.e_required {
            checks.push(ThresholdRecord::new(
                format!("e >= e(c t_p({}) (m-1)) + 1", w.weight),
                e as i64,
                ">=",
                er,
            ));
        }
    }
    let passed = checks.iter().all(|c| c.holds);
    let q = (p as i128).checked_pow(e + f);
    let chain = if passed {
        vec![
            link(
                format!(
                    "H^n(G,V^[{e}]) -> H^n(G(p^{}),V) is an isomorphism for n <= {m}",
                    e + f
                ),
                cite::CPSK_RESTRICTION,
            ),
            link(
                format!(
                    "H^{}(G,V^[{e}]) -> H^{}(G(p^{}),V) is injective",
                    m + 1,
                    m + 1,
                    e + f
                ),
                cite::CPSK_RESTRICTION,
            ),
        ]
    } else {
        Vec::new()
    };
    Ok(CpskReport {
        p,
        m,
        e,
        f,
        passed,
        q,
        checks,
        chain,
    })
}

// ---------------------------------------------------------------------------
// Shifted-generic construction

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ExtVanishesByDigitBound,
    ShiftedGeneric,
    ThresholdNotMet,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::ExtVanishesByDigitBound => "ext-vanishes-by-digit-bound",
            Verdict::ShiftedGeneric => "shifted-generic",
            Verdict::ThresholdNotMet => "threshold-not-met",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftCertificate {
    pub verdict: Verdict,
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub p: u64,
    pub r: u32,
    pub m: u32,
    pub epsilon: u32,
    pub lambda: Weight,
    pub mu: Weight,
    pub lambda_digits: Vec<Weight>,
    pub mu_digits: Vec<Weight>,
    pub r0: i64,
    pub d_prime: i64,
    pub e0: i64,
    pub f0: i64,
    pub g: i64,
    /// `r0 - r` when the threshold is not met.
    pub deficit: Option<i64>,
    pub digit_difference: Option<usize>,
    pub longest_run: Option<ZeroRun>,
    pub zero_run: Option<ZeroRun>,
    pub s: Option<u64>,
    /// `s + e0` before reduction modulo `r`.
    pub e_raw: Option<u64>,
    pub e: Option<u64>,
    pub lambda_prime: Option<String>,
    pub mu_prime: Option<String>,
    pub lambda_prime_digits: Option<Vec<Weight>>,
    pub mu_prime_digits: Option<Vec<Weight>>,
    pub thresholds: Vec<ThresholdRecord>,
    pub chain: Vec<ChainLink>,
}

/// Certify `Ext^n_{G(q)}(L(μ), L(λ)) ≅ Ext^n_G(L(μ'), L(λ'))` for `n <= m`
/// with `λ ∈ X⁺_r`, `μ ∈ X⁺_ε`, choosing the leftmost long common zero run.
pub fn certify_shifted_generic(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    p: u64,
    r: u32,
    m: u32,
    epsilon: u32,
) -> Result<ShiftCertificate> {
    certify_shifted_generic_with(rs, lambda, mu, p, r, m, epsilon, 0)
}

/// As [`certify_shifted_generic`], using the `selector`-th qualifying zero
/// run (0 is the leftmost).
#[allow(clippy::too_many_arguments)]
pub fn certify_shifted_generic_with(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    p: u64,
    r: u32,
    m: u32,
    epsilon: u32,
    selector: usize,
) -> Result<ShiftCertificate> {
    require_prime(p)?;
    if epsilon > r {
        return Err(Error::Precondition(format!(
            "restriction level epsilon = {epsilon} exceeds r = {r}"
        )));
    }
    let a = expand(rs, lambda, p, r)?;
    // μ ∈ X⁺_ε: check at level ε, then expand to r digits.
    expand(rs, mu, p, epsilon)?;
    let b = expand(rs, mu, p, r)?;
    let r0 = r0_threshold(rs, m, epsilon, None, false);
    let dp = d_prime(rs, m, epsilon, None, false);
    let k = coarse_constants(rs, m);
    let mut cert = ShiftCertificate {
        verdict: Verdict::ThresholdNotMet,
        cartan_type: rs.label(),
        p,
        r,
        m,
        epsilon,
        lambda: lambda.clone(),
        mu: mu.clone(),
        lambda_digits: a.digits.clone(),
        mu_digits: b.digits.clone(),
        r0,
        d_prime: dp,
        e0: k.e0,
        f0: k.f0,
        g: k.g,
        deficit: None,
        digit_difference: None,
        longest_run: None,
        zero_run: None,
        s: None,
        e_raw: None,
        e: None,
        lambda_prime: None,
        mu_prime: None,
        lambda_prime_digits: None,
        mu_prime_digits: None,
        thresholds: Vec::new(),
        chain: Vec::new(),
    };
    let r_check = ThresholdRecord::new("r >= r0", r as i64, ">=", r0);
    let met = r_check.holds;
    cert.thresholds.push(r_check);
    if !met {
        cert.deficit = Some(r0 - r as i64);
        return Ok(cert);
    }

    let diff = digit_difference_of(&a, &b);
    cert.digit_difference = Some(diff);
    let diff_check = ThresholdRecord::new("digit difference <= d'", diff as i64, "<=", dp);
    let close = diff_check.holds;
    cert.thresholds.push(diff_check);
    if !close {
        cert.verdict = Verdict::ExtVanishesByDigitBound;
        cert.s = Some(0);
        cert.e_raw = Some(0);
        cert.e = Some(0);
        cert.lambda_prime = Some(a.literal(rs.rank()));
        cert.mu_prime = Some(b.literal(rs.rank()));
        cert.lambda_prime_digits = Some(a.digits.clone());
        cert.mu_prime_digits = Some(b.digits.clone());
        cert.chain = vec![link(
            "Ext^n_{G(q')}(L(mu),L(lambda)) = 0 = Ext^n_G(L(mu),L(lambda)) for n <= m and every power q' >= q",
            cite::DIGIT_BOUND_FINITE,
        )];
        return Ok(cert);
    }

    let needed = k.run_length();
    let eps = epsilon as usize;
    let longest = longest_common_zero_run_of(&a, &b, eps);
    cert.longest_run = Some(longest);
    cert.thresholds.push(ThresholdRecord::new(
        "(x+1)(d'+1) >= r-eps+1",
        (longest.length as i64 + 1) * (dp + 1),
        ">=",
        r as i64 - epsilon as i64 + 1,
    ));
    let candidates: Vec<ZeroRun> = common_zero_runs(&a, &b, eps)
        .into_iter()
        .filter(|run| run.length as i64 >= needed)
        .collect();
    if candidates.is_empty() {
        return Err(Error::Internal(format!(
            "no common zero run of length {needed} after position {epsilon} although r >= r0"
        )));
    }
    let run = *candidates.get(selector).ok_or_else(|| {
        Error::Precondition(format!(
            "run selector {selector} out of range: {} qualifying runs",
            candidates.len()
        ))
    })?;
    cert.thresholds.push(ThresholdRecord::new(
        "run length >= e0+f0+g",
        run.length as i64,
        ">=",
        needed,
    ));
    let r_us = r as usize;
    let s = ((r_us - (run.start + run.length) % r_us) % r_us) as u64;
    let e_raw = s + k.e0 as u64;
    let e = e_raw % r as u64;
    let lp = a.rotate(e);
    let mp = b.rotate(e);

    let req = cpsk_constants(rs, m, p, &[])?;
    cert.thresholds
        .push(ThresholdRecord::new("e0 >= e(ctm)", k.e0, ">=", req.e_ctm));
    // Composition factors of the twisted tensor product lie in
    // X⁺_{r'} with r' = r - e0 - f0, so f = r - e0 covers f(c(bar)) <= r' + f0.
    cert.thresholds.push(ThresholdRecord::new(
        "f = r-e0 >= (r-e0-f0)+f0",
        r as i64 - k.e0,
        ">=",
        (r as i64 - k.e0 - k.f0) + k.f0,
    ));

    cert.verdict = Verdict::ShiftedGeneric;
    cert.zero_run = Some(run);
    cert.s = Some(s);
    cert.e_raw = Some(e_raw);
    cert.e = Some(e);
    cert.lambda_prime = Some(lp.literal(rs.rank()));
    cert.mu_prime = Some(mp.literal(rs.rank()));
    cert.lambda_prime_digits = Some(lp.digits);
    cert.mu_prime_digits = Some(mp.digits);
    cert.chain = vec![
        link(
            "Ext^n_{G(q)}(L(mu),L(lambda)) ≅ Ext^n_{G(q)}(L(mu)^[e],L(lambda)^[e]) (semilinear), n <= m",
            cite::TWIST_STABILITY,
        ),
        link(
            "Ext^n_{G(q)}(L(mu)^[e],L(lambda)^[e]) ≅ Ext^n_{G(q)}(L(mu'),L(lambda'))",
            cite::TWIST_STABILITY,
        ),
        link(
            "Ext^n_{G(q)}(L(mu'),L(lambda')) ≅ Ext^n_{G,gen}(L(mu'),L(lambda'))",
            cite::CPSK_RESTRICTION,
        ),
        link(
            "Ext^n_{G,gen}(L(mu'),L(lambda')) ≅ Ext^n_G(L(mu'),L(lambda'))",
            cite::SHIFTED_GENERIC,
        ),
        link(
            "Ext^n_{G(p^(r+l))}(L(mu'),L(lambda')) -> Ext^n_{G(q)}(L(mu'),L(lambda')) is an isomorphism for every l >= 0",
            cite::SHIFTED_GENERIC,
        ),
    ];
    Ok(cert)
}

// ---------------------------------------------------------------------------
// Large-prime collapse

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartStatus {
    Applies,
    ThresholdNotMet,
    ZeroDigitAbsent,
    WeylGroupUnavailable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapsePart {
    pub status: PartStatus,
    pub e: Option<u64>,
    pub lambda_prime: Option<String>,
    pub mu_prime: Option<String>,
    /// For the single-summand part: the `ν` found from `μ'` modulo `p`, with
    /// `μ'_0 = w·ν + pτ` for the first digit `μ'_0` of `μ'`.
    pub nu: Option<NuMatch>,
    /// The single remaining summand is zero (no `b`-small conjugate exists).
    pub summand_vanishes: bool,
    pub chain: Vec<ChainLink>,
    pub note: Option<String>,
}

impl CollapsePart {
    fn status(status: PartStatus, note: impl Into<String>) -> Self {
        CollapsePart {
            status,
            e: None,
            lambda_prime: None,
            mu_prime: None,
            nu: None,
            summand_vanishes: false,
            chain: Vec::new(),
            note: Some(note.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseReport {
    pub p: u64,
    pub r: u32,
    pub m: u32,
    pub b: i64,
    pub thresholds: Vec<ThresholdRecord>,
    pub decomposition: PartStatus,
    /// Summation index set: dominant `ν` with `(ν, α0^∨) <= b`.
    pub index_set: Vec<Weight>,
    pub single_summand: CollapsePart,
    pub common_zero: CollapsePart,
}

impl CollapseReport {
    pub fn any_applies(&self) -> bool {
        self.decomposition == PartStatus::Applies
            || self.single_summand.status == PartStatus::Applies
            || self.common_zero.status == PartStatus::Applies
    }
}

/// Which of the large-prime decomposition, single-summand collapse and
/// common-zero-digit chain apply to `(λ, μ)`, with their witnesses.
#[allow(clippy::too_many_arguments)]
pub fn large_prime_collapse(
    rs: &RootSystem,
    weyl: Option<&WeylGroup>,
    lambda: &Weight,
    mu: &Weight,
    p: u64,
    r: u32,
    m: u32,
    budget: Option<u64>,
) -> Result<CollapseReport> {
    require_prime(p)?;
    let a = expand(rs, lambda, p, r)?;
    let bexp = expand(rs, mu, p, r)?;
    let t = large_prime_thresholds(rs, m);
    let b = filtration_cutoff_b(rs, m, None);
    let p_i = p as i64;
    let dec = ThresholdRecord::new("p >= 6m+7h-9", p_i, ">=", t.decomposition);
    let col = ThresholdRecord::new("p > 12m+13h-16", p_i, ">", t.collapse);
    let (dec_ok, col_ok) = (dec.holds, col.holds);
    let rank = rs.rank();

    let (decomposition, index_set) = if dec_ok {
        (PartStatus::Applies, dominant_weights_up_to(rs, b))
    } else {
        (PartStatus::ThresholdNotMet, Vec::new())
    };

    let single_summand = if !col_ok {
        CollapsePart::status(PartStatus::ThresholdNotMet, "requires p > 12m+13h-16")
    } else if let Some(i) = a.zero_positions().first().copied() {
        let e = ((r as usize - i) % r as usize) as u64;
        let lp = a.rotate(e);
        let mp = bexp.rotate(e);
        match weyl {
            None => CollapsePart::status(
                PartStatus::WeylGroupUnavailable,
                "Weyl group enumeration is needed to find nu",
            ),
            Some(g) => {
                let residue = mp.digits[0].clone();
                let found = find_nu_small_conjugate(rs, g, &residue, p, b, budget)?;
                let mut chain = vec![link(
                    "Ext^m_{G(q)}(L(lambda),L(mu)) ≅ Ext^m_{G(q)}(L(lambda'),L(mu'))",
                    cite::TWIST_STABILITY,
                )];
                let vanishes = found.is_none();
                match &found {
                    Some(nm) => chain.push(link(
                        format!(
                            "Ext^m_{{G(q)}}(L(lambda'),L(mu')) ≅ Ext^m_G(L(lambda')⊗L({}),L(mu')⊗L({})^[r])",
                            nm.nu,
                            rs.dual(&nm.nu)
                        ),
                        cite::LARGE_PRIME_COLLAPSE,
                    )),
                    None => chain.push(link(
                        "Ext^m_{G(q)}(L(lambda'),L(mu')) = 0: mu' has no b-small dominant conjugate",
                        cite::LARGE_PRIME_COLLAPSE,
                    )),
                }
                CollapsePart {
                    status: PartStatus::Applies,
                    e: Some(e),
                    lambda_prime: Some(lp.literal(rank)),
                    mu_prime: Some(mp.literal(rank)),
                    nu: found,
                    summand_vanishes: vanishes,
                    chain,
                    note: None,
                }
            }
        }
    } else {
        CollapsePart::status(
            PartStatus::ZeroDigitAbsent,
            "lambda has no zero digit; the zero-digit hypothesis cannot be dropped",
        )
    };

    let common_zero = if !col_ok {
        CollapsePart::status(PartStatus::ThresholdNotMet, "requires p > 12m+13h-16")
    } else if let Some(i) = (0..r as usize).find(|&i| a.digit_is_zero(i) && bexp.digit_is_zero(i)) {
        let e = ((r as usize - i) % r as usize) as u64;
        let lp = a.rotate(e);
        let mp = bexp.rotate(e);
        CollapsePart {
            status: PartStatus::Applies,
            e: Some(e),
            lambda_prime: Some(lp.literal(rank)),
            mu_prime: Some(mp.literal(rank)),
            nu: weyl.map(|g| NuMatch {
                nu: Weight::zero(rank),
                w: g.elements[0].clone(),
                tau: Weight::zero(rank),
            }),
            summand_vanishes: false,
            chain: vec![
                link(
                    "Ext^m_{G(q)}(L(lambda),L(mu)) ≅ Ext^m_{G(q)}(L(lambda'),L(mu'))",
                    cite::TWIST_STABILITY,
                ),
                link(
                    "Ext^m_{G(q)}(L(lambda'),L(mu')) ≅ Ext^m_{G,gen}(L(lambda'),L(mu'))",
                    cite::COMMON_ZERO_DIGIT,
                ),
                link(
                    "Ext^m_{G,gen}(L(lambda'),L(mu')) ≅ Ext^m_G(L(lambda'),L(mu'))",
                    cite::COMMON_ZERO_DIGIT,
                ),
            ],
            note: None,
        }
    } else {
        CollapsePart::status(
            PartStatus::ZeroDigitAbsent,
            "lambda and mu have no common zero digit; the hypothesis cannot be dropped",
        )
    };

    Ok(CollapseReport {
        p,
        r,
        m,
        b,
        thresholds: vec![dec, col],
        decomposition,
        index_set,
        single_summand,
        common_zero,
    })
}

// ---------------------------------------------------------------------------
// Stability at q' = p^(r+1)

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPrimeReport {
    pub p: u64,
    pub r: u32,
    pub m: u32,
    /// `r + 1`, the exponent of `q'`.
    pub r_prime: u32,
    pub lambda_prime: String,
    pub mu_prime: String,
    pub lambda_prime_digits: Vec<Weight>,
    pub mu_prime_digits: Vec<Weight>,
    pub thresholds: Vec<ThresholdRecord>,
    pub chain: Vec<ChainLink>,
}

/// `λ' = λ^{[1]_{q'}}`, `μ' = μ^{[1]_{q'}}` over `q' = p^(r+1)`.
pub fn qprime_stability(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    p: u64,
    r: u32,
    m: u32,
) -> Result<QPrimeReport> {
    require_prime(p)?;
    let a = expand(rs, lambda, p, r)?;
    let b = expand(rs, mu, p, r)?;
    let t = large_prime_thresholds(rs, m);
    let check = ThresholdRecord::new("p > 12m+13h-16", p as i64, ">", t.collapse);
    if !check.holds {
        return Err(Error::ThresholdNotMet {
            name: check.name,
            lhs: check.lhs,
            relation: ">",
            rhs: check.rhs,
        });
    }
    let rank = rs.rank();
    let len = r as usize + 1;
    let lp = a.padded(len, rank).rotate(1);
    let mp = b.padded(len, rank).rotate(1);
    Ok(QPrimeReport {
        p,
        r,
        m,
        r_prime: r + 1,
        lambda_prime: lp.literal(rank),
        mu_prime: mp.literal(rank),
        lambda_prime_digits: lp.digits,
        mu_prime_digits: mp.digits,
        thresholds: vec![check],
        chain: vec![
            link(
                "Ext^m_{G(q')}(L(lambda),L(mu)) ≅ Ext^m_{G(q')}(L(lambda'),L(mu'))",
                cite::TWIST_STABILITY,
            ),
            link(
                "Ext^m_{G(q')}(L(lambda'),L(mu')) ≅ Ext^m_{G,gen}(L(lambda'),L(mu'))",
                cite::QPRIME_STABILITY,
            ),
            link(
                "Ext^m_{G,gen}(L(lambda'),L(mu')) ≅ Ext^m_G(L(lambda'),L(mu'))",
                cite::QPRIME_STABILITY,
            ),
            link(
                "Ext^m_G(L(lambda)^[1],L(mu)^[1]) -> Ext^m_G(L(lambda)^[e],L(mu)^[e]) is an isomorphism for every e >= 1",
                cite::QPRIME_STABILITY,
            ),
            link(
                "Ext^m_{G(p^(r+s))}(L(lambda),L(mu)) -> Ext^m_{G(q')}(L(lambda),L(mu)) is an isomorphism for every s >= 1",
                cite::QPRIME_STABILITY,
            ),
        ],
    })
}

// ---------------------------------------------------------------------------
// Classification of H^m(G(q), L(μ))

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RouteKind {
    ShiftedGeneric,
    NonregularVanishing,
    FiniteException,
    NoExceptionForm,
    ZeroDigitGeneric,
    DegreeZero,
}

impl RouteKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RouteKind::ShiftedGeneric => "shifted-generic",
            RouteKind::NonregularVanishing => "nonregular-vanishing",
            RouteKind::FiniteException => "finite-exception",
            RouteKind::NoExceptionForm => "no-exception-form",
            RouteKind::ZeroDigitGeneric => "zero-digit-generic",
            RouteKind::DegreeZero => "degree-zero",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RouteReport {
    pub route: RouteKind,
    /// The weight with `H^m(G(q), L(μ)) ≅ H^m(G, L(μ'))`.
    pub mu_prime: String,
    /// Both sides are zero.
    pub vanishes: bool,
    pub e: Option<u64>,
    pub nu: Option<NuMatch>,
    pub certificate: Option<ShiftCertificate>,
    pub thresholds: Vec<ThresholdRecord>,
    pub chain: Vec<ChainLink>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub mu: Weight,
    pub p: u64,
    pub r: u32,
    pub m: u32,
    pub primary: Option<RouteKind>,
    pub routes: Vec<RouteReport>,
    pub notes: Vec<String>,
}

/// Every applicable route identifying `H^m(G(q), L(μ))` with algebraic-group
/// cohomology; `primary` is the first in the order shifted-generic,
/// nonregular vanishing, finite exception / no exception form, zero-digit,
/// degree zero.
pub fn classify_weight(
    rs: &RootSystem,
    weyl: Option<&WeylGroup>,
    mu: &Weight,
    p: u64,
    r: u32,
    m: u32,
    budget: Option<u64>,
) -> Result<Classification> {
    require_prime(p)?;
    let exp = expand(rs, mu, p, r)?;
    let rank = rs.rank();
    let t = large_prime_thresholds(rs, m);
    let p_i = p as i64;
    let mut routes = Vec::new();
    let mut notes = Vec::new();
    let mu_literal = mu.to_string();

    let r0 = r0_threshold(rs, m, 0, None, false);
    let r_check = ThresholdRecord::new("r >= r0(m,0)", r as i64, ">=", r0);
    if r_check.holds {
        let cert = certify_shifted_generic(rs, mu, &Weight::zero(rank), p, r, m, 0)?;
        let vanishes = cert.verdict == Verdict::ExtVanishesByDigitBound;
        let mu_prime = cert
            .lambda_prime
            .clone()
            .unwrap_or_else(|| mu_literal.clone());
        routes.push(RouteReport {
            route: RouteKind::ShiftedGeneric,
            mu_prime,
            vanishes,
            e: cert.e,
            nu: None,
            thresholds: vec![r_check],
            chain: vec![link(
                "H^n(G(q),L(mu)) ≅ H^n(G(q),L(mu')) ≅ H^n_gen(G,L(mu')) ≅ H^n(G,L(mu')), n <= m",
                cite::SHIFTED_GENERIC,
            )],
            certificate: Some(cert),
        });
    } else {
        notes.push(format!("shifted-generic route needs r >= {r0}"));
    }

    if m > 0 {
        let big = ThresholdRecord::new("p >= (4m+1)(h-1)", p_i, ">=", t.nonregular_vanishing);
        if big.holds {
            let regular = alcove_tests(rs, mu, p)?.p_regular;
            if !regular {
                routes.push(RouteReport {
                    route: RouteKind::NonregularVanishing,
                    mu_prime: mu_literal.clone(),
                    vanishes: true,
                    e: None,
                    nu: None,
                    certificate: None,
                    thresholds: vec![big],
                    chain: vec![link(
                        "H^m(G(q),L(mu)) ≅ H^m(G,L(mu)) = 0: mu is not p-regular",
                        cite::NONREGULAR_VANISHING,
                    )],
                });
            } else if let Some(g) = weyl {
                let layer = t.exception_layer;
                match first_small_conjugate(rs, g, mu, p, layer, budget)? {
                    Some(nm) => {
                        let mu_prime = exception_weight(rs, mu, &nm, p, r);
                        routes.push(RouteReport {
                            route: RouteKind::FiniteException,
                            mu_prime: mu_prime.clone(),
                            vanishes: false,
                            e: None,
                            thresholds: vec![
                                big,
                                ThresholdRecord::new(
                                    "(nu,alpha0) <= 2m(h-1)",
                                    rs.pairing_alpha0(&nm.nu)?,
                                    "<=",
                                    layer,
                                ),
                            ],
                            chain: vec![link(
                                format!("H^m(G(q),L(mu)) ≅ H^m(G,L(u·0 + p^r {})) = H^m(G,L({mu_prime}))", nm.nu),
                                cite::FINITE_EXCEPTION_FORM,
                            )],
                            nu: Some(nm),
                            certificate: None,
                        });
                    }
                    None => routes.push(RouteReport {
                        route: RouteKind::NoExceptionForm,
                        mu_prime: mu_literal.clone(),
                        vanishes: true,
                        e: None,
                        nu: None,
                        certificate: None,
                        thresholds: vec![big],
                        chain: vec![
                            link(
                                "H^m(G(q),L(mu)) = 0: mu is not of the form u·nu with (nu,alpha0) <= 2m(h-1)",
                                cite::FINITE_EXCEPTION_FORM,
                            ),
                            link("H^m(G,L(mu)) = 0: mu is not linked to 0", cite::LINKAGE),
                        ],
                    }),
                }
            } else {
                notes.push("Weyl group unavailable: exception-form search skipped".into());
            }
        }
    }

    let col = ThresholdRecord::new("p > 12m+13h-16", p_i, ">", t.collapse);
    if col.holds {
        if let Some(i) = exp.zero_positions().first().copied() {
            let e = ((r as usize - i) % r as usize) as u64;
            let shifted = exp.rotate(e);
            let mu_prime = shifted.literal(rank);
            let chain = if i == 0 {
                vec![
                    link(
                        "H^m(G(q),L(p tau)) ≅ H^m(G(q),L(tau)) ≅ H^m_gen(G,L(tau)) ≅ H^m_gen(G,L(p tau))",
                        cite::ZERO_DIGIT_GENERIC,
                    ),
                    link("H^m(G(q),L(mu)) ≅ H^m(G,L(mu))", cite::COMMON_ZERO_DIGIT),
                ]
            } else {
                vec![
                    link(
                        "H^m(G(q),L(mu')) ≅ H^m(G(q),L(mu)) ≅ H^m_gen(G,L(mu)) ≅ H^m_gen(G,L(mu'))",
                        cite::ZERO_DIGIT_GENERIC,
                    ),
                    link("H^m(G(q),L(mu')) ≅ H^m(G,L(mu'))", cite::COMMON_ZERO_DIGIT),
                ]
            };
            routes.push(RouteReport {
                route: RouteKind::ZeroDigitGeneric,
                mu_prime,
                vanishes: false,
                e: Some(e),
                nu: None,
                certificate: None,
                thresholds: vec![col],
                chain,
            });
        } else {
            notes.push("mu has no zero digit".into());
        }
    }

    if m == 0 {
        routes.push(RouteReport {
            route: RouteKind::DegreeZero,
            mu_prime: mu_literal.clone(),
            vanishes: !mu.is_zero(),
            e: None,
            nu: None,
            certificate: None,
            thresholds: Vec::new(),
            chain: vec![link(
                "H^0(G(q),L(mu)) ≅ H^0(G,L(mu)): L(mu) stays irreducible for q-restricted mu",
                cite::DEGREE_ZERO,
            )],
        });
    }

    Ok(Classification {
        cartan_type: rs.label(),
        mu: mu.clone(),
        p,
        r,
        m,
        primary: routes.first().map(|rt| rt.route),
        routes,
        notes,
    })
}

/// `u·0 + p^r ν` where `μ = w·ν + pτ` and `u = t_{pτ} w`.
fn exception_weight(rs: &RootSystem, mu: &Weight, nm: &NuMatch, p: u64, r: u32) -> String {
    let w0 = dot_action(rs, &nm.w, &Weight::zero(rs.rank()));
    let base = w0.add(&nm.tau.scale(p as i64));
    let pr = num_traits::pow(BigInt::from(p), r as usize);
    let coords: Vec<BigInt> = base
        .coords()
        .iter()
        .zip(nm.nu.coords())
        .map(|(&b, &n)| BigInt::from(b) + &pr * n)
        .collect();
    debug_assert_eq!(
        dot_action(rs, &nm.w, &nm.nu).add(&nm.tau.scale(p as i64)),
        *mu
    );
    format_big_weight(&coords)
}

// ---------------------------------------------------------------------------
// Filtration sections

mod big_string {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationSection {
    pub gamma: Weight,
    pub gamma_star: Weight,
    pub layer: i64,
    #[serde(with = "big_string")]
    pub dim_product: BigUint,
}

/// Sections `∇(γ) ⊗ ∇(γ*)^[r]` with `(γ, α0^∨) <= b_cutoff`, by layer.
/// The default cutoff is `b(Φ, m, p^r)`; pass it explicitly otherwise.
pub fn enumerate_filtration_sections(
    rs: &RootSystem,
    b_cutoff: i64,
) -> Result<Vec<FiltrationSection>> {
    dominant_weights_up_to(rs, b_cutoff)
        .into_iter()
        .map(|gamma| {
            let gamma_star = rs.dual(&gamma);
            let layer = rs.pairing_alpha0(&gamma)?;
            let dim_product = weyl_dimension(rs, &gamma)? * weyl_dimension(rs, &gamma_star)?;
            Ok(FiltrationSection {
                gamma,
                gamma_star,
                layer,
                dim_product,
            })
        })
        .collect()
}
