//! Replay a [`ShiftCertificate`] using only digit arithmetic and the bound
//! formulas. Nothing from the construction engine is reused.

use crate::bounds::{coarse_constants, d_prime, r0_threshold};
use crate::cite;
use crate::error::{Error, Result};
use crate::genericity::{compare, ShiftCertificate, Verdict};
use crate::rootsys::RootSystem;
use crate::weights::{digit_expand, DigitExpansion};

fn reject(msg: impl Into<String>) -> Error {
    Error::CertificateRejected(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(reject(msg()))
    }
}

/// Accept the certificate only if every recorded value recomputes exactly
/// and every claimed inequality holds.
pub fn verify_certificate(rs: &RootSystem, cert: &ShiftCertificate) -> Result<()> {
    ensure(rs.label() == cert.cartan_type, || {
        format!(
            "root system {} does not match {}",
            rs.label(),
            cert.cartan_type
        )
    })?;
    let (p, r, m, eps) = (cert.p, cert.r, cert.m, cert.epsilon);
    let a = digit_expand(rs, &cert.lambda, p, Some(r)).map_err(|e| reject(e.to_string()))?;
    digit_expand(rs, &cert.mu, p, Some(eps)).map_err(|e| reject(e.to_string()))?;
    let b = digit_expand(rs, &cert.mu, p, Some(r)).map_err(|e| reject(e.to_string()))?;
    ensure(a.digits == cert.lambda_digits, || {
        "lambda digits do not match".into()
    })?;
    ensure(b.digits == cert.mu_digits, || {
        "mu digits do not match".into()
    })?;

    let r0 = r0_threshold(rs, m, eps, None, false);
    let dp = d_prime(rs, m, eps, None, false);
    let k = coarse_constants(rs, m);
    ensure(cert.r0 == r0, || {
        format!("r0 is {r0}, certificate says {}", cert.r0)
    })?;
    ensure(cert.d_prime == dp, || {
        format!("d' is {dp}, certificate says {}", cert.d_prime)
    })?;
    ensure((cert.e0, cert.f0, cert.g) == (k.e0, k.f0, k.g), || {
        "e0, f0, g do not match".into()
    })?;

    for t in &cert.thresholds {
        ensure(compare(t.lhs, &t.relation, t.rhs) == t.holds, || {
            format!(
                "threshold `{}` records holds = {} incorrectly",
                t.name, t.holds
            )
        })?;
    }
    for c in &cert.chain {
        ensure(cite::is_registered(&c.cite), || {
            format!("unknown citation `{}`", c.cite)
        })?;
    }

    let r_i = r as i64;
    let diff = a
        .digits
        .iter()
        .zip(&b.digits)
        .filter(|(x, y)| x != y)
        .count();
    match cert.verdict {
        Verdict::ThresholdNotMet => {
            ensure(r_i < r0, || format!("r = {r} meets r0 = {r0}"))?;
            ensure(cert.deficit == Some(r0 - r_i), || "deficit is wrong".into())
        }
        Verdict::ExtVanishesByDigitBound => {
            ensure(r_i >= r0, || format!("r = {r} is below r0 = {r0}"))?;
            ensure(cert.digit_difference == Some(diff), || {
                "digit difference is wrong".into()
            })?;
            ensure(diff as i64 > dp, || {
                format!("digit difference {diff} does not exceed d' = {dp}")
            })
        }
        Verdict::ShiftedGeneric => {
            ensure(r_i >= r0, || format!("r = {r} is below r0 = {r0}"))?;
            ensure(cert.digit_difference == Some(diff), || {
                "digit difference is wrong".into()
            })?;
            ensure(diff as i64 <= dp, || {
                format!("digit difference {diff} exceeds d' = {dp}")
            })?;
            ensure(cert.thresholds.iter().all(|t| t.holds), || {
                "a recorded threshold fails".into()
            })?;
            ensure(!cert.chain.is_empty(), || {
                "isomorphism chain is empty".into()
            })?;
            verify_shift(cert, &a, &b, k.run_length(), k.e0, dp)
        }
    }
}

fn verify_shift(
    cert: &ShiftCertificate,
    a: &DigitExpansion,
    b: &DigitExpansion,
    needed: i64,
    e0: i64,
    dp: i64,
) -> Result<()> {
    let r = cert.r as usize;
    let eps = cert.epsilon as usize;
    let run = cert.zero_run.ok_or_else(|| reject("missing zero run"))?;
    ensure(run.start >= eps && run.start + run.length <= r, || {
        "zero run out of range".into()
    })?;
    ensure(
        (run.start..run.start + run.length).all(|i| a.digit_is_zero(i) && b.digit_is_zero(i)),
        || "zero run contains a nonzero digit".into(),
    )?;
    ensure(run.length as i64 >= needed, || {
        format!("zero run length {} is below e0+f0+g = {needed}", run.length)
    })?;

    // Longest common zero run after position eps, scanned directly.
    let mut best = 0usize;
    let mut cur = 0usize;
    for i in eps..r {
        if a.digit_is_zero(i) && b.digit_is_zero(i) {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    ensure((best as i64 + 1) * (dp + 1) > r as i64 - eps as i64, || {
        "run-length counting inequality fails".into()
    })?;

    let s = cert.s.ok_or_else(|| reject("missing s"))?;
    let (ls, ms) = (a.rotate(s), b.rotate(s));
    let tail = needed as usize;
    ensure(
        (r - tail..r).all(|i| ls.digit_is_zero(i) && ms.digit_is_zero(i)),
        || format!("the last {tail} digits after rotating by s = {s} are not all zero"),
    )?;
    let e_raw = cert.e_raw.ok_or_else(|| reject("missing e_raw"))?;
    ensure(e_raw == s + e0 as u64, || {
        "e_raw differs from s + e0".into()
    })?;
    let e = cert.e.ok_or_else(|| reject("missing e"))?;
    ensure(e == e_raw % r as u64, || "e is not e_raw mod r".into())?;
    let (lp, mp) = (a.rotate(e), b.rotate(e));
    let rank = cert.lambda.rank();
    ensure(
        cert.lambda_prime_digits.as_ref() == Some(&lp.digits),
        || "lambda' digits are wrong".into(),
    )?;
    ensure(cert.mu_prime_digits.as_ref() == Some(&mp.digits), || {
        "mu' digits are wrong".into()
    })?;
    ensure(
        cert.lambda_prime.as_deref() == Some(lp.literal(rank).as_str()),
        || "lambda' is wrong".into(),
    )?;
    ensure(
        cert.mu_prime.as_deref() == Some(mp.literal(rank).as_str()),
        || "mu' is wrong".into(),
    )
}
