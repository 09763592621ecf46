//! The Madhava–Leibniz series `π/4 = 1 − 1/3 + 1/5 − …`, its end correction
//! `(n² + 1)/(4n³ + 5n)`, and Madhava's thirteen-digit circumference.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{pow10, ExactRational, HpDecimal};

/// Largest term count summed as an exact fraction.
pub const EXACT_TERMS_LIMIT: u64 = 10_000;

/// Terms per parallel chunk.
const CHUNK: u64 = 512;

fn check_terms(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::NonPositive { what: "term count" });
    }
    Ok(())
}

fn term_sign(k: u64) -> i32 {
    if k % 2 == 1 {
        1
    } else {
        -1
    }
}

/// Runs `f` over `1..=n` in fixed chunks and adds the chunk sums in order.
fn chunked_sum(n: u64, f: impl Fn(u64) -> BigInt + Sync) -> BigInt {
    let chunks = n.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK + 1;
            let hi = ((c + 1) * CHUNK).min(n);
            (lo..=hi).map(&f).sum::<BigInt>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .sum()
}

/// `S_n = Σ_{k=1..n} (−1)^{k−1}/(2k − 1)` exactly, for `n ≤ 10⁴`.
pub fn leibniz_partial(n: u64) -> Result<ExactRational> {
    check_terms(n)?;
    if n > EXACT_TERMS_LIMIT {
        return Err(Error::out_of_range(
            "term count",
            format!("{n} exceeds {EXACT_TERMS_LIMIT} for exact sums; use the decimal mode"),
        ));
    }
    // one common denominator instead of n fraction additions
    let lcd = (1..=n).fold(BigInt::one(), |acc, k| acc.lcm(&BigInt::from(2 * k - 1)));
    let numer = chunked_sum(n, |k| &lcd / (2 * k - 1) * term_sign(k));
    Ok(ExactRational::new(numer, lcd))
}

/// `S_n` at `digits` with a certified bound, for any `n`.
pub fn leibniz_partial_decimal(n: u64, digits: u32) -> Result<HpDecimal> {
    check_terms(n)?;
    let guard = n.to_string().len() as u32 + 2;
    let scale = digits + guard;
    let unit = pow10(scale);
    // each term is truncated toward zero, so off by under one ulp
    let sum = chunked_sum(n, |k| &unit / (2 * k - 1) * term_sign(k));
    Ok(HpDecimal::with_error(sum, scale, n.into()).round_to(digits))
}

/// Magnitude of the end correction, `(n² + 1)/(4n³ + 5n)`.
pub fn end_correction(n: u64) -> Result<ExactRational> {
    check_terms(n)?;
    let n = BigInt::from(n);
    Ok(ExactRational::new(
        &n * &n + 1,
        BigInt::from(4) * &n * &n * &n + BigInt::from(5) * &n,
    ))
}

/// Which sign to give the end correction after `n` terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignPolicy {
    /// `(−1)^n`, the sign of the first omitted term.
    #[default]
    Empirical,
    /// `(−1)^(n−1)`, as printed alongside the n-term partial sum.
    Literal,
}

impl SignPolicy {
    fn sign(self, n: u64) -> i32 {
        let literal = term_sign(n);
        match self {
            SignPolicy::Literal => literal,
            SignPolicy::Empirical => -literal,
        }
    }
}

impl fmt::Display for SignPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignPolicy::Empirical => "empirical",
            SignPolicy::Literal => "literal",
        })
    }
}

impl FromStr for SignPolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "empirical" => Ok(SignPolicy::Empirical),
            "literal" => Ok(SignPolicy::Literal),
            _ => Err(Error::Parse(format!("unknown sign policy `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesEstimate {
    pub n: u64,
    pub sign: SignPolicy,
    pub partial: ExactRational,
    /// Signed end correction added to `partial`.
    pub correction: ExactRational,
    pub corrected: ExactRational,
    /// `4 · corrected`.
    pub pi_estimate: ExactRational,
}

/// `4·(S_n ± (n² + 1)/(4n³ + 5n))` exactly.
pub fn corrected_pi(n: u64, sign: SignPolicy) -> Result<SeriesEstimate> {
    let partial = leibniz_partial(n)?;
    let correction = end_correction(n)? * ExactRational::from(sign.sign(n));
    let corrected = &partial + &correction;
    let pi_estimate = ExactRational::from(4) * &corrected;
    Ok(SeriesEstimate {
        n,
        sign,
        partial,
        correction,
        corrected,
        pi_estimate,
    })
}

/// [`corrected_pi`]'s estimate in decimal, for `n` beyond the exact limit.
pub fn corrected_pi_decimal(n: u64, sign: SignPolicy, digits: u32) -> Result<HpDecimal> {
    let work = digits + 4;
    let partial = leibniz_partial_decimal(n, work)?;
    let correction = end_correction(n)? * ExactRational::from(sign.sign(n));
    Ok(partial
        .add(&correction.to_decimal(work))
        .mul_rational(&ExactRational::from(4), work)
        .round_to(digits))
}

/// Circumference 2,827,433,388,233 for diameter 900,000,000,000.
pub fn madhava_value() -> ExactRational {
    ExactRational::new(2_827_433_388_233i64, 900_000_000_000i64)
}

fn possible_roundings(v: &HpDecimal, k: u32) -> (BigInt, BigInt) {
    let (lo, hi) = v.bounds();
    (
        lo.to_decimal(k).mantissa().clone(),
        hi.to_decimal(k).mantissa().clone(),
    )
}

fn certified_depth(v: &HpDecimal) -> u32 {
    if v.is_exact() {
        v.scale()
    } else {
        v.scale().saturating_sub(1)
    }
}

/// Largest `k` at which both values round half-up to the same `k`-digit
/// string.
///
/// Scans downward from the deepest level both values can speak to. Levels
/// where the possible roundings are disjoint are certain disagreements; the
/// first level where both roundings are certain and equal is the answer.
/// Anything in between is an [`Error::InsufficientPrecision`].
pub fn digits_correct(approx: &HpDecimal, reference: &HpDecimal) -> Result<u32> {
    let top = certified_depth(approx).min(certified_depth(reference));
    for k in (0..=top).rev() {
        let (a_lo, a_hi) = possible_roundings(approx, k);
        let (b_lo, b_hi) = possible_roundings(reference, k);
        if a_hi < b_lo || b_hi < a_lo {
            continue;
        }
        if a_lo == a_hi && b_lo == b_hi {
            return Ok(k);
        }
        return Err(Error::precision(format!(
            "cannot decide agreement at {k} digits between {approx:?} and {reference:?}"
        )));
    }
    Err(Error::precision(format!(
        "{approx:?} and {reference:?} disagree even in the integer part"
    )))
}

/// `Ordering` of `|a − π|` against `|b − π|` for exact candidates, using a
/// reference decimal.
pub fn closer_to(a: &ExactRational, b: &ExactRational, reference: &HpDecimal) -> Option<Ordering> {
    let scale = reference.scale() + 4;
    let da = a.to_decimal(scale).sub(reference).abs();
    let db = b.to_decimal(scale).sub(reference).abs();
    da.certified_cmp(&db)
}

/// Whether `4·S_n` should lie above π: the partial sums of an alternating
/// series with shrinking terms bracket the limit, above after an odd count.
pub fn brackets_from_above(n: u64) -> bool {
    n % 2 == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    #[test]
    fn partial_sums() {
        assert_eq!(leibniz_partial(1).unwrap(), q(1, 1));
        assert_eq!(leibniz_partial(3).unwrap(), q(13, 15));
        let s100 = leibniz_partial(100).unwrap() * ExactRational::from(4);
        assert_eq!(s100.to_decimal(4).to_string(), "3.1316");
        assert!(leibniz_partial(0).is_err());
        assert!(leibniz_partial(EXACT_TERMS_LIMIT + 1).is_err());
    }

    #[test]
    fn exact_and_decimal_partials_agree() {
        for n in [1, 2, 7, 100, 513, 2000] {
            let exact = leibniz_partial(n).unwrap().to_decimal(30);
            let dec = leibniz_partial_decimal(n, 30).unwrap();
            assert!(exact.sub(&dec).abs().mantissa() <= &2.into(), "n = {n}");
        }
    }

    #[test]
    fn corrections() {
        assert_eq!(end_correction(1).unwrap(), q(2, 9));
        assert_eq!(end_correction(2).unwrap(), q(5, 42));
        let n = 10_000u64;
        let scaled = end_correction(n).unwrap() * ExactRational::from(n);
        assert_eq!(scaled.to_decimal(4).to_string(), "0.2500");
    }

    #[test]
    fn sign_policies() {
        assert_eq!(
            corrected_pi(1, SignPolicy::Empirical).unwrap().pi_estimate,
            q(28, 9)
        );
        assert_eq!(
            corrected_pi(1, SignPolicy::Literal)
                .unwrap()
                .pi_estimate,
            q(44, 9)
        );
        assert_eq!(
            corrected_pi(2, SignPolicy::Empirical).unwrap().pi_estimate,
            q(22, 7)
        );
        assert_eq!(
            "Literal".parse::<SignPolicy>().unwrap(),
            SignPolicy::Literal
        );
    }

    #[test]
    fn fifty_terms() {
        let est = corrected_pi(50, SignPolicy::Empirical).unwrap();
        let pi = oracle::pi_oracle(40).unwrap();
        let err = est.pi_estimate.to_decimal(40).sub(&pi).abs();
        assert_eq!(
            err.certified_cmp(&HpDecimal::exact(5, 11)),
            Some(Ordering::Less)
        );
        assert!(digits_correct(&est.pi_estimate.to_decimal(40), &pi).unwrap() >= 11);
        let dec = corrected_pi_decimal(50, SignPolicy::Empirical, 30).unwrap();
        assert_eq!(
            dec.render_rounded(25),
            est.pi_estimate.to_decimal(25).to_string()
        );
    }

    #[test]
    fn madhava() {
        let m = madhava_value();
        assert_eq!(m.to_decimal(12).to_string(), "3.141592653592");
        let pi = oracle::pi_oracle(40).unwrap();
        assert_eq!(digits_correct(&m.to_decimal(40), &pi).unwrap(), 11);
        assert_eq!(m.to_decimal(40).certified_cmp(&pi), Some(Ordering::Greater));
    }

    #[test]
    fn digits_correct_examples() {
        let pi = oracle::pi_oracle(40).unwrap();
        assert_eq!(digits_correct(&HpDecimal::exact(31416, 4), &pi).unwrap(), 4);
        assert_eq!(digits_correct(&q(355, 113).to_decimal(40), &pi).unwrap(), 6);
        assert_eq!(digits_correct(&pi, &pi).unwrap(), 39);
        let x = HpDecimal::exact(12345, 3);
        assert_eq!(digits_correct(&x, &x).unwrap(), 3);
        // 0.5 ± 1 ulp at one digit: rounding to 0 digits is undecidable
        let fuzzy = HpDecimal::new(5.into(), 1, 1);
        assert!(digits_correct(&fuzzy, &HpDecimal::exact(5, 1)).is_err());
        assert!(digits_correct(&HpDecimal::exact(3, 0), &HpDecimal::exact(9, 0)).is_err());
    }

    #[test]
    fn bracketing_and_correction_gain() {
        let pi = oracle::pi_oracle(30).unwrap();
        for n in 1..=200u64 {
            let est = corrected_pi(n, SignPolicy::Empirical).unwrap();
            let raw = ExactRational::from(4) * &est.partial;
            let above = raw.to_decimal(34).certified_cmp(&pi) == Some(Ordering::Greater);
            assert_eq!(above, brackets_from_above(n), "n = {n}");
            assert_eq!(
                closer_to(&est.pi_estimate, &raw, &pi),
                Some(Ordering::Less),
                "n = {n}"
            );
        }
    }
}
