use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

use super::{isqrt_rational, ExactRational, RootMode};
use crate::error::{Error, Result};

pub(crate) fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

fn div_floor(n: &BigInt, d: &BigInt) -> BigInt {
    n.div_floor(d)
}

fn div_ceil(n: &BigInt, d: &BigInt) -> BigInt {
    -(-n).div_floor(d)
}

/// Rounds `m · 10^-from` to `to < from` digits, half away from zero.
fn round_half_away(m: &BigInt, from: u32, to: u32) -> BigInt {
    if to >= from {
        return m * pow10(to - from);
    }
    let p = pow10(from - to);
    let (q, r) = m.abs().div_rem(&p);
    let mag = if r * 2u32 >= p { q + 1u32 } else { q };
    if m.is_negative() {
        -mag
    } else {
        mag
    }
}

fn truncate_toward_zero(m: &BigInt, from: u32, to: u32) -> BigInt {
    if to >= from {
        return m * pow10(to - from);
    }
    let mag = m.abs() / pow10(from - to);
    if m.is_negative() {
        -mag
    } else {
        mag
    }
}

fn render(m: &BigInt, scale: u32) -> String {
    let digits = m.abs().to_string();
    let sign = if m.is_negative() { "-" } else { "" };
    if scale == 0 {
        return format!("{sign}{digits}");
    }
    let s = scale as usize;
    let padded = if digits.len() <= s {
        format!("{}{}", "0".repeat(s + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int, frac) = padded.split_at(padded.len() - s);
    format!("{sign}{int}.{frac}")
}

/// Closed interval `[lo, hi] · 10^-scale`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Interval {
    pub lo: BigInt,
    pub hi: BigInt,
    pub scale: u32,
}

impl Interval {
    pub fn point(m: BigInt, scale: u32) -> Self {
        Interval {
            lo: m.clone(),
            hi: m,
            scale,
        }
    }

    /// Outward-rounded copy at another scale.
    pub fn rescale(&self, scale: u32) -> Self {
        if scale >= self.scale {
            let f = pow10(scale - self.scale);
            Interval {
                lo: &self.lo * &f,
                hi: &self.hi * &f,
                scale,
            }
        } else {
            let f = pow10(self.scale - scale);
            Interval {
                lo: div_floor(&self.lo, &f),
                hi: div_ceil(&self.hi, &f),
                scale,
            }
        }
    }

    pub fn into_decimal(self) -> HpDecimal {
        let sum = &self.lo + &self.hi;
        let mid = div_floor(&sum, &BigInt::from(2));
        let err = (&self.hi - &mid).magnitude().clone();
        HpDecimal::with_error(mid, self.scale, err)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }
}

/// A decimal `mantissa · 10^-scale` carrying a guaranteed bound on its
/// distance from the quantity it approximates: `|true − value| <= err_ulp ·
/// 10^-scale`.
///
/// Arithmetic runs on the enclosing interval and rounds outward, so the
/// bound survives every operation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HpDecimal {
    mantissa: BigInt,
    scale: u32,
    err: BigUint,
}

impl HpDecimal {
    pub fn new(mantissa: BigInt, scale: u32, err_ulp: u64) -> Self {
        Self::with_error(mantissa, scale, BigUint::from(err_ulp))
    }

    pub fn with_error(mantissa: BigInt, scale: u32, err: BigUint) -> Self {
        HpDecimal {
            mantissa,
            scale,
            err,
        }
    }

    pub fn exact(mantissa: impl Into<BigInt>, scale: u32) -> Self {
        Self::new(mantissa.into(), scale, 0)
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::exact(n, 0)
    }

    pub fn zero() -> Self {
        Self::exact(0, 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    /// Error bound in ulps, saturating at `u64::MAX`.
    pub fn err_ulp(&self) -> u64 {
        self.err.to_u64().unwrap_or(u64::MAX)
    }

    pub fn err_bound(&self) -> &BigUint {
        &self.err
    }

    pub fn is_exact(&self) -> bool {
        self.err.is_zero()
    }

    pub(crate) fn interval(&self) -> Interval {
        let e = BigInt::from(self.err.clone());
        Interval {
            lo: &self.mantissa - &e,
            hi: &self.mantissa + &e,
            scale: self.scale,
        }
    }

    /// The represented value as an exact fraction (the midpoint).
    pub fn to_rational(&self) -> ExactRational {
        ExactRational::new(self.mantissa.clone(), pow10(self.scale))
    }

    /// Lower and upper bounds on the true value.
    pub fn bounds(&self) -> (ExactRational, ExactRational) {
        let iv = self.interval();
        let d = pow10(self.scale);
        (
            ExactRational::new(iv.lo, d.clone()),
            ExactRational::new(iv.hi, d),
        )
    }

    /// `Some(sign)` when the sign of the true value is certain.
    pub fn certified_sign(&self) -> Option<Ordering> {
        let iv = self.interval();
        if iv.lo.is_positive() {
            Some(Ordering::Greater)
        } else if iv.hi.is_negative() {
            Some(Ordering::Less)
        } else if iv.lo.is_zero() && iv.hi.is_zero() {
            Some(Ordering::Equal)
        } else {
            None
        }
    }

    /// Rounds half away from zero to `digits` fractional digits, widening the
    /// error bound accordingly.
    pub fn round_to(&self, digits: u32) -> HpDecimal {
        if digits >= self.scale {
            let f = pow10(digits - self.scale);
            let err = &self.err * f.magnitude();
            return HpDecimal::with_error(&self.mantissa * f, digits, err);
        }
        let p = pow10(self.scale - digits);
        let rounded = round_half_away(&self.mantissa, self.scale, digits);
        let moved = (&rounded * &p - &self.mantissa).abs();
        let total = moved + BigInt::from(self.err.clone());
        let err = div_ceil(&total, &p).magnitude().clone();
        HpDecimal::with_error(rounded, digits, err)
    }

    /// Plain rendering of the mantissa: optional sign, integer part, `.`, and
    /// exactly `scale` fractional digits.
    pub fn render(&self) -> String {
        render(&self.mantissa, self.scale)
    }

    /// Half-up rendering at `digits` fractional digits.
    pub fn render_rounded(&self, digits: u32) -> String {
        render(&round_half_away(&self.mantissa, self.scale, digits), digits)
    }

    /// Rendering cut after `digits` fractional digits, the way printed values
    /// with a trailing ellipsis are quoted.
    pub fn render_truncated(&self, digits: u32) -> String {
        render(
            &truncate_toward_zero(&self.mantissa, self.scale, digits),
            digits,
        )
    }

    /// Half-up rendering at `digits`, but only if every value inside the error
    /// bound rounds to the same string.
    pub fn certified_rounding(&self, digits: u32) -> Option<String> {
        // rounding is monotone, so agreement at both ends covers the interval
        let iv = self.interval();
        let lo = round_half_away(&iv.lo, self.scale, digits);
        let hi = round_half_away(&iv.hi, self.scale, digits);
        (lo == hi).then(|| render(&lo, digits))
    }

    /// As [`HpDecimal::certified_rounding`] for truncation.
    pub fn certified_truncation(&self, digits: u32) -> Option<String> {
        let iv = self.interval();
        let lo = truncate_toward_zero(&iv.lo, self.scale, digits);
        let hi = truncate_toward_zero(&iv.hi, self.scale, digits);
        (lo == hi).then(|| render(&lo, digits))
    }

    pub fn neg(&self) -> HpDecimal {
        HpDecimal::with_error(-&self.mantissa, self.scale, self.err.clone())
    }

    pub fn abs(&self) -> HpDecimal {
        HpDecimal::with_error(self.mantissa.abs(), self.scale, self.err.clone())
    }

    /// Exact sum at the finer of the two scales.
    pub fn add(&self, rhs: &HpDecimal) -> HpDecimal {
        let s = self.scale.max(rhs.scale);
        let a = self.interval().rescale(s);
        let b = rhs.interval().rescale(s);
        Interval {
            lo: a.lo + b.lo,
            hi: a.hi + b.hi,
            scale: s,
        }
        .into_decimal()
    }

    pub fn sub(&self, rhs: &HpDecimal) -> HpDecimal {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &HpDecimal, scale: u32) -> HpDecimal {
        let a = self.interval();
        let b = rhs.interval();
        let s = a.scale + b.scale;
        let products = [&a.lo * &b.lo, &a.lo * &b.hi, &a.hi * &b.lo, &a.hi * &b.hi];
        let lo = products.iter().min().expect("non-empty").clone();
        let hi = products.iter().max().expect("non-empty").clone();
        Interval { lo, hi, scale: s }.rescale(scale).into_decimal()
    }

    pub fn mul_rational(&self, rhs: &ExactRational, scale: u32) -> HpDecimal {
        let a = self.interval();
        let num = rhs.numer();
        let den = rhs.denom() * pow10(a.scale);
        let f = pow10(scale);
        let ends = [&a.lo * num * &f, &a.hi * num * &f];
        let (small, large) = if ends[0] <= ends[1] {
            (&ends[0], &ends[1])
        } else {
            (&ends[1], &ends[0])
        };
        Interval {
            lo: div_floor(small, &den),
            hi: div_ceil(large, &den),
            scale,
        }
        .into_decimal()
    }

    /// Quotient at `scale`. Fails when the divisor's interval contains zero.
    pub fn div(&self, rhs: &HpDecimal, scale: u32) -> Result<HpDecimal> {
        let a = self.interval();
        let b = rhs.interval();
        if b.contains_zero() {
            return Err(if rhs.mantissa.is_zero() && rhs.err.is_zero() {
                Error::DivisionByZero
            } else {
                Error::precision("divisor not certified nonzero")
            });
        }
        // x/y · 10^scale = x_m · 10^(scale + sy) / (y_m · 10^sx)
        let up = pow10(scale + b.scale);
        let down = pow10(a.scale);
        let mut lo: Option<BigInt> = None;
        let mut hi: Option<BigInt> = None;
        for x in [&a.lo, &a.hi] {
            for y in [&b.lo, &b.hi] {
                let mut n = x * &up;
                let mut d = y * &down;
                if d.is_negative() {
                    n = -n;
                    d = -d;
                }
                let f = div_floor(&n, &d);
                let c = div_ceil(&n, &d);
                lo = Some(lo.map_or(f.clone(), |v| v.min(f)));
                hi = Some(hi.map_or(c.clone(), |v| v.max(c)));
            }
        }
        Ok(Interval {
            lo: lo.expect("set"),
            hi: hi.expect("set"),
            scale,
        }
        .into_decimal())
    }

    /// Square root at `scale`. A lower bound below zero is clipped, since the
    /// true value is assumed non-negative; a certified-negative value fails.
    pub fn sqrt(&self, scale: u32) -> Result<HpDecimal> {
        let a = self.interval();
        if a.hi.is_negative() {
            return Err(Error::domain(format!(
                "square root of negative value {self}"
            )));
        }
        let den = pow10(a.scale);
        let f = pow10(2 * scale);
        let lo = if a.lo.is_negative() {
            BigUint::zero()
        } else {
            isqrt_rational(
                &ExactRational::new(&a.lo * &f, den.clone()),
                RootMode::Floor,
            )?
        };
        let hi = isqrt_rational(&ExactRational::new(&a.hi * &f, den), RootMode::Ceil)?;
        Ok(Interval {
            lo: lo.into(),
            hi: hi.into(),
            scale,
        }
        .into_decimal())
    }

    /// Certified ordering of two values, if their intervals do not overlap
    /// (or both are exact).
    pub fn certified_cmp(&self, rhs: &HpDecimal) -> Option<Ordering> {
        self.sub(rhs).certified_sign()
    }
}

impl fmt::Display for HpDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for HpDecimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}±{}ulp", self.render(), self.err)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(m: i64, s: u32) -> HpDecimal {
        HpDecimal::exact(m, s)
    }

    #[test]
    fn rendering() {
        assert_eq!(d(31416, 4).to_string(), "3.1416");
        assert_eq!(d(-5, 3).to_string(), "-0.005");
        assert_eq!(d(7, 0).to_string(), "7");
        assert_eq!(d(0, 2).to_string(), "0.00");
        assert_eq!(d(31415929, 7).render_rounded(4), "3.1416");
        assert_eq!(d(99468, 5).render_truncated(4), "0.9946");
        assert_eq!(d(99468, 5).render_rounded(4), "0.9947");
        assert_eq!(d(-15, 1).render_rounded(0), "-2");
        assert_eq!(d(-14, 1).render_rounded(0), "-1");
    }

    #[test]
    fn rounding_tracks_error() {
        let x = HpDecimal::new(BigInt::from(314159), 5, 2);
        let r = x.round_to(3);
        assert_eq!(r.to_string(), "3.142");
        assert_eq!(r.err_ulp(), 1);
        assert_eq!(d(3140, 3).round_to(2).err_ulp(), 0);
    }

    #[test]
    fn arithmetic_encloses_truth() {
        let a = d(1, 0);
        let b = d(3, 0);
        let third = a.div(&b, 10).unwrap();
        let (lo, hi) = third.bounds();
        let truth = ExactRational::new(1, 3);
        assert!(lo <= truth && truth <= hi);
        let nine_thirds = third.mul_rational(&ExactRational::from(9), 10);
        let (lo, hi) = nine_thirds.bounds();
        assert!(lo <= ExactRational::from(3) && ExactRational::from(3) <= hi);
        let two = d(2, 0).sqrt(12).unwrap();
        assert_eq!(two.round_to(7).to_string(), "1.4142136");
        let sq = two.mul(&two, 12);
        let (lo, hi) = sq.bounds();
        assert!(lo <= ExactRational::from(2) && ExactRational::from(2) <= hi);
    }

    #[test]
    fn division_failures() {
        assert_eq!(d(1, 0).div(&d(0, 0), 3), Err(Error::DivisionByZero));
        let fuzzy_zero = HpDecimal::new(BigInt::from(0), 3, 1);
        assert!(matches!(
            d(1, 0).div(&fuzzy_zero, 3),
            Err(Error::InsufficientPrecision(_))
        ));
        assert!(d(-1, 0).sqrt(3).is_err());
    }

    #[test]
    fn certification() {
        let x = HpDecimal::new(BigInt::from(31415), 4, 1);
        assert_eq!(x.certified_rounding(2).as_deref(), Some("3.14"));
        let y = HpDecimal::new(BigInt::from(31415), 4, 1);
        assert_eq!(y.certified_rounding(3), None); // 3.1414 .. 3.1416 straddles 3.1415
        assert_eq!(x.certified_sign(), Some(Ordering::Greater));
        assert_eq!(HpDecimal::new(BigInt::from(1), 4, 2).certified_sign(), None);
    }
}
