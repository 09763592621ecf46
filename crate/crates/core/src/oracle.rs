//! Reference values every historical method is measured against.
//!
//! π comes from Machin's identity `π = 16·atan(1/5) − 4·atan(1/239)` summed
//! in scaled integers; the sine from its Taylor series. Both carry explicit
//! truncation and rounding bounds, and neither shares code with the methods
//! under test.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{pow10, ExactRational, HpDecimal, Interval};

/// Largest precision [`pi_oracle`] accepts.
pub const MAX_PI_DIGITS: u32 = 200;

const GUARD: u32 = 12;

/// `atan(1/x) · 10^scale` and a bound on its error in ulps.
fn atan_inverse(x: u32, scale: u32) -> (BigInt, u64) {
    let x2 = BigInt::from(x) * x;
    // power = ⌊10^scale / x^(2k+1)⌋ exactly: repeated floor division composes
    let mut power = pow10(scale) / x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    // each term is off by less than 2 ulps; the omitted alternating tail is
    // below the first vanished power, i.e. below 1 ulp
    (sum, 2 * k + 1)
}

/// Enclosure of π at `scale` fractional digits, a few ulps wide.
pub(crate) fn pi_interval(scale: u32) -> Interval {
    let work = scale + GUARD;
    let (a, ea) = atan_inverse(5, work);
    let (b, eb) = atan_inverse(239, work);
    let mid = a * 16 - b * 4;
    let err = BigInt::from(16 * ea + 4 * eb);
    Interval {
        lo: &mid - &err,
        hi: &mid + &err,
        scale: work,
    }
    .rescale(scale)
}

/// π to `digits` fractional digits, absolute error below `10^-digits`.
pub fn pi_oracle(digits: u32) -> Result<HpDecimal> {
    if !(1..=MAX_PI_DIGITS).contains(&digits) {
        return Err(Error::out_of_range(
            "digits",
            format!("{digits} not in 1..={MAX_PI_DIGITS}"),
        ));
    }
    Ok(pi_interval(digits + 4).into_decimal().round_to(digits))
}

/// π with no upper bound on precision, for internal comparisons.
pub(crate) fn pi_decimal(scale: u32) -> HpDecimal {
    pi_interval(scale).into_decimal()
}

fn check_degrees(theta: &ExactRational) -> Result<()> {
    if theta.is_negative() || *theta > 180 {
        return Err(Error::domain(format!("angle {theta}° outside [0°, 180°]")));
    }
    Ok(())
}

/// Taylor sum for `sin(x)` with `x ∈ [0, π/2]` given at `scale`.
fn sin_taylor(x: &BigInt, scale: u32) -> (BigInt, u64) {
    let one = pow10(scale);
    let x2 = (x * x).div_floor(&one);
    let mut term = x.clone();
    let mut sum = x.clone();
    let mut k: u64 = 1;
    loop {
        term = (&term * &x2).div_floor(&(&one * ((2 * k) * (2 * k + 1))));
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        k += 1;
    }
    // |x| <= 1.6 keeps per-term rounding drift under 3 ulps
    (sum, 3 * k + 5)
}

/// Enclosure of `sin(θ°)` at `scale` for `θ ∈ [0, 180]`.
pub(crate) fn sin_interval(theta_deg: &ExactRational, scale: u32) -> Result<Interval> {
    check_degrees(theta_deg)?;
    let reduced = if *theta_deg > 90 {
        ExactRational::from(180) - theta_deg
    } else {
        theta_deg.clone()
    };
    if reduced.is_zero() {
        return Ok(Interval::point(BigInt::zero(), scale));
    }
    if reduced == 90 {
        return Ok(Interval::point(pow10(scale), scale));
    }
    let work = scale + GUARD;
    let pi = pi_interval(work);
    let factor = ExactRational::new(reduced.numer().clone(), reduced.denom() * 180);
    let x_lo = (&pi.lo * factor.numer()).div_floor(factor.denom());
    let x_hi = -((-&pi.hi * factor.numer()).div_floor(factor.denom()));
    let (s, e) = sin_taylor(&x_lo, work);
    // sin is 1-Lipschitz, so the spread of x adds directly
    let err = BigInt::from(e) + (&x_hi - &x_lo).abs();
    Ok(Interval {
        lo: &s - &err,
        hi: &s + &err,
        scale: work,
    }
    .rescale(scale))
}

/// `sin(θ)` for `θ` in degrees, absolute error below `10^-digits`.
///
/// `θ = 0, 30, 90, 150, 180` come back exact.
pub fn sin_oracle(theta_deg: &ExactRational, digits: u32) -> Result<HpDecimal> {
    check_degrees(theta_deg)?;
    if digits == 0 {
        return Err(Error::NonPositive { what: "digits" });
    }
    let reduced = if *theta_deg > 90 {
        ExactRational::from(180) - theta_deg
    } else {
        theta_deg.clone()
    };
    if reduced.is_zero() || reduced == 90 || reduced == 30 {
        let exact = match () {
            _ if reduced.is_zero() => ExactRational::zero(),
            _ if reduced == 90 => ExactRational::one(),
            _ => ExactRational::new(1, 2),
        };
        return Ok(exact.to_decimal(digits));
    }
    Ok(sin_interval(&reduced, digits + 4)?
        .into_decimal()
        .round_to(digits))
}

/// `sin(θ°)` at `scale` with a small certified error, without the final
/// rounding step of [`sin_oracle`].
pub(crate) fn sin_decimal(theta_deg: &ExactRational, scale: u32) -> Result<HpDecimal> {
    Ok(sin_interval(theta_deg, scale)?.into_decimal())
}

/// `cos(θ°)` for `θ ∈ [0, 90]`.
pub(crate) fn cos_decimal(theta_deg: &ExactRational, scale: u32) -> Result<HpDecimal> {
    if *theta_deg > 90 || theta_deg.is_negative() {
        return Err(Error::domain(format!(
            "cosine argument {theta_deg}° outside [0°, 90°]"
        )));
    }
    sin_decimal(&(ExactRational::from(90) - theta_deg), scale)
}

/// `θ°` in radians at `scale`.
pub(crate) fn radians(theta_deg: &ExactRational, scale: u32) -> HpDecimal {
    let factor = ExactRational::new(theta_deg.numer().clone(), theta_deg.denom() * 180);
    pi_decimal(scale + 2).mul_rational(&factor, scale)
}

/// Signed relative error `(approx − reference) / reference`, positive for an
/// overestimate. The result is reported at the finer input scale with a
/// certified bound.
pub fn relative_error(approx: &HpDecimal, reference: &HpDecimal) -> Result<HpDecimal> {
    if reference.is_exact() && reference.mantissa().is_zero() {
        return Err(Error::domain("reference value is zero"));
    }
    let scale = approx.scale().max(reference.scale());
    approx.sub(reference).div(reference, scale)
}

/// [`relative_error`] rounded to `digits`, failing unless the rounded value is
/// within one ulp.
pub fn relative_error_to(
    approx: &HpDecimal,
    reference: &HpDecimal,
    digits: u32,
) -> Result<HpDecimal> {
    let r = relative_error(approx, reference)?.round_to(digits);
    if r.err_ulp() > 1 {
        return Err(Error::precision(format!(
            "relative error not certified to {digits} digits (±{} ulp)",
            r.err_ulp()
        )));
    }
    Ok(r)
}
