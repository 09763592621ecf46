//! Bhāskara II's arc from chord, diameter and circumference.
//!
//! The verse gives `a = p/2 − √(p²/4 − 5p²c/(4(c + 4d)))`. Pulling `p/2` out
//! of the root leaves `a = (p/2)(1 − √ρ)` with `ρ = 4(d − c)/(c + 4d)`, so for
//! rational `c, d` the arc is `p` times an element of `ℚ(√k)`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactnum::{ExactRational, HpDecimal, QuadSurd};
use crate::oracle;

fn check(c: &ExactRational, d: &ExactRational) -> Result<()> {
    if !d.is_positive() {
        return Err(Error::NonPositive { what: "diameter" });
    }
    if c.is_negative() || c > d {
        return Err(Error::out_of_range(
            "chord",
            format!("need 0 ≤ c ≤ {d}, got {c}"),
        ));
    }
    Ok(())
}

fn check_p(p: &ExactRational) -> Result<()> {
    if !p.is_positive() {
        return Err(Error::NonPositive {
            what: "circumference",
        });
    }
    Ok(())
}

/// `ρ = 1 − 5c/(c + 4d) = 4(d − c)/(c + 4d)`.
fn rho(c: &ExactRational, d: &ExactRational) -> ExactRational {
    ExactRational::from(4) * (d - c) / (c + ExactRational::from(4) * d)
}

/// `a/p = (1 − √ρ)/2`, exactly.
pub fn bhaskara2_factor(c: &ExactRational, d: &ExactRational) -> Result<QuadSurd> {
    check(c, d)?;
    let root = QuadSurd::sqrt_rational(&rho(c, d))?;
    Ok(root
        .neg()
        .add_rational(&ExactRational::one())
        .scale(&ExactRational::new(1, 2)))
}

/// Arc for a rational circumference `p`, simplified form.
pub fn bhaskara2_arc(c: &ExactRational, d: &ExactRational, p: &ExactRational) -> Result<QuadSurd> {
    check_p(p)?;
    Ok(bhaskara2_factor(c, d)?.scale(p))
}

/// Arc for a rational circumference, evaluated term by term as the verse
/// states it.
pub fn bhaskara2_arc_verse(
    c: &ExactRational,
    d: &ExactRational,
    p: &ExactRational,
) -> Result<QuadSurd> {
    check(c, d)?;
    check_p(p)?;
    let p2 = p.square();
    let radicand = &p2 / ExactRational::from(4)
        - ExactRational::from(5) * &p2 * c
            / (ExactRational::from(4) * (c + ExactRational::from(4) * d));
    let root = QuadSurd::sqrt_rational(&radicand)?;
    Ok(root.neg().add_rational(&(p / ExactRational::from(2))))
}

/// Arc with the circumference taken as oracle `π·d`, at `digits`.
pub fn bhaskara2_arc_oracle(
    c: &ExactRational,
    d: &ExactRational,
    digits: u32,
) -> Result<HpDecimal> {
    check(c, d)?;
    let work = digits + 8;
    let p = oracle::pi_decimal(work).mul_rational(d, work);
    let factor = bhaskara2_factor(c, d)?.eval(work);
    Ok(factor.mul(&p, work).round_to(digits))
}

fn check_hp(c: &HpDecimal, d: &ExactRational, p: &HpDecimal) -> Result<()> {
    if !d.is_positive() {
        return Err(Error::NonPositive { what: "diameter" });
    }
    if p.certified_sign() != Some(Ordering::Greater) {
        return Err(Error::NonPositive {
            what: "circumference",
        });
    }
    if c.certified_sign() == Some(Ordering::Less) {
        return Err(Error::NonPositive { what: "chord" });
    }
    Ok(())
}

/// Simplified form on decimal inputs, for error scans.
pub fn bhaskara2_arc_hp(
    c: &HpDecimal,
    d: &ExactRational,
    p: &HpDecimal,
    scale: u32,
) -> Result<HpDecimal> {
    check_hp(c, d, p)?;
    let dd = d.to_decimal(scale);
    let four_d = dd.mul_rational(&ExactRational::from(4), scale);
    let rho = four_d
        .sub(&c.mul_rational(&ExactRational::from(4), scale))
        .div(&c.add(&four_d), scale)?;
    let one = HpDecimal::from_integer(1);
    Ok(one
        .sub(&rho.sqrt(scale)?)
        .mul(p, scale)
        .mul_rational(&ExactRational::new(1, 2), scale))
}

/// Verse form on decimal inputs.
pub fn bhaskara2_arc_verse_hp(
    c: &HpDecimal,
    d: &ExactRational,
    p: &HpDecimal,
    scale: u32,
) -> Result<HpDecimal> {
    check_hp(c, d, p)?;
    let dd = d.to_decimal(scale);
    let p2 = p.mul(p, scale);
    let quarter = p2.mul_rational(&ExactRational::new(1, 4), scale);
    let denom = c
        .add(&dd.mul_rational(&ExactRational::from(4), scale))
        .mul_rational(&ExactRational::from(4), scale);
    let sub = p2
        .mul(c, scale)
        .mul_rational(&ExactRational::from(5), scale)
        .div(&denom, scale)?;
    let half_p = p.mul_rational(&ExactRational::new(1, 2), scale);
    Ok(half_p.sub(&quarter.sub(&sub).sqrt(scale)?))
}
