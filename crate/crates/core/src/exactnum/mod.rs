//! Exact arithmetic kernel: rationals, single-radicand quadratic surds,
//! integer square roots with explicit rounding, and certified decimals.
//!
//! Every value is immutable and every operation is pure.

mod decimal;
mod isqrt;
mod rational;
mod root;
mod surd;

pub use decimal::HpDecimal;
pub(crate) use decimal::{pow10, Interval};
pub use isqrt::{exact_sqrt, isqrt, isqrt_rational, isqrt_u128, RootMode};
pub use rational::ExactRational;
pub use root::SurdRoot;
pub use surd::{surd_cmp, surd_eval, QuadSurd};

use crate::error::{Error, Result};

/// Correctly rounded decimal rendering of an exact fraction.
pub fn to_decimal(x: &ExactRational, digits: u32) -> Result<HpDecimal> {
    if digits == 0 {
        return Err(Error::NonPositive { what: "digits" });
    }
    Ok(x.to_decimal(digits))
}
