use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;

use super::{exact_sqrt, ExactRational, HpDecimal, QuadSurd};
use crate::error::{Error, Result};

/// `√x` for a non-negative surd `x`.
///
/// When `x` is rational, or a perfect square in its own field such as
/// `11 − 6√2 = (3 − √2)²`, the root is itself a [`QuadSurd`] and is kept in
/// that form. Otherwise it is a nested radical such as `√((186+24√17)/225)`: the
/// radicand stays exact and decimals come from a certified square root.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SurdRoot {
    radicand: QuadSurd,
    collapsed: Option<QuadSurd>,
}

impl SurdRoot {
    pub fn new(radicand: QuadSurd) -> Result<Self> {
        if radicand.signum() == Ordering::Less {
            return Err(Error::domain(format!(
                "square root of negative value {radicand}"
            )));
        }
        let collapsed = match radicand.to_rational() {
            Some(r) => Some(QuadSurd::sqrt_rational(&r)?),
            None => denest(&radicand),
        };
        Ok(SurdRoot {
            radicand,
            collapsed,
        })
    }

    pub fn from_surd(x: QuadSurd) -> Result<Self> {
        if x.signum() == Ordering::Less {
            return Err(Error::domain(format!("{x} is negative")));
        }
        Ok(SurdRoot {
            radicand: x.square(),
            collapsed: Some(x),
        })
    }

    /// The exact square of the root.
    pub fn radicand(&self) -> &QuadSurd {
        &self.radicand
    }

    /// The root as a single-radicand surd, when it is one.
    pub fn as_surd(&self) -> Option<&QuadSurd> {
        self.collapsed.as_ref()
    }

    /// `t · √x` for `t > 0`, computed as `√(t² x)`.
    pub fn scale(&self, t: &ExactRational) -> Result<Self> {
        if !t.is_positive() {
            return Err(Error::NonPositive {
                what: "scale factor",
            });
        }
        Ok(SurdRoot {
            radicand: self.radicand.scale(&t.square()),
            collapsed: self.collapsed.as_ref().map(|s| s.scale(t)),
        })
    }

    pub fn eval(&self, digits: u32) -> HpDecimal {
        if let Some(s) = &self.collapsed {
            return s.eval(digits);
        }
        let work = digits + 6;
        self.radicand
            .eval(2 * work)
            .sqrt(work)
            .expect("radicand checked non-negative")
            .round_to(digits)
    }

    pub fn to_ascii(&self) -> String {
        match &self.collapsed {
            Some(s) => s.to_ascii(),
            None => format!("sqrt({})", self.radicand.to_ascii()),
        }
    }
}

fn rational_sqrt(r: &ExactRational) -> Option<ExactRational> {
    if r.is_negative() {
        return None;
    }
    let n = exact_sqrt(r.numer().magnitude())?;
    let d = exact_sqrt(r.denom().magnitude())?;
    Some(ExactRational::new(BigInt::from(n), BigInt::from(d)))
}

/// Finds `u + v√k` with rational `u, v` whose square is `x`, if any.
///
/// With `x = A + B√k`, such a root needs `u² = (A ± √(A² − B²k))/2`, so the
/// norm must be a rational square and one of the two candidates as well.
fn denest(x: &QuadSurd) -> Option<QuadSurd> {
    let q = x.q();
    let big_a = ExactRational::new(x.a().clone(), q.clone());
    let big_b = ExactRational::new(x.b().clone(), q.clone());
    let s = rational_sqrt(&x.norm())?;
    for u2 in [
        (&big_a + &s) / ExactRational::from(2),
        (&big_a - &s) / ExactRational::from(2),
    ] {
        let Some(u) = rational_sqrt(&u2) else {
            continue;
        };
        if u.is_zero() {
            continue;
        }
        let v = &big_b / (ExactRational::from(2) * &u);
        let k = x.radicand().clone();
        let candidate = QuadSurd::sqrt_integer(k).ok()?.scale(&v).add_rational(&u);
        if candidate.signum() == Ordering::Greater && &candidate.square() == x {
            return Some(candidate);
        }
    }
    None
}

impl fmt::Display for SurdRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.collapsed {
            Some(s) => write!(f, "{s}"),
            None => write!(f, "√({})", self.radicand),
        }
    }
}

impl fmt::Debug for SurdRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SurdRoot({self})")
    }
}
