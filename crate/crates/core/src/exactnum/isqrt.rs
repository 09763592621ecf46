//! Integer square roots by the decimal digit-pair procedure.
//!
//! The radicand is split into pairs of decimal digits from the right. Each
//! step brings down one pair, then picks the largest digit `x` with
//! `(20·root + x)·x <= remainder`. This is the schoolbook method that the
//! Siddhānta texts describe, carried out exactly.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use super::ExactRational;
use crate::error::{Error, Result};

/// Rounding rule applied to a square root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootMode {
    /// Largest `r` with `r² <= n`.
    Floor,
    /// Smallest `r` with `r² >= n`.
    Ceil,
    /// `r` minimizing `|r² - n|`, ties to the larger. For integers this
    /// coincides with rounding `√n` half-up.
    Nearest,
}

impl RootMode {
    pub const ALL: [RootMode; 3] = [RootMode::Floor, RootMode::Ceil, RootMode::Nearest];

    pub fn letter(self) -> char {
        match self {
            RootMode::Floor => 'f',
            RootMode::Ceil => 'c',
            RootMode::Nearest => 'n',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c {
            'f' | 'F' => Some(RootMode::Floor),
            'c' | 'C' => Some(RootMode::Ceil),
            'n' | 'N' => Some(RootMode::Nearest),
            _ => None,
        }
    }
}

impl fmt::Display for RootMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootMode::Floor => "floor",
            RootMode::Ceil => "ceil",
            RootMode::Nearest => "nearest",
        })
    }
}

impl FromStr for RootMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "floor" | "f" => Ok(RootMode::Floor),
            "ceil" | "c" => Ok(RootMode::Ceil),
            "nearest" | "n" => Ok(RootMode::Nearest),
            other => Err(Error::Parse(format!("unknown rounding mode `{other}`"))),
        }
    }
}

fn floor_sqrt_u128(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut pairs = [0u8; 20];
    let mut len = 0;
    let mut m = n;
    while m > 0 {
        pairs[len] = (m % 100) as u8;
        m /= 100;
        len += 1;
    }
    let mut root: u128 = 0;
    let mut rem: u128 = 0;
    for &pair in pairs[..len].iter().rev() {
        rem = rem * 100 + pair as u128;
        let base = 20 * root;
        let mut x = 9u128;
        while (base + x) * x > rem {
            x -= 1;
        }
        rem -= (base + x) * x;
        root = root * 10 + x;
    }
    root
}

fn floor_sqrt_big(n: &BigUint) -> BigUint {
    if n.bits() <= 120 {
        return BigUint::from(floor_sqrt_u128(n.to_u128().expect("fits in u128")));
    }
    let pairs = n.to_radix_be(100);
    let mut root = BigUint::zero();
    let mut rem = BigUint::zero();
    for pair in pairs {
        rem = rem * 100u32 + pair as u32;
        let base: BigUint = &root * 20u32;
        // trial digit from the leading part; corrected downward below
        let mut x = if base.is_zero() {
            9u32
        } else {
            (&rem / &base).to_u32().unwrap_or(9).min(9)
        };
        loop {
            let trial = (&base + x) * x;
            if trial <= rem {
                rem -= trial;
                break;
            }
            x -= 1;
        }
        root = root * 10u32 + x;
    }
    root
}

/// Integer square root of `n` under `mode`.
pub fn isqrt(n: &BigUint, mode: RootMode) -> BigUint {
    let r = floor_sqrt_big(n);
    match mode {
        RootMode::Floor => r,
        RootMode::Ceil => {
            if &r * &r == *n {
                r
            } else {
                r + 1u32
            }
        }
        RootMode::Nearest => {
            // round up when n >= (r + 1/2)², i.e. 4n >= (2r + 1)²
            let twice: BigUint = &r * 2u32 + 1u32;
            if n * 4u32 >= &twice * &twice {
                r + 1u32
            } else {
                r
            }
        }
    }
}

/// [`isqrt`] for machine integers.
pub fn isqrt_u128(n: u128, mode: RootMode) -> u128 {
    if n > (1u128 << 120) {
        return isqrt(&BigUint::from(n), mode)
            .to_u128()
            .expect("root of u128 fits");
    }
    let r = floor_sqrt_u128(n);
    match mode {
        RootMode::Floor => r,
        RootMode::Ceil => {
            if r * r == n {
                r
            } else {
                r + 1
            }
        }
        RootMode::Nearest => {
            if 4 * n >= (2 * r + 1) * (2 * r + 1) {
                r + 1
            } else {
                r
            }
        }
    }
}

/// Square root of a non-negative rational rounded to an integer under `mode`.
///
/// Floor and ceiling reduce to the integer case through `⌊√x⌋ = ⌊√⌊x⌋⌋` and
/// `⌈√x⌉ = ⌈√⌈x⌉⌉`; nearest rounds `√x` half-up.
pub fn isqrt_rational(x: &ExactRational, mode: RootMode) -> Result<BigUint> {
    if x.is_negative() {
        return Err(Error::domain(format!("square root of negative value {x}")));
    }
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    let (q, rem) = num.div_rem(den);
    match mode {
        RootMode::Floor => Ok(isqrt(&q, RootMode::Floor)),
        RootMode::Ceil => {
            let c = if rem.is_zero() { q } else { q + 1u32 };
            Ok(isqrt(&c, RootMode::Ceil))
        }
        RootMode::Nearest => {
            let r = isqrt(&q, RootMode::Floor);
            let twice: BigUint = &r * 2u32 + 1u32;
            if num * 4u32 >= &twice * &twice * den {
                Ok(r + 1u32)
            } else {
                Ok(r)
            }
        }
    }
}

/// Exact square root when `n` is a perfect square.
pub fn exact_sqrt(n: &BigUint) -> Option<BigUint> {
    let r = floor_sqrt_big(n);
    (&r * &r == *n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u128) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn spec_examples() {
        assert_eq!(isqrt(&big(4), RootMode::Floor), big(2));
        // 316227² = 99999515529 <= 10^11 < 316228² = 100000148004
        assert_eq!(isqrt(&big(100_000_000_000), RootMode::Floor), big(316_227));
        // 141421356² = 19999999932878736 <= 2·10^16 < 141421357²
        assert_eq!(
            isqrt(&big(20_000_000_000_000_000), RootMode::Floor),
            big(141_421_356)
        );
    }

    #[test]
    fn small_values_every_mode() {
        let cases: [(u128, [u128; 3]); 7] = [
            (0, [0, 0, 0]),
            (1, [1, 1, 1]),
            (2, [1, 2, 1]),
            (3, [1, 2, 2]),
            (6, [2, 3, 2]),
            (7, [2, 3, 3]),
            (10, [3, 4, 3]),
        ];
        for (n, [f, c, r]) in cases {
            assert_eq!(isqrt_u128(n, RootMode::Floor), f, "floor {n}");
            assert_eq!(isqrt_u128(n, RootMode::Ceil), c, "ceil {n}");
            assert_eq!(isqrt_u128(n, RootMode::Nearest), r, "nearest {n}");
        }
    }

    #[test]
    fn agrees_with_independent_newton_root() {
        // num-bigint's sqrt is a Newton iteration, unrelated to the pair method
        let mut n = BigUint::from(7u32);
        for _ in 0..120 {
            n = &n * 13u32 + 11u32;
            assert_eq!(isqrt(&n, RootMode::Floor), n.sqrt());
        }
    }

    #[test]
    fn u128_boundary() {
        let n = u128::MAX;
        let r = isqrt_u128(n, RootMode::Floor);
        assert_eq!(r, u64::MAX as u128);
        assert_eq!(isqrt_u128(n, RootMode::Ceil), r + 1);
    }

    #[test]
    fn rational_modes() {
        let x = ExactRational::new(9, 4); // √ = 1.5 exactly
        assert_eq!(isqrt_rational(&x, RootMode::Floor).unwrap(), big(1));
        assert_eq!(isqrt_rational(&x, RootMode::Ceil).unwrap(), big(2));
        assert_eq!(isqrt_rational(&x, RootMode::Nearest).unwrap(), big(2));
        let y = ExactRational::new(8, 4); // √2
        assert_eq!(isqrt_rational(&y, RootMode::Ceil).unwrap(), big(2));
        assert_eq!(isqrt_rational(&y, RootMode::Nearest).unwrap(), big(1));
        assert!(isqrt_rational(&ExactRational::new(-1, 2), RootMode::Floor).is_err());
    }

    #[test]
    fn perfect_square_detection() {
        assert_eq!(exact_sqrt(&big(144)), Some(big(12)));
        assert_eq!(exact_sqrt(&big(145)), None);
    }
}
