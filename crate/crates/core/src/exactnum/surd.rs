use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

use super::{exact_sqrt, ExactRational, HpDecimal};
use crate::error::{Error, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Splits `n = f² · m` with `m` square-free.
fn squarefree_split(n: &BigUint) -> Result<(BigUint, BigUint)> {
    if let Some(small) = n.to_u64() {
        let (f, m) = squarefree_split_u64(small);
        return Ok((BigUint::from(f), BigUint::from(m)));
    }
    let mut rest = n.clone();
    let mut f = BigUint::one();
    let mut free = BigUint::one();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        if let Some(small) = rest.to_u64() {
            let (g, m) = squarefree_split_u64(small);
            return Ok((f * g, free * m));
        }
        let mut e = 0u32;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        f *= BigUint::from(p).pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // every prime factor left exceeds TRIAL_LIMIT; below LIMIT³ there are at
    // most two of them, so the cofactor is 1, prime, p·q or p²
    if let Some(r) = exact_sqrt(&rest) {
        return Ok((f * r, free));
    }
    let limit = BigUint::from(TRIAL_LIMIT);
    if rest < &limit * &limit * &limit {
        Ok((f, free * rest))
    } else {
        Err(Error::Unsupported(format!(
            "cannot certify square-free part of radicand {n}"
        )))
    }
}

fn squarefree_split_u64(mut n: u64) -> (u64, u64) {
    if n == 0 {
        return (0, 0);
    }
    let mut f = 1u64;
    let mut m = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p).saturating_mul(p) <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            f *= p;
        }
        if e % 2 == 1 {
            m *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    // n is now 1, prime, p·q or p²
    let r = n.isqrt();
    if r * r == n {
        f *= r;
    } else {
        m *= n;
    }
    (f, m)
}

/// Exact value `(a + b·√k) / q` over a single square-free radicand `k`.
///
/// Rational values are stored with `b = 0, k = 0`. The triple `(a, b, q)` is
/// kept coprime with `q > 0`, so equal values have equal representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    a: BigInt,
    b: BigInt,
    k: BigUint,
    q: BigInt,
}

impl QuadSurd {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        k: impl Into<BigUint>,
        q: impl Into<BigInt>,
    ) -> Result<Self> {
        let (mut a, mut b, k, mut q) = (a.into(), b.into(), k.into(), q.into());
        if q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if q.is_negative() {
            a = -a;
            b = -b;
            q = -q;
        }
        let (f, k) = squarefree_split(&k)?;
        b *= BigInt::from(f);
        Ok(Self::normalized(a, b, k, q))
    }

    fn normalized(mut a: BigInt, mut b: BigInt, mut k: BigUint, mut q: BigInt) -> Self {
        if b.is_zero() || k.is_zero() {
            b = BigInt::zero();
            k = BigUint::zero();
        } else if k.is_one() {
            a += &b;
            b = BigInt::zero();
            k = BigUint::zero();
        }
        let g = a.gcd(&b).gcd(&q);
        if !g.is_zero() && !g.is_one() {
            a /= &g;
            b /= &g;
            q /= &g;
        }
        if a.is_zero() && b.is_zero() {
            q = BigInt::one();
        }
        QuadSurd { a, b, k, q }
    }

    pub fn rational(x: &ExactRational) -> Self {
        QuadSurd {
            a: x.numer().clone(),
            b: BigInt::zero(),
            k: BigUint::zero(),
            q: x.denom().clone(),
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self::rational(&ExactRational::from_integer(n.into()))
    }

    /// `√n` for a non-negative integer.
    pub fn sqrt_integer(n: impl Into<BigUint>) -> Result<Self> {
        Self::new(0, 1, n, 1)
    }

    /// `√x` for a non-negative rational, written as `√(num·den)/den`.
    pub fn sqrt_rational(x: &ExactRational) -> Result<Self> {
        if x.is_negative() {
            return Err(Error::domain(format!("square root of negative value {x}")));
        }
        // √(n/d) = fn·√mn / (fd·√md) = fn·g·√((mn/g)(md/g)) / (fd·md)
        // with g = gcd(mn, md); the product of the cofactors is square-free.
        let (fn_, mn) = squarefree_split(x.numer().magnitude())?;
        let (fd, md) = squarefree_split(x.denom().magnitude())?;
        let g = mn.gcd(&md);
        let k = (&mn / &g) * (&md / &g);
        let b = BigInt::from(fn_ * g);
        let q = BigInt::from(fd * md);
        Ok(Self::normalized(BigInt::zero(), b, k, q))
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn radicand(&self) -> &BigUint {
        &self.k
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<ExactRational> {
        self.is_rational()
            .then(|| ExactRational::new(self.a.clone(), self.q.clone()))
    }

    /// Re-runs normalization; a no-op on any value built through the API.
    pub fn renormalize(&self) -> Result<Self> {
        Self::new(
            self.a.clone(),
            self.b.clone(),
            self.k.clone(),
            self.q.clone(),
        )
    }

    fn common_radicand(&self, rhs: &QuadSurd) -> Result<BigUint> {
        if self.k.is_zero() {
            Ok(rhs.k.clone())
        } else if rhs.k.is_zero() || self.k == rhs.k {
            Ok(self.k.clone())
        } else {
            Err(Error::IncompatibleRadicands(
                self.k.to_string(),
                rhs.k.to_string(),
            ))
        }
    }

    pub fn add(&self, rhs: &QuadSurd) -> Result<QuadSurd> {
        let k = self.common_radicand(rhs)?;
        let a = &self.a * &rhs.q + &rhs.a * &self.q;
        let b = &self.b * &rhs.q + &rhs.b * &self.q;
        Ok(Self::normalized(a, b, k, &self.q * &rhs.q))
    }

    pub fn sub(&self, rhs: &QuadSurd) -> Result<QuadSurd> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &QuadSurd) -> Result<QuadSurd> {
        let k = self.common_radicand(rhs)?;
        let kk = BigInt::from(k.clone());
        let a = &self.a * &rhs.a + &self.b * &rhs.b * &kk;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Ok(Self::normalized(a, b, k, &self.q * &rhs.q))
    }

    pub fn div(&self, rhs: &QuadSurd) -> Result<QuadSurd> {
        let norm = rhs.norm();
        if norm.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.mul(&rhs.conjugate())?;
        Ok(num.scale(&norm.recip()?))
    }

    pub fn neg(&self) -> QuadSurd {
        QuadSurd {
            a: -&self.a,
            b: -&self.b,
            k: self.k.clone(),
            q: self.q.clone(),
        }
    }

    pub fn conjugate(&self) -> QuadSurd {
        QuadSurd {
            a: self.a.clone(),
            b: -&self.b,
            k: self.k.clone(),
            q: self.q.clone(),
        }
    }

    /// `x · conj(x)`, always rational.
    pub fn norm(&self) -> ExactRational {
        let k = BigInt::from(self.k.clone());
        ExactRational::new(&self.a * &self.a - &self.b * &self.b * k, &self.q * &self.q)
    }

    pub fn square(&self) -> QuadSurd {
        self.mul(self).expect("same radicand")
    }

    pub fn scale(&self, t: &ExactRational) -> QuadSurd {
        Self::normalized(
            &self.a * t.numer(),
            &self.b * t.numer(),
            self.k.clone(),
            &self.q * t.denom(),
        )
    }

    pub fn add_rational(&self, t: &ExactRational) -> QuadSurd {
        self.add(&QuadSurd::rational(t))
            .expect("rational is compatible")
    }

    /// Exact sign, by comparing `a²` with `b²k` when the terms disagree.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.sign();
        let sb = self.b.sign();
        let sign_of = |s: Sign| match s {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        };
        if sb == Sign::NoSign || sa == sb {
            return sign_of(sa).then(sign_of(sb));
        }
        if sa == Sign::NoSign {
            return sign_of(sb);
        }
        let a2 = &self.a * &self.a;
        let b2k = &self.b * &self.b * BigInt::from(self.k.clone());
        if a2 > b2k {
            sign_of(sa)
        } else {
            sign_of(sb)
        }
    }

    /// Exact comparison. Both sides must share a radicand unless one of them
    /// is rational.
    pub fn cmp_exact(&self, rhs: &QuadSurd) -> Result<Ordering> {
        Ok(self.sub(rhs)?.signum())
    }

    pub fn cmp_rational(&self, rhs: &ExactRational) -> Ordering {
        self.add_rational(&-rhs).signum()
    }

    /// Decimal value at `digits` fractional digits with `err_ulp <= 1`;
    /// exact rationals keep `err_ulp = 0` when the expansion terminates.
    pub fn eval(&self, digits: u32) -> HpDecimal {
        if let Some(r) = self.to_rational() {
            return r.to_decimal(digits);
        }
        let guard = self.b.magnitude().to_string().len() as u32 + 4;
        let work = digits + guard;
        let root = HpDecimal::from_integer(BigInt::from(self.k.clone()))
            .sqrt(work)
            .expect("radicand is non-negative");
        let num = root
            .mul_rational(&ExactRational::from_integer(self.b.clone()), work)
            .add(&HpDecimal::from_integer(self.a.clone()));
        num.mul_rational(&ExactRational::new(1, self.q.clone()), work)
            .round_to(digits)
    }

    fn write_form(&self, f: &mut impl fmt::Write, ascii: bool) -> fmt::Result {
        if self.is_rational() {
            return if self.q.is_one() {
                write!(f, "{}", self.a)
            } else {
                write!(f, "{}/{}", self.a, self.q)
            };
        }
        let root = if ascii {
            format!("sqrt({})", self.k)
        } else {
            format!("√{}", self.k)
        };
        let mag = self.b.magnitude();
        let coeff = if mag.is_one() {
            root
        } else if ascii {
            format!("{mag}*{root}")
        } else {
            format!("{mag}{root}")
        };
        let body = if self.a.is_zero() {
            let sign = if self.b.is_negative() { "-" } else { "" };
            format!("{sign}{coeff}")
        } else {
            let op = if self.b.is_negative() { '-' } else { '+' };
            format!("{}{op}{coeff}", self.a)
        };
        if self.q.is_one() {
            write!(f, "{body}")
        } else if self.a.is_zero() {
            write!(f, "{body}/{}", self.q)
        } else {
            write!(f, "({body})/{}", self.q)
        }
    }

    /// Portable form such as `(2+sqrt(2))/6`, for CSV and JSON.
    pub fn to_ascii(&self) -> String {
        let mut s = String::new();
        self.write_form(&mut s, true).expect("string write");
        s
    }

    /// Lossy, for diagnostics.
    pub fn to_f64(&self) -> f64 {
        let digits = self.eval(17);
        digits.to_rational().to_f64()
    }
}

impl From<ExactRational> for QuadSurd {
    fn from(x: ExactRational) -> Self {
        QuadSurd::rational(&x)
    }
}

impl From<&ExactRational> for QuadSurd {
    fn from(x: &ExactRational) -> Self {
        QuadSurd::rational(x)
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_form(f, false)
    }
}

impl fmt::Debug for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadSurd({self})")
    }
}

/// Exact comparison of two surds (see [`QuadSurd::cmp_exact`]).
pub fn surd_cmp(x: &QuadSurd, y: &QuadSurd) -> Result<Ordering> {
    x.cmp_exact(y)
}

/// Decimal evaluation of a surd (see [`QuadSurd::eval`]).
pub fn surd_eval(x: &QuadSurd, digits: u32) -> Result<HpDecimal> {
    if digits == 0 {
        return Err(Error::NonPositive { what: "digits" });
    }
    Ok(x.eval(digits))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64, k: u64, q: i64) -> QuadSurd {
        QuadSurd::new(a, b, k, q).unwrap()
    }

    #[test]
    fn normalization() {
        // (2 + 2√8)/6 = (2 + 4√2)/6 = (1 + 2√2)/3
        let x = s(2, 2, 8, 6);
        assert_eq!(
            (x.a(), x.b(), x.radicand(), x.q()),
            (
                &BigInt::from(1),
                &BigInt::from(2),
                &BigUint::from(2u32),
                &BigInt::from(3)
            )
        );
        assert!(s(3, 5, 0, 1).is_rational());
        assert_eq!(s(3, 5, 1, 1), QuadSurd::integer(8));
        assert_eq!(s(0, 1, 36, 1), QuadSurd::integer(6));
        assert_eq!(s(1, 1, 2, -3), s(-1, -1, 2, 3));
        assert_eq!(s(0, 0, 7, 5), QuadSurd::integer(0));
    }

    #[test]
    fn squarefree_large_inputs() {
        let (f, m) = squarefree_split_u64(2 * 3 * 3 * 7 * 7 * 7 * 1_000_003 * 1_000_003);
        assert_eq!((f, m), (3 * 7 * 1_000_003, 14));
        let big = BigUint::from(10u32).pow(40) * 3u32;
        let (f, m) = squarefree_split(&big).unwrap();
        assert_eq!(m, BigUint::from(3u32));
        assert_eq!(f, BigUint::from(10u32).pow(20));
    }

    #[test]
    fn spec_eval_examples() {
        assert_eq!(s(0, 1, 10, 1).eval(5).to_string(), "3.16228");
        assert_eq!(s(54, -36, 2, 1).eval(4).to_string(), "3.0883");
        // (2+√2)/3 = 1.13807118745769834...
        assert_eq!(s(2, 1, 2, 3).eval(10).to_string(), "1.1380711875");
        assert!(s(2, 1, 2, 3).eval(10).err_ulp() <= 1);
    }

    #[test]
    fn spec_cmp_examples() {
        let sqrt10 = s(0, 1, 10, 1);
        let v = QuadSurd::rational(&ExactRational::new(355, 113));
        assert_eq!(surd_cmp(&sqrt10, &v).unwrap(), Ordering::Greater);
        let x = s(2, 1, 2, 3);
        assert_eq!(surd_cmp(&x, &x.clone()).unwrap(), Ordering::Equal);
        assert_eq!(
            surd_cmp(&s(54, -36, 2, 1), &QuadSurd::integer(3)).unwrap(),
            Ordering::Greater
        );
        assert!(matches!(
            surd_cmp(&sqrt10, &s(0, 1, 2, 1)),
            Err(Error::IncompatibleRadicands(_, _))
        ));
    }

    #[test]
    fn field_operations() {
        let x = s(2, 1, 2, 3);
        let inv = QuadSurd::integer(1).div(&x).unwrap();
        assert_eq!(inv.mul(&x).unwrap(), QuadSurd::integer(1));
        // 36 / (6 + 4√2) = 54 − 36√2
        let r2 = s(6, 4, 2, 1);
        assert_eq!(QuadSurd::integer(36).div(&r2).unwrap(), s(54, -36, 2, 1));
        assert_eq!(s(1, 1, 2, 1).norm(), ExactRational::from(-1));
        assert!(QuadSurd::integer(1).div(&QuadSurd::integer(0)).is_err());
    }

    #[test]
    fn signs() {
        assert_eq!(s(-3, 2, 2, 1).signum(), Ordering::Less); // 2√2 < 3
        assert_eq!(s(-2, 2, 2, 1).signum(), Ordering::Greater);
        assert_eq!(s(0, -1, 5, 1).signum(), Ordering::Less);
        assert_eq!(QuadSurd::integer(0).signum(), Ordering::Equal);
    }

    #[test]
    fn rendering() {
        assert_eq!(s(2, 1, 2, 6).to_string(), "(2+√2)/6");
        assert_eq!(s(2, 1, 2, 6).to_ascii(), "(2+sqrt(2))/6");
        assert_eq!(s(54, -36, 2, 1).to_string(), "54-36√2");
        assert_eq!(s(54, -36, 2, 1).to_ascii(), "54-36*sqrt(2)");
        assert_eq!(s(0, 1, 10, 2).to_string(), "√10/2");
        assert_eq!(s(0, -1, 3, 1).to_string(), "-√3");
        assert_eq!(
            QuadSurd::rational(&ExactRational::new(256, 81)).to_string(),
            "256/81"
        );
    }

    #[test]
    fn sqrt_of_rationals() {
        let r = QuadSurd::sqrt_rational(&ExactRational::new(9, 4)).unwrap();
        assert_eq!(r, QuadSurd::rational(&ExactRational::new(3, 2)));
        let r = QuadSurd::sqrt_rational(&ExactRational::new(1, 2)).unwrap();
        assert_eq!(r, s(0, 1, 2, 2));
        assert!(QuadSurd::sqrt_rational(&ExactRational::new(-1, 2)).is_err());
    }
}
