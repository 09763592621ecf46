//! Jaina rules: the √10 circumference, chord–arrow–diameter relations, the
//! minor-arc length, the segment areas of Mahāvīra and Śrīdhara, the
//! Jambudvīpa circumference and Vīrasena's value.
//!
//! Chords and arrows are exact values in some `ℚ(√k)`. A formula result is
//! an [`Estimate`]: always a certified decimal, plus an exact surd when the
//! result lies in a single quadratic field.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{isqrt, ExactRational, HpDecimal, QuadSurd, RootMode, SurdRoot};

/// Guard digits for decimal evaluation of segment formulas.
const GUARD: u32 = 10;

fn sqrt10() -> QuadSurd {
    QuadSurd::sqrt_integer(10u32).expect("10 is a valid radicand")
}

fn is_positive(x: &QuadSurd) -> bool {
    x.signum() == Ordering::Greater
}

/// Diameter, chord and arrow (sagitta) of a minor circular segment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentSpec {
    d: ExactRational,
    c: QuadSurd,
    h: QuadSurd,
}

impl SegmentSpec {
    /// Checks `0 < c ≤ d`, `0 < h ≤ d/2` and `c² = 4h(d − h)` exactly.
    pub fn new(d: ExactRational, c: QuadSurd, h: QuadSurd) -> Result<Self> {
        if !d.is_positive() {
            return Err(Error::NonPositive { what: "diameter" });
        }
        if !is_positive(&c) {
            return Err(Error::NonPositive { what: "chord" });
        }
        if !is_positive(&h) {
            return Err(Error::NonPositive { what: "arrow" });
        }
        if c.cmp_rational(&d) == Ordering::Greater {
            return Err(Error::out_of_range(
                "chord",
                format!("{c} exceeds diameter {d}"),
            ));
        }
        let half = &d / ExactRational::from(2);
        if h.cmp_rational(&half) == Ordering::Greater {
            return Err(Error::out_of_range(
                "arrow",
                format!("{h} exceeds the radius {half}; only minor segments are treated"),
            ));
        }
        let rhs = h
            .mul(&h.neg().add_rational(&d))?
            .scale(&ExactRational::from(4));
        if c.square() != rhs {
            return Err(Error::domain(format!(
                "chord {c} and arrow {h} do not fit a circle of diameter {d}"
            )));
        }
        Ok(SegmentSpec { d, c, h })
    }

    pub fn from_arrow(h: &ExactRational, d: &ExactRational) -> Result<Self> {
        let c = chord_from_arrow(h, d)?;
        SegmentSpec::new(d.clone(), c, QuadSurd::rational(h))
    }

    pub fn from_chord(c: &ExactRational, d: &ExactRational) -> Result<Self> {
        let h = arrow_from_chord(c, d)?;
        SegmentSpec::new(d.clone(), QuadSurd::rational(c), h)
    }

    pub fn diameter(&self) -> &ExactRational {
        &self.d
    }

    pub fn chord(&self) -> &QuadSurd {
        &self.c
    }

    pub fn arrow(&self) -> &QuadSurd {
        &self.h
    }

    pub fn is_semicircle(&self) -> bool {
        self.c == QuadSurd::rational(&self.d)
    }
}

/// A formula value: certified decimal, and the exact surd when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Estimate {
    pub exact: Option<QuadSurd>,
    pub value: HpDecimal,
}

impl Estimate {
    fn from_exact(exact: QuadSurd, digits: u32) -> Self {
        let value = exact.eval(digits);
        Estimate {
            exact: Some(exact),
            value,
        }
    }
}

/// `c = √(4h(d − h))`.
pub fn chord_from_arrow(h: &ExactRational, d: &ExactRational) -> Result<QuadSurd> {
    if !d.is_positive() {
        return Err(Error::NonPositive { what: "diameter" });
    }
    let half = d / ExactRational::from(2);
    if !h.is_positive() || h > &half {
        return Err(Error::out_of_range(
            "arrow",
            format!("need 0 < h ≤ {half}, got {h}"),
        ));
    }
    QuadSurd::sqrt_rational(&(ExactRational::from(4) * h * (d - h)))
}

/// `h = (d − √(d² − c²))/2`, the arrow of the minor segment.
pub fn arrow_from_chord(c: &ExactRational, d: &ExactRational) -> Result<QuadSurd> {
    if !d.is_positive() {
        return Err(Error::NonPositive { what: "diameter" });
    }
    if !c.is_positive() || c > d {
        return Err(Error::out_of_range(
            "chord",
            format!("need 0 < c ≤ {d}, got {c}"),
        ));
    }
    let root = QuadSurd::sqrt_rational(&(d.square() - c.square()))?;
    Ok(root.neg().add_rational(d).scale(&ExactRational::new(1, 2)))
}

/// Minor arc `a = √(6h² + c²)`.
pub fn arc_length_jaina(seg: &SegmentSpec) -> Result<SurdRoot> {
    let radicand = seg
        .h
        .square()
        .scale(&ExactRational::from(6))
        .add(&seg.c.square())?;
    SurdRoot::new(radicand)
}

/// `√10 · x` as a single surd, when the product stays in one quadratic field.
fn times_sqrt10(x: &QuadSurd) -> Option<QuadSurd> {
    let k = x.radicand();
    if k.is_zero() || *k == BigUint::from(10u32) {
        return sqrt10().mul(x).ok();
    }
    if x.a().is_zero() {
        let coeff = ExactRational::new(x.b().clone(), x.q().clone());
        return QuadSurd::sqrt_integer(k * BigUint::from(10u32))
            .ok()
            .map(|s| s.scale(&coeff));
    }
    None
}

fn surd_formula(
    seg: &SegmentSpec,
    digits: u32,
    exact: impl Fn(&QuadSurd, &QuadSurd) -> Option<QuadSurd>,
    decimal: impl Fn(&HpDecimal, &HpDecimal, u32) -> HpDecimal,
) -> Estimate {
    if let Some(x) = exact(&seg.c, &seg.h) {
        return Estimate::from_exact(x, digits);
    }
    let work = digits + GUARD;
    let value = decimal(&seg.c.eval(work), &seg.h.eval(work), work).round_to(digits);
    Estimate { exact: None, value }
}

/// Mahāvīra: `A = (√10/4)·c·h`.
pub fn segment_area_mahavira(seg: &SegmentSpec, digits: u32) -> Estimate {
    surd_formula(
        seg,
        digits,
        |c, h| {
            let ch = c.mul(h).ok()?;
            times_sqrt10(&ch).map(|x| x.scale(&ExactRational::new(1, 4)))
        },
        mahavira_area_hp,
    )
}

/// Śrīdhara: `A = (√10/3)·h(c + h)/2`.
pub fn segment_area_sridhara(seg: &SegmentSpec, digits: u32) -> Estimate {
    surd_formula(
        seg,
        digits,
        |c, h| {
            let inner = h.mul(&c.add(h).ok()?).ok()?;
            times_sqrt10(&inner).map(|x| x.scale(&ExactRational::new(1, 6)))
        },
        sridhara_area_hp,
    )
}

/// [`arc_length_jaina`] on decimal inputs, for error scans.
pub fn arc_jaina_hp(c: &HpDecimal, h: &HpDecimal, scale: u32) -> HpDecimal {
    let six_h2 = h.mul(h, scale).mul_rational(&ExactRational::from(6), scale);
    six_h2
        .add(&c.mul(c, scale))
        .sqrt(scale)
        .expect("6h² + c² is non-negative")
}

/// [`segment_area_mahavira`] on decimal inputs.
pub fn mahavira_area_hp(c: &HpDecimal, h: &HpDecimal, scale: u32) -> HpDecimal {
    sqrt10()
        .eval(scale)
        .mul(&c.mul(h, scale), scale)
        .mul_rational(&ExactRational::new(1, 4), scale)
}

/// [`segment_area_sridhara`] on decimal inputs.
pub fn sridhara_area_hp(c: &HpDecimal, h: &HpDecimal, scale: u32) -> HpDecimal {
    sqrt10()
        .eval(scale)
        .mul(&h.mul(&c.add(h), scale), scale)
        .mul_rational(&ExactRational::new(1, 6), scale)
}

/// Circumference by the √10 rule.
pub fn sqrt10_circumference(d: &ExactRational) -> Result<QuadSurd> {
    if !d.is_positive() {
        return Err(Error::NonPositive { what: "diameter" });
    }
    Ok(sqrt10().scale(d))
}

/// "A fourth of the product of the circumference and the diameter."
pub fn area_from_circumference(circ: &QuadSurd, d: &ExactRational) -> Result<QuadSurd> {
    if !is_positive(circ) {
        return Err(Error::NonPositive {
            what: "circumference",
        });
    }
    if !d.is_positive() {
        return Err(Error::NonPositive { what: "diameter" });
    }
    Ok(circ.scale(&(d / ExactRational::from(4))))
}

/// [`area_from_circumference`] for a decimal circumference such as `π·d`.
pub fn area_from_circumference_hp(
    circ: &HpDecimal,
    d: &ExactRational,
    scale: u32,
) -> Result<HpDecimal> {
    if circ.certified_sign() != Some(Ordering::Greater) {
        return Err(Error::NonPositive {
            what: "circumference",
        });
    }
    if !d.is_positive() {
        return Err(Error::NonPositive { what: "diameter" });
    }
    Ok(circ.mul_rational(&(d / ExactRational::from(4)), scale))
}

/// The √10 rule carried out in integers: `⌊√(10d²)⌋`.
pub fn jambudvipa_circumference(d: &BigUint) -> Result<BigUint> {
    if d.is_zero() {
        return Err(Error::NonPositive { what: "diameter" });
    }
    Ok(isqrt(&(d * d * BigUint::from(10u32)), RootMode::Floor))
}

/// Diameter of Jambudvīpa in yojanas.
pub const JAMBUDVIPA_DIAMETER: u64 = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VirasenaReading {
    /// `3 + 16/113 = 355/113` times the diameter.
    #[default]
    Interpreted,
    /// The verse word for word: `(16d + 16)/113 + 3d`.
    Literal,
}

pub fn virasena_circumference(
    d: &ExactRational,
    reading: VirasenaReading,
) -> Result<ExactRational> {
    if !d.is_positive() {
        return Err(Error::NonPositive { what: "diameter" });
    }
    Ok(match reading {
        VirasenaReading::Interpreted => d * ExactRational::new(355, 113),
        VirasenaReading::Literal => {
            (ExactRational::from(16) * d + ExactRational::from(16)) / ExactRational::from(113)
                + ExactRational::from(3) * d
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    fn quarter_unit() -> SegmentSpec {
        // d = 2, 90° arc: c = √2, h = 1 − √2/2
        SegmentSpec::new(
            q(2, 1),
            QuadSurd::sqrt_integer(2u32).unwrap(),
            QuadSurd::new(2, -1, 2u32, 2).unwrap(),
        )
        .unwrap()
    }

    fn semicircle_unit() -> SegmentSpec {
        SegmentSpec::from_arrow(&q(1, 1), &q(2, 1)).unwrap()
    }

    #[test]
    fn chord_from_arrow_examples() {
        assert_eq!(
            chord_from_arrow(&q(1, 1), &q(10, 1)).unwrap(),
            QuadSurd::integer(6)
        );
        assert_eq!(
            chord_from_arrow(&q(7, 2), &q(7, 1)).unwrap(),
            QuadSurd::integer(7)
        );
        assert_eq!(
            chord_from_arrow(&q(1, 1), &q(4, 1)).unwrap(),
            QuadSurd::new(0, 2, 3u32, 1).unwrap()
        );
        assert!(chord_from_arrow(&q(3, 1), &q(4, 1)).is_err());
        assert!(chord_from_arrow(&q(0, 1), &q(4, 1)).is_err());
    }

    #[test]
    fn arrow_from_chord_examples() {
        assert_eq!(
            arrow_from_chord(&q(6, 1), &q(10, 1)).unwrap(),
            QuadSurd::integer(1)
        );
        assert_eq!(
            arrow_from_chord(&q(5, 1), &q(5, 1)).unwrap(),
            QuadSurd::rational(&q(5, 2))
        );
        assert_eq!(
            arrow_from_chord(&q(1, 1), &q(2, 1)).unwrap(),
            QuadSurd::new(2, -1, 3u32, 2).unwrap()
        );
        assert!(arrow_from_chord(&q(11, 1), &q(10, 1)).is_err());
    }

    #[test]
    fn segment_spec_rejects_inconsistent_triples() {
        let bad = SegmentSpec::new(q(10, 1), QuadSurd::integer(5), QuadSurd::integer(1));
        assert!(matches!(bad, Err(Error::Domain(_))));
        let major = SegmentSpec::new(q(10, 1), QuadSurd::integer(6), QuadSurd::integer(9));
        assert!(major.is_err());
    }

    #[test]
    fn semicircle_arc_is_sqrt10_radius() {
        let arc = arc_length_jaina(&SegmentSpec::from_arrow(&q(3, 1), &q(6, 1)).unwrap()).unwrap();
        // (√10/2)·6 = 3√10
        assert_eq!(
            arc.as_surd().unwrap(),
            &QuadSurd::new(0, 3, 10u32, 1).unwrap()
        );
    }

    #[test]
    fn quarter_arc_error() {
        let arc = arc_length_jaina(&quarter_unit()).unwrap();
        assert_eq!(
            arc.as_surd().unwrap(),
            &QuadSurd::new(3, -1, 2u32, 1).unwrap()
        );
        let truth = oracle::pi_decimal(30).mul_rational(&q(1, 2), 30);
        let err = oracle::relative_error(&arc.eval(30), &truth).unwrap();
        assert_eq!(arc.eval(4).to_string(), "1.5858");
        assert_eq!(err.render_rounded(4), "0.0095");
    }

    #[test]
    fn semicircle_areas_agree() {
        let seg = semicircle_unit();
        let m = segment_area_mahavira(&seg, 20);
        let s = segment_area_sridhara(&seg, 20);
        let expected = QuadSurd::new(0, 1, 10u32, 2).unwrap();
        assert_eq!(m.exact.as_ref(), Some(&expected));
        assert_eq!(s.exact.as_ref(), Some(&expected));
        assert_eq!(m.value, s.value);
    }

    #[test]
    fn quarter_segment_areas() {
        let seg = quarter_unit();
        let m = segment_area_mahavira(&seg, 12);
        let s = segment_area_sridhara(&seg, 12);
        // c·h = √2 − 1 has two terms, so √10·c·h leaves ℚ(√k)
        assert!(m.exact.is_none());
        assert_eq!(m.value.render_rounded(5), "0.32746");
        assert_eq!(s.exact, Some(QuadSurd::new(0, 1, 10u32, 12).unwrap()));
        assert_eq!(s.value.render_rounded(5), "0.26352");
    }

    #[test]
    fn decimal_formulas_match_exact_ones() {
        let seg = quarter_unit();
        let c = seg.chord().eval(40);
        let h = seg.arrow().eval(40);
        let exact = segment_area_sridhara(&seg, 30).value;
        let hp = sridhara_area_hp(&c, &h, 40).round_to(30);
        assert!(exact.sub(&hp).abs().mantissa() <= &2.into());
        let arc = arc_jaina_hp(&c, &h, 40).round_to(30);
        let exact_arc = arc_length_jaina(&seg).unwrap().eval(30);
        assert!(arc.sub(&exact_arc).abs().mantissa() <= &2.into());
    }

    #[test]
    fn circumference_and_area_rules() {
        assert_eq!(
            area_from_circumference(&QuadSurd::integer(3), &q(1, 1)).unwrap(),
            QuadSurd::rational(&q(3, 4))
        );
        let circ = sqrt10_circumference(&q(2, 1)).unwrap();
        assert_eq!(
            area_from_circumference(&circ, &q(2, 1)).unwrap(),
            QuadSurd::new(0, 1, 10u32, 1).unwrap()
        );
        let pi = oracle::pi_decimal(30);
        let a = area_from_circumference_hp(&pi.mul_rational(&q(2, 1), 30), &q(2, 1), 30).unwrap();
        assert_eq!(a.render_rounded(20), pi.render_rounded(20));
    }

    #[test]
    fn jambudvipa() {
        let f = |d: u64| jambudvipa_circumference(&BigUint::from(d)).unwrap();
        assert_eq!(f(JAMBUDVIPA_DIAMETER), BigUint::from(316227u32));
        assert_eq!(f(1), BigUint::from(3u32));
        assert_eq!(f(10), BigUint::from(31u32));
        assert!(jambudvipa_circumference(&BigUint::zero()).is_err());
    }

    #[test]
    fn virasena_readings() {
        let i = VirasenaReading::Interpreted;
        assert_eq!(virasena_circumference(&q(113, 1), i).unwrap(), q(355, 1));
        assert_eq!(
            virasena_circumference(&q(1, 1), i)
                .unwrap()
                .to_decimal(7)
                .to_string(),
            "3.1415929"
        );
        let lit = virasena_circumference(&q(1, 1), VirasenaReading::Literal).unwrap();
        assert_eq!(lit, q(371, 113));
        assert!(virasena_circumference(&q(0, 1), i).is_err());
    }
}
