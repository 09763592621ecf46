//! Śulvasūtra procedures: circling the square three ways, squaring the
//! circle, the √2 expression, the early circumference rules, and the
//! intersecting-circles perpendicular.
//!
//! Implied π values are a modern metric. The texts give procedures for
//! producing a figure, not a ratio; the number reported is the one that
//! would make the procedure exact.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::{ExactRational, HpDecimal, QuadSurd, SurdRoot};
use crate::oracle;

/// Digits used for the `area_ratio` field of a [`ConstructionResult`].
pub const CONSTRUCTION_DIGITS: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CirclingMethod {
    /// Half the diagonal, plus a third of the part jutting out of the square.
    Baudhayana,
    /// A fifth of the jutting part of a trisecting line.
    Manava,
    /// Radius 9/16 of the side.
    Maitrayaniya,
}

impl CirclingMethod {
    pub const ALL: [CirclingMethod; 3] = [
        CirclingMethod::Baudhayana,
        CirclingMethod::Manava,
        CirclingMethod::Maitrayaniya,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CirclingMethod::Baudhayana => "baudhayana",
            CirclingMethod::Manava => "manava",
            CirclingMethod::Maitrayaniya => "maitrayaniya",
        }
    }
}

impl fmt::Display for CirclingMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CirclingMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CirclingMethod::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown circling method `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionResult {
    pub method: CirclingMethod,
    pub side: ExactRational,
    /// Exact radius; a nested radical for the Mānava construction.
    pub radius: SurdRoot,
    pub radius_squared: QuadSurd,
    /// `side² / radius²`, the π that would make the circle's area exact.
    pub implied_pi: QuadSurd,
    /// Circle area over square area, `π / implied_pi`, at [`CONSTRUCTION_DIGITS`].
    pub area_ratio: HpDecimal,
}

impl ConstructionResult {
    pub fn area_ratio_at(&self, digits: u32) -> Result<HpDecimal> {
        area_ratio(&self.implied_pi, digits)
    }
}

fn area_ratio(implied_pi: &QuadSurd, digits: u32) -> Result<HpDecimal> {
    let work = digits + 6;
    let pi = oracle::pi_decimal(work);
    Ok(pi.div(&implied_pi.eval(work), work)?.round_to(digits))
}

fn require_positive(x: &ExactRational, what: &'static str) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::NonPositive { what })
    }
}

/// Radius² of the Mānava circle for a square of side 2, straight from the
/// construction: `(1 + (√17/3 − 1)/5)² + 1/9`.
pub fn manava_radius_squared_side_two() -> QuadSurd {
    let jut = QuadSurd::new(-3, 1, 17u32, 3).expect("valid surd"); // √17/3 − 1
    let reach = jut
        .scale(&ExactRational::new(1, 5))
        .add_rational(&ExactRational::one());
    reach.square().add_rational(&ExactRational::new(1, 9))
}

/// Circle with (approximately) the area of a square of the given side.
pub fn circle_from_square(
    side: &ExactRational,
    method: CirclingMethod,
) -> Result<ConstructionResult> {
    require_positive(side, "side")?;
    let (radius, radius_squared) = match method {
        CirclingMethod::Baudhayana => {
            // half-side a: a + (√2 − 1)a/3 = (2 + √2)a/3
            let r = QuadSurd::new(2, 1, 2u32, 6)?.scale(side);
            (SurdRoot::from_surd(r.clone())?, r.square())
        }
        CirclingMethod::Manava => {
            let half = side / ExactRational::from(2);
            let r2 = manava_radius_squared_side_two().scale(&half.square());
            (SurdRoot::new(r2.clone())?, r2)
        }
        CirclingMethod::Maitrayaniya => {
            let r = QuadSurd::rational(&(side * ExactRational::new(9, 16)));
            (SurdRoot::from_surd(r.clone())?, r.square())
        }
    };
    let implied_pi = QuadSurd::rational(&side.square()).div(&radius_squared)?;
    let area_ratio = area_ratio(&implied_pi, CONSTRUCTION_DIGITS)?;
    Ok(ConstructionResult {
        method,
        side: side.clone(),
        radius,
        radius_squared,
        implied_pi,
        area_ratio,
    })
}

/// Terms of the side-to-diameter ratio for squaring the circle, in the order
/// the text gives them: `7/8 + 1/(8·29) − 1/(8·29·6) + 1/(8·29·6·8)`.
pub fn squaring_terms() -> [ExactRational; 4] {
    [
        ExactRational::new(7, 8),
        ExactRational::new(1, 8 * 29),
        ExactRational::new(-1, 8 * 29 * 6),
        ExactRational::new(1, 8 * 29 * 6 * 8),
    ]
}

pub const SQUARING_EXPRESSION: &str = "7/8 + 1/(8*29) - 1/(8*29*6) + 1/(8*29*6*8)";

/// `9785/11136`.
pub fn squaring_ratio() -> ExactRational {
    squaring_terms()
        .iter()
        .fold(ExactRational::zero(), |acc, t| acc + t)
}

/// Side of the square assigned to a circle of the given diameter.
pub fn square_from_circle(diameter: &ExactRational) -> Result<ExactRational> {
    require_positive(diameter, "diameter")?;
    Ok(diameter * squaring_ratio())
}

/// The squaring rule applied to a diameter that is itself a surd, such as
/// twice a Baudhāyana radius.
pub fn square_from_circle_surd(diameter: &QuadSurd) -> Result<QuadSurd> {
    if diameter.signum() != std::cmp::Ordering::Greater {
        return Err(Error::NonPositive { what: "diameter" });
    }
    Ok(diameter.scale(&squaring_ratio()))
}

/// π implied by the squaring rule: square area over `r²`, i.e. `4·ratio²`.
pub fn squaring_implied_pi() -> ExactRational {
    ExactRational::from(4) * squaring_ratio().square()
}

pub fn sqrt2_terms() -> [ExactRational; 4] {
    [
        ExactRational::one(),
        ExactRational::new(1, 3),
        ExactRational::new(1, 3 * 4),
        ExactRational::new(-1, 3 * 4 * 34),
    ]
}

pub const SQRT2_EXPRESSION: &str = "1 + 1/3 + 1/(3*4) - 1/(3*4*34)";

/// `1 + 1/3 + 1/(3·4) − 1/(3·4·34) = 577/408`.
pub fn sqrt2_sulva() -> ExactRational {
    sqrt2_terms()
        .iter()
        .fold(ExactRational::zero(), |acc, t| acc + t)
}

/// Pit rule: circumference three times the diameter.
pub fn vedic_circumference(diameter: &ExactRational) -> Result<ExactRational> {
    require_positive(diameter, "diameter")?;
    Ok(diameter * ExactRational::from(3))
}

/// "A fifth of the diameter and three times the diameter".
pub fn manava_circumference(diameter: &ExactRational) -> Result<ExactRational> {
    require_positive(diameter, "diameter")?;
    Ok(diameter / ExactRational::from(5) + diameter * ExactRational::from(3))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub x: QuadSurd,
    pub y: QuadSurd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Perpendicular {
    pub upper: Point,
    pub lower: Point,
    /// Dot product of the common chord with the line of centres is exactly 0.
    pub perpendicular: bool,
}

/// Intersects two circles of equal radius centred at `(±offset, 0)` and
/// checks, in exact arithmetic, that the chord through the intersection
/// points is perpendicular to the line of centres.
///
/// `radius²` must be rational so that the points stay in one `ℚ(√k)`.
pub fn perpendicular_check(offset: &ExactRational, radius: &QuadSurd) -> Result<Perpendicular> {
    require_positive(offset, "center offset")?;
    let r2 = radius
        .square()
        .to_rational()
        .ok_or_else(|| Error::Unsupported(format!("radius {radius} has an irrational square")))?;
    let o2 = offset.square();
    if r2 <= o2 {
        return Err(Error::domain(format!(
            "circles of radius {radius} centred {offset} either side do not cross transversally"
        )));
    }
    // (x + o)² + y² = r₁² and (x − o)² + y² = r₂² subtract to the radical
    // axis 4·o·x = r₁² − r₂²; the circles here have equal radii.
    let (left_r2, right_r2) = (&r2, &r2);
    let x = (left_r2 - right_r2).checked_div(&(ExactRational::from(4) * offset))?;
    let y2 = &r2 - (&x + offset).square();
    let y = QuadSurd::sqrt_rational(&y2)?;
    let xs = QuadSurd::rational(&x);
    let upper = Point {
        x: xs.clone(),
        y: y.clone(),
    };
    let lower = Point { x: xs, y: y.neg() };

    let r2s = QuadSurd::rational(&r2);
    for p in [&upper, &lower] {
        for c in [offset.clone(), -offset] {
            let dx = p.x.add_rational(&-&c);
            let on_circle = dx.square().add(&p.y.square())?;
            if on_circle != r2s {
                return Err(Error::domain("intersection point failed verification"));
            }
        }
    }
    let chord = (upper.x.sub(&lower.x)?, upper.y.sub(&lower.y)?);
    let centres = (
        QuadSurd::rational(&(ExactRational::from(2) * offset)),
        QuadSurd::integer(0),
    );
    let dot = chord.0.mul(&centres.0)?.add(&chord.1.mul(&centres.1)?)?;
    Ok(Perpendicular {
        upper,
        lower,
        perpendicular: dot.is_zero(),
    })
}
