//! Rsine tables as first differences, Bhāskara I's rational sine and linear
//! interpolation in a table.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{ExactRational, HpDecimal};
use crate::oracle;

/// Arcminutes in a right angle.
const QUADRANT_ARCMIN: u32 = 5400;

/// Largest radius with a guaranteed table.
pub const MAX_RADIUS: u64 = 1_000_000_000;

/// Precision ceiling while certifying table roundings.
const MAX_TABLE_SCALE: u32 = 150;

/// Integer Rsines `R·sin(i·step)` for `i = 1..=entries`, with their first
/// differences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SineTable {
    radius: u64,
    step_arcmin: u32,
    rsines: Vec<u64>,
    diffs: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SineRow {
    pub index: usize,
    pub arcmin: u32,
    pub rsine: u64,
    pub diff: i64,
}

impl SineTable {
    pub fn radius(&self) -> u64 {
        self.radius
    }

    pub fn step_arcmin(&self) -> u32 {
        self.step_arcmin
    }

    pub fn rsines(&self) -> &[u64] {
        &self.rsines
    }

    pub fn diffs(&self) -> &[i64] {
        &self.diffs
    }

    pub fn rows(&self) -> Vec<SineRow> {
        (0..self.rsines.len())
            .map(|i| SineRow {
                index: i + 1,
                arcmin: (i as u32 + 1) * self.step_arcmin,
                rsine: self.rsines[i],
                diff: self.diffs[i],
            })
            .collect()
    }

    /// CSV with header `index,arcmin,rsine,diff`, LF line endings.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        for row in self.rows() {
            w.serialize(row)
                .map_err(|e| Error::Unsupported(e.to_string()))?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Unsupported(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Unsupported(e.to_string()))
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::Unsupported(e.to_string()))
    }
}

/// `⌊x + 1/2⌋` for both interval ends, if they agree.
fn certified_nearest(v: &HpDecimal) -> Option<BigInt> {
    let half = ExactRational::new(1, 2);
    let (lo, hi) = v.bounds();
    let a = (lo + &half).floor();
    let b = (hi + &half).floor();
    (a == b).then_some(a)
}

/// Table of `entries` Rsines covering a quadrant, rounded to nearest.
pub fn sine_table(radius: u64, entries: u32) -> Result<SineTable> {
    if radius == 0 {
        return Err(Error::NonPositive { what: "radius" });
    }
    if radius > MAX_RADIUS {
        return Err(Error::out_of_range(
            "radius",
            format!("{radius} exceeds {MAX_RADIUS}"),
        ));
    }
    if entries == 0 || !QUADRANT_ARCMIN.is_multiple_of(entries) {
        return Err(Error::out_of_range(
            "entries",
            format!("{entries} does not divide {QUADRANT_ARCMIN} arcminutes"),
        ));
    }
    let step = QUADRANT_ARCMIN / entries;
    let r = ExactRational::from(radius);
    let mut rsines = Vec::with_capacity(entries as usize);
    for i in 1..=entries {
        let theta = ExactRational::new(i64::from(i * step), 60);
        let mut scale = 20;
        let value = loop {
            let v = oracle::sin_decimal(&theta, scale)?.mul_rational(&r, scale);
            if let Some(n) = certified_nearest(&v) {
                break n;
            }
            scale += 20;
            if scale > MAX_TABLE_SCALE {
                return Err(Error::precision(format!(
                    "cannot certify the rounding of {radius}·sin({theta}°)"
                )));
            }
        };
        rsines.push(value.to_u64().expect("0 ≤ R·sin ≤ R"));
    }
    let diffs = rsines
        .iter()
        .scan(0i64, |prev, &x| {
            let d = x as i64 - *prev;
            *prev = x as i64;
            Some(d)
        })
        .collect();
    Ok(SineTable {
        radius,
        step_arcmin: step,
        rsines,
        diffs,
    })
}

fn check_degrees(theta: &ExactRational, max: i64) -> Result<()> {
    if theta.is_negative() || *theta > max {
        return Err(Error::domain(format!(
            "angle {theta}° outside [0°, {max}°]"
        )));
    }
    Ok(())
}

/// `4θ(180 − θ) / (40500 − θ(180 − θ))` with `θ` in degrees.
pub fn bhaskara1_sine(theta_deg: &ExactRational) -> Result<ExactRational> {
    check_degrees(theta_deg, 180)?;
    let p = theta_deg * (ExactRational::from(180) - theta_deg);
    Ok(ExactRational::from(4) * &p / (ExactRational::from(40500) - p))
}

/// Rsine at an intermediate angle, interpolating linearly on the first
/// differences. Exact at the table nodes.
pub fn interpolate_rsine(table: &SineTable, theta_deg: &ExactRational) -> Result<ExactRational> {
    check_degrees(theta_deg, 90)?;
    let n = table.rsines.len();
    let pos = theta_deg * ExactRational::new(60, i64::from(table.step_arcmin));
    let i = pos.floor().to_usize().expect("position within the table");
    let node = |j: usize| {
        if j == 0 {
            ExactRational::zero()
        } else {
            ExactRational::from(table.rsines[j - 1])
        }
    };
    if i >= n {
        return Ok(node(n));
    }
    let frac = &pos - ExactRational::from(i as u64);
    Ok(node(i) + frac * ExactRational::from(table.diffs[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d)
    }

    #[test]
    fn table_3438() {
        let t = sine_table(3438, 24).unwrap();
        assert_eq!(t.step_arcmin(), 225);
        assert_eq!(t.rsines()[0], 225);
        assert_eq!(t.rsines()[23], 3438);
        assert_eq!(t.diffs().iter().sum::<i64>(), 3438);
        assert!(t.diffs().windows(2).all(|w| w[0] > w[1]));
        assert_eq!(&t.rsines()[..6], &[225, 449, 671, 890, 1105, 1316]);
    }

    #[test]
    fn table_120() {
        let t = sine_table(120, 24).unwrap();
        assert_eq!(t.rsines()[23], 120);
        assert_eq!(t.diffs().iter().sum::<i64>(), 120);
        // the last two entries coincide: 119.74 and 120 both round to 120
        assert!(t.rsines().windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(&t.rsines()[22..], &[120, 120]);
    }

    #[test]
    fn table_rejects_bad_shapes() {
        assert!(sine_table(0, 24).is_err());
        assert!(sine_table(3438, 7).is_err());
        assert!(sine_table(MAX_RADIUS + 1, 24).is_err());
        assert!(sine_table(MAX_RADIUS, 24).is_ok());
    }

    #[test]
    fn table_serializations() {
        let t = sine_table(3438, 24).unwrap();
        let csv = t.to_csv().unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("index,arcmin,rsine,diff"));
        assert_eq!(lines.next(), Some("1,225,225,225"));
        assert_eq!(csv.lines().count(), 25);
        assert!(!csv.contains('\r'));
        let json: serde_json::Value = serde_json::from_str(&t.to_json().unwrap()).unwrap();
        assert_eq!(json["radius"], 3438);
        assert_eq!(json["rsines"].as_array().unwrap().len(), 24);
    }

    #[test]
    fn bhaskara1_examples() {
        assert_eq!(bhaskara1_sine(&q(90, 1)).unwrap(), q(1, 1));
        assert_eq!(bhaskara1_sine(&q(30, 1)).unwrap(), q(1, 2));
        assert_eq!(bhaskara1_sine(&q(10, 1)).unwrap(), q(17, 97));
        assert_eq!(bhaskara1_sine(&q(0, 1)).unwrap(), q(0, 1));
        assert!(bhaskara1_sine(&q(181, 1)).is_err());
        assert!(bhaskara1_sine(&q(-1, 2)).is_err());
        let approx = bhaskara1_sine(&q(10, 1)).unwrap().to_decimal(20);
        let truth = oracle::sin_oracle(&q(10, 1), 20).unwrap();
        let err = oracle::relative_error(&approx, &truth).unwrap();
        assert_eq!(err.render_rounded(4), "0.0093");
    }

    #[test]
    fn bhaskara1_symmetry() {
        for t in 0..=180 {
            let a = bhaskara1_sine(&q(t, 1)).unwrap();
            let b = bhaskara1_sine(&q(180 - t, 1)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn interpolation() {
        let t = sine_table(3438, 24).unwrap();
        assert_eq!(interpolate_rsine(&t, &q(15, 4)).unwrap(), q(225, 1));
        assert_eq!(interpolate_rsine(&t, &q(15, 8)).unwrap(), q(225, 2));
        assert_eq!(interpolate_rsine(&t, &q(90, 1)).unwrap(), q(3438, 1));
        assert_eq!(interpolate_rsine(&t, &q(0, 1)).unwrap(), q(0, 1));
        let mid = interpolate_rsine(&t, &q(45, 1)).unwrap();
        assert_eq!(mid.cmp(&q(2431, 1)), Ordering::Equal);
        assert!(interpolate_rsine(&t, &q(91, 1)).is_err());
    }
}
