//! Error curves of the segment, arc and sine approximations over a grid of
//! angles, on the unit circle.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{ExactRational, HpDecimal};
use crate::jaina;
use crate::oracle;
use crate::siddhanta::{self, SineTable};

const GUARD: u32 = 15;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentFormula {
    JainaArc,
    MahaviraArea,
    SridharaArea,
    Bhaskara2Arc,
}

impl SegmentFormula {
    pub const ALL: [SegmentFormula; 4] = [
        SegmentFormula::JainaArc,
        SegmentFormula::MahaviraArea,
        SegmentFormula::SridharaArea,
        SegmentFormula::Bhaskara2Arc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SegmentFormula::JainaArc => "jaina_arc",
            SegmentFormula::MahaviraArea => "mahavira_area",
            SegmentFormula::SridharaArea => "sridhara_area",
            SegmentFormula::Bhaskara2Arc => "bhaskara2_arc",
        }
    }
}

impl fmt::Display for SegmentFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SegmentFormula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        SegmentFormula::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::Parse(format!("unknown segment formula `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub angle_deg: ExactRational,
    pub value: HpDecimal,
    pub oracle: HpDecimal,
    pub rel_error: HpDecimal,
}

/// Integer degrees `from..=to`.
pub fn degree_grid(from: i64, to: i64) -> Vec<ExactRational> {
    (from..=to).map(ExactRational::from).collect()
}

fn check_grid(grid: &[ExactRational], open_at_zero: bool) -> Result<()> {
    if grid.is_empty() {
        return Err(Error::domain("empty angle grid"));
    }
    for a in grid {
        let low_ok = if open_at_zero {
            a.is_positive()
        } else {
            !a.is_negative()
        };
        if !low_ok || *a > 180 {
            let range = if open_at_zero {
                "(0°, 180°]"
            } else {
                "[0°, 180°]"
            };
            return Err(Error::domain(format!("angle {a}° outside {range}")));
        }
    }
    Ok(())
}

/// Formula against the true arc `θ` or segment area `(θ − sin θ)/2`, for a
/// unit radius and each central angle in `grid`.
pub fn segment_error_scan(
    formula: SegmentFormula,
    grid: &[ExactRational],
    digits: u32,
) -> Result<Vec<ScanRow>> {
    check_grid(grid, true)?;
    let work = digits + GUARD;
    let d = ExactRational::from(2);
    grid.iter()
        .map(|theta| {
            let half = theta / ExactRational::from(2);
            let c = oracle::sin_decimal(&half, work)?.mul_rational(&d, work);
            let h = HpDecimal::from_integer(1).sub(&oracle::cos_decimal(&half, work)?);
            let rad = oracle::radians(theta, work);
            let (value, truth) = match formula {
                SegmentFormula::JainaArc => (jaina::arc_jaina_hp(&c, &h, work), rad),
                SegmentFormula::Bhaskara2Arc => {
                    let p = oracle::pi_decimal(work).mul_rational(&d, work);
                    (siddhanta::bhaskara2_arc_hp(&c, &d, &p, work)?, rad)
                }
                SegmentFormula::MahaviraArea | SegmentFormula::SridharaArea => {
                    let area = if formula == SegmentFormula::MahaviraArea {
                        jaina::mahavira_area_hp(&c, &h, work)
                    } else {
                        jaina::sridhara_area_hp(&c, &h, work)
                    };
                    let sin = oracle::sin_decimal(theta, work)?;
                    let truth = rad.sub(&sin).mul_rational(&ExactRational::new(1, 2), work);
                    (area, truth)
                }
            };
            let rel_error = oracle::relative_error(&value, &truth)?.round_to(digits);
            Ok(ScanRow {
                angle_deg: theta.clone(),
                value: value.round_to(digits),
                oracle: truth.round_to(digits),
                rel_error,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SineScanRow {
    pub angle_deg: ExactRational,
    pub bhaskara1: HpDecimal,
    /// Interpolated Rsine over the radius; only for angles up to 90°.
    pub table: Option<HpDecimal>,
    pub oracle: HpDecimal,
    /// `None` where the true sine is 0.
    pub bhaskara1_rel_error: Option<HpDecimal>,
    pub table_rel_error: Option<HpDecimal>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SineScan {
    pub rows: Vec<SineScanRow>,
    /// Largest `|error|` of Bhāskara I over the grid, and where.
    pub max_bhaskara1: Option<(ExactRational, HpDecimal)>,
    pub max_table: Option<(ExactRational, HpDecimal)>,
}

fn track_max(
    slot: &mut Option<(ExactRational, HpDecimal, HpDecimal)>,
    angle: &ExactRational,
    hi: &HpDecimal,
) {
    let mag = hi.abs();
    let bigger = match slot {
        None => true,
        Some((_, _, best)) => mag.certified_cmp(best) == Some(Ordering::Greater),
    };
    if bigger {
        *slot = Some((angle.clone(), hi.clone(), mag));
    }
}

/// Bhāskara I's rational sine and the interpolated table against the oracle.
pub fn sine_error_scan(grid: &[ExactRational], table: &SineTable, digits: u32) -> Result<SineScan> {
    check_grid(grid, false)?;
    let work = digits + GUARD;
    let radius = ExactRational::from(table.radius());
    let mut rows = Vec::with_capacity(grid.len());
    let mut max_b = None;
    let mut max_t = None;
    for theta in grid {
        let truth = oracle::sin_decimal(theta, work)?;
        let zero = truth.is_exact() && truth.mantissa().sign() == num_bigint::Sign::NoSign;
        let b = siddhanta::bhaskara1_sine(theta)?.to_decimal(work);
        let t = if *theta <= 90 {
            Some((siddhanta::interpolate_rsine(table, theta)? / &radius).to_decimal(work))
        } else {
            None
        };
        let rel = |x: &HpDecimal| -> Result<Option<HpDecimal>> {
            if zero {
                return Ok(None);
            }
            oracle::relative_error(x, &truth).map(Some)
        };
        let b_err = rel(&b)?;
        let t_err = match &t {
            Some(t) => rel(t)?,
            None => None,
        };
        if let Some(e) = &b_err {
            track_max(&mut max_b, theta, e);
        }
        if let Some(e) = &t_err {
            track_max(&mut max_t, theta, e);
        }
        rows.push(SineScanRow {
            angle_deg: theta.clone(),
            bhaskara1: b.round_to(digits),
            table: t.map(|t| t.round_to(digits)),
            oracle: truth.round_to(digits),
            bhaskara1_rel_error: b_err.map(|e| e.round_to(digits)),
            table_rel_error: t_err.map(|e| e.round_to(digits)),
        });
    }
    let finish = |m: Option<(ExactRational, HpDecimal, HpDecimal)>| {
        m.map(|(a, e, _)| (a, e.round_to(digits)))
    };
    Ok(SineScan {
        rows,
        max_bhaskara1: finish(max_b),
        max_table: finish(max_t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn at(rows: &[ScanRow], deg: i64) -> &ScanRow {
        rows.iter().find(|r| r.angle_deg == deg).unwrap()
    }

    #[test]
    fn segment_scan_examples() {
        let grid = vec![
            ExactRational::from(60),
            ExactRational::from(90),
            ExactRational::from(180),
        ];
        let m = segment_error_scan(SegmentFormula::MahaviraArea, &grid, 10).unwrap();
        assert_eq!(at(&m, 180).rel_error.render_rounded(5), "0.00658");
        assert_eq!(at(&m, 90).rel_error.render_rounded(3), "0.147");
        let s = segment_error_scan(SegmentFormula::SridharaArea, &grid, 10).unwrap();
        assert_eq!(at(&s, 90).rel_error.render_rounded(3), "-0.077");
        assert_eq!(at(&s, 180).rel_error, at(&m, 180).rel_error);
        let b = segment_error_scan(SegmentFormula::Bhaskara2Arc, &grid, 10).unwrap();
        assert_eq!(at(&b, 60).rel_error.render_rounded(9), "0.000000000");
        assert_eq!(at(&b, 180).rel_error.render_rounded(9), "0.000000000");
        let a = segment_error_scan(SegmentFormula::JainaArc, &grid, 10).unwrap();
        assert_eq!(at(&a, 90).rel_error.render_rounded(4), "0.0095");
    }

    #[test]
    fn jaina_arc_error_vanishes_for_small_arcs() {
        let grid: Vec<_> = [1, 5, 20, 60, 120]
            .into_iter()
            .map(ExactRational::from)
            .collect();
        let rows = segment_error_scan(SegmentFormula::JainaArc, &grid, 20).unwrap();
        for w in rows.windows(2) {
            assert_eq!(
                w[0].rel_error.abs().certified_cmp(&w[1].rel_error.abs()),
                Some(Ordering::Less)
            );
        }
    }

    #[test]
    fn grids_are_validated() {
        assert!(segment_error_scan(SegmentFormula::JainaArc, &[], 10).is_err());
        assert!(
            segment_error_scan(SegmentFormula::JainaArc, &[ExactRational::zero()], 10).is_err()
        );
        assert!(
            segment_error_scan(SegmentFormula::JainaArc, &[ExactRational::from(181)], 10).is_err()
        );
        let t = siddhanta::sine_table(3438, 24).unwrap();
        assert!(sine_error_scan(&[], &t, 10).is_err());
        assert!(sine_error_scan(&[ExactRational::from(-1)], &t, 10).is_err());
    }

    #[test]
    fn sine_scan_examples() {
        let t = siddhanta::sine_table(3438, 24).unwrap();
        let grid = degree_grid(0, 180);
        let scan = sine_error_scan(&grid, &t, 8).unwrap();
        assert_eq!(scan.rows.len(), 181);
        let row = |d: i64| scan.rows.iter().find(|r| r.angle_deg == d).unwrap();
        assert!(row(0).bhaskara1_rel_error.is_none());
        assert!(row(120).table.is_none());
        assert_eq!(
            row(90).bhaskara1_rel_error.as_ref().unwrap().render(),
            "0.00000000"
        );
        assert_eq!(
            row(90).table_rel_error.as_ref().unwrap().render(),
            "0.00000000"
        );
        assert_eq!(
            row(5)
                .bhaskara1_rel_error
                .as_ref()
                .unwrap()
                .render_rounded(4),
            "0.0135"
        );

        let (angle, worst) = scan.max_bhaskara1.clone().unwrap();
        assert_eq!(angle, ExactRational::from(1));
        assert_eq!(worst.render_rounded(4), "0.0175");

        let mid = sine_error_scan(&degree_grid(10, 170), &t, 8).unwrap();
        let (_, worst) = mid.max_bhaskara1.unwrap();
        assert_eq!(
            worst.abs().certified_cmp(&HpDecimal::exact(1, 2)),
            Some(Ordering::Less)
        );
    }
}
