//! Circumference by repeated doubling of an inscribed polygon, starting from
//! the hexagon whose side equals the radius.
//!
//! With `S` the side of the `n`-gon and `c = √(r² − S²/4)` its apothem,
//! the side of the `2n`-gon satisfies
//!
//! ```text
//! S₂² = S²/4 + (r − c)²
//! ```
//!
//! In integer mode each square root is rounded to an integer under a
//! [`RoundingPolicy`]. Rounding `c` and then subtracting it from `r` loses
//! everything once `r − c` drops below one unit, so the default
//! [`RecurrenceForm::Rationalized`] uses the identity
//! `r − c = (S²/4)/(r + c)` and carries `S²` as an exact fraction; only the
//! apothems and the final perimeter are rounded. The literal form is kept as
//! [`RecurrenceForm::Direct`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{isqrt_rational, ExactRational, HpDecimal, RootMode};

pub const MAX_DOUBLINGS: u32 = 20;

/// Largest doubling count for an exhaustive policy search (`3^(m+1)` runs).
pub const MAX_SEARCH_DOUBLINGS: u32 = 8;

/// One rounding mode per square root: an apothem for each doubling, then the
/// final perimeter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RoundingPolicy(Vec<RootMode>);

impl RoundingPolicy {
    pub fn new(modes: Vec<RootMode>) -> Self {
        RoundingPolicy(modes)
    }

    pub fn uniform(mode: RootMode, doublings: u32) -> Self {
        RoundingPolicy(vec![mode; doublings as usize + 1])
    }

    pub fn modes(&self) -> &[RootMode] {
        &self.0
    }

    /// Policy number `index` in base-3 order, first root most significant.
    pub fn from_index(mut index: usize, len: usize) -> Self {
        let mut modes = vec![RootMode::Floor; len];
        for slot in modes.iter_mut().rev() {
            *slot = RootMode::ALL[index % 3];
            index /= 3;
        }
        RoundingPolicy(modes)
    }
}

impl fmt::Display for RoundingPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|m| write!(f, "{}", m.letter()))
    }
}

impl FromStr for RoundingPolicy {
    type Err = Error;

    /// Letters `f`, `c`, `n`, one per root, e.g. `"fffffcn"`.
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| {
                RootMode::from_letter(c)
                    .ok_or_else(|| Error::Parse(format!("bad rounding letter `{c}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(RoundingPolicy)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RecurrenceForm {
    #[default]
    Rationalized,
    Direct,
}

impl fmt::Display for RecurrenceForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecurrenceForm::Rationalized => "rationalized",
            RecurrenceForm::Direct => "direct",
        })
    }
}

impl FromStr for RecurrenceForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "rationalized" => Ok(RecurrenceForm::Rationalized),
            "direct" => Ok(RecurrenceForm::Direct),
            _ => Err(Error::Parse(format!("unknown recurrence form `{s}`"))),
        }
    }
}

/// State of one polygon in the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublingStep {
    pub sides: u64,
    /// `S²` exactly, in squared diameter units.
    pub side_squared: ExactRational,
    /// The rounded apothem used to reach the next polygon; `None` on the last.
    pub apothem: Option<(BigUint, RootMode)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoublingRun {
    pub diameter: u64,
    pub form: RecurrenceForm,
    pub policy: RoundingPolicy,
    pub trace: Vec<DoublingStep>,
    pub sides: u64,
    /// `n·S` rounded under the last policy entry.
    pub perimeter: BigUint,
}

impl DoublingRun {
    /// Perimeter over diameter, the implied π.
    pub fn ratio(&self) -> ExactRational {
        ExactRational::new(self.perimeter.clone(), self.diameter)
    }
}

fn check_shape(diameter: u64, doublings: u32) -> Result<()> {
    if diameter == 0 {
        return Err(Error::NonPositive { what: "diameter" });
    }
    if doublings > MAX_DOUBLINGS {
        return Err(Error::out_of_range(
            "doublings",
            format!("{doublings} exceeds {MAX_DOUBLINGS}"),
        ));
    }
    Ok(())
}

/// One doubling: the rounded apothem and the next `S²`.
fn double(
    r: &ExactRational,
    s2: &ExactRational,
    mode: RootMode,
    form: RecurrenceForm,
) -> Result<(BigUint, ExactRational)> {
    let quarter = s2 / ExactRational::from(4);
    let c = isqrt_rational(&(r.square() - &quarter), mode)?;
    let c_r = ExactRational::from(BigInt::from(c.clone()));
    let next = match form {
        RecurrenceForm::Rationalized => {
            let t = r + &c_r;
            &quarter + quarter.square() / t.square()
        }
        RecurrenceForm::Direct => &quarter + (r - &c_r).square(),
    };
    Ok((c, next))
}

fn perimeter_squared(sides: u64, s2: &ExactRational) -> ExactRational {
    ExactRational::from(sides).square() * s2
}

/// Integer-mode doubling with a square root rounded at every stage.
pub fn polygon_doubling(
    diameter: u64,
    doublings: u32,
    policy: &RoundingPolicy,
    form: RecurrenceForm,
) -> Result<DoublingRun> {
    check_shape(diameter, doublings)?;
    if !diameter.is_multiple_of(2) {
        return Err(Error::domain(format!(
            "integer mode needs an even diameter, got {diameter}"
        )));
    }
    if policy.modes().len() != doublings as usize + 1 {
        return Err(Error::out_of_range(
            "policy",
            format!(
                "{doublings} doublings need {} rounding modes, got {}",
                doublings + 1,
                policy.modes().len()
            ),
        ));
    }
    let r = ExactRational::from(diameter / 2);
    let mut sides: u64 = 6;
    let mut s2 = r.square();
    let mut trace = Vec::with_capacity(doublings as usize + 1);
    for &mode in &policy.modes()[..doublings as usize] {
        let (c, next) = double(&r, &s2, mode, form)?;
        trace.push(DoublingStep {
            sides,
            side_squared: s2,
            apothem: Some((c, mode)),
        });
        s2 = next;
        sides *= 2;
    }
    let last = *policy.modes().last().expect("length checked");
    let perimeter = isqrt_rational(&perimeter_squared(sides, &s2), last)?;
    trace.push(DoublingStep {
        sides,
        side_squared: s2,
        apothem: None,
    });
    Ok(DoublingRun {
        diameter,
        form,
        policy: policy.clone(),
        trace,
        sides,
        perimeter,
    })
}

/// Every rounding schedule for a fixed chain, and which ones hit a target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolicySearch {
    pub diameter: u64,
    pub doublings: u32,
    pub form: RecurrenceForm,
    pub runs: usize,
    /// Perimeter value → number of schedules producing it.
    pub histogram: BTreeMap<BigUint, usize>,
    pub target: BigUint,
    /// Schedules reaching `target`, in base-3 order (`f < c < n`).
    pub hits: Vec<RoundingPolicy>,
}

/// Runs all `3^(doublings+1)` rounding schedules.
pub fn policy_search(
    diameter: u64,
    doublings: u32,
    form: RecurrenceForm,
    target: &BigUint,
) -> Result<PolicySearch> {
    if doublings > MAX_SEARCH_DOUBLINGS {
        return Err(Error::out_of_range(
            "doublings",
            format!("exhaustive search is capped at {MAX_SEARCH_DOUBLINGS}"),
        ));
    }
    check_shape(diameter, doublings)?;
    // validates the diameter and the chain once
    polygon_doubling(
        diameter,
        doublings,
        &RoundingPolicy::uniform(RootMode::Floor, doublings),
        form,
    )?;
    let r = ExactRational::from(diameter / 2);
    let runs = 3usize.pow(doublings + 1);
    // schedules share prefixes, so walk the tree of partial schedules and
    // compute each intermediate S² once; collect keeps base-3 order
    let results = RootMode::ALL
        .par_iter()
        .map(|&first| {
            let mut out = Vec::new();
            let mut prefix = vec![first];
            let s2 = r.square();
            if doublings == 0 {
                finish(&s2, 6, &mut prefix, &mut out)?;
            } else {
                let (_, next) = double(&r, &s2, first, form)?;
                explore(&r, &next, 12, doublings - 1, form, &mut prefix, &mut out)?;
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten();
    let mut histogram = BTreeMap::new();
    let mut hits = Vec::new();
    for (policy, perimeter) in results {
        if &perimeter == target {
            hits.push(policy);
        }
        *histogram.entry(perimeter).or_insert(0) += 1;
    }
    Ok(PolicySearch {
        diameter,
        doublings,
        form,
        runs,
        histogram,
        target: target.clone(),
        hits,
    })
}

type SearchRow = (RoundingPolicy, BigUint);

fn finish(
    s2: &ExactRational,
    sides: u64,
    prefix: &mut Vec<RootMode>,
    out: &mut Vec<SearchRow>,
) -> Result<()> {
    let p2 = perimeter_squared(sides, s2);
    for mode in RootMode::ALL {
        prefix.push(mode);
        out.push((RoundingPolicy(prefix.clone()), isqrt_rational(&p2, mode)?));
        prefix.pop();
    }
    Ok(())
}

fn explore(
    r: &ExactRational,
    s2: &ExactRational,
    sides: u64,
    remaining: u32,
    form: RecurrenceForm,
    prefix: &mut Vec<RootMode>,
    out: &mut Vec<SearchRow>,
) -> Result<()> {
    if remaining == 0 {
        return finish(s2, sides, prefix, out);
    }
    for mode in RootMode::ALL {
        let (_, next) = double(r, s2, mode, form)?;
        prefix.push(mode);
        explore(r, &next, sides * 2, remaining - 1, form, prefix, out)?;
        prefix.pop();
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HpDoubling {
    pub sides: u64,
    /// Perimeter of each polygon in the chain, hexagon first.
    pub perimeters: Vec<(u64, HpDecimal)>,
    pub perimeter: HpDecimal,
    /// Perimeter over diameter.
    pub ratio: HpDecimal,
}

/// The same recurrence in certified decimal arithmetic.
pub fn polygon_doubling_hp(
    diameter: &ExactRational,
    doublings: u32,
    digits: u32,
) -> Result<HpDoubling> {
    if !diameter.is_positive() {
        return Err(Error::NonPositive { what: "diameter" });
    }
    check_shape(1, doublings)?;
    if digits == 0 {
        return Err(Error::NonPositive { what: "digits" });
    }
    let work = digits + 10 + 2 * doublings;
    let r = (diameter / ExactRational::from(2)).to_decimal(work);
    let r2 = r.mul(&r, work);
    let quarter = ExactRational::new(1, 4);
    let mut s2 = r2.clone();
    let mut sides: u64 = 6;
    let mut perimeters = Vec::with_capacity(doublings as usize + 1);
    let perimeter_of = |s2: &HpDecimal, n: u64| -> Result<HpDecimal> {
        Ok(s2.sqrt(work)?.mul_rational(&ExactRational::from(n), work))
    };
    for _ in 0..doublings {
        perimeters.push((sides, perimeter_of(&s2, sides)?.round_to(digits)));
        let q = s2.mul_rational(&quarter, work);
        let c = r2.sub(&q).sqrt(work)?;
        let t = r.add(&c);
        s2 = q.add(&q.mul(&q, work).div(&t.mul(&t, work), work)?);
        sides *= 2;
    }
    let p = perimeter_of(&s2, sides)?;
    let ratio = p.mul_rational(&diameter.recip()?, work).round_to(digits);
    let perimeter = p.round_to(digits);
    perimeters.push((sides, perimeter.clone()));
    Ok(HpDoubling {
        sides,
        perimeters,
        perimeter,
        ratio,
    })
}
