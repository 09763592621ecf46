//! One row per π approximant, measured against the oracle.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{ExactRational, HpDecimal, QuadSurd};
use crate::kerala::{self, SignPolicy};
use crate::oracle;
use crate::siddhanta;
use crate::sulva::{self, CirclingMethod};

/// Largest report precision for catalogs.
pub const MAX_CATALOG_DIGITS: u32 = 50;

/// Digits used to rank rows and to count agreeing digits.
const RANK_DIGITS: u32 = 80;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tradition {
    Vedic,
    Sulva,
    Jaina,
    Siddhanta,
    Kerala,
    /// Reference constants from outside the tradition, not methods.
    External,
}

impl Tradition {
    pub fn name(self) -> &'static str {
        match self {
            Tradition::Vedic => "Vedic",
            Tradition::Sulva => "Sulva",
            Tradition::Jaina => "Jaina",
            Tradition::Siddhanta => "Siddhanta",
            Tradition::Kerala => "Kerala",
            Tradition::External => "External",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodResult {
    pub method_id: String,
    pub tradition: Tradition,
    pub exact_form: Option<QuadSurd>,
    /// Value at the report precision.
    pub value: HpDecimal,
    /// Signed `(value − reference)/reference` at the report precision.
    pub rel_error: HpDecimal,
    pub digits_correct: u32,
    /// Documentation only.
    pub era_label: String,
    rank_error: HpDecimal,
}

impl MethodResult {
    /// Builds a row from an exact value against a reference computed at any
    /// precision by `reference`.
    fn measure(
        entry: Entry,
        digits: u32,
        reference: &(dyn Fn(u32) -> HpDecimal + Sync),
    ) -> Result<Self> {
        let hi = entry.exact.eval(RANK_DIGITS);
        let reference_hi = reference(RANK_DIGITS);
        let rank_error = oracle::relative_error(&hi, &reference_hi)?;
        let rel_error = rank_error.round_to(digits);
        let digits_correct = kerala::digits_correct(&hi, &reference_hi)?;
        Ok(MethodResult {
            method_id: entry.id.to_string(),
            tradition: entry.tradition,
            value: entry.exact.eval(digits),
            exact_form: Some(entry.exact),
            rel_error,
            digits_correct,
            era_label: entry.era.to_string(),
            rank_error,
        })
    }
}

struct Entry {
    id: &'static str,
    tradition: Tradition,
    exact: QuadSurd,
    era: &'static str,
}

fn entry(id: &'static str, tradition: Tradition, exact: QuadSurd, era: &'static str) -> Entry {
    Entry {
        id,
        tradition,
        exact,
        era,
    }
}

fn rational(n: i64, d: i64) -> QuadSurd {
    QuadSurd::rational(&ExactRational::new(n, d))
}

fn pi_entries() -> Result<Vec<Entry>> {
    use Tradition::*;
    let one = ExactRational::one();
    let implied = |m| sulva::circle_from_square(&one, m).map(|c| c.implied_pi);
    let series = kerala::corrected_pi(50, SignPolicy::Empirical)?.pi_estimate;
    Ok(vec![
        entry(
            "vedic_pit",
            Vedic,
            rational(3, 1),
            "Baudhayana Sulvasutra, pit rule",
        ),
        entry(
            "manava_circumference",
            Sulva,
            rational(16, 5),
            "Manava Sulvasutra 10.3.2.13",
        ),
        entry(
            "baudhayana_circling",
            Sulva,
            implied(CirclingMethod::Baudhayana)?,
            "Baudhayana Sulvasutra, circling the square",
        ),
        entry(
            "manava_circling",
            Sulva,
            implied(CirclingMethod::Manava)?,
            "Manava Sulvasutra, circling the square",
        ),
        entry(
            "maitrayaniya_circling",
            Sulva,
            implied(CirclingMethod::Maitrayaniya)?,
            "Maitrayaniya Sulvasutra, 9/16 rule",
        ),
        entry(
            "sulva_squaring",
            Sulva,
            QuadSurd::rational(&sulva::squaring_implied_pi()),
            "Sulvasutra, squaring the circle",
        ),
        entry(
            "jaina_sqrt10",
            Jaina,
            QuadSurd::sqrt_integer(10u32)?,
            "Jaina canon, sqrt(10) rule",
        ),
        entry(
            "virasena",
            Jaina,
            rational(355, 113),
            "Virasena, Dhavala commentary",
        ),
        entry(
            "aryabhata",
            Siddhanta,
            QuadSurd::rational(&siddhanta::aryabhata_pi()),
            "Aryabhatiya, Ganitapada 10",
        ),
        entry(
            "madhava",
            Kerala,
            QuadSurd::rational(&kerala::madhava_value()),
            "Madhava, 13-digit circumference",
        ),
        entry(
            "madhava_series_50",
            Kerala,
            QuadSurd::rational(&series),
            "Madhava series, 50 terms, end correction",
        ),
        entry(
            "ptolemy",
            External,
            rational(377, 120),
            "Ptolemy, Almagest 3;8,30",
        ),
        entry(
            "egyptian",
            External,
            rational(256, 81),
            "Rhind papyrus (16/9)^2",
        ),
        entry(
            "zu_chongzhi",
            External,
            rational(355, 113),
            "Zu Chongzhi, milu",
        ),
    ])
}

fn sqrt2_entries() -> Vec<Entry> {
    vec![
        entry(
            "sulva_sqrt2",
            Tradition::Sulva,
            QuadSurd::rational(&sulva::sqrt2_sulva()),
            "Sulvasutra, dvikarani expression",
        ),
        entry(
            "babylonian_sqrt2",
            Tradition::External,
            rational(30547, 21600),
            "YBC 7289, 1;24,51,10",
        ),
    ]
}

fn check_digits(digits: u32) -> Result<()> {
    if digits == 0 {
        return Err(Error::NonPositive { what: "digits" });
    }
    if digits > MAX_CATALOG_DIGITS {
        return Err(Error::out_of_range(
            "digits",
            format!("{digits} exceeds {MAX_CATALOG_DIGITS}"),
        ));
    }
    Ok(())
}

/// Descending by `|rel_error|`, ranked at high precision; equal values keep
/// their listing order.
fn rank(rows: &mut [MethodResult]) {
    rows.sort_by(|a, b| {
        if a.exact_form == b.exact_form {
            return Ordering::Equal;
        }
        b.rank_error
            .abs()
            .certified_cmp(&a.rank_error.abs())
            .unwrap_or(Ordering::Equal)
    });
}

fn build(
    entries: Vec<Entry>,
    digits: u32,
    reference: &(dyn Fn(u32) -> HpDecimal + Sync),
) -> Result<Vec<MethodResult>> {
    check_digits(digits)?;
    // collect keeps listing order regardless of scheduling
    let mut rows = entries
        .into_par_iter()
        .map(|e| MethodResult::measure(e, digits, reference))
        .collect::<Result<Vec<_>>>()?;
    rank(&mut rows);
    Ok(rows)
}

/// Every π approximant against the oracle.
pub fn pi_catalog(digits: u32) -> Result<Vec<MethodResult>> {
    build(pi_entries()?, digits, &|d| {
        oracle::pi_oracle(d).expect("within oracle range")
    })
}

/// The Śulvasūtra √2 and the Babylonian reference value against `√2`.
pub fn sqrt2_catalog(digits: u32) -> Result<Vec<MethodResult>> {
    let root2 = QuadSurd::sqrt_integer(2u32)?;
    build(sqrt2_entries(), digits, &move |d| root2.eval(d))
}
