//! The `vrtta` command line: argument definitions and dispatch.
//!
//! [`execute`] returns the text to print, so commands can be tested without a
//! process. Exit codes: 0 success, 2 usage error, 3 domain error.

mod output;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{isqrt, ExactRational, HpDecimal, QuadSurd, RootMode};
use crate::harness::{self, SegmentFormula};
use crate::jaina::{self, SegmentSpec, VirasenaReading};
use crate::kerala::{self, SignPolicy};
use crate::oracle;
use crate::siddhanta::{self, RecurrenceForm, RoundingPolicy};
use crate::sulva::{self, CirclingMethod};

pub use output::{Format, Record};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

/// Exit code for a library error: malformed input is a usage error,
/// everything else a domain error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_USAGE,
        _ => EXIT_DOMAIN,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "vrtta",
    version,
    about = "Historical Indian circle approximations, evaluated exactly and measured against a modern oracle"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "table", global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct DigitsArg {
    /// Fractional digits in reported decimals.
    #[arg(long, default_value_t = harness::DEFAULT_DIGITS)]
    pub digits: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every π value in the corpus, sorted by size of error.
    Pi(DigitsArg),
    /// The Śulvasūtra √2 expression beside the Babylonian value.
    Sqrt2(DigitsArg),
    /// Circle with the area of a square (circling the square).
    Construct {
        #[arg(long)]
        method: CirclingMethodArg,
        /// Side of the square, as p/q or a decimal.
        #[arg(long, default_value = "1")]
        side: ExactRational,
        #[command(flatten)]
        digits: DigitsArg,
    },
    /// Square with the area of a circle (squaring the circle).
    Square {
        #[arg(long, default_value = "2")]
        diameter: ExactRational,
        #[command(flatten)]
        digits: DigitsArg,
    },
    /// Chord, arrow, arc and area rules for a minor segment.
    Segment {
        /// Diameter.
        #[arg(long)]
        d: ExactRational,
        /// Chord.
        #[arg(long, conflicts_with = "h", required_unless_present = "h")]
        c: Option<ExactRational>,
        /// Arrow (height of the segment).
        #[arg(long)]
        h: Option<ExactRational>,
        #[arg(long, value_enum, default_value = "all")]
        formula: SegmentFormulaArg,
        #[command(flatten)]
        digits: DigitsArg,
    },
    /// Bhāskara I's sine at an angle, or an Rsine table.
    Sine {
        /// Angle in degrees.
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        theta: Option<ExactRational>,
        /// Print the table for this radius.
        #[arg(long)]
        table: Option<u64>,
        /// Radius of the table used to interpolate at `--theta`.
        #[arg(long, default_value_t = 3438)]
        radius: u64,
        #[arg(long, default_value_t = 24)]
        entries: u32,
        #[command(flatten)]
        digits: DigitsArg,
    },
    /// Bhāskara II's arc from chord and diameter.
    Arc {
        #[arg(long)]
        c: ExactRational,
        #[arg(long)]
        d: ExactRational,
        /// Circumference; defaults to π·d from the oracle.
        #[arg(long)]
        p: Option<ExactRational>,
        #[command(flatten)]
        digits: DigitsArg,
    },
    /// Madhava series with the end correction.
    Kerala {
        #[arg(long, default_value_t = 50)]
        n: u64,
        #[arg(long, value_enum, default_value = "empirical")]
        sign: SignArg,
        /// One row per term count up to `n`.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        digits: DigitsArg,
    },
    /// Polygon doubling from the hexagon.
    Doubling {
        #[arg(long, default_value_t = 20000)]
        diameter: u64,
        #[arg(long, default_value_t = 6)]
        doublings: u32,
        /// One letter per square root: f(loor), c(eil), n(earest).
        #[arg(long, conflicts_with = "mode")]
        policy: Option<RoundingPolicy>,
        /// Same rounding at every root.
        #[arg(long, value_enum, default_value = "floor")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "rationalized")]
        form: FormArg,
        /// Certified decimal arithmetic instead of integer rounding.
        #[arg(long, conflicts_with_all = ["search", "policy"])]
        high_precision: bool,
        /// Run every rounding schedule and report which hit `--target`.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value = "62832")]
        target: BigUint,
        /// Per-polygon values.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        digits: DigitsArg,
    },
    /// Error curves over a grid of angles.
    Scan {
        #[command(subcommand)]
        kind: ScanKind,
    },
    /// The Jambudvīpa circumference, ⌊√(10·d²)⌋.
    Jambudvipa {
        #[arg(long, default_value_t = jaina::JAMBUDVIPA_DIAMETER)]
        diameter: u64,
    },
    /// Vīrasena's circumference rule.
    Virasena {
        #[arg(long, default_value = "1")]
        d: ExactRational,
        #[arg(long, value_enum, default_value = "interpreted")]
        reading: ReadingArg,
        #[command(flatten)]
        digits: DigitsArg,
    },
    /// Integer square root with explicit rounding.
    Isqrt {
        n: BigUint,
        #[arg(long, value_enum, default_value = "floor")]
        mode: ModeArg,
    },
    /// Intersect two equal circles and check the common chord is perpendicular.
    Perpendicular {
        #[arg(long)]
        offset: ExactRational,
        /// Radius as p/q, a decimal, or sqrt(N).
        #[arg(long)]
        radius: String,
    },
}

#[derive(Debug, Subcommand)]
pub enum ScanKind {
    /// Segment and arc formulas on the unit circle.
    Segment {
        #[arg(long, value_enum)]
        formula: ScanFormulaArg,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        digits: DigitsArg,
    },
    /// Bhāskara I and the interpolated table against the true sine.
    Sine {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value_t = 3438)]
        radius: u64,
        #[command(flatten)]
        digits: DigitsArg,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// First angle in degrees (default 1 for segments, 0 for sines).
    #[arg(long)]
    pub from: Option<ExactRational>,
    #[arg(long, default_value = "180")]
    pub to: ExactRational,
    #[arg(long, default_value = "1")]
    pub step: ExactRational,
}

macro_rules! value_enum {
    ($name:ident => $target:ty { $($variant:ident => $value:expr),+ $(,)? }) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
        pub enum $name { $($variant),+ }
        impl From<$name> for $target {
            fn from(v: $name) -> $target {
                match v { $($name::$variant => $value),+ }
            }
        }
    };
}

value_enum!(CirclingMethodArg => CirclingMethod {
    Baudhayana => CirclingMethod::Baudhayana,
    Manava => CirclingMethod::Manava,
    Maitrayaniya => CirclingMethod::Maitrayaniya,
});
value_enum!(ModeArg => RootMode { Floor => RootMode::Floor, Ceil => RootMode::Ceil, Nearest => RootMode::Nearest });
value_enum!(FormArg => RecurrenceForm { Rationalized => RecurrenceForm::Rationalized, Direct => RecurrenceForm::Direct });
value_enum!(SignArg => SignPolicy { Empirical => SignPolicy::Empirical, Literal => SignPolicy::Literal });
value_enum!(ReadingArg => VirasenaReading { Interpreted => VirasenaReading::Interpreted, Literal => VirasenaReading::Literal });
value_enum!(ScanFormulaArg => SegmentFormula {
    JainaArc => SegmentFormula::JainaArc,
    MahaviraArea => SegmentFormula::MahaviraArea,
    SridharaArea => SegmentFormula::SridharaArea,
    Bhaskara2Arc => SegmentFormula::Bhaskara2Arc,
});

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SegmentFormulaArg {
    Arc,
    Mahavira,
    Sridhara,
    All,
}

fn check_digits(digits: u32) -> Result<u32> {
    if digits == 0 {
        return Err(Error::NonPositive { what: "digits" });
    }
    if digits > oracle::MAX_PI_DIGITS - 20 {
        return Err(Error::out_of_range(
            "digits",
            format!("{digits} exceeds {}", oracle::MAX_PI_DIGITS - 20),
        ));
    }
    Ok(digits)
}

fn pi_error(value: &HpDecimal, digits: u32) -> Result<HpDecimal> {
    let work = digits + 10;
    Ok(oracle::relative_error(&value.round_to(work), &oracle::pi_oracle(work)?)?.round_to(digits))
}

/// Runs a parsed command and returns what it prints.
pub fn execute(cli: &Cli) -> Result<String> {
    let f = cli.format;
    match &cli.command {
        Command::Pi(d) => {
            let rows = harness::pi_catalog(d.digits)?;
            catalog(&rows, f)
        }
        Command::Sqrt2(d) => {
            let rows = harness::sqrt2_catalog(d.digits)?;
            let mut out = catalog(&rows, f)?;
            if f == Format::Table {
                out.push_str(&format!(
                    "\nexpression: {} = {}\n",
                    sulva::SQRT2_EXPRESSION,
                    sulva::sqrt2_sulva()
                ));
            }
            Ok(out)
        }
        Command::Construct {
            method,
            side,
            digits,
        } => construct((*method).into(), side, check_digits(digits.digits)?, f),
        Command::Square { diameter, digits } => square(diameter, check_digits(digits.digits)?, f),
        Command::Segment {
            d,
            c,
            h,
            formula,
            digits,
        } => segment(
            d,
            c.as_ref(),
            h.as_ref(),
            *formula,
            check_digits(digits.digits)?,
            f,
        ),
        Command::Sine {
            theta,
            table,
            radius,
            entries,
            digits,
        } => match (theta, table) {
            (_, Some(r)) => sine_table(*r, *entries, f),
            (Some(t), None) => sine_at(t, *radius, *entries, check_digits(digits.digits)?, f),
            (None, None) => Err(Error::Parse("give --theta or --table".into())),
        },
        Command::Arc { c, d, p, digits } => arc(c, d, p.as_ref(), check_digits(digits.digits)?, f),
        Command::Kerala {
            n,
            sign,
            trace,
            digits,
        } => kerala_cmd(*n, (*sign).into(), *trace, check_digits(digits.digits)?, f),
        Command::Doubling {
            diameter,
            doublings,
            policy,
            mode,
            form,
            high_precision,
            search,
            target,
            trace,
            digits,
        } => {
            let form = (*form).into();
            if *high_precision {
                doubling_hp(
                    *diameter,
                    *doublings,
                    *trace,
                    check_digits(digits.digits)?,
                    f,
                )
            } else if *search {
                doubling_search(*diameter, *doublings, form, target, f)
            } else {
                let policy = policy
                    .clone()
                    .unwrap_or_else(|| RoundingPolicy::uniform((*mode).into(), *doublings));
                doubling(
                    *diameter,
                    *doublings,
                    &policy,
                    form,
                    *trace,
                    check_digits(digits.digits)?,
                    f,
                )
            }
        }
        Command::Scan { kind } => scan(kind, f),
        Command::Jambudvipa { diameter } => {
            let c = jaina::jambudvipa_circumference(&BigUint::from(*diameter))?;
            let mut r = Record::new();
            r.info("diameter", diameter)
                .exact("circumference", &c, &c)
                .info("rule", "isqrt(10*d^2), floor");
            r.render(f)
        }
        Command::Virasena { d, reading, digits } => {
            let digits = check_digits(digits.digits)?;
            let reading: VirasenaReading = (*reading).into();
            let c = jaina::virasena_circumference(d, reading)?;
            let ratio = &c / d;
            let mut r = Record::new();
            r.info("diameter", d)
                .info("reading", format!("{reading:?}").to_lowercase())
                .exact("circumference", &c, &c)
                .approx("circumference_decimal", c.to_decimal(digits))
                .exact("ratio", &ratio, &ratio)
                .approx(
                    "rel_error",
                    pi_error(&ratio.to_decimal(digits + 10), digits)?,
                );
            r.render(f)
        }
        Command::Isqrt { n, mode } => {
            let root = isqrt(n, (*mode).into());
            let mut r = Record::new();
            r.info("n", n)
                .info("mode", RootMode::from(*mode))
                .exact("isqrt", &root, &root);
            r.render(f)
        }
        Command::Perpendicular { offset, radius } => perpendicular(offset, radius, f),
    }
}

fn catalog(rows: &[harness::MethodResult], f: Format) -> Result<String> {
    match f {
        Format::Table => Ok(harness::catalog_table(rows)),
        Format::Csv => harness::catalog_csv(rows),
        Format::Json => harness::catalog_json(rows),
    }
}

fn construct(
    method: CirclingMethod,
    side: &ExactRational,
    digits: u32,
    f: Format,
) -> Result<String> {
    let c = sulva::circle_from_square(side, method)?;
    let mut r = Record::new();
    r.info("method", method).info("side", side);
    r.exact("radius", &c.radius, c.radius.to_ascii());
    r.approx("radius_decimal", c.radius.eval(digits));
    r.exact(
        "radius_squared",
        &c.radius_squared,
        c.radius_squared.to_ascii(),
    );
    if method == CirclingMethod::Manava {
        r.info(
            "radius_squared_construction",
            "(s/2)^2 * ((1 + (sqrt(17)/3 - 1)/5)^2 + 1/9)",
        );
    }
    r.approx("area_ratio", c.area_ratio_at(digits)?);
    r.exact("implied_pi", &c.implied_pi, c.implied_pi.to_ascii());
    let pi_hat = c.implied_pi.eval(digits + 10);
    r.approx("implied_pi_decimal", pi_hat.round_to(digits));
    r.approx("implied_pi_rel_error", pi_error(&pi_hat, digits)?);
    r.info(
        "note",
        "implied pi is a modern metric; the text gives a construction, not a number",
    );
    r.render(f)
}

fn square(diameter: &ExactRational, digits: u32, f: Format) -> Result<String> {
    let side = sulva::square_from_circle(diameter)?;
    let ratio = sulva::squaring_ratio();
    let area = side.square();
    let pi_hat = sulva::squaring_implied_pi();
    let mut r = Record::new();
    r.info("diameter", diameter)
        .info("ratio_expression", sulva::SQUARING_EXPRESSION)
        .exact("ratio", &ratio, &ratio)
        .exact("side", &side, &side)
        .approx("side_decimal", side.to_decimal(digits))
        .exact("square_area", &area, &area)
        .approx("square_area_decimal", area.to_decimal(digits))
        .exact("implied_pi", &pi_hat, &pi_hat)
        .approx(
            "implied_pi_rel_error",
            pi_error(&pi_hat.to_decimal(digits + 10), digits)?,
        );
    r.render(f)
}

fn segment(
    d: &ExactRational,
    c: Option<&ExactRational>,
    h: Option<&ExactRational>,
    formula: SegmentFormulaArg,
    digits: u32,
    f: Format,
) -> Result<String> {
    let seg = match (c, h) {
        (Some(c), _) => SegmentSpec::from_chord(c, d)?,
        (None, Some(h)) => SegmentSpec::from_arrow(h, d)?,
        (None, None) => return Err(Error::Parse("give --c or --h".into())),
    };
    let mut r = Record::new();
    r.info("diameter", seg.diameter())
        .exact("chord", seg.chord(), seg.chord().to_ascii())
        .exact("arrow", seg.arrow(), seg.arrow().to_ascii());
    let all = formula == SegmentFormulaArg::All;
    if all || formula == SegmentFormulaArg::Arc {
        let a = jaina::arc_length_jaina(&seg)?;
        r.exact("arc", &a, a.to_ascii())
            .approx("arc_decimal", a.eval(digits));
    }
    let mut area = |key: &str, e: jaina::Estimate| {
        if let Some(x) = &e.exact {
            r.exact(key, x, x.to_ascii());
        }
        r.approx(&format!("{key}_decimal"), e.value);
    };
    if all || formula == SegmentFormulaArg::Mahavira {
        area("mahavira_area", jaina::segment_area_mahavira(&seg, digits));
    }
    if all || formula == SegmentFormulaArg::Sridhara {
        area("sridhara_area", jaina::segment_area_sridhara(&seg, digits));
    }
    r.render(f)
}

fn sine_table(radius: u64, entries: u32, f: Format) -> Result<String> {
    let t = siddhanta::sine_table(radius, entries)?;
    match f {
        Format::Csv => t.to_csv(),
        Format::Json => {
            let mut s = t.to_json()?;
            s.push('\n');
            Ok(s)
        }
        Format::Table => {
            let body: Vec<Vec<String>> = t
                .rows()
                .iter()
                .map(|r| {
                    vec![
                        r.index.to_string(),
                        format!("{}°{:02}′", r.arcmin / 60, r.arcmin % 60),
                        r.rsine.to_string(),
                        r.diff.to_string(),
                    ]
                })
                .collect();
            let mut out = harness::text_table(&["index", "angle", "rsine", "diff"], &body);
            out.push_str(&format!(
                "sum of differences: {}\n",
                t.diffs().iter().sum::<i64>()
            ));
            Ok(out)
        }
    }
}

fn sine_at(
    theta: &ExactRational,
    radius: u64,
    entries: u32,
    digits: u32,
    f: Format,
) -> Result<String> {
    let work = digits + 10;
    let b = siddhanta::bhaskara1_sine(theta)?;
    let truth = oracle::sin_oracle(theta, work)?;
    let mut r = Record::new();
    r.info("theta_deg", theta)
        .exact("bhaskara1", &b, &b)
        .approx("bhaskara1_decimal", b.to_decimal(digits))
        .approx("sin", truth.round_to(digits));
    let nonzero = !(truth.is_exact() && truth.mantissa().sign() == num_bigint::Sign::NoSign);
    if nonzero {
        r.approx(
            "bhaskara1_rel_error",
            oracle::relative_error(&b.to_decimal(work), &truth)?.round_to(digits),
        );
    }
    if *theta <= 90 {
        let t = siddhanta::sine_table(radius, entries)?;
        let rs = siddhanta::interpolate_rsine(&t, theta)?;
        let s = &rs / ExactRational::from(radius);
        r.info("table_radius", radius)
            .exact("table_rsine", &rs, &rs)
            .approx("table_sin", s.to_decimal(digits));
        if nonzero {
            r.approx(
                "table_rel_error",
                oracle::relative_error(&s.to_decimal(work), &truth)?.round_to(digits),
            );
        }
    }
    r.render(f)
}

fn arc(
    c: &ExactRational,
    d: &ExactRational,
    p: Option<&ExactRational>,
    digits: u32,
    f: Format,
) -> Result<String> {
    let factor = siddhanta::bhaskara2_factor(c, d)?;
    let mut r = Record::new();
    r.info("chord", c)
        .info("diameter", d)
        .exact("arc_over_p", &factor, factor.to_ascii());
    match p {
        Some(p) => {
            let a = siddhanta::bhaskara2_arc(c, d, p)?;
            let verse = siddhanta::bhaskara2_arc_verse(c, d, p)?;
            r.info("p", p)
                .exact("arc", &a, a.to_ascii())
                .approx("arc_decimal", a.eval(digits))
                .info("verse_form_agrees", a == verse);
        }
        None => {
            r.info("p", "pi*d (oracle)").approx(
                "arc_decimal",
                siddhanta::bhaskara2_arc_oracle(c, d, digits)?,
            );
        }
    }
    r.render(f)
}

fn kerala_row(n: u64, sign: SignPolicy, digits: u32) -> Result<(HpDecimal, HpDecimal, u32)> {
    let work = digits + 10;
    let pi = oracle::pi_oracle(work)?;
    let est = if n <= kerala::EXACT_TERMS_LIMIT {
        kerala::corrected_pi(n, sign)?.pi_estimate.to_decimal(work)
    } else {
        kerala::corrected_pi_decimal(n, sign, work)?
    };
    let err = est.sub(&pi).round_to(digits);
    let dc = kerala::digits_correct(&est, &pi)?;
    Ok((est.round_to(digits), err, dc))
}

fn kerala_cmd(n: u64, sign: SignPolicy, trace: bool, digits: u32, f: Format) -> Result<String> {
    if n == 0 {
        return Err(Error::NonPositive { what: "term count" });
    }
    if trace {
        let limit = kerala::EXACT_TERMS_LIMIT.min(1000);
        if n > limit {
            return Err(Error::out_of_range(
                "n",
                format!("--trace is limited to {limit} rows"),
            ));
        }
        let work = digits + 10;
        let pi = oracle::pi_oracle(work)?;
        let body = (1..=n)
            .map(|k| {
                let est = kerala::corrected_pi(k, sign)?;
                let raw = (ExactRational::from(4) * &est.partial).to_decimal(work);
                let hat = est.pi_estimate.to_decimal(work);
                Ok(vec![
                    k.to_string(),
                    raw.round_to(digits).render(),
                    hat.round_to(digits).render(),
                    hat.sub(&pi).round_to(digits).render(),
                ])
            })
            .collect::<Result<Vec<_>>>()?;
        return output::rows(&["n", "four_partial", "pi_estimate", "error"], &body, f);
    }
    let (est, err, dc) = kerala_row(n, sign, digits)?;
    let corr = kerala::end_correction(n)?;
    let mut r = Record::new();
    r.info("n", n)
        .info("sign", sign)
        .exact("correction_magnitude", &corr, &corr)
        .approx("pi_estimate", est)
        .approx("error", err)
        .info("digits_correct", dc);
    r.render(f)
}

fn doubling(
    diameter: u64,
    doublings: u32,
    policy: &RoundingPolicy,
    form: RecurrenceForm,
    trace: bool,
    digits: u32,
    f: Format,
) -> Result<String> {
    let run = siddhanta::polygon_doubling(diameter, doublings, policy, form)?;
    if trace {
        let body: Vec<Vec<String>> = run
            .trace
            .iter()
            .map(|s| {
                let (c, m) = match &s.apothem {
                    Some((c, m)) => (c.to_string(), m.to_string()),
                    None => (String::new(), String::new()),
                };
                vec![
                    s.sides.to_string(),
                    s.side_squared.to_decimal(digits).render(),
                    c,
                    m,
                ]
            })
            .collect();
        let mut out = output::rows(&["sides", "side_squared", "apothem", "mode"], &body, f)?;
        if f == Format::Table {
            out.push_str(&format!(
                "perimeter: {} ({})\n",
                run.perimeter,
                policy.modes().last().expect("non-empty")
            ));
        }
        return Ok(out);
    }
    let ratio = run.ratio();
    let mut r = Record::new();
    r.info("diameter", diameter)
        .info("sides", run.sides)
        .info("form", form)
        .info("policy", policy)
        .exact("perimeter", &run.perimeter, &run.perimeter)
        .exact("ratio", &ratio, &ratio)
        .approx("ratio_decimal", ratio.to_decimal(digits));
    r.render(f)
}

fn doubling_hp(
    diameter: u64,
    doublings: u32,
    trace: bool,
    digits: u32,
    f: Format,
) -> Result<String> {
    let d = ExactRational::from(diameter);
    let run = siddhanta::polygon_doubling_hp(&d, doublings, digits)?;
    if trace {
        let body: Vec<Vec<String>> = run
            .perimeters
            .iter()
            .map(|(n, p)| {
                vec![
                    n.to_string(),
                    p.render(),
                    p.mul_rational(&d.recip().expect("positive"), digits)
                        .render(),
                ]
            })
            .collect();
        return output::rows(&["sides", "perimeter", "ratio"], &body, f);
    }
    let mut r = Record::new();
    r.info("diameter", diameter)
        .info("sides", run.sides)
        .approx("perimeter", &run.perimeter)
        .approx("ratio", &run.ratio)
        .info("error_bound_ulps", run.ratio.err_bound());
    r.render(f)
}

fn doubling_search(
    diameter: u64,
    doublings: u32,
    form: RecurrenceForm,
    target: &BigUint,
    f: Format,
) -> Result<String> {
    let s = siddhanta::policy_search(diameter, doublings, form, target)?;
    let hits: Vec<String> = s.hits.iter().map(ToString::to_string).collect();
    match f {
        Format::Json => output::json(&json!({
            "diameter": diameter,
            "doublings": doublings,
            "form": form.to_string(),
            "runs": s.runs,
            "target": target.to_string(),
            "histogram": s.histogram.iter().map(|(p, n)| json!({"perimeter": p.to_string(), "count": n})).collect::<Vec<Value>>(),
            "hits": hits,
        })),
        Format::Csv => {
            let body: Vec<Vec<String>> = s
                .histogram
                .iter()
                .map(|(p, n)| vec![p.to_string(), n.to_string(), (p == target).to_string()])
                .collect();
            output::rows_csv(&["perimeter", "count", "is_target"], &body)
        }
        Format::Table => {
            let body: Vec<Vec<String>> = s
                .histogram
                .iter()
                .map(|(p, n)| vec![p.to_string(), n.to_string()])
                .collect();
            let mut out = format!(
                "diameter: {diameter}\nsides: {}\nform: {form}\nschedules: {}\n\n",
                6u64 << doublings,
                s.runs
            );
            out.push_str(&harness::text_table(&["perimeter", "schedules"], &body));
            if hits.is_empty() {
                out.push_str(&format!("\nno schedule yields {target}\n"));
            } else {
                out.push_str(&format!("\n{} schedules yield {target}:\n", hits.len()));
                for chunk in hits.chunks(8) {
                    out.push_str(&chunk.join(" "));
                    out.push('\n');
                }
            }
            Ok(out)
        }
    }
}

fn grid(args: &GridArgs, default_from: i64) -> Result<Vec<ExactRational>> {
    if !args.step.is_positive() {
        return Err(Error::NonPositive { what: "step" });
    }
    let mut a = args
        .from
        .clone()
        .unwrap_or_else(|| ExactRational::from(default_from));
    let mut out = Vec::new();
    while a <= args.to {
        out.push(a.clone());
        a = &a + &args.step;
        if out.len() > 100_000 {
            return Err(Error::out_of_range(
                "grid",
                "more than 100000 angles".to_string(),
            ));
        }
    }
    Ok(out)
}

fn scan(kind: &ScanKind, f: Format) -> Result<String> {
    match kind {
        ScanKind::Segment {
            formula,
            grid: g,
            digits,
        } => {
            let rows = harness::segment_error_scan(
                (*formula).into(),
                &grid(g, 1)?,
                check_digits(digits.digits)?,
            )?;
            match f {
                Format::Table => Ok(harness::scan_table(&rows)),
                Format::Csv => harness::scan_csv(&rows),
                Format::Json => harness::scan_json(&rows),
            }
        }
        ScanKind::Sine {
            grid: g,
            radius,
            digits,
        } => {
            let table = siddhanta::sine_table(*radius, 24)?;
            let s = harness::sine_error_scan(&grid(g, 0)?, &table, check_digits(digits.digits)?)?;
            match f {
                Format::Table => Ok(harness::sine_scan_table(&s)),
                Format::Csv => harness::sine_scan_csv(&s),
                Format::Json => harness::sine_scan_json(&s),
            }
        }
    }
}

/// `p/q`, a decimal, or `sqrt(N)` / `√N`.
fn parse_radius(s: &str) -> Result<QuadSurd> {
    let t = s.trim();
    let inner = t
        .strip_prefix("sqrt(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| t.strip_prefix('√'));
    match inner {
        Some(n) => {
            let x: ExactRational = n.parse()?;
            QuadSurd::sqrt_rational(&x)
        }
        None => Ok(QuadSurd::rational(&t.parse()?)),
    }
}

fn perpendicular(offset: &ExactRational, radius: &str, f: Format) -> Result<String> {
    let radius = parse_radius(radius)?;
    let p = sulva::perpendicular_check(offset, &radius)?;
    let point = |pt: &sulva::Point| {
        (
            format!("({}, {})", pt.x, pt.y),
            format!("({}, {})", pt.x.to_ascii(), pt.y.to_ascii()),
        )
    };
    let (u, ua) = point(&p.upper);
    let (l, la) = point(&p.lower);
    let mut r = Record::new();
    r.info("offset", offset)
        .exact("radius", &radius, radius.to_ascii())
        .exact("upper", u, ua)
        .exact("lower", l, la)
        .info("perpendicular", p.perpendicular);
    r.render(f)
}

/// Parses, runs, and reports; returns the process exit code.
pub fn main_with_args<I, T>(
    args: I,
    stdout: &mut dyn std::io::Write,
    stderr: &mut dyn std::io::Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn std::io::Write = if code == 0 { stdout } else { stderr };
            let _ = write!(sink, "{text}");
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
