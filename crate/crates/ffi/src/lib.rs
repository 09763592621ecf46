//! C ABI for `vrtta`.
//!
//! Conventions:
//! - Every fallible function returns a [`VrttaStatus`]; results come back
//!   through out-pointers, which are written only on success.
//! - Numbers cross the boundary as NUL-terminated strings (`"p/q"`,
//!   decimals, or integers) so no precision is lost.
//! - Strings returned through `char **` are owned by the caller and must be
//!   released with [`vrtta_string_free`].
//! - Handles (`VrttaSurd`, `VrttaConstruction`, `VrttaSineTable`) are opaque
//!   and released with their `_free` function; passing NULL to a free
//!   function is a no-op.
//! - After a non-OK status, [`vrtta_last_error`] describes the failure. The
//!   message is per thread and valid until the next call on that thread.
//! - Panics never cross the boundary; they surface as `VRTTA_STATUS_PANIC`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_bigint::BigUint;
use vrtta::harness;
use vrtta::kerala::{self, SignPolicy};
use vrtta::siddhanta::{self, RecurrenceForm, RoundingPolicy, SineTable};
use vrtta::sulva::{self, CirclingMethod, ConstructionResult};
use vrtta::{Error, ExactRational, QuadSurd, RootMode};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VrttaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    OutOfRange = 5,
    DivisionByZero = 6,
    Precision = 7,
    Unsupported = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VrttaMethod {
    Baudhayana = 0,
    Manava = 1,
    Maitrayaniya = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VrttaRootMode {
    Floor = 0,
    Ceil = 1,
    Nearest = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VrttaSign {
    Empirical = 0,
    Literal = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VrttaFormat {
    Csv = 0,
    Json = 1,
}

/// Exact value `(a + b√k)/q`.
pub struct VrttaSurd(QuadSurd);

/// A circle constructed from a square.
pub struct VrttaConstruction(ConstructionResult);

/// An Rsine table.
pub struct VrttaSineTable(SineTable);

impl From<VrttaMethod> for CirclingMethod {
    fn from(m: VrttaMethod) -> Self {
        match m {
            VrttaMethod::Baudhayana => CirclingMethod::Baudhayana,
            VrttaMethod::Manava => CirclingMethod::Manava,
            VrttaMethod::Maitrayaniya => CirclingMethod::Maitrayaniya,
        }
    }
}

impl From<VrttaRootMode> for RootMode {
    fn from(m: VrttaRootMode) -> Self {
        match m {
            VrttaRootMode::Floor => RootMode::Floor,
            VrttaRootMode::Ceil => RootMode::Ceil,
            VrttaRootMode::Nearest => RootMode::Nearest,
        }
    }
}

impl From<VrttaSign> for SignPolicy {
    fn from(s: VrttaSign) -> Self {
        match s {
            VrttaSign::Empirical => SignPolicy::Empirical,
            VrttaSign::Literal => SignPolicy::Literal,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Failure inside the shim, before or after the library call.
struct Failure(VrttaStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Parse(_) => VrttaStatus::Parse,
            Error::NonPositive { .. } | Error::OutOfRange { .. } => VrttaStatus::OutOfRange,
            Error::Domain(_) | Error::IncompatibleRadicands(..) => VrttaStatus::Domain,
            Error::DivisionByZero => VrttaStatus::DivisionByZero,
            Error::InsufficientPrecision(_) => VrttaStatus::Precision,
            Error::Unsupported(_) => VrttaStatus::Unsupported,
        };
        Failure(status, e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Outcome<()>) -> VrttaStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            VrttaStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(&format!("panic: {msg}"));
            VrttaStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Failure(VrttaStatus::NullPointer, format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(VrttaStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn rational(p: *const c_char, what: &str) -> Outcome<ExactRational> {
    Ok(text(p, what)?.parse::<ExactRational>()?)
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Outcome<&'a T> {
    p.as_ref()
        .ok_or_else(|| Failure(VrttaStatus::NullPointer, format!("{what} is NULL")))
}

fn check_out<T>(out: *mut T) -> Outcome<()> {
    if out.is_null() {
        Err(Failure(
            VrttaStatus::NullPointer,
            "output pointer is NULL".into(),
        ))
    } else {
        Ok(())
    }
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Outcome<()> {
    let c =
        CString::new(s).map_err(|_| Failure(VrttaStatus::Panic, "output contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn put_box<T>(out: *mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

// ---------------------------------------------------------------- general

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn vrtta_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failure on this thread; empty after a success.
#[no_mangle]
pub extern "C" fn vrtta_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn vrtta_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---------------------------------------------------------------- surds

/// `(a + b√k)/q` from integer strings; `k` is reduced to its square-free part.
#[no_mangle]
pub unsafe extern "C" fn vrtta_surd_new(
    a: *const c_char,
    b: *const c_char,
    k: *const c_char,
    q: *const c_char,
    out: *mut *mut VrttaSurd,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        let int = |p, what| -> Outcome<num_bigint::BigInt> {
            text(p, what)?
                .trim()
                .parse()
                .map_err(|_| Failure(VrttaStatus::Parse, format!("{what} is not an integer")))
        };
        let k: BigUint = text(k, "k")?
            .trim()
            .parse()
            .map_err(|_| Failure(VrttaStatus::Parse, "k is not a non-negative integer".into()))?;
        let s = QuadSurd::new(int(a, "a")?, int(b, "b")?, k, int(q, "q")?)?;
        put_box(out, VrttaSurd(s));
        Ok(())
    })
}

/// A rational value (`"p/q"`, decimal, or integer) as a surd.
#[no_mangle]
pub unsafe extern "C" fn vrtta_surd_from_rational(
    x: *const c_char,
    out: *mut *mut VrttaSurd,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        put_box(out, VrttaSurd(QuadSurd::rational(&rational(x, "x")?)));
        Ok(())
    })
}

/// `√x` for a non-negative rational `x`.
#[no_mangle]
pub unsafe extern "C" fn vrtta_surd_sqrt(
    x: *const c_char,
    out: *mut *mut VrttaSurd,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        put_box(out, VrttaSurd(QuadSurd::sqrt_rational(&rational(x, "x")?)?));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn vrtta_surd_free(s: *mut VrttaSurd) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Binary operation: 0 add, 1 subtract, 2 multiply, 3 divide.
#[no_mangle]
pub unsafe extern "C" fn vrtta_surd_op(
    x: *const VrttaSurd,
    op: c_int,
    y: *const VrttaSurd,
    out: *mut *mut VrttaSurd,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        let (x, y) = (&handle(x, "x")?.0, &handle(y, "y")?.0);
        let r = match op {
            0 => x.add(y)?,
            1 => x.sub(y)?,
            2 => x.mul(y)?,
            3 => x.div(y)?,
            _ => {
                return Err(Failure(
                    VrttaStatus::OutOfRange,
                    format!("unknown operation {op}"),
                ))
            }
        };
        put_box(out, VrttaSurd(r));
        Ok(())
    })
}

/// Exact comparison; writes -1, 0 or 1.
#[no_mangle]
pub unsafe extern "C" fn vrtta_surd_cmp(
    x: *const VrttaSurd,
    y: *const VrttaSurd,
    out: *mut c_int,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        *out = handle(x, "x")?.0.cmp_exact(&handle(y, "y")?.0)? as c_int;
        Ok(())
    })
}

/// Exact form: with `ascii` non-zero as `(a+b*sqrt(k))/q`, otherwise with `√`.
#[no_mangle]
pub unsafe extern "C" fn vrtta_surd_to_string(
    s: *const VrttaSurd,
    ascii: c_int,
    out: *mut *mut c_char,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        let s = &handle(s, "surd")?.0;
        put_string(
            out,
            if ascii != 0 {
                s.to_ascii()
            } else {
                s.to_string()
            },
        )
    })
}

/// Decimal value correctly rounded to `digits` places.
#[no_mangle]
pub unsafe extern "C" fn vrtta_surd_eval(
    s: *const VrttaSurd,
    digits: u32,
    out: *mut *mut c_char,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        let s = &handle(s, "surd")?.0;
        put_string(out, vrtta::exactnum::surd_eval(s, digits)?.render())
    })
}

// ---------------------------------------------------------------- constructions

/// Circle with the area of the square of side `side`.
#[no_mangle]
pub unsafe extern "C" fn vrtta_circle_from_square(
    side: *const c_char,
    method: VrttaMethod,
    out: *mut *mut VrttaConstruction,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        let c = sulva::circle_from_square(&rational(side, "side")?, method.into())?;
        put_box(out, VrttaConstruction(c));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn vrtta_construction_free(c: *mut VrttaConstruction) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Exact radius, with `√`; nested for the Mānava construction.
#[no_mangle]
pub unsafe extern "C" fn vrtta_construction_radius(
    c: *const VrttaConstruction,
    out: *mut *mut c_char,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        put_string(out, handle(c, "construction")?.0.radius.to_string())
    })
}

/// Radius² as a new surd handle.
#[no_mangle]
pub unsafe extern "C" fn vrtta_construction_radius_squared(
    c: *const VrttaConstruction,
    out: *mut *mut VrttaSurd,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        put_box(
            out,
            VrttaSurd(handle(c, "construction")?.0.radius_squared.clone()),
        );
        Ok(())
    })
}

/// The π that would make the circle's area exact, as a new surd handle.
#[no_mangle]
pub unsafe extern "C" fn vrtta_construction_implied_pi(
    c: *const VrttaConstruction,
    out: *mut *mut VrttaSurd,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        put_box(
            out,
            VrttaSurd(handle(c, "construction")?.0.implied_pi.clone()),
        );
        Ok(())
    })
}

/// Circle area over square area, rounded to `digits` places.
#[no_mangle]
pub unsafe extern "C" fn vrtta_construction_area_ratio(
    c: *const VrttaConstruction,
    digits: u32,
    out: *mut *mut c_char,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        if digits == 0 || digits > 150 {
            return Err(Failure(
                VrttaStatus::OutOfRange,
                format!("digits {digits} not in 1..=150"),
            ));
        }
        put_string(
            out,
            handle(c, "construction")?.0.area_ratio_at(digits)?.render(),
        )
    })
}

// ---------------------------------------------------------------- sine tables

#[no_mangle]
pub unsafe extern "C" fn vrtta_sine_table_new(
    radius: u64,
    entries: u32,
    out: *mut *mut VrttaSineTable,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        put_box(out, VrttaSineTable(siddhanta::sine_table(radius, entries)?));
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn vrtta_sine_table_free(t: *mut VrttaSineTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Number of entries; 0 for NULL.
#[no_mangle]
pub unsafe extern "C" fn vrtta_sine_table_len(t: *const VrttaSineTable) -> usize {
    t.as_ref().map_or(0, |t| t.0.rsines().len())
}

/// Rsine of entry `index` (1-based, as in the tables).
#[no_mangle]
pub unsafe extern "C" fn vrtta_sine_table_rsine(
    t: *const VrttaSineTable,
    index: usize,
    out: *mut u64,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        let t = &handle(t, "table")?.0;
        let v = index
            .checked_sub(1)
            .and_then(|i| t.rsines().get(i))
            .ok_or_else(|| {
                Failure(
                    VrttaStatus::OutOfRange,
                    format!("index {index} not in 1..={}", t.rsines().len()),
                )
            })?;
        *out = *v;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn vrtta_sine_table_render(
    t: *const VrttaSineTable,
    format: VrttaFormat,
    out: *mut *mut c_char,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        let t = &handle(t, "table")?.0;
        put_string(
            out,
            match format {
                VrttaFormat::Csv => t.to_csv()?,
                VrttaFormat::Json => t.to_json()?,
            },
        )
    })
}

// ---------------------------------------------------------------- reports and rules

/// The π catalog, sorted by size of error, at `digits` places.
#[no_mangle]
pub unsafe extern "C" fn vrtta_pi_catalog(
    digits: u32,
    format: VrttaFormat,
    out: *mut *mut c_char,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        let rows = harness::pi_catalog(digits)?;
        put_string(
            out,
            match format {
                VrttaFormat::Csv => harness::catalog_csv(&rows)?,
                VrttaFormat::Json => harness::catalog_json(&rows)?,
            },
        )
    })
}

/// Integer square root of a decimal integer string.
#[no_mangle]
pub unsafe extern "C" fn vrtta_isqrt(
    n: *const c_char,
    mode: VrttaRootMode,
    out: *mut *mut c_char,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        let n: BigUint = text(n, "n")?
            .trim()
            .parse()
            .map_err(|_| Failure(VrttaStatus::Parse, "n is not a non-negative integer".into()))?;
        put_string(out, vrtta::exactnum::isqrt(&n, mode.into()).to_string())
    })
}

/// Jambudvīpa circumference `⌊√(10·d²)⌋` for an integer diameter.
#[no_mangle]
pub unsafe extern "C" fn vrtta_jambudvipa(diameter: u64, out: *mut *mut c_char) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        put_string(
            out,
            vrtta::jaina::jambudvipa_circumference(&BigUint::from(diameter))?.to_string(),
        )
    })
}

/// Bhāskara I's sine at `theta` degrees, as an exact fraction.
#[no_mangle]
pub unsafe extern "C" fn vrtta_bhaskara1_sine(
    theta_deg: *const c_char,
    out: *mut *mut c_char,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        put_string(
            out,
            siddhanta::bhaskara1_sine(&rational(theta_deg, "theta")?)?.to_string(),
        )
    })
}

/// Bhāskara II's arc for chord `c`, diameter `d`, circumference `p`, exact.
#[no_mangle]
pub unsafe extern "C" fn vrtta_bhaskara2_arc(
    c: *const c_char,
    d: *const c_char,
    p: *const c_char,
    out: *mut *mut VrttaSurd,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        let arc =
            siddhanta::bhaskara2_arc(&rational(c, "c")?, &rational(d, "d")?, &rational(p, "p")?)?;
        put_box(out, VrttaSurd(arc));
        Ok(())
    })
}

/// End-corrected series estimate of π after `n` terms, to `digits` places,
/// and how many of its decimals agree with π.
#[no_mangle]
pub unsafe extern "C" fn vrtta_kerala_pi(
    n: u64,
    sign: VrttaSign,
    digits: u32,
    out_value: *mut *mut c_char,
    out_digits_correct: *mut u32,
) -> VrttaStatus {
    guard(|| {
        check_out(out_value)?;
        check_out(out_digits_correct)?;
        if digits == 0 || digits > 150 {
            return Err(Failure(
                VrttaStatus::OutOfRange,
                format!("digits {digits} not in 1..=150"),
            ));
        }
        let work = digits + 10;
        let est = if n <= kerala::EXACT_TERMS_LIMIT {
            kerala::corrected_pi(n, sign.into())?
                .pi_estimate
                .to_decimal(work)
        } else {
            kerala::corrected_pi_decimal(n, sign.into(), work)?
        };
        let dc = kerala::digits_correct(&est, &vrtta::oracle::pi_oracle(work)?)?;
        put_string(out_value, est.round_to(digits).render())?;
        *out_digits_correct = dc;
        Ok(())
    })
}

/// Integer polygon doubling from the hexagon. `policy` is one letter per
/// square root (`f`, `c`, `n`), or NULL for floor throughout; `direct`
/// non-zero selects the unrationalized recurrence. Writes the perimeter.
#[no_mangle]
pub unsafe extern "C" fn vrtta_polygon_doubling(
    diameter: u64,
    doublings: u32,
    policy: *const c_char,
    direct: c_int,
    out: *mut *mut c_char,
) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        let policy = if policy.is_null() {
            RoundingPolicy::uniform(RootMode::Floor, doublings)
        } else {
            text(policy, "policy")?.parse()?
        };
        let form = if direct != 0 {
            RecurrenceForm::Direct
        } else {
            RecurrenceForm::Rationalized
        };
        let run = siddhanta::polygon_doubling(diameter, doublings, &policy, form)?;
        put_string(out, run.perimeter.to_string())
    })
}

/// The √2 rule `1 + 1/3 + 1/(3·4) − 1/(3·4·34)` as an exact fraction.
#[no_mangle]
pub unsafe extern "C" fn vrtta_sqrt2_sulva(out: *mut *mut c_char) -> VrttaStatus {
    guard(|| {
        check_out(out)?;
        put_string(out, sulva::sqrt2_sulva().to_string())
    })
}
