//! The C ABI called from Rust: ownership, status codes, error messages.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use vrtta_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { vrtta_string_free(s) };
    owned
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(vrtta_last_error()) }
        .to_str()
        .unwrap()
        .to_string()
}

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

#[test]
fn construction_round_trip() {
    unsafe {
        let mut con = ptr::null_mut();
        let side = c("2");
        assert_eq!(
            vrtta_circle_from_square(side.as_ptr(), VrttaMethod::Manava, &mut con),
            VrttaStatus::Ok
        );
        let mut r2 = ptr::null_mut();
        assert_eq!(
            vrtta_construction_radius_squared(con, &mut r2),
            VrttaStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(vrtta_surd_to_string(r2, 0, &mut s), VrttaStatus::Ok);
        assert_eq!(take(s), "(62+8√17)/75");
        assert_eq!(vrtta_construction_radius(con, &mut s), VrttaStatus::Ok);
        assert!(take(s).starts_with('√'));
        vrtta_surd_free(r2);
        vrtta_construction_free(con);
    }
}

#[test]
fn surd_arithmetic() {
    unsafe {
        let (a, b, k, q) = (c("1"), c("1"), c("8"), c("2"));
        let mut x = ptr::null_mut();
        assert_eq!(
            vrtta_surd_new(a.as_ptr(), b.as_ptr(), k.as_ptr(), q.as_ptr(), &mut x),
            VrttaStatus::Ok
        );
        let mut s = ptr::null_mut();
        vrtta_surd_to_string(x, 1, &mut s);
        assert_eq!(take(s), "(1+2*sqrt(2))/2");

        let mut sq = ptr::null_mut();
        assert_eq!(vrtta_surd_op(x, 2, x, &mut sq), VrttaStatus::Ok);
        vrtta_surd_to_string(sq, 0, &mut s);
        assert_eq!(take(s), "(9+4√2)/4");

        let mut ord = 7;
        assert_eq!(vrtta_surd_cmp(sq, x, &mut ord), VrttaStatus::Ok);
        assert_eq!(ord, 1);

        let zero = c("0");
        let mut z = ptr::null_mut();
        vrtta_surd_from_rational(zero.as_ptr(), &mut z);
        let mut out = ptr::null_mut();
        assert_eq!(
            vrtta_surd_op(x, 3, z, &mut out),
            VrttaStatus::DivisionByZero
        );
        assert!(out.is_null());
        assert_eq!(vrtta_surd_op(x, 9, x, &mut out), VrttaStatus::OutOfRange);
        for h in [x, sq, z] {
            vrtta_surd_free(h);
        }
    }
}

#[test]
fn status_codes_and_messages() {
    unsafe {
        let mut con = ptr::null_mut();
        let bad = c("1/0");
        assert_eq!(
            vrtta_circle_from_square(bad.as_ptr(), VrttaMethod::Baudhayana, &mut con),
            VrttaStatus::Parse
        );
        assert!(con.is_null());
        assert!(last_error().contains("parse"), "{}", last_error());

        let neg = c("-4");
        let mut s = ptr::null_mut();
        assert_eq!(
            vrtta_surd_sqrt(neg.as_ptr(), &mut ptr::null_mut()),
            VrttaStatus::Domain
        );
        assert_eq!(
            vrtta_circle_from_square(ptr::null(), VrttaMethod::Manava, &mut con),
            VrttaStatus::NullPointer
        );
        assert_eq!(
            vrtta_pi_catalog(51, VrttaFormat::Csv, &mut s),
            VrttaStatus::OutOfRange
        );
        assert_eq!(
            vrtta_polygon_doubling(7, 6, ptr::null(), 0, &mut s),
            VrttaStatus::Domain
        );

        let invalid = [0xffu8, 0];
        assert_eq!(
            vrtta_surd_sqrt(invalid.as_ptr().cast(), &mut ptr::null_mut()),
            VrttaStatus::InvalidUtf8
        );

        // success clears the message
        assert_eq!(vrtta_sqrt2_sulva(&mut s), VrttaStatus::Ok);
        assert_eq!(take(s), "577/408");
        assert_eq!(last_error(), "");
    }
}

#[test]
fn errors_are_per_thread() {
    let bad = c("nope");
    unsafe { vrtta_surd_sqrt(bad.as_ptr(), &mut ptr::null_mut()) };
    let here = last_error();
    let there = std::thread::spawn(last_error).join().unwrap();
    assert!(!here.is_empty());
    assert_eq!(there, "");
}

#[test]
fn reports_and_rules() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            vrtta_pi_catalog(7, VrttaFormat::Csv, &mut s),
            VrttaStatus::Ok
        );
        assert!(take(s)
            .lines()
            .any(|l| l.starts_with("virasena,") && l.contains(",3.1415929,")));

        let mut t = ptr::null_mut();
        assert_eq!(vrtta_sine_table_new(3438, 24, &mut t), VrttaStatus::Ok);
        assert_eq!(vrtta_sine_table_len(t), 24);
        let mut v = 0;
        assert_eq!(vrtta_sine_table_rsine(t, 24, &mut v), VrttaStatus::Ok);
        assert_eq!(v, 3438);
        assert_eq!(
            vrtta_sine_table_rsine(t, 0, &mut v),
            VrttaStatus::OutOfRange
        );
        assert_eq!(
            vrtta_sine_table_render(t, VrttaFormat::Json, &mut s),
            VrttaStatus::Ok
        );
        assert!(take(s).contains("\"rsines\""));
        vrtta_sine_table_free(t);
        assert_eq!(vrtta_sine_table_len(ptr::null()), 0);

        let theta = c("30");
        assert_eq!(
            vrtta_bhaskara1_sine(theta.as_ptr(), &mut s),
            VrttaStatus::Ok
        );
        assert_eq!(take(s), "1/2");

        let (cc, d, p) = (c("1"), c("2"), c("6"));
        let mut arc = ptr::null_mut();
        assert_eq!(
            vrtta_bhaskara2_arc(cc.as_ptr(), d.as_ptr(), p.as_ptr(), &mut arc),
            VrttaStatus::Ok
        );
        assert_eq!(vrtta_surd_to_string(arc, 0, &mut s), VrttaStatus::Ok);
        assert_eq!(take(s), "1");
        vrtta_surd_free(arc);

        assert_eq!(vrtta_jambudvipa(100_000, &mut s), VrttaStatus::Ok);
        assert_eq!(take(s), "316227");

        let policy = c("ffffffc");
        assert_eq!(
            vrtta_polygon_doubling(20_000, 6, policy.as_ptr(), 0, &mut s),
            VrttaStatus::Ok
        );
        assert_eq!(take(s), "62832");

        let mut dc = 0;
        assert_eq!(
            vrtta_kerala_pi(50, VrttaSign::Empirical, 15, &mut s, &mut dc),
            VrttaStatus::Ok
        );
        assert_eq!(take(s), "3.141592653590511");
        assert_eq!(dc, 11);

        let version = CStr::from_ptr(vrtta_version()).to_str().unwrap();
        assert_eq!(version, env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn freeing_null_is_a_no_op() {
    unsafe {
        vrtta_string_free(ptr::null_mut());
        vrtta_surd_free(ptr::null_mut());
        vrtta_construction_free(ptr::null_mut());
        vrtta_sine_table_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/vrtta.h")).unwrap();
    let source =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/src/lib.rs")).unwrap();
    for line in source.lines() {
        if let Some(rest) = line
            .strip_prefix("pub unsafe extern \"C\" fn ")
            .or(line.strip_prefix("pub extern \"C\" fn "))
        {
            let name = rest.split('(').next().unwrap();
            assert!(
                header.contains(&format!("{name}(")),
                "{name} missing from header"
            );
        }
    }
}
