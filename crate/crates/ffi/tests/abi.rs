use std::ffi::{c_char, CStr, CString};
use std::ptr;

use latgroup_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    lg_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(lg_last_error_message()).to_str().unwrap().to_string()
}

unsafe fn word(text: &str, rank: usize) -> *mut LgWord {
    let mut w = ptr::null_mut();
    assert_eq!(lg_word_parse(cstr(text).as_ptr(), rank, &mut w), LgStatus::Ok);
    w
}

#[test]
fn word_roundtrip() {
    unsafe {
        let w = word("x1 x2 x2^-1 x1^3", 2);
        let mut n = 0;
        assert_eq!(lg_word_len(w, &mut n), LgStatus::Ok);
        assert_eq!(n, 4);
        let mut s = ptr::null_mut();
        assert_eq!(lg_word_to_string(w, &mut s), LgStatus::Ok);
        assert_eq!(take(s), "x1^4");
        let mut inv = ptr::null_mut();
        let mut prod = ptr::null_mut();
        assert_eq!(lg_word_invert(w, &mut inv), LgStatus::Ok);
        assert_eq!(lg_word_concat(w, inv, &mut prod), LgStatus::Ok);
        assert_eq!(lg_word_len(prod, &mut n), LgStatus::Ok);
        assert_eq!(n, 0);
        for p in [w, inv, prod] {
            lg_word_free(p);
        }
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut w = ptr::null_mut();
        assert_eq!(
            lg_word_parse(cstr("x1 x3").as_ptr(), 2, &mut w),
            LgStatus::IndexOutOfRange
        );
        assert!(w.is_null());
        assert!(last_error().contains("out of range"));
        assert_eq!(lg_word_parse(cstr("x1^0").as_ptr(), 2, &mut w), LgStatus::Syntax);
        assert_eq!(lg_word_parse(ptr::null(), 2, &mut w), LgStatus::NullPointer);
        assert_eq!(
            lg_word_parse(cstr("x1").as_ptr(), 2, ptr::null_mut()),
            LgStatus::NullPointer
        );
        let bad = [0xffu8 as c_char, 0];
        assert_eq!(lg_word_parse(bad.as_ptr(), 2, &mut w), LgStatus::InvalidUtf8);

        let (a, b) = (word("x1", 2), word("x1", 3));
        let (mut ma, mut mb, mut out) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
        lg_met_from_word(a, &mut ma);
        lg_met_from_word(b, &mut mb);
        assert_eq!(lg_met_mul(ma, mb, &mut out), LgStatus::RankMismatch);
        let mut eq = true;
        assert_eq!(lg_met_eq(ma, mb, &mut eq), LgStatus::RankMismatch);
        lg_met_free(ma);
        lg_met_free(mb);
        lg_word_free(a);
        lg_word_free(b);

        let open = word("x1 x2", 2);
        let mut s = ptr::null_mut();
        assert_eq!(lg_word_decompose_json(open, &mut s), LgStatus::NotACycle);
        lg_word_free(open);

        lg_word_free(ptr::null_mut());
        lg_met_free(ptr::null_mut());
        lg_string_free(ptr::null_mut());
    }
}

#[test]
fn metabelian_word_problem() {
    unsafe {
        let (a, b) = (word("x1 x2", 2), word("x2 x1", 2));
        let (mut ma, mut mb) = (ptr::null_mut(), ptr::null_mut());
        lg_met_from_word(a, &mut ma);
        lg_met_from_word(b, &mut mb);
        let mut eq = true;
        assert_eq!(lg_met_eq(ma, mb, &mut eq), LgStatus::Ok);
        assert!(!eq);

        // a b^-1 is the commutator; its image has the unit square as flow
        let (mut binv, mut c) = (ptr::null_mut(), ptr::null_mut());
        lg_met_inv(mb, &mut binv);
        lg_met_mul(ma, binv, &mut c);
        let mut s = ptr::null_mut();
        assert_eq!(lg_met_to_json(c, &mut s), LgStatus::Ok);
        assert_eq!(
            take(s),
            r#"{"endpoint":[0,0],"flow":[{"axis":1,"base":[0,0],"mult":1},{"axis":2,"base":[0,0],"mult":-1},{"axis":1,"base":[0,1],"mult":-1},{"axis":2,"base":[1,0],"mult":1}]}"#
        );
        let mut id = true;
        lg_met_is_identity(c, &mut id);
        assert!(!id);

        let rel = word("x1 x2 x1^-1 x2^-1 x2 x1 x2^-1 x1^-1", 2);
        let mut mr = ptr::null_mut();
        lg_met_from_word(rel, &mut mr);
        lg_met_is_identity(mr, &mut id);
        assert!(id);

        assert_eq!(lg_word_fox_json(rel, &mut s), LgStatus::Ok);
        assert_eq!(take(s), r#"{"derivatives":[[],[]],"monomial":[0,0]}"#);
        for p in [ma, mb, binv, c, mr] {
            lg_met_free(p);
        }
        for w in [a, b, rel] {
            lg_word_free(w);
        }
    }
}

#[test]
fn heisenberg_areas() {
    unsafe {
        let w = word("x1 x2 x1^-1 x2^-1 x1 x3 x1^-1 x3^-1 x1 x3 x1^-1 x3^-1", 3);
        let mut h = ptr::null_mut();
        assert_eq!(lg_heis_from_word(w, &mut h), LgStatus::Ok);
        let mut s = ptr::null_mut();
        lg_heis_area(h, 1, 2, &mut s);
        assert_eq!(take(s), "1");
        lg_heis_area(h, 1, 3, &mut s);
        assert_eq!(take(s), "2");
        assert_eq!(lg_heis_area(h, 2, 2, &mut s), LgStatus::InvalidArgument);
        let (mut hi, mut p) = (ptr::null_mut(), ptr::null_mut());
        lg_heis_inv(h, &mut hi);
        lg_heis_mul(h, hi, &mut p);
        assert_eq!(lg_heis_to_json(p, &mut s), LgStatus::Ok);
        assert_eq!(
            take(s),
            r#"{"areas":[{"i":1,"j":2,"value":0},{"i":1,"j":3,"value":0},{"i":2,"j":3,"value":0}],"endpoint":[0,0,0]}"#
        );
        let (e, mut he) = (word("", 3), ptr::null_mut());
        lg_heis_from_word(e, &mut he);
        let mut eq = false;
        lg_heis_eq(p, he, &mut eq);
        assert!(eq);
        for x in [h, hi, p, he] {
            lg_heis_free(x);
        }
        lg_word_free(w);
        lg_word_free(e);
    }
}

#[test]
fn satellite_membership() {
    unsafe {
        let (mut c, mut z2) = (ptr::null_mut(), ptr::null_mut());
        assert_eq!(lg_sat_parse(cstr("x y x^-1 y^-1").as_ptr(), 2, &mut c), LgStatus::Ok);
        assert_eq!(lg_sat_parse(cstr("z^2").as_ptr(), 2, &mut z2), LgStatus::Ok);
        let mut eq = false;
        lg_sat_eq(c, z2, &mut eq);
        assert!(eq);
        let mut m = false;
        lg_sat_is_member(c, LgSubgroup::M, &mut m);
        assert!(m);
        let mut z = ptr::null_mut();
        lg_sat_parse(cstr("z").as_ptr(), 2, &mut z);
        lg_sat_is_member(z, LgSubgroup::M, &mut m);
        assert!(!m);
        lg_sat_is_member(z, LgSubgroup::N, &mut m);
        assert!(m);

        let mut other = ptr::null_mut();
        lg_sat_parse(cstr("x").as_ptr(), 3, &mut other);
        let mut out = ptr::null_mut();
        assert_eq!(lg_sat_mul(z, other, &mut out), LgStatus::RankMismatch);
        assert_eq!(lg_sat_parse(cstr("x w").as_ptr(), 2, &mut out), LgStatus::Syntax);

        let (mut zi, mut one) = (ptr::null_mut(), ptr::null_mut());
        lg_sat_inv(z, &mut zi);
        lg_sat_mul(z, zi, &mut one);
        let mut s = ptr::null_mut();
        lg_sat_to_json(one, &mut s);
        assert_eq!(take(s), r#"{"cycle":[],"k":2,"vec":[0,0]}"#);
        for p in [c, z2, z, other, zi, one] {
            lg_sat_free(p);
        }
    }
}

#[test]
fn cocycle_and_beta() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            lg_cocycle_json(cstr("0,1").as_ptr(), cstr("1,0").as_ptr(), &mut s),
            LgStatus::Ok
        );
        assert_eq!(
            take(s),
            r#"[{"axis":1,"base":[0,0],"mult":-1},{"axis":2,"base":[0,0],"mult":1},{"axis":1,"base":[0,1],"mult":1},{"axis":2,"base":[1,0],"mult":-1}]"#
        );
        assert_eq!(
            lg_cocycle_json(cstr("1,0").as_ptr(), cstr("1").as_ptr(), &mut s),
            LgStatus::RankMismatch
        );
        assert_eq!(
            lg_cocycle_json(cstr("1,a").as_ptr(), cstr("1,0").as_ptr(), &mut s),
            LgStatus::Syntax
        );
        for k in [-3, 0, 1, 7] {
            let mut b = 0;
            assert_eq!(lg_beta_scaled(k, &mut b), LgStatus::Ok);
            assert_eq!(b, k);
        }
    }
}

#[test]
fn errors_are_per_thread() {
    unsafe {
        let mut w = ptr::null_mut();
        assert_eq!(lg_word_parse(cstr("x9").as_ptr(), 2, &mut w), LgStatus::IndexOutOfRange);
    }
    let other = std::thread::spawn(|| lg_last_error_message().is_null()).join().unwrap();
    assert!(other);
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/latgroup.h");
    let src = include_str!("../src/lib.rs");
    let mut n = 0;
    for line in src.lines() {
        if let Some(rest) = line.split("extern \"C\" fn ").nth(1) {
            let name = rest.split('(').next().unwrap();
            assert!(header.contains(&format!("{name}(")), "{name} missing from header");
            n += 1;
        }
    }
    assert!(n > 30);
    for ty in [
        "typedef struct LgWord LgWord",
        "typedef struct LgMetElem LgMetElem",
        "LG_STATUS_OK = 0",
    ] {
        assert!(header.contains(ty), "{ty}");
    }
}
