use mcgkit_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn owned(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { mcg_string_free(p) };
    s
}

fn curve(json: &str) -> *mut McgCurve {
    let text = CString::new(json).unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { mcg_curve_from_json(text.as_ptr(), ptr::null(), &mut c) }, McgStatus::Ok);
    c
}

const MERIDIAN: &str = r#"{"surface":"canonical:1,0,0","word":[{"edge":0,"pos":0,"dir":1}]}"#;
const LONGITUDE: &str = r#"{"surface":"canonical:1,0,0","word":[{"edge":1,"pos":0,"dir":1}]}"#;

#[test]
fn torus_twist_round_trip() {
    let (a, b) = (curve(MERIDIAN), curve(LONGITUDE));
    let mut i = 0usize;
    assert_eq!(unsafe { mcg_intersection_number(a, b, &mut i) }, McgStatus::Ok);
    assert_eq!(i, 1);
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { mcg_dehn_twist(b, a, 3, &mut t) }, McgStatus::Ok);
    let mut j = 0usize;
    assert_eq!(unsafe { mcg_intersection_number(t, b, &mut j) }, McgStatus::Ok);
    assert_eq!(j, 3);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { mcg_curve_to_json(t, &mut text) }, McgStatus::Ok);
    let back = curve(&owned(text));
    let mut same = false;
    assert_eq!(unsafe { mcg_is_isotopic(back, t, true, &mut same) }, McgStatus::Ok);
    assert!(same);
    unsafe {
        for c in [a, b, t, back] {
            mcg_curve_free(c);
        }
    }
}

#[test]
fn surfaces_and_centre() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { mcg_surface_canonical(2, 1, 3, &mut s) }, McgStatus::Ok);
    let mut spec = [0usize; 3];
    assert_eq!(unsafe { mcg_surface_spec(s, spec.as_mut_ptr()) }, McgStatus::Ok);
    assert_eq!(spec, [2, 1, 3]);
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { mcg_surface_to_json(s, &mut text) }, McgStatus::Ok);
    let json = CString::new(owned(text)).unwrap();
    let mut s2 = ptr::null_mut();
    assert_eq!(unsafe { mcg_surface_from_json(json.as_ptr(), &mut s2) }, McgStatus::Ok);
    unsafe {
        mcg_surface_free(s);
        mcg_surface_free(s2);
    }
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { mcg_centre_json(1, 1, 0, &mut out) }, McgStatus::Ok);
    assert_eq!(owned(out), r#"{"type":"cyclic-infinite","generator":"rho"}"#);
}

#[test]
fn errors_carry_codes_and_messages() {
    let bad = CString::new(r#"{"surface":"canonical:1,0,0","word":[{"edge":9,"pos":0,"dir":1}]}"#).unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { mcg_curve_from_json(bad.as_ptr(), ptr::null(), &mut c) }, McgStatus::InvalidCurve);
    assert!(c.is_null());
    let msg = unsafe { CStr::from_ptr(mcg_last_error()) }.to_str().unwrap();
    assert!(msg.contains("edge 9"), "{msg}");
    let junk = CString::new("{").unwrap();
    assert_eq!(unsafe { mcg_curve_from_json(junk.as_ptr(), ptr::null(), &mut c) }, McgStatus::Parse);
    assert_eq!(unsafe { mcg_curve_from_json(ptr::null(), ptr::null(), &mut c) }, McgStatus::NullPointer);
    let a = curve(MERIDIAN);
    let other = curve(r#"{"surface":"canonical:1,0,1","word":[{"edge":1,"pos":0,"dir":1},{"edge":0,"pos":0,"dir":-1}]}"#);
    let mut i = 0usize;
    assert_eq!(unsafe { mcg_intersection_number(a, other, &mut i) }, McgStatus::HostMismatch);
    unsafe {
        mcg_curve_free(a);
        mcg_curve_free(other);
    }
    assert!(unsafe { CStr::from_ptr(mcg_version()) }.to_str().unwrap().starts_with("0."));
}

#[test]
fn classify_symbolic_config() {
    let cfg = CString::new(
        r#"{"ambient":{"genus":0,"boundary_count":0,"puncture_count":2},
            "sub":{"genus":0,"boundary_count":1,"puncture_count":2},
            "complement_components":[{"genus":0,"punctures":0,"boundary_to_n":["c"],"boundary_to_m":0}]}"#,
    )
    .unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { mcg_classify_json(cfg.as_ptr(), ptr::null(), &mut out) }, McgStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&owned(out)).unwrap();
    assert_eq!(v["injective"], false);
}
