//! C ABI over `mcgkit`.
//!
//! Surfaces and curves cross the boundary as opaque handles owned by the
//! caller and released with the matching `_free` function. Every fallible
//! function returns an [`McgStatus`] and writes its result through an out
//! pointer only on success. The message of the last failure on the calling
//! thread is available from [`mcg_last_error`]. Strings returned by the
//! library are UTF-8 JSON and must be released with [`mcg_string_free`].

use mcgkit::cell_surface::Surface;
use mcgkit::cli::{io, CliError};
use mcgkit::curve_engine::{dehn_twist, intersection_number, is_isotopic, Curve};
use mcgkit::structure::{centre, classification_report};
use mcgkit::{Error, SurfaceSpec};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result of every fallible call. Values other than `Ok` mirror the error
/// kinds of the core library plus failures of the boundary itself.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McgStatus {
    Ok = 0,
    InvalidSurface = 1,
    InvalidCurve = 2,
    HostMismatch = 3,
    NotEmbedded = 4,
    Hypothesis = 5,
    Precondition = 6,
    UnknownCurve = 7,
    Parse = 8,
    NotFound = 9,
    NullPointer = 10,
    InvalidUtf8 = 11,
    Panic = 12,
}

impl From<&Error> for McgStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidSurface(_) => McgStatus::InvalidSurface,
            Error::InvalidCurve(_) => McgStatus::InvalidCurve,
            Error::HostMismatch => McgStatus::HostMismatch,
            Error::NotEmbedded(_) => McgStatus::NotEmbedded,
            Error::Hypothesis(_) => McgStatus::Hypothesis,
            Error::Precondition(_) => McgStatus::Precondition,
            Error::UnknownCurve(_) => McgStatus::UnknownCurve,
            Error::Parse(_) => McgStatus::Parse,
            Error::NotFound(_) => McgStatus::NotFound,
        }
    }
}

/// Opaque surface handle.
pub struct McgSurface(Surface);

/// Opaque curve handle; keeps its surface alive.
pub struct McgCurve(Curve);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(McgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure((&e).into(), e.to_string())
    }
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        match e {
            CliError::Malformed(m) => Failure(McgStatus::Parse, m),
            CliError::Domain(e) => e.into(),
        }
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Runs `f`, converting errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> McgStatus {
    let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err(Failure(McgStatus::Panic, "panic".into())));
    match out {
        Ok(()) => {
            set_last_error("");
            McgStatus::Ok
        }
        Err(Failure(status, msg)) => {
            set_last_error(&msg);
            status
        }
    }
}

fn null() -> Failure {
    Failure(McgStatus::NullPointer, "null pointer argument".into())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null());
    }
    CStr::from_ptr(p).to_str().map_err(|e| Failure(McgStatus::InvalidUtf8, e.to_string()))
}

unsafe fn json(p: *const c_char) -> Result<serde_json::Value, Failure> {
    serde_json::from_str(text(p)?).map_err(|e| Failure(McgStatus::Parse, e.to_string()))
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no interior NUL").into_raw()
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn mcg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn mcg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Canonical model of the surface of genus `genus` with `boundary`
/// boundary circles and `punctures` punctures.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcg_surface_canonical(
    genus: usize,
    boundary: usize,
    punctures: usize,
    out: *mut *mut McgSurface,
) -> McgStatus {
    guard(|| {
        let s = io::canonical(genus, boundary, punctures, false);
        put(out, Box::into_raw(Box::new(McgSurface(s))))
    })
}

/// Surface from `{"faces", "gluing", "punctures"}` or `"canonical:g,q,m"`.
///
/// # Safety
/// `json_text` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcg_surface_from_json(json_text: *const c_char, out: *mut *mut McgSurface) -> McgStatus {
    guard(|| {
        let s = io::surface_from(&json(json_text)?)?;
        put(out, Box::into_raw(Box::new(McgSurface(s))))
    })
}

/// # Safety
/// `s` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcg_surface_to_json(s: *const McgSurface, out: *mut *mut c_char) -> McgStatus {
    guard(|| {
        let s = get(s)?;
        put(out, owned_string(serde_json::to_string(&s.0.to_json()).expect("surfaces serialize")))
    })
}

/// Writes genus, boundary count and puncture count.
///
/// # Safety
/// `s` must be a live handle and `out` valid for three writes.
#[no_mangle]
pub unsafe extern "C" fn mcg_surface_spec(s: *const McgSurface, out: *mut usize) -> McgStatus {
    guard(|| {
        let spec = get(s)?.0.spec();
        if out.is_null() {
            return Err(null());
        }
        for (k, v) in [spec.genus, spec.boundary_count, spec.puncture_count].into_iter().enumerate() {
            out.add(k).write(v);
        }
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mcg_surface_free(s: *mut McgSurface) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Curve from `{"surface": .., "word": [{"edge", "pos", "dir"}, ..]}`.
/// When `host` is not null the `surface` field may be omitted.
///
/// # Safety
/// `json_text` must be a NUL-terminated string, `host` null or live, and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcg_curve_from_json(
    json_text: *const c_char,
    host: *const McgSurface,
    out: *mut *mut McgCurve,
) -> McgStatus {
    guard(|| {
        let host = host.as_ref().map(|h| &h.0);
        let c = io::curve_from(&json(json_text)?, host)?;
        put(out, Box::into_raw(Box::new(McgCurve(c))))
    })
}

/// # Safety
/// `c` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcg_curve_to_json(c: *const McgCurve, out: *mut *mut c_char) -> McgStatus {
    guard(|| {
        let c = get(c)?;
        put(out, owned_string(serde_json::to_string(&c.0.to_json()).expect("curves serialize")))
    })
}

/// # Safety
/// `c` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mcg_curve_free(c: *mut McgCurve) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Geometric intersection number.
///
/// # Safety
/// `a`, `b` must be live handles and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcg_intersection_number(a: *const McgCurve, b: *const McgCurve, out: *mut usize) -> McgStatus {
    guard(|| put(out, intersection_number(&get(a)?.0, &get(b)?.0)?))
}

/// Whether `a` and `b` are isotopic, respecting orientation when `oriented`.
///
/// # Safety
/// `a`, `b` must be live handles and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcg_is_isotopic(
    a: *const McgCurve,
    b: *const McgCurve,
    oriented: bool,
    out: *mut bool,
) -> McgStatus {
    guard(|| put(out, is_isotopic(&get(a)?.0, &get(b)?.0, oriented)?))
}

/// Image of `c` under the `n`-th power of the twist along `along`.
///
/// # Safety
/// `c`, `along` must be live handles and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcg_dehn_twist(
    c: *const McgCurve,
    along: *const McgCurve,
    n: i64,
    out: *mut *mut McgCurve,
) -> McgStatus {
    guard(|| {
        let image = dehn_twist(&get(c)?.0, &get(along)?.0, n)?;
        put(out, Box::into_raw(Box::new(McgCurve(image))))
    })
}

/// Centre of the mapping class group as tagged JSON.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcg_centre_json(
    genus: usize,
    boundary: usize,
    punctures: usize,
    out: *mut *mut c_char,
) -> McgStatus {
    guard(|| {
        let g = centre(SurfaceSpec::new(genus, boundary, punctures));
        put(out, owned_string(serde_json::to_string(&g).expect("groups serialize")))
    })
}

/// Classification report of a subsurface config, optionally against a
/// second config (`other` may be null).
///
/// # Safety
/// `config` must be a NUL-terminated string, `other` null or one, and
/// `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mcg_classify_json(
    config: *const c_char,
    other: *const c_char,
    out: *mut *mut c_char,
) -> McgStatus {
    guard(|| {
        let n = io::config_from(&json(config)?, None)?;
        let host = n.concrete_part().ok().map(|x| x.host.clone());
        let n2 = if other.is_null() { None } else { Some(io::config_from(&json(other)?, host.as_ref())?) };
        let report = classification_report(&n, n2.as_ref())?;
        put(out, owned_string(report.to_string()))
    })
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mcg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
