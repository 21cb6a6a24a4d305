//! C interface to the `krasner` library.
//!
//! Structures live behind the opaque [`KrHyperring`] handle. Every fallible
//! call returns a [`KrStatus`]; on anything other than `KR_OK` a message is
//! available from [`kr_last_error`] on the same thread. Strings handed out by
//! the library are NUL-terminated UTF-8 and must be released with
//! [`kr_string_free`]. Reports are JSON documents with the same shape as the
//! command-line `--format json` output.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use krasner::classify::checks::Classifier;
use krasner::classify::expansion::ExpansionFn;
use krasner::classify::report::classify_all;
use krasner::harness::catalog::by_name;
use krasner::harness::suite::default_scope;
use krasner::harness::theorems::verify_theorem;
use krasner::io::{parse_hyperring, serialize_hyperring, Report};
use krasner::validate::validate_axioms;
use krasner::{ElementSet, HyperRing, Hyperideal, Lattice, Reading};

/// Opaque structure handle.
pub struct KrHyperring(HyperRing);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrStatus {
    KrOk = 0,
    KrNullArgument = 1,
    KrInvalidUtf8 = 2,
    KrParseError = 3,
    KrNotFound = 4,
    /// The arguments are well formed but do not meet a precondition, e.g. a
    /// set that is not a proper hyperideal.
    KrPrecondition = 5,
    KrInternal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KrReading {
    KrStrict = 0,
    KrLax = 1,
}

impl From<KrReading> for Reading {
    fn from(r: KrReading) -> Self {
        match r {
            KrReading::KrStrict => Reading::Strict,
            KrReading::KrLax => Reading::Lax,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(KrStatus, String);

type Step<T> = Result<T, Failure>;

fn fail<T>(status: KrStatus, msg: impl Into<String>) -> Step<T> {
    Err(Failure(status, msg.into()))
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Step<()>) -> KrStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            KrStatus::KrOk
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            KrStatus::KrInternal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Step<&'a str> {
    if p.is_null() {
        return fail(KrStatus::KrNullArgument, format!("{what} is null"));
    }
    CStr::from_ptr(p).to_str().or_else(|_| fail(KrStatus::KrInvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ring<'a>(h: *const KrHyperring) -> Step<&'a HyperRing> {
    h.as_ref().map(|h| &h.0).ok_or(Failure(KrStatus::KrNullArgument, "structure handle is null".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Step<()> {
    if out.is_null() {
        return fail(KrStatus::KrNullArgument, "output pointer is null");
    }
    out.write(value);
    Ok(())
}

unsafe fn put_handle(out: *mut *mut KrHyperring, h: HyperRing) -> Step<()> {
    if out.is_null() {
        return fail(KrStatus::KrNullArgument, "output pointer is null");
    }
    out.write(Box::into_raw(Box::new(KrHyperring(h))));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Step<()> {
    let c = CString::new(s).or_else(|_| fail(KrStatus::KrInternal, "string contains NUL"))?;
    if out.is_null() {
        return fail(KrStatus::KrNullArgument, "output pointer is null");
    }
    out.write(c.into_raw());
    Ok(())
}

fn parse_set(h: &HyperRing, list: &str) -> Step<ElementSet> {
    let inner = list.trim().trim_start_matches('{').trim_end_matches('}');
    let names: Vec<&str> = inner.split([',', ' ']).filter(|s| !s.is_empty()).collect();
    if let Some(bad) = names.iter().find(|n| h.elem_by_name(n).is_none()) {
        return fail(KrStatus::KrNotFound, format!("unknown element `{bad}`"));
    }
    h.set_from_names(&names).ok_or(Failure(KrStatus::KrPrecondition, "empty element list".into()))
}

fn parse_ideal(h: &HyperRing, list: &str) -> Step<Hyperideal> {
    Hyperideal::new(h, parse_set(h, list)?).or_else(|e| fail(KrStatus::KrPrecondition, e.to_string()))
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn kr_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn kr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn kr_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse `.khr` text into a new handle.
///
/// # Safety
/// `source` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kr_hyperring_parse(source: *const c_char, out: *mut *mut KrHyperring) -> KrStatus {
    guard(|| {
        let src = text(source, "source")?;
        let h = parse_hyperring(src).or_else(|e| fail(KrStatus::KrParseError, e.to_string()))?;
        put_handle(out, h)
    })
}

/// Look up a built-in structure such as `z12-mod-units` or `z6`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kr_hyperring_from_catalog(name: *const c_char, out: *mut *mut KrHyperring) -> KrStatus {
    guard(|| {
        let name = text(name, "name")?;
        let h = by_name(name).ok_or(Failure(KrStatus::KrNotFound, format!("no catalog entry `{name}`")))?;
        put_handle(out, h)
    })
}

/// Release a handle. Null is ignored.
///
/// # Safety
/// `h` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn kr_hyperring_free(h: *mut KrHyperring) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Carrier size and arities.
///
/// # Safety
/// `h` must be a live handle; the outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn kr_hyperring_shape(h: *const KrHyperring, size: *mut usize, m: *mut usize, n: *mut usize) -> KrStatus {
    guard(|| {
        let h = ring(h)?;
        put(size, h.size())?;
        put(m, h.m())?;
        put(n, h.n())
    })
}

/// Canonical `.khr` text.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kr_hyperring_serialize(h: *const KrHyperring, out: *mut *mut c_char) -> KrStatus {
    guard(|| {
        let h = ring(h)?;
        let s = serialize_hyperring(h).or_else(|e| fail(KrStatus::KrPrecondition, e.to_string()))?;
        put_string(out, s)
    })
}

/// Axiom check. `passed` receives 1 or 0; `report` (optional) the JSON report.
///
/// # Safety
/// `h` must be a live handle; `passed` writable; `report` null or writable.
#[no_mangle]
pub unsafe extern "C" fn kr_validate(h: *const KrHyperring, passed: *mut i32, report: *mut *mut c_char) -> KrStatus {
    guard(|| {
        let h = ring(h)?;
        let r = validate_axioms(h);
        put(passed, i32::from(r.passed()))?;
        if !report.is_null() {
            put_string(report, Report::validation(h, &r).to_json())?;
        }
        Ok(())
    })
}

/// All hyperideals as a JSON array of element-name arrays, in canonical order.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kr_ideals(h: *const KrHyperring, out: *mut *mut c_char) -> KrStatus {
    guard(|| {
        let h = ring(h)?;
        let lat = Lattice::new(h);
        let sets: Vec<Vec<&str>> = lat.ideals.iter().map(|s| s.iter().map(|e| h.elem_name(e)).collect()).collect();
        put_string(out, serde_json::to_string(&sets).expect("serializes"))
    })
}

/// Radical of the hyperideal named by a comma-separated element list, as `{a,b}` text.
///
/// # Safety
/// `h` must be a live handle, `ideal` a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kr_radical(h: *const KrHyperring, ideal: *const c_char, out: *mut *mut c_char) -> KrStatus {
    guard(|| {
        let h = ring(h)?;
        let i = parse_ideal(h, text(ideal, "ideal")?)?;
        put_string(out, h.format_set(Lattice::new(h).radical(i.members())))
    })
}

/// δ-N check for one proper hyperideal. `delta` is `d0`, `d1` or `dH`.
/// `holds` receives 1 or 0; `witness` (optional) the JSON report entry.
///
/// # Safety
/// `h` must be a live handle; strings NUL-terminated; `holds` writable;
/// `witness` null or writable.
#[no_mangle]
pub unsafe extern "C" fn kr_is_delta_n(
    h: *const KrHyperring,
    ideal: *const c_char,
    delta: *const c_char,
    reading: KrReading,
    holds: *mut i32,
    witness: *mut *mut c_char,
) -> KrStatus {
    guard(|| {
        let h = ring(h)?;
        let i = parse_ideal(h, text(ideal, "ideal")?)?;
        let d = text(delta, "delta")?;
        let d = ExpansionFn::parse_standard(d).ok_or(Failure(KrStatus::KrNotFound, format!("unknown expansion `{d}`")))?;
        let c = Classifier::new(h).or_else(|e| fail(KrStatus::KrPrecondition, e.to_string()))?;
        let v = c.is_delta_n(i, &d, reading.into()).or_else(|e| fail(KrStatus::KrPrecondition, e.to_string()))?;
        put(holds, i32::from(v.holds))?;
        if !witness.is_null() {
            let mut rep = Report::new(h);
            rep.push_verdict(h, format!("{}-N/{}", d.label(), Reading::from(reading)), h.format_set(i.members()), &v);
            put_string(witness, rep.to_json())?;
        }
        Ok(())
    })
}

/// Full classification report of every proper hyperideal, as JSON.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kr_classify(h: *const KrHyperring, out: *mut *mut c_char) -> KrStatus {
    guard(|| {
        let h = ring(h)?;
        let rows = classify_all(h).or_else(|e| fail(KrStatus::KrPrecondition, e.to_string()))?;
        put_string(out, Report::classification(h, &rows).to_json())
    })
}

/// Run one registered statement over the catalog plus every (2,2)-structure
/// of size up to `search_max`. `status` receives 0 pass, 1 fail, 2 vacuous;
/// `report` (optional) the JSON report.
///
/// # Safety
/// `id` must be a NUL-terminated string; `status` writable; `report` null or writable.
#[no_mangle]
pub unsafe extern "C" fn kr_verify_theorem(
    id: *const c_char,
    reading: KrReading,
    search_max: usize,
    status: *mut i32,
    report: *mut *mut c_char,
) -> KrStatus {
    guard(|| {
        let id = text(id, "id")?;
        if search_max > 3 {
            return fail(KrStatus::KrPrecondition, "search_max above 3 is not supported here");
        }
        let r = verify_theorem(id, &default_scope(search_max), reading.into())
            .or_else(|e| fail(KrStatus::KrNotFound, e.to_string()))?;
        let code = match r.status {
            krasner::harness::theorems::Status::Pass => 0,
            krasner::harness::theorems::Status::Fail => 1,
            krasner::harness::theorems::Status::Vacuous => 2,
        };
        put(status, code)?;
        if !report.is_null() {
            put_string(report, serde_json::to_string_pretty(&r).expect("serializes"))?;
        }
        Ok(())
    })
}
