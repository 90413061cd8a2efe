//! C ABI over the engine. Objects cross the boundary as opaque handles
//! owned by the caller and released with the matching `*_free`. Every
//! function returns an [`LsStatus`]; on failure the message is available
//! from [`ls_last_error`] until the next call on the same thread.
//! Strings returned through `char **` are released with [`ls_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lens_skein::braid::{parse_braid, MixedBraidWord};
use lens_skein::hecke::AlgebraElement;
use lens_skein::lens::{generate_system, reduce_system};
use lens_skein::trace::{map_i, map_i_band, trace, TraceValue};
use lens_skein::verify::{run_suite, Params, Suite};
use lens_skein::Error;

#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    DivisionByZero = 4,
    IndexOutOfRange = 5,
    StrandMismatch = 6,
    MapIDomain = 7,
    Domain = 8,
    /// A verification suite ran and found a failure.
    VerifyFailed = 9,
    Panic = 10,
}

/// A mixed braid word.
pub struct LsWord(MixedBraidWord);

/// An element of the Hecke algebra in normal form.
pub struct LsElement(AlgebraElement);

/// A trace value: a polynomial in the `s_k` over Q(q,z).
pub struct LsTrace(TraceValue);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(LsStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Parse { .. } => LsStatus::Parse,
            Error::DivisionByZero => LsStatus::DivisionByZero,
            Error::IndexOutOfRange { .. } => LsStatus::IndexOutOfRange,
            Error::StrandMismatch(..) => LsStatus::StrandMismatch,
            Error::MapIDomain { .. } => LsStatus::MapIDomain,
            Error::Domain(_) => LsStatus::Domain,
        };
        Fail(status, e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> LsStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LsStatus::Ok,
        Ok(Err(Fail(s, msg))) => {
            set_error(&msg);
            s
        }
        Err(_) => {
            set_error("internal panic");
            LsStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| Fail(LsStatus::NullPointer, format!("{what} is null")))
}

unsafe fn input_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(LsStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(LsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(LsStatus::NullPointer, "output pointer is null".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(LsStatus::NullPointer, "output pointer is null".into()));
    }
    *out = CString::new(s).map_err(|_| Fail(LsStatus::Domain, "output contains NUL".into()))?.into_raw();
    Ok(())
}

fn to_json(v: &impl serde::Serialize) -> Result<String, Fail> {
    serde_json::to_string(v).map_err(|e| Fail(LsStatus::Domain, e.to_string()))
}

/// Message of the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ls_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn ls_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a word. `n` is the number of moving strands, 0 to infer it.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_word_parse(text: *const c_char, n: usize, out: *mut *mut LsWord) -> LsStatus {
    guard(|| {
        let s = input_str(text, "text")?;
        let w = parse_braid(s, (n > 0).then_some(n))?;
        put(out, LsWord(w))
    })
}

/// # Safety
/// `w` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn ls_word_free(w: *mut LsWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_word_to_string(w: *const LsWord, out: *mut *mut c_char) -> LsStatus {
    guard(|| put_string(out, borrow(w, "word")?.0.to_string()))
}

/// The image of the word under f.
///
/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_word_fmap(w: *const LsWord, out: *mut *mut LsWord) -> LsStatus {
    guard(|| {
        let f = borrow(w, "word")?.0.f_map();
        put(out, LsWord(f))
    })
}

/// # Safety
/// `w` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_element_from_word(w: *const LsWord, out: *mut *mut LsElement) -> LsStatus {
    guard(|| {
        let e = AlgebraElement::project_braid(&borrow(w, "word")?.0);
        put(out, LsElement(e))
    })
}

/// # Safety
/// `e` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn ls_element_free(e: *mut LsElement) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_element_to_string(e: *const LsElement, out: *mut *mut c_char) -> LsStatus {
    guard(|| put_string(out, borrow(e, "element")?.0.to_string()))
}

/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_element_to_json(e: *const LsElement, out: *mut *mut c_char) -> LsStatus {
    guard(|| put_string(out, to_json(&borrow(e, "element")?.0.to_json())?))
}

/// # Safety
/// `e` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_element_trace(e: *const LsElement, out: *mut *mut LsTrace) -> LsStatus {
    guard(|| {
        let v = trace(&borrow(e, "element")?.0);
        put(out, LsTrace(v))
    })
}

/// Parses a trace value from its JSON form.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_trace_from_json(json: *const c_char, out: *mut *mut LsTrace) -> LsStatus {
    guard(|| {
        let s = input_str(json, "json")?;
        let terms: Vec<lens_skein::trace::TraceTermJson> = serde_json::from_str(s).map_err(|e| Fail(LsStatus::Parse, e.to_string()))?;
        put(out, LsTrace(TraceValue::from_json(&terms)?))
    })
}

/// # Safety
/// `t` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn ls_trace_free(t: *mut LsTrace) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_trace_to_string(t: *const LsTrace, out: *mut *mut c_char) -> LsStatus {
    guard(|| put_string(out, borrow(t, "trace")?.0.to_string()))
}

/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_trace_to_json(t: *const LsTrace, out: *mut *mut c_char) -> LsStatus {
    guard(|| put_string(out, to_json(&borrow(t, "trace")?.0.to_json())?))
}

/// Writes 1 to `out` when the two values are equal, 0 otherwise.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_trace_equal(a: *const LsTrace, b: *const LsTrace, out: *mut i32) -> LsStatus {
    guard(|| {
        let eq = borrow(a, "a")?.0 == borrow(b, "b")?.0;
        put_int(out, eq as i32)
    })
}

unsafe fn put_int(out: *mut i32, v: i32) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(LsStatus::NullPointer, "output pointer is null".into()));
    }
    *out = v;
    Ok(())
}

/// Applies the map I for `L(p,1)`. With `band` nonzero, indices above `p`
/// are accepted as they occur in band-move traces.
///
/// # Safety
/// `t` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_trace_map_i(t: *const LsTrace, p: u32, band: i32, out: *mut *mut LsTrace) -> LsStatus {
    guard(|| {
        let v = &borrow(t, "trace")?.0;
        let img = if band != 0 { map_i_band(v, p)? } else { map_i(v, p)? };
        put(out, LsTrace(img))
    })
}

/// Generates and reduces the positive-side system for `L(p,1)` up to
/// level `k_max` and writes the result as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_reduce_json(p: u32, k_max: u32, out: *mut *mut c_char) -> LsStatus {
    guard(|| {
        let r = reduce_system(&generate_system(p, k_max, lens_skein::braid::Sign::Plus)?)?;
        put_string(out, to_json(&r.to_json())?)
    })
}

/// Runs a verification suite with its default parameters, overriding `p`
/// when nonzero, and writes the report as JSON. Returns
/// [`LsStatus::VerifyFailed`] when the suite finds a failure; the report
/// is written in that case too.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ls_verify(suite: *const c_char, p: u32, out: *mut *mut c_char) -> LsStatus {
    guard(|| {
        let suite: Suite = input_str(suite, "suite")?.parse()?;
        let mut params: Params = suite.defaults();
        if p > 0 {
            params.p = Some(p);
        }
        let r = run_suite(suite, &params)?;
        put_string(out, to_json(&r)?)?;
        match r.first_failure() {
            None => Ok(()),
            Some(f) => Err(Fail(LsStatus::VerifyFailed, format!("{}: {}", f.instance, f.detail))),
        }
    })
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ls_version() -> *const c_char {
    static V: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    V.as_ptr().cast()
}
