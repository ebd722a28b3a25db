//! C ABI over `warping-core`.
//!
//! Diagrams live behind an opaque `WdDiagram` handle. Every fallible call
//! returns a `WdStatus`; on failure `wd_last_error_message` describes the
//! error for the calling thread. Strings handed out by the library must be
//! released with `wd_string_free`, handles with `wd_diagram_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use warping_core::normalize::{normalize, OuWord};
use warping_core::verify::{linking_number, verify_all, Claim};
use warping_core::warping::{d_min, d_unoriented, ld_min};
use warping_core::{Error, LinkDiagram};

/// Opaque diagram handle.
pub struct WdDiagram {
    inner: LinkDiagram,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    TooLarge = 5,
    NotApplicable = 6,
    Internal = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: impl Into<String>) {
    let text = message.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(error: &Error) -> WdStatus {
    match error {
        Error::MalformedToken { .. }
        | Error::EmptyDiagram
        | Error::CrossingOccurrence { .. }
        | Error::DuplicateStrand { .. }
        | Error::SignMismatch(_)
        | Error::Json(_)
        | Error::InvalidLetter(_) => WdStatus::ParseError,
        Error::TooManyComponents { .. } => WdStatus::TooLarge,
        Error::NotAKnot(_) | Error::NoCrossings | Error::TooFewComponents | Error::NotApplicable(_) => {
            WdStatus::NotApplicable
        }
        _ => WdStatus::InvalidArgument,
    }
}

/// Runs `body`, recording errors and turning panics into `Internal`.
fn guard(body: impl FnOnce() -> Result<(), (WdStatus, String)>) -> WdStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            WdStatus::Ok
        }
        Ok(Err((status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal error");
            WdStatus::Internal
        }
    }
}

fn core(error: Error) -> (WdStatus, String) {
    (status_of(&error), error.to_string())
}

fn null(what: &str) -> (WdStatus, String) {
    (WdStatus::NullPointer, format!("{what} is null"))
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, (WdStatus, String)> {
    if text.is_null() {
        return Err(null("string argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| (WdStatus::InvalidUtf8, "string argument is not UTF-8".to_string()))
}

unsafe fn diagram<'a>(handle: *const WdDiagram) -> Result<&'a LinkDiagram, (WdStatus, String)> {
    handle.as_ref().map(|d| &d.inner).ok_or_else(|| null("diagram handle"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (WdStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, value: String) -> Result<(), (WdStatus, String)> {
    let c = CString::new(value).map_err(|_| (WdStatus::Internal, "string contains NUL".to_string()))?;
    write(out, c.into_raw())
}

/// Parses a diagram in the text format into a new handle.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wd_diagram_parse(text: *const c_char, out: *mut *mut WdDiagram) -> WdStatus {
    guard(|| {
        let parsed = LinkDiagram::parse(read_str(text)?).map_err(core)?;
        write(out, Box::into_raw(Box::new(WdDiagram { inner: parsed })))
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `handle` must come from `wd_diagram_parse` and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wd_diagram_free(handle: *mut WdDiagram) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Component, crossing and non-self crossing counts.
///
/// # Safety
/// `handle` must be a live handle; the outputs must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn wd_diagram_counts(
    handle: *const WdDiagram,
    components: *mut usize,
    crossings: *mut usize,
    linking_crossings: *mut usize,
) -> WdStatus {
    guard(|| {
        let d = diagram(handle)?;
        write(components, d.component_count())?;
        write(crossings, d.crossing_count())?;
        write(linking_crossings, d.linking_crossing_count())
    })
}

/// `d(D)`; pass `inverse != 0` for `d(-D)`.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wd_warping_degree(handle: *const WdDiagram, inverse: i32, out: *mut usize) -> WdStatus {
    guard(|| {
        let d = diagram(handle)?;
        let value = if inverse != 0 {
            d_min(&d.reverse_all())
        } else {
            d_min(d)
        }
        .map_err(core)?
        .value;
        write(out, value)
    })
}

/// Linking warping degree `ld(D)`.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wd_linking_warping_degree(handle: *const WdDiagram, out: *mut usize) -> WdStatus {
    guard(|| write(out, ld_min(diagram(handle)?).map_err(core)?.value))
}

/// `d(|D|)`, minimized over orientations.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wd_unoriented_warping_degree(handle: *const WdDiagram, out: *mut usize) -> WdStatus {
    guard(|| write(out, d_unoriented(diagram(handle)?).map_err(core)?.value))
}

/// Twice the linking number of components `i` and `j` (0-based).
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wd_linking_number_twice(
    handle: *const WdDiagram,
    i: usize,
    j: usize,
    out: *mut i64,
) -> WdStatus {
    guard(|| write(out, linking_number(diagram(handle)?, i, j).map_err(core)?.twice()))
}

/// The diagram as JSON. Free the result with `wd_string_free`.
///
/// # Safety
/// `handle` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wd_diagram_to_json(handle: *const WdDiagram, out: *mut *mut c_char) -> WdStatus {
    guard(|| write_string(out, diagram(handle)?.to_json().to_string()))
}

/// Reports for every applicable claim, as a JSON array. `all_hold` receives
/// 1 if every claim holds, else 0. Free the string with `wd_string_free`.
///
/// # Safety
/// `handle` must be a live handle; the outputs must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn wd_verify_json(
    handle: *const WdDiagram,
    all_hold: *mut i32,
    out: *mut *mut c_char,
) -> WdStatus {
    guard(|| {
        let reports = verify_all(diagram(handle)?, &Claim::ALL, &Default::default()).map_err(core)?;
        let json = serde_json::to_string(&reports).map_err(|e| (WdStatus::Internal, e.to_string()))?;
        write(all_hold, i32::from(reports.iter().all(|r| r.holds)))?;
        write_string(out, json)
    })
}

/// Cancels `ou` factors of an o/u word. Free the result with `wd_string_free`.
///
/// # Safety
/// `word` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn wd_normalize_word(word: *const c_char, out: *mut *mut c_char) -> WdStatus {
    guard(|| {
        let w: OuWord = read_str(word)?.parse().map_err(core)?;
        write_string(out, normalize(&w).to_string())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn wd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn wd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
