//! C interface to `cubic-bundles`.
//!
//! Objects cross the boundary as opaque handles created by `cb_*_parse` or
//! by an operation and released with the matching `cb_*_free`. Every
//! fallible call returns a [`CbStatus`]; on failure the message is kept per
//! thread and can be read with [`cb_last_error`]. Strings handed out by the
//! library are owned by the caller and released with [`cb_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cubic_bundles::cubic_bundle::BundleDescriptor;
use cubic_bundles::exact_field::text::parse_scalar;
use cubic_bundles::pipeline::{construct_bundle, recover_construction, render_report, Format, Report, Scenario};
use cubic_bundles::projectivity::{decide_projective, q_cartier_reduce, ConstructionInput};
use cubic_bundles::Error;

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    Arithmetic = 5,
    Hypothesis = 6,
    Io = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CbFormat {
    Text = 0,
    Structured = 1,
}

/// A parsed scenario file.
pub struct CbScenario(Scenario);

/// The report of a scenario run.
pub struct CbReport(Report);

/// Fibers, constants and divisors of a construction.
pub struct CbInput(ConstructionInput);

/// A bundle of singular plane cubics.
pub struct CbDescriptor(BundleDescriptor);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CbStatus {
    match e {
        Error::Parse { .. } | Error::InvalidScalar(_) => CbStatus::Parse,
        Error::Validation(_)
        | Error::ZeroProjectivePoint
        | Error::OverlappingSupports { .. }
        | Error::CenterIndex { .. }
        | Error::UntrackedSection { .. }
        | Error::BadSchedule(_)
        | Error::Descriptor(_)
        | Error::ZeroSection
        | Error::InfiniteDivisor
        | Error::XiIsOne
        | Error::NotRootOfUnity { .. } => CbStatus::Validation,
        Error::DivisionByZero | Error::SingularMatrix | Error::InsufficientConductor { .. } => CbStatus::Arithmetic,
        Error::InverseHypothesis { .. }
        | Error::NodePreimage
        | Error::CuspidalFiber(_)
        | Error::Degenerate(_)
        | Error::NotTrivializable(_) => CbStatus::Hypothesis,
        Error::Io(_) => CbStatus::Io,
    }
}

/// Runs `f`, recording errors and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), (CbStatus, String)>) -> CbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CbStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            CbStatus::Internal
        }
    }
}

fn lib<T>(r: cubic_bundles::Result<T>) -> Result<T, (CbStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, (CbStatus, String)> {
    if p.is_null() {
        return Err((CbStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (CbStatus::InvalidUtf8, "string is not UTF-8".into()))
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, (CbStatus, String)> {
    p.as_ref().ok_or((CbStatus::NullPointer, "null handle".into()))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), (CbStatus, String)> {
    if out.is_null() {
        return Err((CbStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (CbStatus, String)> {
    if out.is_null() {
        return Err((CbStatus::NullPointer, "null output pointer".into()));
    }
    let c = CString::new(s).map_err(|_| (CbStatus::Internal, "nul byte in output".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// The message of the last failed call on this thread, or null. Valid until
/// the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// A static description of a status code.
#[no_mangle]
pub extern "C" fn cb_status_message(status: CbStatus) -> *const c_char {
    let s: &'static CStr = match status {
        CbStatus::Ok => c"ok",
        CbStatus::NullPointer => c"null pointer",
        CbStatus::InvalidUtf8 => c"invalid UTF-8",
        CbStatus::Parse => c"parse error",
        CbStatus::Validation => c"validation error",
        CbStatus::Arithmetic => c"arithmetic error",
        CbStatus::Hypothesis => c"hypothesis not satisfied",
        CbStatus::Io => c"I/O error",
        CbStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn cb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a scenario given as JSON text.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_scenario_parse(json: *const c_char, out: *mut *mut CbScenario) -> CbStatus {
    guard(|| {
        let s = lib(Scenario::parse(text(json)?))?;
        lib(s.validate())?;
        put(out, CbScenario(s))
    })
}

/// # Safety
/// `s` must be null or a handle from [`cb_scenario_parse`].
#[no_mangle]
pub unsafe extern "C" fn cb_scenario_free(s: *mut CbScenario) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Executes every request of the scenario. Per-request failures are part of
/// the report; see [`cb_report_exit_code`].
///
/// # Safety
/// `s` must be a live scenario handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_scenario_run(s: *const CbScenario, out: *mut *mut CbReport) -> CbStatus {
    guard(|| {
        let report = lib(get(s)?.0.run())?;
        put(out, CbReport(report))
    })
}

/// `0` when every request succeeded without findings, `2` otherwise.
///
/// # Safety
/// `r` must be null or a live report handle.
#[no_mangle]
pub unsafe extern "C" fn cb_report_exit_code(r: *const CbReport) -> i32 {
    r.as_ref().map_or(1, |r| r.0.exit_code())
}

/// # Safety
/// `r` must be a live report handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_report_render(r: *const CbReport, format: CbFormat, out: *mut *mut c_char) -> CbStatus {
    guard(|| {
        let format = match format {
            CbFormat::Text => Format::Text,
            CbFormat::Structured => Format::Structured,
        };
        put_string(out, render_report(&get(r)?.0, format))
    })
}

/// # Safety
/// `r` must be null or a handle from [`cb_scenario_run`].
#[no_mangle]
pub unsafe extern "C" fn cb_report_free(r: *mut CbReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Parses and validates a construction input given as JSON text.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_input_parse(json: *const c_char, out: *mut *mut CbInput) -> CbStatus {
    guard(|| {
        let input: ConstructionInput = lib(serde_json::from_str(text(json)?).map_err(Error::from))?;
        lib(input.validate())?;
        put(out, CbInput(input))
    })
}

/// # Safety
/// `i` must be null or an input handle.
#[no_mangle]
pub unsafe extern "C" fn cb_input_free(i: *mut CbInput) {
    if !i.is_null() {
        drop(Box::from_raw(i));
    }
}

/// # Safety
/// `i` must be a live input handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_input_to_json(i: *const CbInput, out: *mut *mut c_char) -> CbStatus {
    guard(|| put_string(out, lib(serde_json::to_string(&get(i)?.0).map_err(Error::from))?))
}

/// # Safety
/// `i` must be a live input handle and `projective` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_decide_projective(i: *const CbInput, projective: *mut bool) -> CbStatus {
    guard(|| {
        let v = lib(decide_projective(&get(i)?.0))?;
        if projective.is_null() {
            return Err((CbStatus::NullPointer, "null output pointer".into()));
        }
        *projective = v.projective;
        Ok(())
    })
}

/// # Safety
/// `i` must be a live input handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_construct(i: *const CbInput, out: *mut *mut CbDescriptor) -> CbStatus {
    guard(|| {
        let d = lib(construct_bundle(&get(i)?.0))?;
        put(out, CbDescriptor(d))
    })
}

/// Reads the construction data back from a descriptor.
///
/// # Safety
/// `d` must be a live descriptor handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_recover(d: *const CbDescriptor, out: *mut *mut CbInput) -> CbStatus {
    guard(|| {
        let i = lib(recover_construction(&get(d)?.0))?;
        put(out, CbInput(i))
    })
}

/// # Safety
/// `d` must be a live descriptor handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_descriptor_to_json(d: *const CbDescriptor, out: *mut *mut c_char) -> CbStatus {
    guard(|| put_string(out, lib(serde_json::to_string(&get(d)?.0).map_err(Error::from))?))
}

/// # Safety
/// `d` must be null or a descriptor handle.
#[no_mangle]
pub unsafe extern "C" fn cb_descriptor_free(d: *mut CbDescriptor) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Whether `f^k` reduces into the subring for the osculating section with
/// parameter `xi` at a cusp of multiplicity `m`.
///
/// # Safety
/// `xi` must be a nul-terminated scalar and `member` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cb_cartier_member(xi: *const c_char, k: u32, m: u32, member: *mut bool) -> CbStatus {
    guard(|| {
        let xi = lib(parse_scalar(text(xi)?))?;
        let c = lib(q_cartier_reduce(&xi, k, m))?;
        if member.is_null() {
            return Err((CbStatus::NullPointer, "null output pointer".into()));
        }
        *member = c.member;
        Ok(())
    })
}
