//! C ABI over `k3pairs`.
//!
//! Every function returns a [`K3pStatus`]; results come back through out
//! pointers. Strings handed out are owned by the caller and released with
//! [`k3p_string_free`]. After a non-OK status, [`k3p_last_error`] describes
//! the failure (per thread, valid until the next call on that thread).

use k3pairs::k3::{check_rank, euler_g, g_closed, syst_hodge};
use k3pairs::modularity::fit_v_coefficient;
use k3pairs::verify::{first_failure, run_suite, Suite, SuiteConfig};
use k3pairs::Error;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K3pStatus {
    Ok = 0,
    /// Bad argument or configuration.
    InvalidArgument = 1,
    /// A required pointer was null.
    NullPointer = 2,
    /// An identity failed to hold; see the error message for its location.
    IdentityFailure = 3,
    /// Outside what the library models (for instance r > n).
    Unsupported = 4,
    /// Internal error; the library caught a panic.
    Internal = 5,
}

/// Rank data and truncation orders shared by the calls that take a handle.
pub struct K3pSession {
    n: i64,
    r: i64,
    qorder: i64,
    ywin: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> K3pStatus {
    match e {
        Error::Unsupported(_) => K3pStatus::Unsupported,
        e if e.is_identity_failure() => K3pStatus::IdentityFailure,
        _ => K3pStatus::InvalidArgument,
    }
}

/// Runs `f`, recording the message of any error or panic.
fn guard(f: impl FnOnce() -> Result<(), (K3pStatus, String)>) -> K3pStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => K3pStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            K3pStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (K3pStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (K3pStatus, String) {
    (K3pStatus::NullPointer, format!("{what} is null"))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (K3pStatus, String)> {
    let c = CString::new(s).map_err(|_| (K3pStatus::Internal, "interior nul".to_string()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn session<'a>(s: *const K3pSession) -> Result<&'a K3pSession, (K3pStatus, String)> {
    s.as_ref().ok_or_else(|| null("session"))
}

/// Message for the last non-OK status on this thread; never null.
#[no_mangle]
pub extern "C" fn k3p_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Creates a handle for rank `n`, `r` sections, q-order and y-window.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn k3p_session_new(n: i64, r: i64, qorder: i64, ywin: i64, out: *mut *mut K3pSession) -> K3pStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        check_rank(n, r).map_err(lib_err)?;
        if qorder < 0 || ywin < 0 {
            return Err((K3pStatus::InvalidArgument, format!("qorder {qorder} and ywin {ywin} must be nonnegative")));
        }
        *out = Box::into_raw(Box::new(K3pSession { n, r, qorder, ywin }));
        Ok(())
    })
}

/// # Safety
/// `s` must come from [`k3p_session_new`] and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn k3p_session_free(s: *mut K3pSession) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must come from this library (or be null).
#[no_mangle]
pub unsafe extern "C" fn k3p_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `e(Syst^n(r, D_g, k + r))` as a decimal string, or its Hodge polynomial
/// in `t`, `tb` when `hodge` is nonzero.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn k3p_syst(s: *const K3pSession, g: i64, k: i64, hodge: i32, out: *mut *mut c_char) -> K3pStatus {
    guard(|| {
        let s = session(s)?;
        if out.is_null() {
            return Err(null("out"));
        }
        if g < 0 {
            return Err((K3pStatus::InvalidArgument, format!("genus {g} is negative")));
        }
        let p = syst_hodge(s.n, s.r, g, k).map_err(lib_err)?;
        put_string(out, if hodge != 0 { p.to_string() } else { p.eval_one_int().to_string() })
    })
}

/// Coefficients of `G^r_n` (or of `g^r_n = G^r_n|_{u=1}` when `euler` is
/// nonzero) as a JSON array of `{"q", "y", "value"}` objects.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn k3p_series_json(s: *const K3pSession, euler: i32, out: *mut *mut c_char) -> K3pStatus {
    guard(|| {
        let s = session(s)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let mut rows = Vec::new();
        if euler != 0 {
            for (q, p) in euler_g(s.n, s.r, s.qorder, s.ywin).map_err(lib_err)?.terms() {
                rows.extend(p.terms().map(|(y, c)| serde_json::json!({"q": q, "y": y, "value": c.to_string()})));
            }
        } else {
            for (q, p) in g_closed(s.n, s.r, s.qorder, s.ywin).map_err(lib_err)?.terms() {
                rows.extend(p.terms().map(|(y, c)| serde_json::json!({"q": q, "y": y, "value": c.to_string()})));
            }
        }
        put_string(out, serde_json::Value::Array(rows).to_string())
    })
}

/// Fits the `v^s` coefficient of `v^2 g^r_n(q, e^{iv})` and returns the fit
/// report as JSON.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn k3p_fit_json(
    s: *const K3pSession,
    vpow: i64,
    weight_ceiling: i64,
    fit_qorder: i64,
    test_qorder: i64,
    out: *mut *mut c_char,
) -> K3pStatus {
    guard(|| {
        let s = session(s)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let rep = fit_v_coefficient(s.n, s.r, vpow, weight_ceiling, fit_qorder, test_qorder).map_err(lib_err)?;
        put_string(out, serde_json::to_string(&rep).map_err(|e| (K3pStatus::Internal, e.to_string()))?)
    })
}

/// Runs a named suite (`ucomb`, `theta`, `routes`, `duality`, `modularity`,
/// `all`) up to rank `n`. Returns `IdentityFailure` with the first failing
/// identity in the error message.
///
/// # Safety
/// `suite` must be a nul-terminated string.
#[no_mangle]
pub unsafe extern "C" fn k3p_verify(
    suite: *const c_char,
    n: i64,
    cutoff: i64,
    qorder: i64,
    ywin: i64,
    vorder: i64,
) -> K3pStatus {
    guard(|| {
        if suite.is_null() {
            return Err(null("suite"));
        }
        let name = CStr::from_ptr(suite).to_str().map_err(|_| (K3pStatus::InvalidArgument, "suite is not UTF-8".to_string()))?;
        let suite: Suite = name.parse().map_err(lib_err)?;
        let config = SuiteConfig { n, cutoff, qorder, ywin, vorder, ..Default::default() };
        let outcomes = run_suite(suite, config, |_| {}).map_err(lib_err)?;
        match first_failure(&outcomes) {
            None => Ok(()),
            Some(o) => {
                let e = o.result.as_ref().unwrap_err();
                Err((status_of(e), format!("{}: {e}", o.name)))
            }
        }
    })
}

/// Library version, static string.
#[no_mangle]
pub extern "C" fn k3p_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
