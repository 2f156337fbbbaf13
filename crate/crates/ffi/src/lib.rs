//! C ABI over torsion3. Objects are opaque handles released with their
//! `_free` function; strings returned through `char **` are released with
//! `t3_string_free`. Every function returns a `T3Status`; on failure
//! `t3_last_error` describes the problem.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use torsion3::cli::parse_poly;
use torsion3::exactmath::UniPoly;
use torsion3::quadforms::Verdict;
use torsion3::quartic::{classify, validate, GaloisCase, ValidatedQuartic};
use torsion3::solver::{self, SolutionRecord};
use torsion3::{Budgets, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum T3Status {
    Ok = 0,
    /// Invalid input or failed precondition.
    Invalid = 1,
    BudgetExceeded = 2,
    Obstructed = 3,
    Unsupported = 4,
    NullPointer = 5,
    Internal = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum T3Verdict {
    Trivial = 0,
    Plus = 1,
    Minus = -1,
    Unsupported = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct T3Budgets {
    pub factor: u64,
    pub height: u64,
    pub retry: u32,
}

/// A validated and classified quartic.
pub struct T3Quartic {
    poly: UniPoly,
    validated: ValidatedQuartic,
    case: GaloisCase,
    budgets: Budgets,
}

/// Records produced by `t3_solve`.
pub struct T3Solutions {
    records: Vec<SolutionRecord>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> T3Status {
    set_error(&e.to_string());
    match e.exit_code() {
        2 => T3Status::BudgetExceeded,
        3 => T3Status::Obstructed,
        4 => T3Status::Unsupported,
        _ => T3Status::Invalid,
    }
}

/// Runs `f`, turning panics into `Internal`.
fn guard(f: impl FnOnce() -> T3Status) -> T3Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal error");
            T3Status::Internal
        }
    }
}

fn null() -> T3Status {
    set_error("null pointer argument");
    T3Status::NullPointer
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> T3Status {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            T3Status::Ok
        }
        Err(_) => {
            set_error("string contains NUL");
            T3Status::Internal
        }
    }
}

fn budgets_from(b: *const T3Budgets) -> Budgets {
    if b.is_null() {
        Budgets::default()
    } else {
        // SAFETY: non-null pointers are required to point to a T3Budgets.
        let b = unsafe { *b };
        Budgets { factor: b.factor, height: b.height, retry: b.retry }
    }
}

/// Message for the last failed call on this thread. The pointer stays valid
/// until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn t3_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn t3_budgets_default() -> T3Budgets {
    let b = Budgets::default();
    T3Budgets { factor: b.factor, height: b.height, retry: b.retry }
}

/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn t3_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses, validates and classifies a quartic such as "x^4+2*x^2-12".
/// `budgets` may be NULL for the defaults.
///
/// # Safety
/// `expr` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn t3_quartic_new(
    expr: *const c_char,
    budgets: *const T3Budgets,
    out: *mut *mut T3Quartic,
) -> T3Status {
    if expr.is_null() || out.is_null() {
        return null();
    }
    *out = ptr::null_mut();
    guard(|| {
        let Ok(text) = CStr::from_ptr(expr).to_str() else {
            set_error("expression is not UTF-8");
            return T3Status::Invalid;
        };
        let b = budgets_from(budgets);
        let built = parse_poly(text).and_then(|poly| {
            let validated = validate(&poly, b.factor)?;
            let case = classify(&validated, b.factor, b.retry)?;
            Ok(T3Quartic { poly, validated, case, budgets: b })
        });
        match built {
            Ok(q) => {
                *out = Box::into_raw(Box::new(q));
                T3Status::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `q` must come from `t3_quartic_new` and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn t3_quartic_free(q: *mut T3Quartic) {
    if !q.is_null() {
        drop(Box::from_raw(q));
    }
}

/// The Galois case with its normal form and the validation data, as JSON.
///
/// # Safety
/// `q` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn t3_quartic_case_json(q: *const T3Quartic, out: *mut *mut c_char) -> T3Status {
    if q.is_null() || out.is_null() {
        return null();
    }
    guard(|| {
        let q = &*q;
        let v = serde_json::json!({ "input": q.validated, "case": q.case });
        write_string(out, v.to_string())
    })
}

/// The obstruction verdict; `json_out` may be NULL, otherwise it receives the
/// full report.
///
/// # Safety
/// `q` must be a live handle, `verdict` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn t3_quartic_obstruction(
    q: *const T3Quartic,
    verdict: *mut T3Verdict,
    json_out: *mut *mut c_char,
) -> T3Status {
    if q.is_null() || verdict.is_null() {
        return null();
    }
    guard(|| {
        let q = &*q;
        match solver::obstruction(&q.case, &q.budgets) {
            Ok(r) => {
                *verdict = match r.global_symbol {
                    Verdict::Trivial => T3Verdict::Trivial,
                    Verdict::Plus => T3Verdict::Plus,
                    Verdict::Minus => T3Verdict::Minus,
                    Verdict::Unsupported => T3Verdict::Unsupported,
                };
                if json_out.is_null() {
                    T3Status::Ok
                } else {
                    write_string(json_out, serde_json::to_string(&r).expect("serializes"))
                }
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Up to `count` verified non-CM curves with distinct j.
///
/// # Safety
/// `q` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn t3_solve(q: *const T3Quartic, count: usize, out: *mut *mut T3Solutions) -> T3Status {
    if q.is_null() || out.is_null() {
        return null();
    }
    *out = ptr::null_mut();
    guard(|| {
        let q = &*q;
        match solver::solve(&q.case, count, &q.budgets) {
            Ok(records) => {
                *out = Box::into_raw(Box::new(T3Solutions { records }));
                T3Status::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// # Safety
/// `s` must come from `t3_solve` and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn t3_solutions_free(s: *mut T3Solutions) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// # Safety
/// `s` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn t3_solutions_len(s: *const T3Solutions) -> usize {
    if s.is_null() {
        0
    } else {
        let records = &(*s).records;
        records.len()
    }
}

/// Record `index` as JSON: curve, t, j and the certificate chain.
///
/// # Safety
/// `s` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn t3_solutions_record_json(
    s: *const T3Solutions,
    index: usize,
    out: *mut *mut c_char,
) -> T3Status {
    if s.is_null() || out.is_null() {
        return null();
    }
    let records = &(*s).records;
    guard(|| match records.get(index) {
        Some(r) => write_string(out, serde_json::to_string(r).expect("serializes")),
        None => {
            set_error("record index out of range");
            T3Status::Invalid
        }
    })
}

/// Re-runs the certificate of record `index` against the quartic.
///
/// # Safety
/// `q` and `s` must be live handles, `ok` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn t3_solutions_verify(
    q: *const T3Quartic,
    s: *const T3Solutions,
    index: usize,
    ok: *mut bool,
) -> T3Status {
    if q.is_null() || s.is_null() || ok.is_null() {
        return null();
    }
    guard(|| {
        let q = &*q;
        let records = &(*s).records;
        match records.get(index) {
            Some(r) => {
                *ok = solver::verify_certificate_with(r, &q.poly, &q.budgets);
                T3Status::Ok
            }
            None => {
                set_error("record index out of range");
                T3Status::Invalid
            }
        }
    })
}

/// Whether t^3 = j holds for the first `terms` coefficients.
///
/// # Safety
/// `ok` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn t3_qexp_check(terms: usize, ok: *mut bool) -> T3Status {
    if ok.is_null() {
        return null();
    }
    guard(|| {
        *ok = torsion3::qexp::check_identity(terms);
        T3Status::Ok
    })
}
