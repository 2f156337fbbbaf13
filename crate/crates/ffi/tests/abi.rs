use std::ffi::{c_char, CStr, CString};
use std::ptr;

use torsion3_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { t3_string_free(s) };
    out
}

fn quartic(expr: &str) -> Result<*mut T3Quartic, (T3Status, String)> {
    let c = CString::new(expr).unwrap();
    let mut q = ptr::null_mut();
    let st = unsafe { t3_quartic_new(c.as_ptr(), ptr::null(), &mut q) };
    if st == T3Status::Ok {
        Ok(q)
    } else {
        assert!(q.is_null());
        let msg = unsafe { CStr::from_ptr(t3_last_error()) }.to_str().unwrap().to_owned();
        Err((st, msg))
    }
}

#[test]
fn classify_and_obstruct() {
    let q = quartic("(x^2-2)*(x^2+6)").unwrap();
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { t3_quartic_case_json(q, &mut s) }, T3Status::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
    assert_eq!(v["case"]["label"], "C2xC2");

    let mut verdict = T3Verdict::Trivial;
    let mut report = ptr::null_mut();
    assert_eq!(unsafe { t3_quartic_obstruction(q, &mut verdict, &mut report) }, T3Status::Ok);
    assert_eq!(verdict, T3Verdict::Minus);
    assert!(take(report).contains("\"-1\""));

    let mut sols = ptr::null_mut();
    assert_eq!(unsafe { t3_solve(q, 3, &mut sols) }, T3Status::Obstructed);
    assert!(sols.is_null());
    unsafe { t3_quartic_free(q) };
}

#[test]
fn solve_and_verify() {
    let q = quartic("x*(x^3+2)").unwrap();
    let mut sols = ptr::null_mut();
    assert_eq!(unsafe { t3_solve(q, 4, &mut sols) }, T3Status::Ok);
    let n = unsafe { t3_solutions_len(sols) };
    assert_eq!(n, 4);
    for i in 0..n {
        let mut ok = false;
        assert_eq!(unsafe { t3_solutions_verify(q, sols, i, &mut ok) }, T3Status::Ok);
        assert!(ok);
        let mut s = ptr::null_mut();
        assert_eq!(unsafe { t3_solutions_record_json(sols, i, &mut s) }, T3Status::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["case"]["label"], "S3");
    }
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { t3_solutions_record_json(sols, n, &mut s) }, T3Status::Invalid);
    unsafe {
        t3_solutions_free(sols);
        t3_quartic_free(q);
    }
}

#[test]
fn errors() {
    let (st, msg) = quartic("2x").unwrap_err();
    assert_eq!(st, T3Status::Invalid);
    assert!(msg.contains("implicit"), "{msg}");
    // discriminant not in the -3 class
    assert_eq!(quartic("x^4-2").unwrap_err().0, T3Status::Invalid);

    let mut q = ptr::null_mut();
    assert_eq!(unsafe { t3_quartic_new(ptr::null(), ptr::null(), &mut q) }, T3Status::NullPointer);
    assert_eq!(unsafe { t3_solutions_len(ptr::null()) }, 0);
    unsafe {
        t3_quartic_free(ptr::null_mut());
        t3_string_free(ptr::null_mut());
    }
}

#[test]
fn budgets_and_qexp() {
    let d = t3_budgets_default();
    assert!(d.factor > 0 && d.height > 0);
    let tight = T3Budgets { factor: d.factor, height: 0, retry: d.retry };
    let c = CString::new("(x^2+2)*(x^2-6)").unwrap();
    let mut q = ptr::null_mut();
    assert_eq!(unsafe { t3_quartic_new(c.as_ptr(), &tight, &mut q) }, T3Status::Ok);
    let mut sols = ptr::null_mut();
    assert_eq!(unsafe { t3_solve(q, 2, &mut sols) }, T3Status::BudgetExceeded);
    unsafe { t3_quartic_free(q) };

    let mut ok = false;
    assert_eq!(unsafe { t3_qexp_check(12, &mut ok) }, T3Status::Ok);
    assert!(ok);
}
