//! Exercise the C entry points the way a foreign caller would: through raw
//! pointers and C strings.

use colored_descents_capi::*;
use std::ffi::{CStr, CString};
use std::ptr;

fn compute(
    r: u32,
    n: u32,
    stat: &str,
    c: i64,
    d: i64,
    method: &str,
) -> (CdStatus, *mut CdDistribution) {
    let stat = CString::new(stat).unwrap();
    let method = CString::new(method).unwrap();
    let mut handle: *mut CdDistribution = ptr::null_mut();
    let status = unsafe {
        cd_distribution_compute(
            r,
            n,
            stat.as_ptr(),
            c,
            d,
            method.as_ptr(),
            0,
            0,
            &mut handle,
        )
    };
    (status, handle)
}

fn take_string(ptr: *mut std::ffi::c_char) -> String {
    assert!(!ptr.is_null());
    let owned = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_owned();
    unsafe { cd_string_free(ptr) };
    owned
}

#[test]
fn compute_and_read_back() {
    let (status, handle) = compute(3, 2, "des-cd", 0, 1, "recurrence");
    assert_eq!(status, CdStatus::Ok);
    assert!(!handle.is_null());

    let json = take_string(unsafe { cd_distribution_json(handle) });
    assert_eq!(
        json,
        "{\"r\":3,\"n\":2,\"stat\":\"des-cd\",\"c\":0,\"d\":1,\"method\":\"recurrence\",\"distribution\":{\"0\":\"16\",\"1\":\"2\"}}"
    );
    assert_eq!(take_string(unsafe { cd_distribution_count(handle, 0) }), "16");
    assert_eq!(take_string(unsafe { cd_distribution_count(handle, 1) }), "2");
    assert_eq!(take_string(unsafe { cd_distribution_count(handle, 9) }), "0");
    assert_eq!(take_string(unsafe { cd_distribution_total(handle) }), "18");
    assert_eq!(unsafe { cd_distribution_max_statistic(handle) }, 1);

    unsafe { cd_distribution_free(handle) };
}

#[test]
fn signed_statistics_by_every_method() {
    for method in ["brute", "formula", "blocks", "recurrence", "series"] {
        let (status, handle) = compute(2, 4, "pndes", -1, -1, method);
        assert_eq!(status, CdStatus::Ok, "method {method}");
        let total = take_string(unsafe { cd_distribution_total(handle) });
        assert_eq!(total, "384", "method {method}");
        unsafe { cd_distribution_free(handle) };
    }
}

#[test]
fn status_codes() {
    // unknown statistic
    let (status, handle) = compute(2, 2, "major-index", -1, -1, "brute");
    assert_eq!(status, CdStatus::InvalidArgument);
    assert!(handle.is_null());

    // pdes needs r = 2
    let (status, _) = compute(3, 2, "pdes", -1, -1, "brute");
    assert_eq!(status, CdStatus::InvalidArgument);

    // missing color arguments
    let (status, _) = compute(3, 2, "des-cd", -1, -1, "brute");
    assert_eq!(status, CdStatus::InvalidArgument);

    // budget refusal
    let stat = CString::new("pdes").unwrap();
    let method = CString::new("brute").unwrap();
    let mut handle: *mut CdDistribution = ptr::null_mut();
    let status = unsafe {
        cd_distribution_compute(2, 10, stat.as_ptr(), -1, -1, method.as_ptr(), 1, 100, &mut handle)
    };
    assert_eq!(status, CdStatus::BudgetExceeded);

    // the erratum series route cannot produce a distribution at r = 3, n = 0
    let (status, _) = compute(3, 0, "des-cc", 0, -1, "series");
    assert_eq!(status, CdStatus::NotRepresentable);

    // null pointers are rejected, not dereferenced
    let status = unsafe {
        cd_distribution_compute(2, 2, ptr::null(), -1, -1, method.as_ptr(), 1, 0, &mut handle)
    };
    assert_eq!(status, CdStatus::NullArgument);
    assert_eq!(unsafe { cd_distribution_json(ptr::null()) }, ptr::null_mut());
    assert_eq!(unsafe { cd_distribution_max_statistic(ptr::null()) }, -1);
    unsafe {
        cd_distribution_free(ptr::null_mut());
        cd_string_free(ptr::null_mut());
    }
}

#[test]
fn identity_and_group_order() {
    assert_eq!(cd_identity_holds(20), 1);
    assert_eq!(take_string(cd_group_order(4, 6)), "2949120");
    assert_eq!(
        take_string(cd_group_order(2, 25)),
        "520469842636666622693081088000000"
    );
    assert!(cd_group_order(0, 3).is_null());
}
