//! C ABI for the colored-descents library: compute exact descent-statistic
//! distributions from any language that can call C.
//!
//! Conventions:
//! - Every fallible call returns a [`CdStatus`]; results come back through
//!   out-pointers.
//! - Distributions are opaque handles, freed with
//!   [`cd_distribution_free`].
//! - Counts cross the boundary as decimal strings (they outgrow u64
//!   quickly); free them with [`cd_string_free`].

use colored_descents::{
    compute_distribution, BruteConfig, ComputeError, DescentStatistic, Method,
    DEFAULT_ELEMENT_CAP,
};
use std::ffi::{c_char, CStr, CString};

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CdStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Malformed request: unknown statistic or method, colors out of
    /// range, or a method that does not apply to the statistic.
    InvalidArgument = 2,
    /// The brute-force sweep would exceed `max_elements`.
    BudgetExceeded = 3,
    /// The requested route cannot produce a distribution (the known
    /// erratum routes for same-color descents with r != 2).
    NotRepresentable = 4,
}

/// Opaque handle to an exact distribution.
pub struct CdDistribution {
    inner: colored_descents::DescentDistribution,
}

fn parse_stat(stat: &str, c: i64, d: i64) -> Option<DescentStatistic> {
    let c_opt = u32::try_from(c).ok();
    let d_opt = u32::try_from(d).ok();
    DescentStatistic::from_flags(stat, c_opt, d_opt).ok()
}

unsafe fn cstr<'a>(ptr: *const c_char) -> Option<&'a str> {
    if ptr.is_null() {
        return None;
    }
    CStr::from_ptr(ptr).to_str().ok()
}

fn leak_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Compute the distribution of a statistic over one colored permutation
/// group.
///
/// `stat` is one of `"pdes"`, `"ndes"`, `"pndes"`, `"des-cd"`, `"des-cc"`;
/// pass the colors through `c` and `d` (use a negative value for "unset").
/// `method` is one of `"brute"`, `"formula"`, `"blocks"`, `"recurrence"`,
/// `"series"`. `jobs = 0` means one worker; `max_elements = 0` selects the
/// default enumeration cap. On success `*out` owns the result.
///
/// # Safety
/// `stat` and `method` must be valid NUL-terminated strings and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cd_distribution_compute(
    r: u32,
    n: u32,
    stat: *const c_char,
    c: i64,
    d: i64,
    method: *const c_char,
    jobs: u32,
    max_elements: u64,
    out: *mut *mut CdDistribution,
) -> CdStatus {
    if out.is_null() {
        return CdStatus::NullArgument;
    }
    *out = std::ptr::null_mut();
    let (Some(stat_name), Some(method_name)) = (cstr(stat), cstr(method)) else {
        return CdStatus::NullArgument;
    };
    let Some(stat) = parse_stat(stat_name, c, d) else {
        return CdStatus::InvalidArgument;
    };
    let Some(method) = Method::from_name(method_name) else {
        return CdStatus::InvalidArgument;
    };
    let config = BruteConfig {
        max_elements: if max_elements == 0 {
            DEFAULT_ELEMENT_CAP
        } else {
            max_elements
        },
        jobs: jobs.max(1) as usize,
    };
    match compute_distribution(r, n, stat, method, &config) {
        Ok(dist) => {
            *out = Box::into_raw(Box::new(CdDistribution { inner: dist }));
            CdStatus::Ok
        }
        Err(ComputeError::InvalidRequest(_)) => CdStatus::InvalidArgument,
        Err(ComputeError::Budget(_)) => CdStatus::BudgetExceeded,
        Err(ComputeError::NotRepresentable(_)) => CdStatus::NotRepresentable,
    }
}

/// Free a distribution handle. Null is a no-op.
///
/// # Safety
/// `dist` must come from [`cd_distribution_compute`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cd_distribution_free(dist: *mut CdDistribution) {
    if !dist.is_null() {
        drop(Box::from_raw(dist));
    }
}

/// The full JSON form of a distribution; free with [`cd_string_free`].
/// Returns null for a null handle.
///
/// # Safety
/// `dist` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn cd_distribution_json(dist: *const CdDistribution) -> *mut c_char {
    match dist.as_ref() {
        Some(d) => leak_string(d.inner.to_json_string()),
        None => std::ptr::null_mut(),
    }
}

/// The count of elements attaining statistic value `m`, as a decimal
/// string; free with [`cd_string_free`]. Returns null for a null handle.
///
/// # Safety
/// `dist` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn cd_distribution_count(
    dist: *const CdDistribution,
    m: u64,
) -> *mut c_char {
    match dist.as_ref() {
        Some(d) => leak_string(d.inner.count(m).to_string()),
        None => std::ptr::null_mut(),
    }
}

/// Sum of all counts (the group order), as a decimal string; free with
/// [`cd_string_free`]. Returns null for a null handle.
///
/// # Safety
/// `dist` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn cd_distribution_total(dist: *const CdDistribution) -> *mut c_char {
    match dist.as_ref() {
        Some(d) => leak_string(d.inner.total().to_string()),
        None => std::ptr::null_mut(),
    }
}

/// Largest statistic value with a nonzero count, or -1 when the
/// distribution is empty or the handle is null.
///
/// # Safety
/// `dist` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn cd_distribution_max_statistic(dist: *const CdDistribution) -> i64 {
    dist.as_ref()
        .and_then(|d| d.inner.max_statistic())
        .and_then(|m| i64::try_from(m).ok())
        .unwrap_or(-1)
}

/// Free a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn cd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Exact check of the two-color binomial identity for all `n <= n_max`:
/// returns 1 when it holds everywhere, 0 otherwise.
#[no_mangle]
pub extern "C" fn cd_identity_holds(n_max: u64) -> i32 {
    i32::from(colored_descents::formulas::identity_r2_first_failure(n_max).is_none())
}

/// Order of the colored permutation group as a decimal string; free with
/// [`cd_string_free`]. Returns null when `r == 0`.
#[no_mangle]
pub extern "C" fn cd_group_order(r: u32, n: u32) -> *mut c_char {
    match colored_descents::GroupParams::new(r, n) {
        Ok(params) => leak_string(params.order().to_string()),
        Err(_) => std::ptr::null_mut(),
    }
}
