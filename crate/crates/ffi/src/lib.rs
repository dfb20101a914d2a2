//! C ABI over `blockspec`.
//!
//! Designs are opaque `BsDesign` handles owned by the caller and released
//! with `bs_design_free`. Every fallible call returns a `BsStatus`; on
//! failure `bs_last_error` describes the problem. Strings handed out by the
//! library are NUL-terminated and must be released with `bs_string_free`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use blockspec::graphs::{
    block_intersection_graph, export_dot, merged_self_graph, mutual_incidence_graph,
    s_block_intersection_graph,
};
use blockspec::paper_examples::{paper_examples, Which};
use blockspec::{construct, mutual_matrix, self_spectrum, verify_spectrum, Design, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidDesign = 4,
    MismatchedPointSets = 5,
    InvalidArgument = 6,
    CheckFailed = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BsProduct {
    None = 0,
    Mmt = 1,
    Mtm = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BsMatrixFormat {
    Csv = 0,
    Json = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BsGraphKind {
    Mutual = 0,
    MergedSelf = 1,
    Intersection = 2,
    SIntersection = 3,
}

/// Parameters `(v, b, r, k, lambda)` of a design.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BsParams {
    pub v: u64,
    pub b: u64,
    pub r: u64,
    pub k: u64,
    pub lambda: u64,
}

/// Opaque validated design.
pub struct BsDesign(Design);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> BsStatus {
    match e {
        Error::Parse(_) | Error::Io(_) => BsStatus::ParseError,
        Error::MismatchedPointSets { .. } | Error::MixedV { .. } => BsStatus::MismatchedPointSets,
        Error::Usage(_) | Error::EmptySizeSet | Error::UnknownFixture(_) => {
            BsStatus::InvalidArgument
        }
        Error::CheckFailed(_) | Error::GoldenMismatch(_) => BsStatus::CheckFailed,
        _ => BsStatus::InvalidDesign,
    }
}

struct Fail(BsStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(BsStatus::NullPointer, format!("{what} is NULL"))
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            BsStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal error: panic inside blockspec");
            BsStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(BsStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn design_arg<'a>(p: *const BsDesign, what: &str) -> Result<&'a Design, Fail> {
    p.as_ref().map(|d| &d.0).ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail(BsStatus::Internal, "output contains NUL".into()))?;
    write_out(out, c.into_raw(), "output string pointer")
}

unsafe fn write_design(out: *mut *mut BsDesign, d: Design) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output design pointer"));
    }
    out.write(Box::into_raw(Box::new(BsDesign(d))));
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next `bs_*` call on the same thread.
#[no_mangle]
pub extern "C" fn bs_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn bs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a design file (`{"v": .., "blocks": [[..], ..]}`).
#[no_mangle]
pub unsafe extern "C" fn bs_design_from_json(
    json: *const c_char,
    out: *mut *mut BsDesign,
) -> BsStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        write_design(out, Design::from_json(text)?)
    })
}

/// Builds a design from a fixture name or construction expression such as
/// `complement(fano)` or `cyclic(11,1,3,4,5,9)`.
#[no_mangle]
pub unsafe extern "C" fn bs_design_construct(
    expr: *const c_char,
    out: *mut *mut BsDesign,
) -> BsStatus {
    guard(|| {
        let expr = str_arg(expr, "expr")?;
        write_design(out, construct(expr)?)
    })
}

/// Releases a design. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn bs_design_free(d: *mut BsDesign) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

#[no_mangle]
pub unsafe extern "C" fn bs_design_params(d: *const BsDesign, out: *mut BsParams) -> BsStatus {
    guard(|| {
        let p = design_arg(d, "design")?.params();
        let params = BsParams {
            v: p.v,
            b: p.b,
            r: p.r,
            k: p.k,
            lambda: p.lambda,
        };
        write_out(out, params, "params pointer")
    })
}

/// Canonical design-file JSON.
#[no_mangle]
pub unsafe extern "C" fn bs_design_to_json(d: *const BsDesign, out: *mut *mut c_char) -> BsStatus {
    guard(|| write_string(out, design_arg(d, "design")?.to_json()))
}

/// `M(d1, d2)`, `M·Mᵀ` or `Mᵀ·M` as CSV or JSON text.
#[no_mangle]
pub unsafe extern "C" fn bs_mutual_matrix(
    d1: *const BsDesign,
    d2: *const BsDesign,
    product: BsProduct,
    format: BsMatrixFormat,
    out: *mut *mut c_char,
) -> BsStatus {
    guard(|| {
        let mim = mutual_matrix(design_arg(d1, "d1")?, design_arg(d2, "d2")?)?;
        let m = match product {
            BsProduct::None => mim.m,
            BsProduct::Mmt => mim.mmt(),
            BsProduct::Mtm => mim.mtm(),
        };
        let text = match format {
            BsMatrixFormat::Csv => m.to_csv(),
            BsMatrixFormat::Json => m.to_json(),
        };
        write_string(out, text)
    })
}

/// Full spectral report for `M(d1, d2)·M(d1, d2)ᵀ` as JSON. A report whose
/// checks fail still returns `BS_STATUS_OK`; inspect `overall`.
#[no_mangle]
pub unsafe extern "C" fn bs_verify_spectrum(
    d1: *const BsDesign,
    d2: *const BsDesign,
    out_json: *mut *mut c_char,
    overall: *mut bool,
) -> BsStatus {
    guard(|| {
        let r = verify_spectrum(design_arg(d1, "d1")?, design_arg(d2, "d2")?)?;
        if overall.is_null() {
            return Err(null("overall pointer"));
        }
        write_string(out_json, r.to_json())?;
        overall.write(r.overall);
        Ok(())
    })
}

/// Like `bs_verify_spectrum(d, d)` plus the eigendata of `M(d, d)`.
#[no_mangle]
pub unsafe extern "C" fn bs_self_spectrum(
    d: *const BsDesign,
    out_json: *mut *mut c_char,
    overall: *mut bool,
) -> BsStatus {
    guard(|| {
        let r = self_spectrum(design_arg(d, "design")?)?;
        if overall.is_null() {
            return Err(null("overall pointer"));
        }
        write_string(out_json, r.to_json())?;
        overall.write(r.overall);
        Ok(())
    })
}

/// DOT text for a block graph. `d2` is required for `BS_GRAPH_KIND_MUTUAL`
/// and ignored otherwise; `sizes` (length `n_sizes`) is the intersection-size
/// set for `BS_GRAPH_KIND_S_INTERSECTION`.
#[no_mangle]
pub unsafe extern "C" fn bs_graph_dot(
    kind: BsGraphKind,
    d1: *const BsDesign,
    d2: *const BsDesign,
    sizes: *const usize,
    n_sizes: usize,
    out: *mut *mut c_char,
) -> BsStatus {
    guard(|| {
        let a = design_arg(d1, "d1")?;
        let dot = match kind {
            BsGraphKind::Mutual => export_dot(&mutual_incidence_graph(a, design_arg(d2, "d2")?)?),
            BsGraphKind::MergedSelf => export_dot(&merged_self_graph(a)),
            BsGraphKind::Intersection => export_dot(&block_intersection_graph(a)),
            BsGraphKind::SIntersection => {
                let set: BTreeSet<usize> = if n_sizes == 0 {
                    BTreeSet::new()
                } else if sizes.is_null() {
                    return Err(null("sizes"));
                } else {
                    std::slice::from_raw_parts(sizes, n_sizes)
                        .iter()
                        .copied()
                        .collect()
                };
                export_dot(&s_block_intersection_graph(a, &set)?)
            }
        };
        write_string(out, dot)
    })
}

/// Recomputes worked example `which` (1, 2 or 3; 0 for all) and writes the
/// report text. `ok` is false when any golden value disagrees.
#[no_mangle]
pub unsafe extern "C" fn bs_paper_examples(
    which: u32,
    out_text: *mut *mut c_char,
    ok: *mut bool,
) -> BsStatus {
    guard(|| {
        let which = match which {
            0 => Which::All,
            1 => Which::One,
            2 => Which::Two,
            3 => Which::Three,
            n => return Err(Fail(BsStatus::InvalidArgument, format!("no example {n}"))),
        };
        if ok.is_null() {
            return Err(null("ok pointer"));
        }
        let report = paper_examples(which)?;
        write_string(out_text, report.text.clone())?;
        ok.write(report.ok());
        Ok(())
    })
}
