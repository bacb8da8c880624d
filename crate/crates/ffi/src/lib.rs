//! C ABI over the `entwine` library.
//!
//! Structures enter as `entwine/1` JSON and stay behind an opaque
//! [`EntwineDocument`] handle; reports leave as JSON strings owned by the
//! caller and released with [`entwine_string_free`]. Every entry point
//! returns an [`EntwineStatus`]; the message of the most recent failure on
//! the calling thread is available from [`entwine_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use entwine::catalog::{make_example, Params};
use entwine::exactla::Field;
use entwine::hochschild::cohomology_dim;
use entwine::io::{CertificateDoc, Document, Parsed};
use entwine::report::{coextension_report, extension_report, hochschild_report, solve, CheckSummary, SolveKind};
use entwine::Error;

/// Outcome of a call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntwineStatus {
    /// The call succeeded and the property holds.
    Ok = 0,
    /// The call succeeded and the property fails or the system is infeasible.
    Fails = 1,
    InvalidInput = 2,
    NullPointer = 3,
    Internal = 4,
    Panic = 5,
}

/// Parsed structure file.
pub struct EntwineDocument {
    inner: Parsed,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> EntwineStatus {
    set_error(&e.to_string());
    match e {
        Error::Input(_) => EntwineStatus::InvalidInput,
        Error::Inconsistency(_) => EntwineStatus::Internal,
        Error::Domain(_) | Error::Galois(_) | Error::Precondition(_) => EntwineStatus::Fails,
    }
}

fn guard(f: impl FnOnce() -> Result<EntwineStatus, Error>) -> EntwineStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => s,
        Ok(Err(e)) => status_of(&e),
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&format!("panic: {msg}"));
            EntwineStatus::Panic
        }
    }
}

/// # Safety
/// `s` is a non-null nul-terminated string valid for reads.
unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Error> {
    // SAFETY: non-null and nul-terminated by the caller's contract.
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| Error::Input("string is not UTF-8".into()))
}

/// # Safety
/// `out` is null or valid for writes.
unsafe fn put_string(out: *mut *mut c_char, s: String) {
    if !out.is_null() {
        let c = CString::new(s).expect("JSON has no interior nul");
        // SAFETY: non-null and writable by the caller's contract.
        unsafe { *out = c.into_raw() };
    }
}

fn verdict(ok: bool) -> EntwineStatus {
    if ok {
        EntwineStatus::Ok
    } else {
        EntwineStatus::Fails
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("reports serialise")
}

macro_rules! nonnull {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            set_error("null pointer");
            return EntwineStatus::NullPointer;
        }
    };
}

/// Parses a structure file. On success `*out` owns a handle to release with
/// [`entwine_document_free`].
///
/// # Safety
/// `json` is a nul-terminated string; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn entwine_document_parse(json: *const c_char, out: *mut *mut EntwineDocument) -> EntwineStatus {
    nonnull!(json, out);
    guard(|| {
        // SAFETY: checked non-null above.
        let inner = Parsed::from_json(unsafe { text(json) }?)?;
        let handle = Box::into_raw(Box::new(EntwineDocument { inner }));
        // SAFETY: checked non-null above.
        unsafe { *out = handle };
        Ok(EntwineStatus::Ok)
    })
}

/// # Safety
/// `doc` is null or a handle from [`entwine_document_parse`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn entwine_document_free(doc: *mut EntwineDocument) {
    if !doc.is_null() {
        // SAFETY: the handle was produced by `Box::into_raw`.
        drop(unsafe { Box::from_raw(doc) });
    }
}

/// Verifies every structure in the document; `Ok` iff all checks pass.
///
/// # Safety
/// `doc` is a live handle; `report` is null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn entwine_check(doc: *const EntwineDocument, report: *mut *mut c_char) -> EntwineStatus {
    nonnull!(doc);
    guard(|| {
        // SAFETY: live handle by contract.
        let d = unsafe { &(*doc).inner };
        let summary = CheckSummary { reports: d.check() };
        // SAFETY: null or writable by contract.
        unsafe { put_string(report, json(&summary)) };
        Ok(verdict(summary.passed()))
    })
}

/// Solves for a witness; `kind` is one of `integral`, `cointegral`,
/// `integral-map`, `cointegral-map`, `lambda`, `frakz`. `Ok` iff feasible.
///
/// # Safety
/// `doc` is a live handle; `kind` is a nul-terminated string; `report` is
/// null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn entwine_solve(
    doc: *const EntwineDocument,
    kind: *const c_char,
    normalized: bool,
    report: *mut *mut c_char,
) -> EntwineStatus {
    nonnull!(doc, kind);
    guard(|| {
        // SAFETY: checked non-null above.
        let (d, kind) = unsafe { (&(*doc).inner, text(kind)?) };
        let r = solve(d, SolveKind::parse(kind)?, normalized)?;
        // SAFETY: null or writable by contract.
        unsafe { put_string(report, json(&r)) };
        Ok(verdict(r.feasible))
    })
}

/// Full report on the extension given by `coactionA`; `Ok` iff separable.
///
/// # Safety
/// `doc` is a live handle; `report` is null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn entwine_extension_report(
    doc: *const EntwineDocument,
    report: *mut *mut c_char,
) -> EntwineStatus {
    nonnull!(doc);
    guard(|| {
        // SAFETY: live handle by contract.
        let g = unsafe { &(*doc).inner }.galois()?;
        let r = extension_report(&g)?;
        // SAFETY: null or writable by contract.
        unsafe { put_string(report, json(&r)) };
        Ok(verdict(r.passed()))
    })
}

/// Report on the coextension given by `actionC`; `Ok` iff coseparable.
///
/// # Safety
/// `doc` is a live handle; `report` is null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn entwine_coextension_report(
    doc: *const EntwineDocument,
    report: *mut *mut c_char,
) -> EntwineStatus {
    nonnull!(doc);
    guard(|| {
        // SAFETY: live handle by contract.
        let x = unsafe { &(*doc).inner }.coextension()?;
        let r = coextension_report(&x)?;
        // SAFETY: null or writable by contract.
        unsafe { put_string(report, json(&r)) };
        Ok(verdict(r.passed()))
    })
}

/// `dim H^n(A, B, M)` with `B` and `M` taken from the document as the CLI
/// does. `report`, when non-null, receives the full JSON report.
///
/// # Safety
/// `doc` is a live handle; `dim` is valid for writes; `report` is null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn entwine_hochschild(
    doc: *const EntwineDocument,
    n: u32,
    dim: *mut usize,
    report: *mut *mut c_char,
) -> EntwineStatus {
    nonnull!(doc, dim);
    guard(|| {
        // SAFETY: live handle by contract.
        let d = unsafe { &(*doc).inner };
        let r = hochschild_report(d, n as usize)?;
        // SAFETY: checked non-null above; `report` null or writable.
        unsafe {
            *dim = r.dim;
            put_string(report, json(&r));
        }
        Ok(EntwineStatus::Ok)
    })
}

/// `dim H^1` of the regular bimodule relative to the coinvariants, or to
/// the scalars when the document has no `coactionA`.
///
/// # Safety
/// `doc` is a live handle; `dim` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn entwine_h1_regular(doc: *const EntwineDocument, dim: *mut usize) -> EntwineStatus {
    nonnull!(doc, dim);
    guard(|| {
        // SAFETY: live handle by contract.
        let d = unsafe { &(*doc).inner };
        let alg = d.algebra()?;
        let b = d.base_subalgebra()?;
        let h = cohomology_dim(alg, &b, &entwine::hochschild::Bimodule::regular(alg), 1)?;
        // SAFETY: checked non-null above.
        unsafe { *dim = h.dim };
        Ok(EntwineStatus::Ok)
    })
}

/// Re-verifies a certificate file against the document; `Ok` iff it holds.
///
/// # Safety
/// `doc` is a live handle; `certificate` is a nul-terminated string;
/// `report` is null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn entwine_verify_certificate(
    doc: *const EntwineDocument,
    certificate: *const c_char,
    report: *mut *mut c_char,
) -> EntwineStatus {
    nonnull!(doc, certificate);
    guard(|| {
        // SAFETY: checked non-null above.
        let (d, cert) = unsafe { (&(*doc).inner, text(certificate)?) };
        let cert = CertificateDoc::from_json(cert)?;
        if cert.field.to_field()? != d.field {
            return Err(Error::Input("certificate and structures use different fields".into()));
        }
        let r = cert.certificate.verify(d)?;
        // SAFETY: null or writable by contract.
        unsafe { put_string(report, json(&r)) };
        Ok(verdict(r.passed()))
    })
}

/// Writes the named catalog example as an `entwine/1` document. `field` is
/// `Q` or `F<p>`; `d` and `m` are ignored when zero.
///
/// # Safety
/// `name` and `field` are nul-terminated strings; `out` is valid for writes.
#[no_mangle]
pub unsafe extern "C" fn entwine_catalog(
    name: *const c_char,
    field: *const c_char,
    n: u32,
    d: u32,
    m: u32,
    out: *mut *mut c_char,
) -> EntwineStatus {
    nonnull!(name, field, out);
    guard(|| {
        // SAFETY: checked non-null above.
        let (name, field) = unsafe { (text(name)?, text(field)?) };
        let field: Field = field.parse()?;
        let params = Params {
            field,
            n: n as usize,
            d: (d > 0).then_some(d as usize),
            m: (m > 0).then_some(m as usize),
        };
        let entry = make_example(name, &params)?;
        let doc = Document::from_structures(field, &entry.payload);
        // SAFETY: checked non-null above.
        unsafe { put_string(out, doc.to_json()) };
        Ok(EntwineStatus::Ok)
    })
}

/// Releases a string returned through an out-parameter.
///
/// # Safety
/// `s` is null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn entwine_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by `CString::into_raw`.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message of the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn entwine_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn entwine_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version has an interior nul"),
    };
    VERSION.as_ptr()
}
