//! C interface to `lucas_magic`.
//!
//! Matrices live behind an opaque [`LmMatrix`] handle released with
//! [`lm_matrix_free`]. Every fallible call returns an [`LmStatus`]; on failure
//! [`lm_last_error_message`] describes the last error on the calling thread.
//! Strings handed out by the library are released with [`lm_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use lucas_magic::algebra::commutes;
use lucas_magic::construct::{lucas, FriersonParams, LucasParams};
use lucas_magic::enumerate::census;
use lucas_magic::format::{parse_matrix, to_grid};
use lucas_magic::spectra::spectrum_report;
use lucas_magic::verify::verify;
use lucas_magic::{Error, SquareMatrix};

/// Opaque square matrix with arbitrary-precision entries.
pub struct LmMatrix {
    inner: SquareMatrix,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LmStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    OutOfRange = 4,
    /// The value does not fit the C integer type requested.
    Overflow = 5,
    OrderMismatch = 6,
    Degenerate = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LmVerification {
    pub order: usize,
    pub is_magic: bool,
    pub is_regular: bool,
    pub is_natural: bool,
    pub fnc_pass: bool,
    pub exact_rank: usize,
    /// Parameters of a compound Lucas square reproduce the matrix.
    pub is_family: bool,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LmCensus {
    pub level: usize,
    pub order: usize,
    pub mu: u64,
    pub lucas_fundamentals: u64,
    pub frierson_fundamentals: u64,
    pub rank: usize,
    pub sv_classes: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("nul bytes removed"));
}

fn status_of(e: &Error) -> LmStatus {
    match e {
        Error::Parse { .. } | Error::Json(_) => LmStatus::Parse,
        Error::OrderMismatch { .. } | Error::ElementCount { .. } => LmStatus::OrderMismatch,
        Error::Degenerate(_) | Error::Singular(_) => LmStatus::Degenerate,
        Error::Io(_) => LmStatus::Internal,
        _ => LmStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into a status plus message.
fn guard(f: impl FnOnce() -> Result<(), (LmStatus, String)>) -> LmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            LmStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            LmStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (LmStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (LmStatus, String) {
    (LmStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `s` must be null or a valid nul-terminated string.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (LmStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (LmStatus::Parse, format!("{what} is not UTF-8")))
}

/// # Safety
/// `m` must be null or a handle from this library that was not freed.
unsafe fn read_matrix<'a>(m: *const LmMatrix, what: &str) -> Result<&'a SquareMatrix, (LmStatus, String)> {
    m.as_ref().map(|h| &h.inner).ok_or_else(|| null(what))
}

fn into_c_string(s: String) -> Result<*mut c_char, (LmStatus, String)> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| (LmStatus::Internal, "nul byte in output".into()))
}

fn handle(m: SquareMatrix) -> *mut LmMatrix {
    Box::into_raw(Box::new(LmMatrix { inner: m }))
}

/// Builds a compound Lucas square from `"c,v,y;c,v,y;..."`, innermost level first.
///
/// # Safety
/// `params` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_lucas_new(params: *const c_char, out: *mut *mut LmMatrix) -> LmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p: LucasParams = read_str(params, "params")?.parse().map_err(lib_err)?;
        *out = handle(lucas(&p));
        Ok(())
    })
}

/// Builds a compound Frierson square from `"v,y;v,y;..."`.
///
/// # Safety
/// `params` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_frierson_new(params: *const c_char, out: *mut *mut LmMatrix) -> LmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p: FriersonParams = read_str(params, "params")?.parse().map_err(lib_err)?;
        *out = handle(lucas(&p.to_lucas()));
        Ok(())
    })
}

/// Parses a whitespace grid or the JSON matrix format.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_matrix_parse(text: *const c_char, out: *mut *mut LmMatrix) -> LmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let m = parse_matrix(read_str(text, "text")?).map_err(lib_err)?;
        *out = handle(m);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `m` must be null or a handle from this library not already freed.
#[no_mangle]
pub unsafe extern "C" fn lm_matrix_free(m: *mut LmMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Order of the matrix, 0 for null.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn lm_matrix_order(m: *const LmMatrix) -> usize {
    m.as_ref().map_or(0, |h| h.inner.order())
}

/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_matrix_get(m: *const LmMatrix, row: usize, col: usize, out: *mut i64) -> LmStatus {
    guard(|| {
        let m = read_matrix(m, "matrix")?;
        if out.is_null() {
            return Err(null("out"));
        }
        if row >= m.order() || col >= m.order() {
            return Err((LmStatus::OutOfRange, format!("({row}, {col}) outside order {}", m.order())));
        }
        let v = m.get(row, col);
        *out = i64::try_from(v).map_err(|_| (LmStatus::Overflow, format!("{v} does not fit in int64")))?;
        Ok(())
    })
}

/// Grid text, one row per line. Free with [`lm_string_free`].
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_matrix_to_grid(m: *const LmMatrix, out: *mut *mut c_char) -> LmStatus {
    guard(|| {
        let m = read_matrix(m, "matrix")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = into_c_string(to_grid(m))?;
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not already freed.
#[no_mangle]
pub unsafe extern "C" fn lm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_verify(m: *const LmMatrix, out: *mut LmVerification) -> LmStatus {
    guard(|| {
        let m = read_matrix(m, "matrix")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let r = verify(m);
        *out = LmVerification {
            order: r.order,
            is_magic: r.is_magic,
            is_regular: r.is_regular,
            is_natural: r.is_natural,
            fnc_pass: r.fnc_pass,
            exact_rank: r.exact_rank,
            is_family: r.lucas_params.is_some(),
        };
        Ok(())
    })
}

/// The full verification report as JSON. Free with [`lm_string_free`].
///
/// # Safety
/// `m` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_verify_json(m: *const LmMatrix, out: *mut *mut c_char) -> LmStatus {
    guard(|| {
        let m = read_matrix(m, "matrix")?;
        if out.is_null() {
            return Err(null("out"));
        }
        let text = serde_json::to_string(&verify(m)).map_err(|e| (LmStatus::Internal, e.to_string()))?;
        *out = into_c_string(text)?;
        Ok(())
    })
}

/// Spectrum report of the square with Lucas parameters `params`, as JSON.
///
/// # Safety
/// `params` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_spectrum_json(params: *const c_char, out: *mut *mut c_char) -> LmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let p: LucasParams = read_str(params, "params")?.parse().map_err(lib_err)?;
        let text = serde_json::to_string(&spectrum_report(&p)).map_err(|e| (LmStatus::Internal, e.to_string()))?;
        *out = into_c_string(text)?;
        Ok(())
    })
}

/// Whether `a·b = b·a` exactly.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_commutes(a: *const LmMatrix, b: *const LmMatrix, out: *mut bool) -> LmStatus {
    guard(|| {
        let (a, b) = (read_matrix(a, "a")?, read_matrix(b, "b")?);
        if out.is_null() {
            return Err(null("out"));
        }
        *out = commutes(a, b).map_err(lib_err)?;
        Ok(())
    })
}

/// Per-level constants. Levels whose counts exceed 64 bits give `Overflow`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn lm_census(level: usize, out: *mut LmCensus) -> LmStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let r = census(level).map_err(lib_err)?;
        let fit = |x: &lucas_magic::ExactInt| {
            u64::try_from(x).map_err(|_| (LmStatus::Overflow, format!("{x} does not fit in uint64")))
        };
        *out = LmCensus {
            level: r.level,
            order: r.order,
            mu: fit(&r.mu)?,
            lucas_fundamentals: fit(&r.lucas_fundamentals)?,
            frierson_fundamentals: fit(&r.frierson_fundamentals)?,
            rank: r.rank,
            sv_classes: fit(&r.sv_classes)?,
        };
        Ok(())
    })
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn lm_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[cfg(test)]
mod tests {
    use std::ptr;

    use super::*;

    #[test]
    fn error_message_resets() {
        let mut m = ptr::null_mut();
        let bad = CString::new("1,2").unwrap();
        assert_eq!(unsafe { lm_lucas_new(bad.as_ptr(), &mut m) }, LmStatus::InvalidArgument);
        let msg = unsafe { CStr::from_ptr(lm_last_error_message()) };
        assert!(!msg.to_bytes().is_empty());
        let good = CString::new("4,3,1").unwrap();
        assert_eq!(unsafe { lm_lucas_new(good.as_ptr(), &mut m) }, LmStatus::Ok);
        assert!(unsafe { CStr::from_ptr(lm_last_error_message()) }.to_bytes().is_empty());
        unsafe { lm_matrix_free(m) };
    }

    #[test]
    fn status_mapping() {
        assert_eq!(status_of(&Error::Singular("x".into())), LmStatus::Degenerate);
        assert_eq!(status_of(&Error::Parse { line: 1, message: "x".into() }), LmStatus::Parse);
        assert_eq!(status_of(&Error::EmptyMatrix), LmStatus::InvalidArgument);
    }
}
