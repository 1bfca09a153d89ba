//! C interface to the sturmian-lab core.
//!
//! Every fallible call returns an [`SlStatus`]; on failure the message is
//! available from [`sl_last_error`] on the same thread. Strings handed out by
//! the library are released with [`sl_string_free`], words with
//! [`sl_word_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sturmian_lab::cf::CFExpansion;
use sturmian_lab::chain::{chain_of_stream, rep_exact_periodic_golden, GoldenChain};
use sturmian_lab::cli::{parse_chain, parse_rho, parse_slope};
use sturmian_lab::lab::mu_table;
use sturmian_lab::rep::{r_profile, rep_estimate, PROFILE_TAIL};
use sturmian_lab::words::{Rounding, WordStream};
use sturmian_lab::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Domain = 4,
    InsufficientPrefix = 5,
    BufferTooSmall = 6,
    Internal = 7,
    Panic = 8,
}

/// Opaque infinite word.
pub struct SlWord {
    cf: CFExpansion,
    stream: WordStream,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SlStatus {
    match e {
        Error::Parse(_) => SlStatus::Parse,
        Error::InsufficientPrefix { .. } | Error::PrefixTooShort { .. } | Error::PrefixCap { .. } => {
            SlStatus::InsufficientPrefix
        }
        Error::Io(_) | Error::Json(_) => SlStatus::Internal,
        _ => SlStatus::Domain,
    }
}

enum Fail {
    Status(SlStatus, String),
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SlStatus::Ok
        }
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Fail::Status(s, m))) => {
            set_error(m);
            s
        }
        Err(p) => {
            let msg = p
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| p.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {msg}"));
            SlStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail::Status(SlStatus::NullPointer, format!("{what} is null"))
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(SlStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn opt_str_arg<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Fail> {
    if p.is_null() {
        Ok(None)
    } else {
        str_arg(p, what).map(Some)
    }
}

fn out_string(s: String, out: *mut *mut c_char) -> Result<(), Fail> {
    let c = CString::new(s).map_err(|_| Fail::Status(SlStatus::Internal, "string contains nul".into()))?;
    unsafe { *out = c.into_raw() };
    Ok(())
}

unsafe fn word_mut<'a>(w: *mut SlWord) -> Result<&'a mut SlWord, Fail> {
    w.as_mut().ok_or_else(|| null("word"))
}

fn new_word(out: *mut *mut SlWord, make: impl FnOnce() -> Result<SlWord, Fail>) -> SlStatus {
    if out.is_null() {
        set_error("out is null".into());
        return SlStatus::NullPointer;
    }
    unsafe { *out = ptr::null_mut() };
    guard(|| {
        let w = make()?;
        unsafe { *out = Box::into_raw(Box::new(w)) };
        Ok(())
    })
}

/// Message for the last failed call on this thread, or null. Owned by the
/// library and valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn sl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version; static storage.
#[no_mangle]
pub extern "C" fn sl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Characteristic word of `slope` (CF literal or `quad:(a,b,c,D)`).
///
/// # Safety
/// `slope` must be a valid C string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_word_new_characteristic(slope: *const c_char, out: *mut *mut SlWord) -> SlStatus {
    new_word(out, || {
        let cf = parse_slope(str_arg(slope, "slope")?)?;
        Ok(SlWord {
            stream: WordStream::characteristic(cf.clone()),
            cf,
        })
    })
}

/// Mechanical word s_{slope,rho}; `ceil` selects the upper rounding.
///
/// # Safety
/// `slope` and `rho` must be valid C strings, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_word_new_mechanical(
    slope: *const c_char,
    rho: *const c_char,
    ceil: bool,
    out: *mut *mut SlWord,
) -> SlStatus {
    new_word(out, || {
        let cf = parse_slope(str_arg(slope, "slope")?)?;
        let rho = parse_rho(str_arg(rho, "rho")?)?;
        let rounding = if ceil { Rounding::Ceil } else { Rounding::Floor };
        Ok(SlWord {
            stream: WordStream::mechanical(cf.value()?, rho, rounding)?,
            cf,
        })
    })
}

/// Word with a given locating chain (letter literal for slope φ, or JSON).
/// `levels` levels are used; periodic letter chains can be unrolled to any depth.
///
/// # Safety
/// `slope` may be null (slope φ); `chain` must be a valid C string, `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_word_new_chain(
    slope: *const c_char,
    chain: *const c_char,
    levels: usize,
    out: *mut *mut SlWord,
) -> SlStatus {
    new_word(out, || {
        let cf = parse_slope(opt_str_arg(slope, "slope")?.unwrap_or("[0;(1)]"))?;
        let spec = parse_chain(str_arg(chain, "chain")?, &cf)?;
        let c = spec.levels(levels)?;
        Ok(SlWord {
            stream: WordStream::from_chain(cf.clone(), c),
            cf,
        })
    })
}

/// # Safety
/// `w` must be null or a word from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sl_word_free(w: *mut SlWord) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Copy the first `len` letters (bytes 0/1) into `buf` of capacity `cap`.
///
/// # Safety
/// `w` must be a live word; `buf` must hold `cap` bytes.
#[no_mangle]
pub unsafe extern "C" fn sl_word_prefix(w: *mut SlWord, len: usize, buf: *mut u8, cap: usize) -> SlStatus {
    guard(|| {
        let w = word_mut(w)?;
        if buf.is_null() {
            return Err(null("buf"));
        }
        if cap < len {
            return Err(Fail::Status(
                SlStatus::BufferTooSmall,
                format!("need {len} bytes, have {cap}"),
            ));
        }
        let p = w.stream.prefix(len)?;
        ptr::copy_nonoverlapping(p.as_ptr(), buf, len);
        Ok(())
    })
}

/// r(1..=n_max) into `r` (capacity `cap` ≥ n_max); `r[i]` holds r(i+1).
///
/// # Safety
/// `w` must be a live word; `r` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn sl_word_r_profile(w: *mut SlWord, n_max: usize, r: *mut u64, cap: usize) -> SlStatus {
    guard(|| {
        let w = word_mut(w)?;
        if r.is_null() {
            return Err(null("r"));
        }
        if cap < n_max {
            return Err(Fail::Status(
                SlStatus::BufferTooSmall,
                format!("need {n_max} slots, have {cap}"),
            ));
        }
        let prof = r_profile(&mut w.stream, n_max)?;
        for (i, v) in prof.r[1..=n_max].iter().enumerate() {
            *r.add(i) = *v as u64;
        }
        Ok(())
    })
}

/// Estimate rep from r(n) for n ≤ `n_max`, discarding the first `tail`
/// fraction of Λ ratios (a negative `tail` selects the default 0.75).
///
/// # Safety
/// `w` must be a live word; `value` valid; `error_bar` may be null.
#[no_mangle]
pub unsafe extern "C" fn sl_word_rep_estimate(
    w: *mut SlWord,
    n_max: usize,
    tail: f64,
    value: *mut f64,
    error_bar: *mut f64,
) -> SlStatus {
    guard(|| {
        let w = word_mut(w)?;
        if value.is_null() {
            return Err(null("value"));
        }
        let prof = r_profile(&mut w.stream, n_max)?;
        let est = rep_estimate(&prof, if tail < 0.0 { PROFILE_TAIL } else { tail })?;
        *value = est.to_f64();
        if !error_bar.is_null() {
            *error_bar = est.error_bar;
        }
        Ok(())
    })
}

/// Locating chain of the word over `levels` levels, as JSON.
///
/// # Safety
/// `w` must be a live word; `out` valid. Free the result with [`sl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sl_word_chain_json(w: *mut SlWord, levels: usize, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let w = word_mut(w)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let cf = w.cf.clone();
        let (chain, _) = chain_of_stream(&mut w.stream, &cf, levels)?;
        out_string(chain.to_json(), out)
    })
}

/// Exact rep of an eventually periodic slope-φ letter chain such as `(b2a2)`.
/// `quad` receives `quad:(a,b,c,D)` and may be null.
///
/// # Safety
/// `chain` must be a valid C string; `value` valid; `quad` null or valid.
#[no_mangle]
pub unsafe extern "C" fn sl_rep_exact(chain: *const c_char, value: *mut f64, quad: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let g: GoldenChain = str_arg(chain, "chain")?.parse()?;
        if value.is_null() {
            return Err(null("value"));
        }
        let r = rep_exact_periodic_golden(&g)?;
        *value = r.to_f64();
        if !quad.is_null() {
            out_string(r.value.to_string(), quad)?;
        }
        Ok(())
    })
}

/// The table of distinguished spectrum values as JSON.
///
/// # Safety
/// `out` must be valid. Free the result with [`sl_string_free`].
#[no_mangle]
pub unsafe extern "C" fn sl_mu_table_json(out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        out_string(serde_json::to_string(&mu_table()).map_err(Error::from)?, out)
    })
}
