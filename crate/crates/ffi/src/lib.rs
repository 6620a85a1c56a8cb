//! C bindings for the compression library.
//!
//! Conventions, which also appear in the generated header:
//!
//! - Every function returns an [`RvcStatus`]. `RVC_OK` means the operation
//!   completed and all out-parameters were written.
//! - `rvc_compress` additionally writes its out-parameters for the degraded
//!   statuses `RVC_ERR_FALLBACK` and `RVC_ERR_NOT_EQUIVALENT`, so callers
//!   can inspect what was produced.
//! - Strings handed out through `char **` out-parameters are heap-allocated
//!   and must be released with [`rvc_string_free`]. Instances are opaque
//!   handles released with [`rvc_instance_free`].
//! - [`rvc_last_error`] returns a thread-local message describing the most
//!   recent failure on the calling thread; the pointer stays valid until the
//!   next library call on that thread.
//!
//! Panics never unwind across the boundary: every entry point catches them
//! and reports `RVC_ERR_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_rational::BigRational;

use rvc_core::graph::parse_dimacs;
use rvc_core::instance::oracle::{decide_bruteforce, ORACLE_LIMIT};
use rvc_core::instance::{parse_instance, serialize_instance, stats_text};
use rvc_core::pipeline::{compress, verify_equivalence, CoverChoice, PipelineConfig};
use rvc_core::rank_reduction::Mode;
use rvc_core::Error;

/// Opaque handle to a rank vertex cover instance.
pub struct RvcInstance {
    inner: rvc_core::instance::RvcInstance,
}

/// Result codes. The nonzero values up to 4 match the `rvc` CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RvcStatus {
    RvcOk = 0,
    /// Malformed input, bad options, or any other hard failure; see
    /// `rvc_last_error`.
    RvcErrInput = 1,
    /// Compression fell back to a constant instance instead of reducing.
    RvcErrFallback = 2,
    /// A brute-force check was requested on an instance above the oracle
    /// size limit.
    RvcErrOracleLimit = 3,
    /// Verification ran and the two instances disagree.
    RvcErrNotEquivalent = 4,
    RvcErrNullPointer = 5,
    RvcErrUtf8 = 6,
    RvcErrPanic = 7,
}

/// Options for `rvc_compress`. Obtain defaults from
/// `rvc_compress_options_default` and override fields as needed.
#[repr(C)]
pub struct RvcCompressOptions {
    /// Slack above the maximum matching size; the cover budget is mu + k.
    pub k: u64,
    /// Seed for the deterministic random stream.
    pub seed: u64,
    /// Nonzero selects faithful (rational-coefficient) mode; zero the fast
    /// single-prime mode.
    pub faithful: c_int,
    /// Nonzero re-checks input/output equivalence with the brute-force
    /// oracle; failures surface as RVC_ERR_NOT_EQUIVALENT.
    pub verify: c_int,
    /// Nonzero disables the small-instance decision shortcut.
    pub no_shortcut: c_int,
    /// Error budget as a fraction string such as "1/20"; NULL keeps the
    /// default of 1/20.
    pub epsilon: *const c_char,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let clean = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(clean).unwrap_or_default();
    });
}

fn status_for(e: &Error) -> RvcStatus {
    set_error(&e.to_string());
    match e {
        Error::OracleLimit { .. } => RvcStatus::RvcErrOracleLimit,
        _ => RvcStatus::RvcErrInput,
    }
}

fn guarded<F: FnOnce() -> RvcStatus>(f: F) -> RvcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(&format!("internal panic: {msg}"));
            RvcStatus::RvcErrPanic
        }
    }
}

/// Read a required C string argument; sets the thread error on failure.
unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, RvcStatus> {
    if p.is_null() {
        set_error(&format!("{what} must not be NULL"));
        return Err(RvcStatus::RvcErrNullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        RvcStatus::RvcErrUtf8
    })
}

fn require<T>(p: *mut T, what: &str) -> Result<(), RvcStatus> {
    if p.is_null() {
        set_error(&format!("{what} must not be NULL"));
        Err(RvcStatus::RvcErrNullPointer)
    } else {
        Ok(())
    }
}

fn into_c_string(text: String) -> Result<*mut c_char, RvcStatus> {
    match CString::new(text) {
        Ok(s) => Ok(s.into_raw()),
        Err(_) => {
            set_error("output text contains an interior NUL byte");
            Err(RvcStatus::RvcErrInput)
        }
    }
}

fn handle(inner: rvc_core::instance::RvcInstance) -> *mut RvcInstance {
    Box::into_raw(Box::new(RvcInstance { inner }))
}

/// Default compression options: k = 0, seed = 0, fast mode, no verification,
/// shortcut enabled, epsilon 1/20.
#[no_mangle]
pub extern "C" fn rvc_compress_options_default() -> RvcCompressOptions {
    RvcCompressOptions {
        k: 0,
        seed: 0,
        faithful: 0,
        verify: 0,
        no_shortcut: 0,
        epsilon: ptr::null(),
    }
}

/// Compress a graph in DIMACS edge format into a rank vertex cover
/// instance. On success `*out` holds the new instance and, when
/// `report_out` is non-NULL, `*report_out` holds the textual run report.
/// Both are also written for the degraded statuses RVC_ERR_FALLBACK and
/// RVC_ERR_NOT_EQUIVALENT.
///
/// # Safety
/// `dimacs` and `options.epsilon` (when non-NULL) must point to NUL
/// terminated strings; `out` and `report_out` must be valid to write.
#[no_mangle]
pub unsafe extern "C" fn rvc_compress(
    dimacs: *const c_char,
    options: *const RvcCompressOptions,
    out: *mut *mut RvcInstance,
    report_out: *mut *mut c_char,
) -> RvcStatus {
    guarded(|| {
        let text = match read_str(dimacs, "dimacs") {
            Ok(t) => t,
            Err(s) => return s,
        };
        if options.is_null() {
            set_error("options must not be NULL");
            return RvcStatus::RvcErrNullPointer;
        }
        if let Err(s) = require(out, "out") {
            return s;
        }
        let opts = &*options;

        let graph = match parse_dimacs(text) {
            Ok(g) => g,
            Err(e) => return status_for(&e),
        };
        let mut config = PipelineConfig::new(opts.seed);
        config.mode = if opts.faithful != 0 {
            Mode::Faithful
        } else {
            Mode::Fast
        };
        config.cover = CoverChoice::Exact;
        config.oracle_verify = opts.verify != 0;
        config.use_shortcut = opts.no_shortcut == 0;
        if !opts.epsilon.is_null() {
            let eps = match read_str(opts.epsilon, "epsilon") {
                Ok(t) => t,
                Err(s) => return s,
            };
            config.epsilon = match eps.parse::<BigRational>() {
                Ok(v) => v,
                Err(_) => {
                    set_error(&format!("epsilon must be a fraction like 1/20, got `{eps}`"));
                    return RvcStatus::RvcErrInput;
                }
            };
        }

        let (inst, report) = match compress(&graph, opts.k, &config) {
            Ok(v) => v,
            Err(e) => return status_for(&e),
        };
        let status = if report.fallback {
            set_error("compression fell back to a constant instance");
            RvcStatus::RvcErrFallback
        } else if report.verified == Some(false) {
            set_error("verification found the output not equivalent to the input");
            RvcStatus::RvcErrNotEquivalent
        } else {
            RvcStatus::RvcOk
        };
        if !report_out.is_null() {
            match into_c_string(report.to_text()) {
                Ok(p) => *report_out = p,
                Err(s) => return s,
            }
        }
        *out = handle(inst);
        status
    })
}

/// Parse an instance from its RVC1 text serialization.
///
/// # Safety
/// `text` must be NUL terminated; `out` must be valid to write.
#[no_mangle]
pub unsafe extern "C" fn rvc_instance_from_text(
    text: *const c_char,
    out: *mut *mut RvcInstance,
) -> RvcStatus {
    guarded(|| {
        let text = match read_str(text, "text") {
            Ok(t) => t,
            Err(s) => return s,
        };
        if let Err(s) = require(out, "out") {
            return s;
        }
        match parse_instance(text) {
            Ok(inst) => {
                *out = handle(inst);
                RvcStatus::RvcOk
            }
            Err(e) => status_for(&e),
        }
    })
}

/// Serialize an instance to RVC1 text; round-trips byte for byte through
/// `rvc_instance_from_text`.
///
/// # Safety
/// `inst` must be a live handle; `out` must be valid to write.
#[no_mangle]
pub unsafe extern "C" fn rvc_instance_to_text(
    inst: *const RvcInstance,
    out: *mut *mut c_char,
) -> RvcStatus {
    guarded(|| {
        if inst.is_null() {
            set_error("inst must not be NULL");
            return RvcStatus::RvcErrNullPointer;
        }
        if let Err(s) = require(out, "out") {
            return s;
        }
        match into_c_string(serialize_instance(&(*inst).inner)) {
            Ok(p) => {
                *out = p;
                RvcStatus::RvcOk
            }
            Err(s) => s,
        }
    })
}

/// Key=value statistics block for an instance, same layout as `rvc stats`.
///
/// # Safety
/// `inst` must be a live handle; `out` must be valid to write.
#[no_mangle]
pub unsafe extern "C" fn rvc_instance_stats(
    inst: *const RvcInstance,
    out: *mut *mut c_char,
) -> RvcStatus {
    guarded(|| {
        if inst.is_null() {
            set_error("inst must not be NULL");
            return RvcStatus::RvcErrNullPointer;
        }
        if let Err(s) = require(out, "out") {
            return s;
        }
        let text = match stats_text(&(*inst).inner) {
            Ok(t) => t,
            Err(e) => return status_for(&e),
        };
        match into_c_string(text) {
            Ok(p) => {
                *out = p;
                RvcStatus::RvcOk
            }
            Err(s) => s,
        }
    })
}

/// Decide the instance by brute force. Writes 1 for YES, 0 for NO. Only
/// instances with at most 16 elements are decidable; larger ones report
/// RVC_ERR_ORACLE_LIMIT.
///
/// # Safety
/// `inst` must be a live handle; `out_yes` must be valid to write.
#[no_mangle]
pub unsafe extern "C" fn rvc_instance_decide(
    inst: *const RvcInstance,
    out_yes: *mut c_int,
) -> RvcStatus {
    guarded(|| {
        if inst.is_null() {
            set_error("inst must not be NULL");
            return RvcStatus::RvcErrNullPointer;
        }
        if let Err(s) = require(out_yes, "out_yes") {
            return s;
        }
        match decide_bruteforce(&(*inst).inner) {
            Ok(yes) => {
                *out_yes = yes as c_int;
                RvcStatus::RvcOk
            }
            Err(e) => status_for(&e),
        }
    })
}

/// Check two instances for equivalence by brute force, writing 1 when both
/// decide the same way and 0 otherwise. Subject to the same size limit as
/// `rvc_instance_decide`.
///
/// # Safety
/// `a` and `b` must be live handles; `out_equivalent` must be valid to
/// write.
#[no_mangle]
pub unsafe extern "C" fn rvc_verify(
    a: *const RvcInstance,
    b: *const RvcInstance,
    out_equivalent: *mut c_int,
) -> RvcStatus {
    guarded(|| {
        if a.is_null() || b.is_null() {
            set_error("instance handles must not be NULL");
            return RvcStatus::RvcErrNullPointer;
        }
        if let Err(s) = require(out_equivalent, "out_equivalent") {
            return s;
        }
        match verify_equivalence(&(*a).inner, &(*b).inner, ORACLE_LIMIT) {
            Ok(eq) => {
                *out_equivalent = eq as c_int;
                RvcStatus::RvcOk
            }
            Err(e) => status_for(&e),
        }
    })
}

/// Release an instance handle. NULL is a no-op.
///
/// # Safety
/// `inst` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn rvc_instance_free(inst: *mut RvcInstance) {
    if !inst.is_null() {
        drop(Box::from_raw(inst));
    }
}

/// Release a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must come from this library and not have been freed already.
#[no_mangle]
pub unsafe extern "C" fn rvc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the most recent failure on the calling thread, empty if none.
/// The pointer stays valid until the next library call on this thread.
#[no_mangle]
pub extern "C" fn rvc_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}
