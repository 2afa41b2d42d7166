//! C ABI over the monitor-synthesis library.
//!
//! Handles are opaque pointers owned by the caller and released with the
//! matching `_free` function. Functions report a status code; when a
//! call fails, [`ltlmon_last_error`] returns a thread-local message that
//! stays valid until the next failing call on the same thread.
//!
//! A session borrows its monitor: the monitor handle must stay alive,
//! and must not be freed, while any session opened on it exists.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ltlmon::monitor::RenderFormat;
use ltlmon::monitorability::{
    monitorability2, monitorability4, weak_monitorability2, Monitorability4,
};
use ltlmon::runtime::{open_session, parse_trace, HandlerPolicy, Session, SessionStatus};
use ltlmon::{Error, Monitor, Verdict6};

/// Synthesized six-valued monitor (opaque).
pub struct LtlmonMonitor {
    inner: Monitor,
}

/// Online monitor session (opaque). Borrows the monitor it was opened
/// on.
pub struct LtlmonSession {
    inner: Session<'static>,
}

/// Result code of an FFI call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LtlmonStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The formula (or trace) failed to parse.
    ParseError = 3,
    /// An event used propositions unknown to the monitor.
    UnknownEvent = 4,
    /// The session is not in a steppable state.
    ApiMisuse = 5,
    /// Internal invariant violation.
    InternalError = 6,
}

/// Four-valued monitorability verdict.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LtlmonMonitorability {
    Positive = 0,
    Negative = 1,
    Neutral = 2,
    Non = 3,
}

/// Six-valued state/word verdict.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LtlmonVerdict {
    True = 0,
    False = 1,
    PossiblyTrue = 2,
    PossiblyFalse = 3,
    PossiblyConclusive = 4,
    Inconclusive = 5,
}

/// Session lifecycle state.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LtlmonSessionStatus {
    Running = 0,
    ConcludedTrue = 1,
    ConcludedFalse = 2,
    Removable = 3,
}

/// Monitor serialization format.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LtlmonFormat {
    Dot = 0,
    Json = 1,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " "))
        .unwrap_or_else(|_| CString::new("error").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn fail(status: LtlmonStatus, message: String) -> LtlmonStatus {
    set_error(message);
    status
}

fn status_of(e: &Error) -> LtlmonStatus {
    match e {
        Error::Parse(_) | Error::TooManyPropositions { .. } => LtlmonStatus::ParseError,
        Error::UnknownPropositions { .. }
        | Error::UnknownSymbol { .. }
        | Error::UnknownState(_) => LtlmonStatus::UnknownEvent,
        Error::ApiMisuse(_) => LtlmonStatus::ApiMisuse,
        Error::Internal(_) | Error::Io(_) => LtlmonStatus::InternalError,
    }
}

unsafe fn utf8_arg<'a>(ptr: *const c_char) -> Result<&'a str, LtlmonStatus> {
    if ptr.is_null() {
        set_error("null string argument".into());
        return Err(LtlmonStatus::NullArgument);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8".into());
        LtlmonStatus::InvalidUtf8
    })
}

/// Message describing the most recent failure on this thread, or null.
/// The pointer stays valid until the next failing call on this thread.
#[no_mangle]
pub extern "C" fn ltlmon_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null(), |message| message.as_ptr())
    })
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ltlmon_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Parses `formula` and synthesizes its monitor into `*out`.
///
/// # Safety
/// `formula` must be a valid NUL-terminated string; `out` must be a
/// valid location to store the handle. On success the caller owns the
/// handle and must release it with [`ltlmon_monitor_free`].
#[no_mangle]
pub unsafe extern "C" fn ltlmon_monitor_build(
    formula: *const c_char,
    out: *mut *mut LtlmonMonitor,
) -> LtlmonStatus {
    if out.is_null() {
        return fail(LtlmonStatus::NullArgument, "null output argument".into());
    }
    let text = match utf8_arg(formula) {
        Ok(t) => t,
        Err(status) => return status,
    };
    match Monitor::parse_and_build(text) {
        Ok(monitor) => {
            *out = Box::into_raw(Box::new(LtlmonMonitor { inner: monitor }));
            LtlmonStatus::Ok
        }
        Err(e) => fail(status_of(&e), e.to_string()),
    }
}

/// Releases a monitor handle. Null is ignored.
///
/// # Safety
/// `monitor` must be a handle from [`ltlmon_monitor_build`] that has not
/// been freed, with no sessions still open on it.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_monitor_free(monitor: *mut LtlmonMonitor) {
    if !monitor.is_null() {
        drop(Box::from_raw(monitor));
    }
}

/// Number of monitor states.
///
/// # Safety
/// `monitor` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_monitor_state_count(monitor: *const LtlmonMonitor) -> usize {
    monitor.as_ref().map_or(0, |m| m.inner.state_count())
}

fn monitorability_code(m: Monitorability4) -> LtlmonMonitorability {
    match m {
        Monitorability4::Positive => LtlmonMonitorability::Positive,
        Monitorability4::Negative => LtlmonMonitorability::Negative,
        Monitorability4::Neutral => LtlmonMonitorability::Neutral,
        Monitorability4::Non => LtlmonMonitorability::Non,
    }
}

fn verdict_code(v: Verdict6) -> LtlmonVerdict {
    match v {
        Verdict6::True => LtlmonVerdict::True,
        Verdict6::False => LtlmonVerdict::False,
        Verdict6::PossiblyTrue => LtlmonVerdict::PossiblyTrue,
        Verdict6::PossiblyFalse => LtlmonVerdict::PossiblyFalse,
        Verdict6::PossiblyConclusive => LtlmonVerdict::PossiblyConclusive,
        Verdict6::Inconclusive => LtlmonVerdict::Inconclusive,
    }
}

/// Four-valued monitorability of the monitored formula.
///
/// # Safety
/// `monitor` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_monitor_monitorability(
    monitor: *const LtlmonMonitor,
) -> LtlmonMonitorability {
    monitor.as_ref().map_or(LtlmonMonitorability::Non, |m| {
        monitorability_code(monitorability4(&m.inner))
    })
}

/// Classical two-valued monitorability.
///
/// # Safety
/// `monitor` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_monitor_is_monitorable(monitor: *const LtlmonMonitor) -> bool {
    monitor.as_ref().is_some_and(|m| monitorability2(&m.inner))
}

/// Weak monitorability: some verdict is detectable from the start.
///
/// # Safety
/// `monitor` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_monitor_is_weakly_monitorable(
    monitor: *const LtlmonMonitor,
) -> bool {
    monitor
        .as_ref()
        .is_some_and(|m| weak_monitorability2(&m.inner))
}

/// Classifies a whole trace (trace file syntax: one event per line,
/// comma-separated proposition names, `-` for the empty event) and
/// stores the six-valued verdict in `*out`.
///
/// # Safety
/// `monitor` must be a live handle; `trace` a valid NUL-terminated
/// string; `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_monitor_classify(
    monitor: *const LtlmonMonitor,
    trace: *const c_char,
    out: *mut LtlmonVerdict,
) -> LtlmonStatus {
    let Some(m) = monitor.as_ref() else {
        return fail(LtlmonStatus::NullArgument, "null monitor handle".into());
    };
    if out.is_null() {
        return fail(LtlmonStatus::NullArgument, "null output argument".into());
    }
    let text = match utf8_arg(trace) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let word = match parse_trace(text, m.inner.alphabet()) {
        Ok(w) => w,
        Err(e) => return fail(status_of(&e), e.to_string()),
    };
    match m.inner.read_word(&word) {
        Ok(v) => {
            *out = verdict_code(v);
            LtlmonStatus::Ok
        }
        Err(e) => fail(status_of(&e), e.to_string()),
    }
}

/// Serializes the monitor and stores a heap string in `*out`; release it
/// with [`ltlmon_string_free`].
///
/// # Safety
/// `monitor` must be a live handle; `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_monitor_render(
    monitor: *const LtlmonMonitor,
    format: LtlmonFormat,
    out: *mut *mut c_char,
) -> LtlmonStatus {
    let Some(m) = monitor.as_ref() else {
        return fail(LtlmonStatus::NullArgument, "null monitor handle".into());
    };
    if out.is_null() {
        return fail(LtlmonStatus::NullArgument, "null output argument".into());
    }
    let rendered = m.inner.render(match format {
        LtlmonFormat::Dot => RenderFormat::Dot,
        LtlmonFormat::Json => RenderFormat::Json,
    });
    match CString::new(rendered) {
        Ok(s) => {
            *out = s.into_raw();
            LtlmonStatus::Ok
        }
        Err(_) => fail(
            LtlmonStatus::InternalError,
            "rendered text contained an interior NUL".into(),
        ),
    }
}

/// Releases a string produced by this library. Null is ignored.
///
/// # Safety
/// `s` must originate from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Opens a session at the monitor's initial state under the given
/// handler policy. The status is evaluated immediately.
///
/// # Safety
/// `monitor` must be a live handle and must outlive the session; `out`
/// must be a valid location. Release the session with
/// [`ltlmon_session_free`].
#[no_mangle]
pub unsafe extern "C" fn ltlmon_session_open(
    monitor: *const LtlmonMonitor,
    satisfaction_handler: bool,
    violation_handler: bool,
    out: *mut *mut LtlmonSession,
) -> LtlmonStatus {
    let Some(m) = monitor.as_ref() else {
        return fail(LtlmonStatus::NullArgument, "null monitor handle".into());
    };
    if out.is_null() {
        return fail(LtlmonStatus::NullArgument, "null output argument".into());
    }
    let policy = HandlerPolicy {
        satisfaction: satisfaction_handler,
        violation: violation_handler,
    };
    // the caller guarantees the monitor outlives the session
    let monitor_ref: &'static Monitor = &*(&m.inner as *const Monitor);
    let session = open_session(monitor_ref, policy);
    *out = Box::into_raw(Box::new(LtlmonSession { inner: session }));
    LtlmonStatus::Ok
}

/// Releases a session handle. Null is ignored.
///
/// # Safety
/// `session` must be a handle from [`ltlmon_session_open`] not yet
/// freed.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_session_free(session: *mut LtlmonSession) {
    if !session.is_null() {
        drop(Box::from_raw(session));
    }
}

/// Feeds one event (comma-separated proposition names, or `-` for the
/// empty event) to a running session.
///
/// # Safety
/// `session` must be a live handle; `event` a valid NUL-terminated
/// string.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_session_step(
    session: *mut LtlmonSession,
    event: *const c_char,
) -> LtlmonStatus {
    let Some(s) = session.as_mut() else {
        return fail(LtlmonStatus::NullArgument, "null session handle".into());
    };
    let text = match utf8_arg(event) {
        Ok(t) => t,
        Err(status) => return status,
    };
    let alphabet = s.inner.monitor().alphabet();
    let symbol = if text.trim() == "-" {
        Ok(ltlmon::Symbol::EMPTY)
    } else {
        alphabet.symbol_from_names(
            text.split(',')
                .map(|part| part.trim().trim_matches('"'))
                .filter(|part| !part.is_empty()),
        )
    };
    let symbol = match symbol {
        Ok(sym) => sym,
        Err(e) => return fail(status_of(&e), e.to_string()),
    };
    match s.inner.step(symbol) {
        Ok(_) => LtlmonStatus::Ok,
        Err(e) => fail(status_of(&e), e.to_string()),
    }
}

/// Lifecycle state of the session.
///
/// # Safety
/// `session` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_session_status(
    session: *const LtlmonSession,
) -> LtlmonSessionStatus {
    session
        .as_ref()
        .map_or(LtlmonSessionStatus::Removable, |s| match s.inner.status() {
            SessionStatus::Running => LtlmonSessionStatus::Running,
            SessionStatus::Concluded(true) => LtlmonSessionStatus::ConcludedTrue,
            SessionStatus::Concluded(false) => LtlmonSessionStatus::ConcludedFalse,
            SessionStatus::Removable(_) => LtlmonSessionStatus::Removable,
        })
}

/// Six-valued verdict of the session's current state.
///
/// # Safety
/// `session` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_session_verdict(session: *const LtlmonSession) -> LtlmonVerdict {
    session
        .as_ref()
        .map_or(LtlmonVerdict::Inconclusive, |s| verdict_code(s.inner.verdict()))
}

/// Human-readable session status (e.g. the removal reason); heap string,
/// release with [`ltlmon_string_free`].
///
/// # Safety
/// `session` must be a live handle; `out` a valid location.
#[no_mangle]
pub unsafe extern "C" fn ltlmon_session_status_text(
    session: *const LtlmonSession,
    out: *mut *mut c_char,
) -> LtlmonStatus {
    let Some(s) = session.as_ref() else {
        return fail(LtlmonStatus::NullArgument, "null session handle".into());
    };
    if out.is_null() {
        return fail(LtlmonStatus::NullArgument, "null output argument".into());
    }
    let text = s.inner.status().to_string();
    match CString::new(text) {
        Ok(c) => {
            *out = c.into_raw();
            LtlmonStatus::Ok
        }
        Err(_) => fail(LtlmonStatus::InternalError, "status text contained NUL".into()),
    }
}
