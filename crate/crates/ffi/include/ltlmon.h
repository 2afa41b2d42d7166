#ifndef LTLMON_H
#define LTLMON_H

/* Generated by cbindgen from the ltlmon-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Monitor serialization format.
typedef enum LtlmonFormat {
  LTLMON_FORMAT_DOT = 0,
  LTLMON_FORMAT_JSON = 1,
} LtlmonFormat;

// Four-valued monitorability verdict.
typedef enum LtlmonMonitorability {
  LTLMON_MONITORABILITY_POSITIVE = 0,
  LTLMON_MONITORABILITY_NEGATIVE = 1,
  LTLMON_MONITORABILITY_NEUTRAL = 2,
  LTLMON_MONITORABILITY_NON = 3,
} LtlmonMonitorability;

// Session lifecycle state.
typedef enum LtlmonSessionStatus {
  LTLMON_SESSION_STATUS_RUNNING = 0,
  LTLMON_SESSION_STATUS_CONCLUDED_TRUE = 1,
  LTLMON_SESSION_STATUS_CONCLUDED_FALSE = 2,
  LTLMON_SESSION_STATUS_REMOVABLE = 3,
} LtlmonSessionStatus;

// Result code of an FFI call.
typedef enum LtlmonStatus {
  LTLMON_STATUS_OK = 0,
  // A required pointer argument was null.
  LTLMON_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  LTLMON_STATUS_INVALID_UTF8 = 2,
  // The formula (or trace) failed to parse.
  LTLMON_STATUS_PARSE_ERROR = 3,
  // An event used propositions unknown to the monitor.
  LTLMON_STATUS_UNKNOWN_EVENT = 4,
  // The session is not in a steppable state.
  LTLMON_STATUS_API_MISUSE = 5,
  // Internal invariant violation.
  LTLMON_STATUS_INTERNAL_ERROR = 6,
} LtlmonStatus;

// Six-valued state/word verdict.
typedef enum LtlmonVerdict {
  LTLMON_VERDICT_TRUE = 0,
  LTLMON_VERDICT_FALSE = 1,
  LTLMON_VERDICT_POSSIBLY_TRUE = 2,
  LTLMON_VERDICT_POSSIBLY_FALSE = 3,
  LTLMON_VERDICT_POSSIBLY_CONCLUSIVE = 4,
  LTLMON_VERDICT_INCONCLUSIVE = 5,
} LtlmonVerdict;

// Synthesized six-valued monitor (opaque).
typedef struct LtlmonMonitor LtlmonMonitor;

// Online monitor session (opaque). Borrows the monitor it was opened
// on.
typedef struct LtlmonSession LtlmonSession;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread, or null.
// The pointer stays valid until the next failing call on this thread.
const char *ltlmon_last_error(void);

// Library version as a static string.
const char *ltlmon_version(void);

// Parses `formula` and synthesizes its monitor into `*out`.
//
// # Safety
// `formula` must be a valid NUL-terminated string; `out` must be a
// valid location to store the handle. On success the caller owns the
// handle and must release it with [`ltlmon_monitor_free`].
enum LtlmonStatus ltlmon_monitor_build(const char *formula, struct LtlmonMonitor **out);

// Releases a monitor handle. Null is ignored.
//
// # Safety
// `monitor` must be a handle from [`ltlmon_monitor_build`] that has not
// been freed, with no sessions still open on it.
void ltlmon_monitor_free(struct LtlmonMonitor *monitor);

// Number of monitor states.
//
// # Safety
// `monitor` must be a live handle.
size_t ltlmon_monitor_state_count(const struct LtlmonMonitor *monitor);

// Four-valued monitorability of the monitored formula.
//
// # Safety
// `monitor` must be a live handle.
enum LtlmonMonitorability ltlmon_monitor_monitorability(const struct LtlmonMonitor *monitor);

// Classical two-valued monitorability.
//
// # Safety
// `monitor` must be a live handle.
bool ltlmon_monitor_is_monitorable(const struct LtlmonMonitor *monitor);

// Weak monitorability: some verdict is detectable from the start.
//
// # Safety
// `monitor` must be a live handle.
bool ltlmon_monitor_is_weakly_monitorable(const struct LtlmonMonitor *monitor);

// Classifies a whole trace (trace file syntax: one event per line,
// comma-separated proposition names, `-` for the empty event) and
// stores the six-valued verdict in `*out`.
//
// # Safety
// `monitor` must be a live handle; `trace` a valid NUL-terminated
// string; `out` a valid location.
enum LtlmonStatus ltlmon_monitor_classify(const struct LtlmonMonitor *monitor,
                                          const char *trace,
                                          enum LtlmonVerdict *out);

// Serializes the monitor and stores a heap string in `*out`; release it
// with [`ltlmon_string_free`].
//
// # Safety
// `monitor` must be a live handle; `out` a valid location.
enum LtlmonStatus ltlmon_monitor_render(const struct LtlmonMonitor *monitor,
                                        enum LtlmonFormat format,
                                        char **out);

// Releases a string produced by this library. Null is ignored.
//
// # Safety
// `s` must originate from this library and not be freed twice.
void ltlmon_string_free(char *s);

// Opens a session at the monitor's initial state under the given
// handler policy. The status is evaluated immediately.
//
// # Safety
// `monitor` must be a live handle and must outlive the session; `out`
// must be a valid location. Release the session with
// [`ltlmon_session_free`].
enum LtlmonStatus ltlmon_session_open(const struct LtlmonMonitor *monitor,
                                      bool satisfaction_handler,
                                      bool violation_handler,
                                      struct LtlmonSession **out);

// Releases a session handle. Null is ignored.
//
// # Safety
// `session` must be a handle from [`ltlmon_session_open`] not yet
// freed.
void ltlmon_session_free(struct LtlmonSession *session);

// Feeds one event (comma-separated proposition names, or `-` for the
// empty event) to a running session.
//
// # Safety
// `session` must be a live handle; `event` a valid NUL-terminated
// string.
enum LtlmonStatus ltlmon_session_step(struct LtlmonSession *session, const char *event);

// Lifecycle state of the session.
//
// # Safety
// `session` must be a live handle.
enum LtlmonSessionStatus ltlmon_session_status(const struct LtlmonSession *session);

// Six-valued verdict of the session's current state.
//
// # Safety
// `session` must be a live handle.
enum LtlmonVerdict ltlmon_session_verdict(const struct LtlmonSession *session);

// Human-readable session status (e.g. the removal reason); heap string,
// release with [`ltlmon_string_free`].
//
// # Safety
// `session` must be a live handle; `out` a valid location.
enum LtlmonStatus ltlmon_session_status_text(const struct LtlmonSession *session, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* LTLMON_H */
