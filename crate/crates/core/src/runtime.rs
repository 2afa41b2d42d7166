//! Online monitor execution with state-level pruning.
//!
//! A session walks the monitor one event at a time. Its status is a pure
//! function of the current state's output and the registered handler
//! policy, so the pruning check costs O(1) per event; the reachability
//! analysis justifying it happened once, at refinement time.

use crate::error::Error;
use crate::ltl::{FiniteWord, Symbol};
use crate::monitor::{Monitor, Verdict6};
use crate::monitorability::{vtom, Monitorability4};

/// Which verdict handlers a deployment registers. Both flags may be
/// false; such a session is immediately removable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HandlerPolicy {
    pub satisfaction: bool,
    pub violation: bool,
}

impl HandlerPolicy {
    pub const BOTH: HandlerPolicy = HandlerPolicy {
        satisfaction: true,
        violation: true,
    };
    pub const SATISFACTION_ONLY: HandlerPolicy = HandlerPolicy {
        satisfaction: true,
        violation: false,
    };
    pub const VIOLATION_ONLY: HandlerPolicy = HandlerPolicy {
        satisfaction: false,
        violation: true,
    };
    pub const NONE: HandlerPolicy = HandlerPolicy {
        satisfaction: false,
        violation: false,
    };
    pub const ALL: [HandlerPolicy; 4] = [
        HandlerPolicy::BOTH,
        HandlerPolicy::SATISFACTION_ONLY,
        HandlerPolicy::VIOLATION_ONLY,
        HandlerPolicy::NONE,
    ];
}

impl std::fmt::Display for HandlerPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match (self.satisfaction, self.violation) {
            (true, true) => write!(f, "both"),
            (true, false) => write!(f, "sat-only"),
            (false, true) => write!(f, "vio-only"),
            (false, false) => write!(f, "none"),
        }
    }
}

/// Why a session may be dropped without losing a handler invocation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RemovalReason {
    /// × state: no verdict can be detected after any continuation.
    Inconclusive,
    /// No handlers are registered at all.
    NoHandlers,
    /// Weakly positively monitorable state, but no satisfaction handler.
    NoSatisfactionHandler,
    /// Weakly negatively monitorable state, but no violation handler.
    NoViolationHandler,
}

impl std::fmt::Display for RemovalReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RemovalReason::Inconclusive => write!(f, "inconclusive state"),
            RemovalReason::NoHandlers => write!(f, "no handlers registered"),
            RemovalReason::NoSatisfactionHandler => {
                write!(f, "state weakly positively monitorable; no satisfaction handler")
            }
            RemovalReason::NoViolationHandler => {
                write!(f, "state weakly negatively monitorable; no violation handler")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SessionStatus {
    Running,
    /// Entered a final state; `true` for ⊤, `false` for ⊥.
    Concluded(bool),
    Removable(RemovalReason),
}

impl std::fmt::Display for SessionStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SessionStatus::Running => write!(f, "RUNNING"),
            SessionStatus::Concluded(true) => write!(f, "CONCLUDED(⊤)"),
            SessionStatus::Concluded(false) => write!(f, "CONCLUDED(⊥)"),
            SessionStatus::Removable(reason) => write!(f, "REMOVABLE({reason})"),
        }
    }
}

/// Status of a session sitting on a state with output `v` under
/// `policy`. A final verdict outranks removability: the ⊤/⊥ entry
/// reports the verdict even though the object is also disposable.
pub fn session_status(v: Verdict6, policy: HandlerPolicy) -> SessionStatus {
    match v {
        Verdict6::True => SessionStatus::Concluded(true),
        Verdict6::False => SessionStatus::Concluded(false),
        Verdict6::Inconclusive => SessionStatus::Removable(RemovalReason::Inconclusive),
        _ if !policy.satisfaction && !policy.violation => {
            SessionStatus::Removable(RemovalReason::NoHandlers)
        }
        v => match vtom(v) {
            Monitorability4::Positive if !policy.satisfaction => {
                SessionStatus::Removable(RemovalReason::NoSatisfactionHandler)
            }
            Monitorability4::Negative if !policy.violation => {
                SessionStatus::Removable(RemovalReason::NoViolationHandler)
            }
            _ => SessionStatus::Running,
        },
    }
}

/// One online monitor instance over one event stream.
#[derive(Debug, Clone)]
pub struct Session<'m> {
    monitor: &'m Monitor,
    state: u32,
    policy: HandlerPolicy,
    status: SessionStatus,
}

/// Opens a session at the initial state; the status is evaluated
/// immediately, so a session may be removable (or concluded) before any
/// event arrives.
pub fn open_session(monitor: &Monitor, policy: HandlerPolicy) -> Session<'_> {
    let state = monitor.initial_state();
    Session {
        monitor,
        state,
        policy,
        status: session_status(monitor.output(state), policy),
    }
}

impl<'m> Session<'m> {
    pub fn monitor(&self) -> &'m Monitor {
        self.monitor
    }

    pub fn state(&self) -> u32 {
        self.state
    }

    pub fn policy(&self) -> HandlerPolicy {
        self.policy
    }

    pub fn status(&self) -> SessionStatus {
        self.status
    }

    pub fn verdict(&self) -> Verdict6 {
        self.monitor.output(self.state)
    }

    /// Advances by one event and re-evaluates the status. Stepping a
    /// session that is not running is an API-misuse error.
    pub fn step(&mut self, event: Symbol) -> Result<SessionStatus, Error> {
        if self.status != SessionStatus::Running {
            return Err(Error::ApiMisuse("stepping a session that is not RUNNING"));
        }
        if !self.monitor.alphabet().admits(event) {
            return Err(Error::UnknownSymbol {
                symbol: vec![format!("0b{:b}", event.bits())],
                unknown: vec!["out-of-range symbol bits".into()],
            });
        }
        self.state = self.monitor.step(self.state, event);
        self.status = session_status(self.monitor.output(self.state), self.policy);
        Ok(self.status)
    }
}

/// Replay summary for one trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceReport {
    /// Output of the initial state, before any event.
    pub initial_verdict: Verdict6,
    /// Verdict after each consumed event.
    pub verdicts: Vec<Verdict6>,
    pub final_status: SessionStatus,
    /// 1-based index of the event on which the session became removable;
    /// 0 when it was removable before any event.
    pub first_removable: Option<usize>,
    /// 1-based index of the event on which the session concluded; 0 when
    /// it concluded before any event.
    pub concluded_at: Option<usize>,
    /// Events consumed before the session left the RUNNING status (or
    /// the whole trace).
    pub events_consumed: usize,
    /// Trailing events that never had to be processed.
    pub events_saved: usize,
}

/// Replays `trace` against a fresh session. Consumption stops as soon as
/// the session leaves RUNNING; the remaining events are counted as
/// saved.
pub fn run_trace(
    monitor: &Monitor,
    trace: &FiniteWord,
    policy: HandlerPolicy,
) -> Result<TraceReport, Error> {
    // remap through read_word semantics so foreign alphabets behave the
    // same here as in offline classification
    let normalized = normalize_word(monitor, trace)?;
    let mut session = open_session(monitor, policy);
    let initial_verdict = session.verdict();
    let mut verdicts = Vec::new();
    let mut first_removable = match session.status() {
        SessionStatus::Removable(_) => Some(0),
        _ => None,
    };
    let mut concluded_at = match session.status() {
        SessionStatus::Concluded(_) => Some(0),
        _ => None,
    };

    for (i, &event) in normalized.iter().enumerate() {
        if session.status() != SessionStatus::Running {
            break;
        }
        let status = session.step(event)?;
        verdicts.push(session.verdict());
        match status {
            SessionStatus::Removable(_) if first_removable.is_none() => {
                first_removable = Some(i + 1);
            }
            SessionStatus::Concluded(_) if concluded_at.is_none() => {
                concluded_at = Some(i + 1);
            }
            _ => {}
        }
    }

    let events_consumed = verdicts.len();
    Ok(TraceReport {
        initial_verdict,
        verdicts,
        final_status: session.status(),
        first_removable,
        concluded_at,
        events_consumed,
        events_saved: trace.len() - events_consumed,
    })
}

fn normalize_word(monitor: &Monitor, trace: &FiniteWord) -> Result<Vec<Symbol>, Error> {
    if trace.alphabet() == monitor.alphabet() {
        return Ok(trace.symbols().to_vec());
    }
    let other = trace.alphabet();
    let mapping: Vec<Option<usize>> = other
        .propositions()
        .iter()
        .map(|p| monitor.alphabet().index_of(p.name()))
        .collect();
    trace
        .symbols()
        .iter()
        .map(|&s| {
            let mut bits = 0u64;
            let mut unknown = Vec::new();
            for (i, target) in mapping.iter().enumerate() {
                if s.contains(i) {
                    match target {
                        Some(t) => bits |= 1 << t,
                        None => unknown.push(other.propositions()[i].name().to_string()),
                    }
                }
            }
            if unknown.is_empty() {
                Ok(Symbol(bits))
            } else {
                Err(Error::UnknownSymbol {
                    symbol: other.names_of(s),
                    unknown,
                })
            }
        })
        .collect()
}

/// Parses the trace file format: one event per line, an event is a
/// comma-separated list of proposition names, the literal `-` denotes
/// the empty set, `#` starts a comment, blank lines are ignored.
pub fn parse_trace(text: &str, alphabet: &crate::ltl::Alphabet) -> Result<FiniteWord, Error> {
    let mut symbols = Vec::new();
    for raw_line in text.lines() {
        let line = match raw_line.find('#') {
            Some(at) => &raw_line[..at],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        if line == "-" {
            symbols.push(Symbol::EMPTY);
            continue;
        }
        let names: Vec<&str> = line
            .split(',')
            .map(|part| part.trim().trim_matches('"'))
            .filter(|part| !part.is_empty())
            .collect();
        symbols.push(alphabet.symbol_from_names(names)?);
    }
    Ok(FiniteWord::new(alphabet.clone(), symbols))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ltl::FiniteWord;

    fn monitor(text: &str) -> Monitor {
        Monitor::parse_and_build(text).unwrap()
    }

    #[test]
    fn open_session_examples() {
        let m = monitor("p U q");
        assert_eq!(open_session(&m, HandlerPolicy::BOTH).status(), SessionStatus::Running);

        // positively monitorable formula with only a violation handler
        let m = monitor("r -> F u");
        let s = open_session(&m, HandlerPolicy::VIOLATION_ONLY);
        assert_eq!(
            s.status(),
            SessionStatus::Removable(RemovalReason::NoSatisfactionHandler)
        );

        let m = monitor("true");
        assert_eq!(
            open_session(&m, HandlerPolicy::BOTH).status(),
            SessionStatus::Concluded(true)
        );
    }

    #[test]
    fn stepping_to_conclusion() {
        let m = monitor("p U q");
        let a = m.alphabet().clone();
        let p = a.symbol_from_names(["p"]).unwrap();
        let q = a.symbol_from_names(["q"]).unwrap();
        let mut s = open_session(&m, HandlerPolicy::BOTH);
        assert_eq!(s.step(p).unwrap(), SessionStatus::Running);
        assert_eq!(s.step(p).unwrap(), SessionStatus::Running);
        assert_eq!(s.step(q).unwrap(), SessionStatus::Concluded(true));
        assert!(matches!(s.step(p), Err(Error::ApiMisuse(_))));
    }

    #[test]
    fn phi6_becomes_removable_in_the_dead_state() {
        let m = monitor("G F r || (!n -> X !b)");
        let a = m.alphabet().clone();
        let b = a.symbol_from_names(["b"]).unwrap();
        let mut s = open_session(&m, HandlerPolicy::BOTH);
        assert_eq!(s.step(Symbol::EMPTY).unwrap(), SessionStatus::Running);
        assert_eq!(
            s.step(b).unwrap(),
            SessionStatus::Removable(RemovalReason::Inconclusive)
        );
    }

    #[test]
    fn negatively_monitorable_with_satisfaction_only_is_dead_on_arrival() {
        let m = monitor("G p");
        let s = open_session(&m, HandlerPolicy::SATISFACTION_ONLY);
        assert_eq!(
            s.status(),
            SessionStatus::Removable(RemovalReason::NoViolationHandler)
        );
    }

    #[test]
    fn run_trace_reports_savings() {
        let m = monitor("G F r || (!n -> X !b)");
        let trace = parse_trace("-\nb\nr\nr\n", m.alphabet()).unwrap();
        let report = run_trace(&m, &trace, HandlerPolicy::BOTH).unwrap();
        assert_eq!(report.first_removable, Some(2));
        assert_eq!(report.events_saved, 2);
        assert_eq!(report.events_consumed, 2);
        assert!(matches!(report.final_status, SessionStatus::Removable(_)));
        // replay determinism
        let again = run_trace(&m, &trace, HandlerPolicy::BOTH).unwrap();
        assert_eq!(report, again);
    }

    #[test]
    fn run_trace_on_false_concludes_immediately() {
        let m = monitor("false");
        let trace = parse_trace("-\n-\n", m.alphabet()).unwrap();
        let report = run_trace(&m, &trace, HandlerPolicy::BOTH).unwrap();
        assert_eq!(report.final_status, SessionStatus::Concluded(false));
        assert_eq!(report.concluded_at, Some(0));
        assert_eq!(report.events_saved, 2);
    }

    #[test]
    fn empty_trace_keeps_running() {
        let m = monitor("(r && F u) -> ((!b && !u) U n) U u");
        let report = run_trace(
            &m,
            &FiniteWord::empty(m.alphabet().clone()),
            HandlerPolicy::BOTH,
        )
        .unwrap();
        assert_eq!(report.final_status, SessionStatus::Running);
        assert_eq!(report.first_removable, None);
        assert_eq!(report.initial_verdict, Verdict6::PossiblyConclusive);
    }

    #[test]
    fn trace_parsing() {
        let m = monitor("p U q");
        let a = m.alphabet().clone();
        let w = parse_trace("# header\np\n\np, q\n-\n", &a).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(a.names_of(w.symbols()[1]), vec!["p", "q"]);
        assert_eq!(w.symbols()[2], Symbol::EMPTY);
        assert!(parse_trace("zz\n", &a).is_err());
    }

    #[test]
    fn status_is_a_pure_function_of_output_and_policy() {
        for v in [
            Verdict6::True,
            Verdict6::False,
            Verdict6::PossiblyTrue,
            Verdict6::PossiblyFalse,
            Verdict6::PossiblyConclusive,
            Verdict6::Inconclusive,
        ] {
            for p in HandlerPolicy::ALL {
                assert_eq!(session_status(v, p), session_status(v, p));
                // a + state with at least one handler is never removable
                if v == Verdict6::PossiblyConclusive && (p.satisfaction || p.violation) {
                    assert_eq!(session_status(v, p), SessionStatus::Running);
                }
            }
        }
    }
}
