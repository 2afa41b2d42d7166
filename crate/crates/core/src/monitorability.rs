//! Language-level and state-level monitorability, computed from the
//! six-valued monitor.
//!
//! All language-level answers are reachable-output-set predicates over
//! the minimized monitor: quantification over finite words reduces to
//! state reachability because the monitor's output at a state is exactly
//! the semantic value of every word reaching it.

use crate::error::Error;
use crate::ltl::FiniteWord;
use crate::monitor::{Monitor, Verdict6};
use crate::runtime::{session_status, HandlerPolicy, SessionStatus};

/// The four monitorability values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Monitorability4 {
    /// Only satisfaction can ever be detected.
    Positive,
    /// Only violation can ever be detected.
    Negative,
    /// Both verdicts are detectable.
    Neutral,
    /// Some word has neither a good nor a bad extension.
    Non,
}

impl Monitorability4 {
    /// Short spelling used in summaries and CSV.
    pub fn short_name(self) -> &'static str {
        match self {
            Monitorability4::Positive => "positive",
            Monitorability4::Negative => "negative",
            Monitorability4::Neutral => "neutral",
            Monitorability4::Non => "non",
        }
    }
}

/// Fixed output spelling: "positively monitorable", "negatively
/// monitorable", "neutrally monitorable", "non-monitorable".
impl std::fmt::Display for Monitorability4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Monitorability4::Positive => write!(f, "positively monitorable"),
            Monitorability4::Negative => write!(f, "negatively monitorable"),
            Monitorability4::Neutral => write!(f, "neutrally monitorable"),
            Monitorability4::Non => write!(f, "non-monitorable"),
        }
    }
}

/// The value-to-weak-monitorability operator: ⊤,∓ ↦ positive; ⊥,± ↦
/// negative; + ↦ neutral; × ↦ non.
pub fn vtom(v: Verdict6) -> Monitorability4 {
    match v {
        Verdict6::True | Verdict6::PossiblyTrue => Monitorability4::Positive,
        Verdict6::False | Verdict6::PossiblyFalse => Monitorability4::Negative,
        Verdict6::PossiblyConclusive => Monitorability4::Neutral,
        Verdict6::Inconclusive => Monitorability4::Non,
    }
}

/// Four-valued monitorability of the monitored language.
///
/// Non iff some reachable × state exists; neutral iff none does and a +
/// state is reachable; positive iff no reachable state outputs × or ⊥;
/// negative dually. Exactly one case holds for every monitor.
pub fn monitorability4(m: &Monitor) -> Monitorability4 {
    let outputs: Vec<Verdict6> = m.states().map(|q| m.output(q)).collect();
    let has = |v: Verdict6| outputs.contains(&v);

    let non = has(Verdict6::Inconclusive);
    let neutral = !non && has(Verdict6::PossiblyConclusive);
    let positive = !has(Verdict6::Inconclusive) && !has(Verdict6::False);
    let negative = !has(Verdict6::Inconclusive) && !has(Verdict6::True);

    let result = if non {
        Monitorability4::Non
    } else if neutral {
        Monitorability4::Neutral
    } else if positive {
        Monitorability4::Positive
    } else {
        Monitorability4::Negative
    };
    debug_assert_eq!(
        [non, neutral, positive, negative].iter().filter(|&&b| b).count(),
        1,
        "exactly one monitorability case must hold"
    );
    result
}

/// Two-valued monitorability: every finite word keeps a good or bad
/// extension, i.e. no ugly prefix exists.
pub fn monitorability2(m: &Monitor) -> bool {
    monitorability4(m) != Monitorability4::Non
}

/// Weak monitorability: some verdict is still detectable from the start,
/// i.e. the initial state is not an × state.
pub fn weak_monitorability2(m: &Monitor) -> bool {
    m.output(m.initial_state()) != Verdict6::Inconclusive
}

fn check_state(m: &Monitor, q: usize) -> Result<u32, Error> {
    if q < m.state_count() {
        Ok(q as u32)
    } else {
        Err(Error::UnknownState(q))
    }
}

/// Which verdicts remain detectable from `q`: `vtom` applied to the
/// state output.
pub fn state_weak_monitorability(m: &Monitor, q: usize) -> Result<Monitorability4, Error> {
    Ok(vtom(m.output(check_state(m, q)?)))
}

/// Strong state-level monitorability: the weak classification must hold
/// from every state reachable from `q`.
pub fn state_strong_monitorability(m: &Monitor, q: usize) -> Result<Monitorability4, Error> {
    let q = check_state(m, q)?;
    let mut seen = vec![false; m.state_count()];
    let mut stack = vec![q];
    seen[q as usize] = true;
    let mut weaks = Vec::new();
    while let Some(v) = stack.pop() {
        weaks.push(vtom(m.output(v)));
        for s in m.alphabet().symbols() {
            let t = m.step(v, s);
            if !seen[t as usize] {
                seen[t as usize] = true;
                stack.push(t);
            }
        }
    }
    if weaks.contains(&Monitorability4::Non) {
        Ok(Monitorability4::Non)
    } else if weaks.iter().all(|&w| w == Monitorability4::Positive) {
        Ok(Monitorability4::Positive)
    } else if weaks.iter().all(|&w| w == Monitorability4::Negative) {
        Ok(Monitorability4::Negative)
    } else {
        // every reachable state is weakly monitorable and both final
        // verdicts are reachable from q
        Ok(Monitorability4::Neutral)
    }
}

/// The prefix class of `u`: the same value as [`Monitor::read_word`],
/// read as ⊤ good, ⊥ bad, ∓ positive, ± negative, + neutral, × ugly.
pub fn classify_prefix(m: &Monitor, u: &FiniteWord) -> Result<Verdict6, Error> {
    m.read_word(u)
}

/// Per-state analysis row.
#[derive(Debug, Clone)]
pub struct StateReport {
    pub state: u32,
    pub name: String,
    pub output: Verdict6,
    pub weak: Monitorability4,
    pub strong: Monitorability4,
    /// Handler policies under which a session sitting on this state is
    /// removable.
    pub removable_for: Vec<HandlerPolicy>,
}

/// Reports for every state of the monitor.
pub fn state_reports(m: &Monitor) -> Vec<StateReport> {
    m.states()
        .map(|q| {
            let output = m.output(q);
            let removable_for = HandlerPolicy::ALL
                .into_iter()
                .filter(|&p| matches!(session_status(output, p), SessionStatus::Removable(_)))
                .collect();
            StateReport {
                state: q,
                name: m.state_name(q).to_string(),
                output,
                weak: vtom(output),
                strong: state_strong_monitorability(m, q as usize)
                    .expect("state ids from the monitor are valid"),
                removable_for,
            }
        })
        .collect()
}
