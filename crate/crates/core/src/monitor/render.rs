//! Monitor export: Graphviz DOT for reading, JSON as the machine
//! interface of record. Both are byte-deterministic for a canonical
//! monitor.

use serde::Serialize;

use super::cubes::dnf_label;
use super::Monitor;
use crate::ltl::Symbol;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Dot,
    Json,
}

// outgoing symbols grouped by target, targets ascending; symbols in
// canonical order
fn grouped_edges(m: &Monitor, q: u32) -> Vec<(u32, Vec<Symbol>)> {
    let mut groups: std::collections::BTreeMap<u32, Vec<Symbol>> = std::collections::BTreeMap::new();
    for s in m.alphabet().ordered_symbols() {
        groups.entry(m.step(q, s)).or_default().push(s);
    }
    groups.into_iter().collect()
}

pub(crate) fn to_dot(m: &Monitor) -> String {
    let mut out = String::new();
    out.push_str("digraph monitor {\n");
    out.push_str("  rankdir=LR;\n");
    out.push_str("  __start [shape=none, label=\"\", width=0, height=0];\n");
    for q in m.states() {
        let shape = if m.output(q).is_final() {
            "doublecircle"
        } else {
            "circle"
        };
        out.push_str(&format!(
            "  {} [shape={}, label=\"{} / {}\"];\n",
            m.state_name(q),
            shape,
            m.state_name(q),
            m.output(q)
        ));
    }
    out.push_str(&format!("  __start -> {};\n", m.state_name(m.initial_state())));
    for q in m.states() {
        for (target, symbols) in grouped_edges(m, q) {
            let label = dnf_label(m.alphabet(), &symbols);
            out.push_str(&format!(
                "  {} -> {} [label=\"{}\"];\n",
                m.state_name(q),
                m.state_name(target),
                label.replace('"', "\\\"")
            ));
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct StateJson {
    id: u32,
    name: String,
    output: &'static str,
    initial: bool,
}

#[derive(Serialize)]
struct TransitionJson {
    from: u32,
    to: u32,
    label: String,
    symbols: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct MonitorJson {
    formula: String,
    alphabet: Vec<String>,
    states: Vec<StateJson>,
    transitions: Vec<TransitionJson>,
}

pub(crate) fn to_json(m: &Monitor) -> String {
    let states = m
        .states()
        .map(|q| StateJson {
            id: q,
            name: m.state_name(q).to_string(),
            output: m.output(q).name(),
            initial: q == m.initial_state(),
        })
        .collect();
    let mut transitions = Vec::new();
    for q in m.states() {
        for (target, symbols) in grouped_edges(m, q) {
            transitions.push(TransitionJson {
                from: q,
                to: target,
                label: dnf_label(m.alphabet(), &symbols),
                symbols: symbols.iter().map(|&s| m.alphabet().names_of(s)).collect(),
            });
        }
    }
    let doc = MonitorJson {
        formula: m.formula().to_string(),
        alphabet: m
            .alphabet()
            .propositions()
            .iter()
            .map(|p| p.name().to_string())
            .collect(),
        states,
        transitions,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("monitor serialization cannot fail");
    text.push('\n');
    text
}
