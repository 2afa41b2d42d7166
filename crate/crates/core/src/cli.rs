//! Command implementations behind the `ltlmon` binary. Each command is
//! a pure function from inputs to rendered output so it can be tested
//! without spawning processes.

use std::fmt::Write as _;
use std::time::Instant;

use serde_json::json;

use crate::corpus::{parse_corpus, Expectation};
use crate::error::Error;
use crate::ltl::Formula;
use crate::monitor::{Monitor, RenderFormat};
use crate::monitorability::{
    monitorability2, monitorability4, state_reports, weak_monitorability2,
};
use crate::runtime::{parse_trace, run_trace, HandlerPolicy};

fn parse_formula(text: &str) -> Result<Formula, Error> {
    text.parse::<Formula>().map_err(Error::Parse)
}

/// State counts of every pipeline stage, for debugging constructions.
#[derive(Debug, Clone, Copy)]
pub struct StageSizes {
    pub nba: usize,
    pub nba_negated: usize,
    pub dfa: usize,
    pub dfa_negated: usize,
    pub product: usize,
    pub minimized: usize,
}

/// Re-runs the construction recording the size of each stage.
pub fn stage_sizes(f: &Formula) -> Result<StageSizes, Error> {
    use crate::automata::{ltl_to_nba, minimize, nba_to_dfa, product_monitor};
    let a = f.alphabet()?;
    let nba = ltl_to_nba(f, &a).with_nonempty_marks();
    let nba_neg = ltl_to_nba(&f.clone().negate(), &a).with_nonempty_marks();
    let dfa = nba_to_dfa(&nba);
    let dfa_neg = nba_to_dfa(&nba_neg);
    let product = product_monitor(&dfa, &dfa_neg)?;
    let minimized = minimize(&product);
    Ok(StageSizes {
        nba: nba.state_count(),
        nba_negated: nba_neg.state_count(),
        dfa: dfa.state_count(),
        dfa_negated: dfa_neg.state_count(),
        product: product.state_count(),
        minimized: minimized.state_count(),
    })
}

/// `analyze <formula>`: verdicts plus the per-state table; with
/// `show_stages`, also the state count of every construction stage.
pub fn cmd_analyze(formula: &str, json_output: bool, show_stages: bool) -> Result<String, Error> {
    let f = parse_formula(formula)?;
    let m = Monitor::from_formula(&f)?;
    let verdict4 = monitorability4(&m);
    let reports = state_reports(&m);
    let stages = if show_stages {
        Some(stage_sizes(&f)?)
    } else {
        None
    };

    if json_output {
        let table: Vec<serde_json::Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "id": r.state,
                    "name": r.name,
                    "output": r.output.name(),
                    "weak": r.weak.short_name(),
                    "strong": r.strong.short_name(),
                    "removable_for": r.removable_for.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        let mut doc = json!({
            "formula": m.formula(),
            "alphabet": m.alphabet().propositions().iter().map(|p| p.name()).collect::<Vec<_>>(),
            "states": m.state_count(),
            "verdict4": verdict4.to_string(),
            "monitorable": monitorability2(&m),
            "weakly_monitorable": weak_monitorability2(&m),
            "state_table": table,
        });
        if let Some(s) = stages {
            doc["stages"] = json!({
                "nba": s.nba,
                "nba_negated": s.nba_negated,
                "dfa": s.dfa,
                "dfa_negated": s.dfa_negated,
                "product": s.product,
                "minimized": s.minimized,
            });
        }
        let mut text = serde_json::to_string_pretty(&doc).expect("analyze serialization");
        text.push('\n');
        return Ok(text);
    }

    let mut out = String::new();
    let _ = writeln!(out, "formula: {}", m.formula());
    let _ = writeln!(
        out,
        "alphabet: {{{}}}",
        m.alphabet()
            .propositions()
            .iter()
            .map(|p| p.name())
            .collect::<Vec<_>>()
            .join(", ")
    );
    let _ = writeln!(out, "states: {}", m.state_count());
    let _ = writeln!(out, "four-valued: {verdict4}");
    let _ = writeln!(
        out,
        "two-valued: {}",
        if monitorability2(&m) {
            "monitorable"
        } else {
            "non-monitorable"
        }
    );
    let _ = writeln!(
        out,
        "weak: {}",
        if weak_monitorability2(&m) {
            "weakly monitorable"
        } else {
            "weakly non-monitorable"
        }
    );
    let _ = writeln!(out, "state  output  weak                     strong                   removable-for");
    for r in &reports {
        let removable = if r.removable_for.is_empty() {
            "-".to_string()
        } else {
            r.removable_for
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let _ = writeln!(
            out,
            "{:<6} {:<7} {:<24} {:<24} {}",
            r.name,
            r.output.to_string(),
            r.weak.to_string(),
            r.strong.to_string(),
            removable
        );
    }
    if let Some(s) = stages {
        let _ = writeln!(
            out,
            "stages: nba={} nba(neg)={} dfa={} dfa(neg)={} product={} minimized={}",
            s.nba, s.nba_negated, s.dfa, s.dfa_negated, s.product, s.minimized
        );
    }
    Ok(out)
}

/// `monitor <formula>`: DOT or JSON export.
pub fn cmd_monitor(formula: &str, format: RenderFormat) -> Result<String, Error> {
    let f = parse_formula(formula)?;
    let m = Monitor::from_formula(&f)?;
    Ok(m.render(format))
}

/// `run <formula> <trace>`: replay with per-event verdicts and the
/// pruning report.
pub fn cmd_run(
    formula: &str,
    trace_text: &str,
    policy: HandlerPolicy,
    json_output: bool,
) -> Result<String, Error> {
    let f = parse_formula(formula)?;
    let m = Monitor::from_formula(&f)?;
    let trace = parse_trace(trace_text, m.alphabet())?;
    let report = run_trace(&m, &trace, policy)?;

    if json_output {
        let doc = json!({
            "formula": m.formula(),
            "policy": policy.to_string(),
            "initial_verdict": report.initial_verdict.name(),
            "verdicts": report.verdicts.iter().map(|v| v.name()).collect::<Vec<_>>(),
            "final_status": report.final_status.to_string(),
            "first_removable": report.first_removable,
            "concluded_at": report.concluded_at,
            "events_consumed": report.events_consumed,
            "events_saved": report.events_saved,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("run serialization");
        text.push('\n');
        return Ok(text);
    }

    let mut out = String::new();
    let _ = writeln!(out, "formula: {}", m.formula());
    let _ = writeln!(out, "policy: {policy}");
    let _ = writeln!(out, "initial: verdict {}", report.initial_verdict);
    for (i, v) in report.verdicts.iter().enumerate() {
        let _ = writeln!(
            out,
            "event {}: {} -> verdict {}",
            i + 1,
            m.alphabet().render_symbol(trace.symbols()[i]),
            v
        );
    }
    let _ = writeln!(out, "final: {}", report.final_status);
    if let Some(at) = report.concluded_at {
        let _ = writeln!(out, "concluded at event {at}");
    }
    if let Some(at) = report.first_removable {
        let _ = writeln!(out, "first removable at event {at}");
    }
    let _ = writeln!(out, "events saved: {}", report.events_saved);
    Ok(out)
}

/// Outcome of a benchmark run, with the process exit code already
/// decided: 5 when lines were skipped, 1 when an `@expect` annotation
/// mismatched, 0 otherwise.
#[derive(Debug, Clone)]
pub struct BenchOutcome {
    pub output: String,
    pub csv: String,
    pub skipped: usize,
    pub mismatches: usize,
    pub exit_code: i32,
}

/// `bench <corpus>`: per-formula verdicts, class counts and timing.
pub fn cmd_bench(corpus_text: &str, summary_only: bool) -> BenchOutcome {
    let entries = parse_corpus(corpus_text);
    let mut out = String::new();
    let mut csv = String::from("index,formula,verdict4,verdict2,states,millis\n");
    let mut skipped = 0usize;
    let mut mismatches = 0usize;
    let mut counts = [0usize; 4]; // positive, negative, neutral, non
    let total_start = Instant::now();

    for (idx, entry) in entries.iter().enumerate() {
        let index = idx + 1;
        let start = Instant::now();
        let analyzed = parse_formula(&entry.text).and_then(|f| {
            let m = Monitor::from_formula(&f)?;
            Ok((f, m))
        });
        let elapsed = start.elapsed();
        match analyzed {
            Ok((_, m)) => {
                let verdict4 = monitorability4(&m);
                counts[match verdict4 {
                    crate::monitorability::Monitorability4::Positive => 0,
                    crate::monitorability::Monitorability4::Negative => 1,
                    crate::monitorability::Monitorability4::Neutral => 2,
                    crate::monitorability::Monitorability4::Non => 3,
                }] += 1;
                let verdict2 = if verdict4 != crate::monitorability::Monitorability4::Non {
                    "monitorable"
                } else {
                    "non-monitorable"
                };

                let mut note = "";
                if let Some(raw) = &entry.expect {
                    match Expectation::parse(raw) {
                        Some(e) if e.matches(verdict4) => {}
                        Some(_) => {
                            mismatches += 1;
                            note = "  [expectation MISMATCH]";
                        }
                        None => {
                            skipped += 1;
                            note = "  [invalid @expect annotation]";
                        }
                    }
                }
                if !summary_only {
                    let _ = writeln!(
                        out,
                        "{:>3}  {:.3}s  {:<24} {}{}",
                        index,
                        elapsed.as_secs_f64(),
                        verdict4.to_string(),
                        entry.text,
                        note
                    );
                }
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{},{:.3}",
                    index,
                    csv_quote(&entry.text),
                    verdict4,
                    verdict2,
                    m.state_count(),
                    elapsed.as_secs_f64() * 1000.0
                );
            }
            Err(e) => {
                skipped += 1;
                let _ = writeln!(out, "{:>3}  skipped (line {}): {}", index, entry.line, e);
            }
        }
    }

    let total = total_start.elapsed();
    let monitorable = counts[0] + counts[1] + counts[2];
    let _ = writeln!(
        out,
        "monitorable={} non-monitorable={}",
        monitorable, counts[3]
    );
    let _ = writeln!(
        out,
        "positive={} negative={} neutral={}",
        counts[0], counts[1], counts[2]
    );
    let _ = writeln!(
        out,
        "total: {:.3}s ({} formulas, {} skipped, {} expectation mismatches)",
        total.as_secs_f64(),
        entries.len(),
        skipped,
        mismatches
    );

    let exit_code = if skipped > 0 {
        5
    } else if mismatches > 0 {
        1
    } else {
        0
    };
    BenchOutcome {
        output: out,
        csv,
        skipped,
        mismatches,
        exit_code,
    }
}

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Process exit code for a command error: 2 for input problems, 3 for
/// internal invariant violations, 4 for I/O.
pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::UnknownPropositions { .. }
        | Error::UnknownSymbol { .. }
        | Error::TooManyPropositions { .. }
        | Error::UnknownState(_) => 2,
        Error::Internal(_) | Error::ApiMisuse(_) => 3,
        Error::Io(_) => 4,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn analyze_text_mentions_all_verdicts() {
        let out = cmd_analyze("<>p", false, false).unwrap();
        assert!(out.contains("positively monitorable"), "{out}");
        assert!(out.contains("two-valued: monitorable"), "{out}");

        let out = cmd_analyze("[]<>p", false, false).unwrap();
        assert!(out.contains("four-valued: non-monitorable"), "{out}");
        assert!(out.contains("weakly non-monitorable"), "{out}");
    }

    #[test]
    fn analyze_json_is_valid() {
        let out = cmd_analyze("p U q", true, false).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict4"], "neutrally monitorable");
        assert_eq!(v["monitorable"], true);
        assert_eq!(v["states"], 3);
    }

    #[test]
    fn analyze_stage_dump() {
        let out = cmd_analyze("p U q", false, true).unwrap();
        assert!(out.contains("stages: nba="), "{out}");
        assert!(out.contains("minimized=3"), "{out}");
        let out = cmd_analyze("p U q", true, true).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["stages"]["minimized"], 3);
    }

    #[test]
    fn analyze_propagates_parse_errors_with_exit_2() {
        let err = cmd_analyze("p &&", false, false).unwrap_err();
        assert_eq!(exit_code_for(&err), 2);
    }

    #[test]
    fn run_command_reports_removability() {
        let out = cmd_run(
            "G F r || (!n -> X !b)",
            "-\nb\nr\nr\n",
            HandlerPolicy::BOTH,
            false,
        )
        .unwrap();
        assert!(out.contains("first removable at event 2"), "{out}");
        assert!(out.contains("events saved: 2"), "{out}");
    }

    #[test]
    fn run_command_empty_trace() {
        let out = cmd_run("p U q", "", HandlerPolicy::BOTH, false).unwrap();
        assert!(out.contains("initial: verdict +"), "{out}");
        assert!(out.contains("final: RUNNING"), "{out}");
    }

    #[test]
    fn bench_counts_and_exit_codes() {
        let corpus = "\
<>p # @expect: positive
[]p # @expect: negative
p U q
[]<>p
p &&
";
        let outcome = cmd_bench(corpus, false);
        assert_eq!(outcome.skipped, 1);
        assert_eq!(outcome.mismatches, 0);
        assert_eq!(outcome.exit_code, 5);
        assert!(outcome.output.contains("monitorable=3 non-monitorable=1"), "{}", outcome.output);
        assert!(outcome.output.contains("positive=1 negative=1 neutral=1"), "{}", outcome.output);

        let outcome = cmd_bench("<>p # @expect: negative\n", false);
        assert_eq!(outcome.mismatches, 1);
        assert_eq!(outcome.exit_code, 1);

        let outcome = cmd_bench("<>p # @expect: positive\n", true);
        assert_eq!(outcome.exit_code, 0);
        // summary only: counts, class counts, total line
        assert_eq!(outcome.output.lines().count(), 3, "{}", outcome.output);
        assert_eq!(outcome.csv.lines().count(), 2);
    }
}
