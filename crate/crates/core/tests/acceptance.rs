//! Acceptance suite: one test per release criterion, each printing a
//! single PASS line (run with `--nocapture` to see them; failures panic
//! and fail the build).

mod common;

use std::time::{Duration, Instant};

use common::{oracle_formulas, random_lasso, word, words_up_to, BASIC, PHI};
use ltlmon::cli::cmd_bench;
use ltlmon::corpus::parse_corpus;
use ltlmon::ltl::eval_lasso;
use ltlmon::monitorability::{
    monitorability2, monitorability4, state_weak_monitorability, vtom, weak_monitorability2,
    Monitorability4,
};
use ltlmon::runtime::{open_session, HandlerPolicy, SessionStatus};
use ltlmon::{Monitor, Verdict6};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn pass(criterion: usize, detail: &str) {
    println!("criterion {criterion} PASS: {detail}");
}

fn monitor(text: &str) -> Monitor {
    Monitor::parse_and_build(text).unwrap()
}

// forward reachability of the two final verdicts from q, coded without
// the vtom shortcut
fn reachable_finals(m: &Monitor, q: u32) -> (bool, bool) {
    let mut seen = vec![false; m.state_count()];
    let mut stack = vec![q];
    seen[q as usize] = true;
    let (mut reach_true, mut reach_false) = (false, false);
    while let Some(v) = stack.pop() {
        match m.output(v) {
            Verdict6::True => reach_true = true,
            Verdict6::False => reach_false = true,
            _ => {}
        }
        for s in m.alphabet().symbols() {
            let t = m.step(v, s);
            if !seen[t as usize] {
                seen[t as usize] = true;
                stack.push(t);
            }
        }
    }
    (reach_true, reach_false)
}

#[test]
fn criterion_1_basic_connective_verdicts() {
    let start = Instant::now();
    let cases = [
        ("F p", Monitorability4::Positive),
        ("G p", Monitorability4::Negative),
        ("p U q", Monitorability4::Neutral),
        ("G F p", Monitorability4::Non),
    ];
    for (text, expected) in cases {
        assert_eq!(monitorability4(&monitor(text)), expected, "{text}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(1, &format!("F/G/U/GF verdicts exact in {elapsed:?}"));
}

#[test]
fn criterion_2_running_example_verdicts() {
    let start = Instant::now();
    let expected = [
        Monitorability4::Neutral,
        Monitorability4::Non,
        Monitorability4::Positive,
        Monitorability4::Negative,
        Monitorability4::Neutral,
        Monitorability4::Non,
    ];
    for (text, expected) in PHI.iter().zip(expected) {
        assert_eq!(monitorability4(&monitor(text)), expected, "{text}");
    }
    assert!(!weak_monitorability2(&monitor(PHI[1])), "phi2 must be weakly non-monitorable");
    assert!(weak_monitorability2(&monitor(PHI[5])), "phi6 must be weakly monitorable");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass(2, &format!("phi1..phi6 verdicts and weak verdicts exact in {elapsed:?}"));
}

#[test]
fn criterion_3_pattern_corpus_counts() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/dwyer_patterns.ltl");
    let text = std::fs::read_to_string(path).unwrap();

    let entries = parse_corpus(&text);
    assert_eq!(entries.len(), 97, "corpus must hold 97 formulas");
    // the elevator property sits at entry 6, as in the source appendix
    let elevator = &entries[5];
    assert!(elevator.text.contains("atfloor"), "entry 6 must be the elevator property");
    assert_eq!(
        monitorability4(&monitor(&elevator.text)),
        Monitorability4::Negative,
        "elevator property must report negatively monitorable"
    );

    let start = Instant::now();
    let outcome = cmd_bench(&text, true);
    let elapsed = start.elapsed();
    assert_eq!(outcome.exit_code, 0, "bench output:\n{}", outcome.output);
    assert!(
        outcome.output.contains("monitorable=55 non-monitorable=42"),
        "bench output:\n{}",
        outcome.output
    );
    assert!(
        outcome.output.contains("positive=6 negative=40 neutral=9"),
        "bench output:\n{}",
        outcome.output
    );
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    pass(3, &format!("97-pattern corpus: 55/42 split, 6/40/9 classes, elevator negative, in {elapsed:?}"));
}

#[test]
fn criterion_4_phi6_monitor_shape() {
    let m = monitor(PHI[5]);
    assert_eq!(m.state_count(), 4, "phi6 monitor must have exactly 4 states");
    let mut outputs: Vec<Verdict6> = m.states().map(|q| m.output(q)).collect();
    outputs.sort();
    assert_eq!(
        outputs,
        vec![
            Verdict6::True,
            Verdict6::PossiblyTrue,
            Verdict6::PossiblyTrue,
            Verdict6::Inconclusive,
        ]
    );
    pass(4, "phi6 monitor: 4 states with outputs {∓, ∓, ×, ⊤}");
}

#[test]
fn criterion_5_oracle_soundness() {
    let start = Instant::now();
    let formulas = oracle_formulas();
    assert!(formulas.len() >= 20);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked_words = 0usize;

    for f in &formulas {
        let a = f.alphabet().unwrap();
        let m = Monitor::from_formula(f).unwrap();

        // per-state facts, computed once
        let finals: Vec<(bool, bool)> = m.states().map(|q| reachable_finals(&m, q)).collect();
        let within = |q: u32, depth: usize, target: Verdict6| -> bool {
            let mut frontier = vec![q];
            let mut seen = vec![false; m.state_count()];
            seen[q as usize] = true;
            if m.output(q) == target {
                return true;
            }
            for _ in 0..depth {
                let mut next = Vec::new();
                for &v in &frontier {
                    for s in m.alphabet().symbols() {
                        let t = m.step(v, s);
                        if !seen[t as usize] {
                            seen[t as usize] = true;
                            if m.output(t) == target {
                                return true;
                            }
                            next.push(t);
                        }
                    }
                }
                frontier = next;
            }
            false
        };

        for w in words_up_to(&a, 4) {
            checked_words += 1;
            let u = word(&a, &w);
            let state = {
                let mut q = m.initial_state();
                for &s in &w {
                    q = m.step(q, s);
                }
                q
            };
            match m.output(state) {
                Verdict6::True => {
                    for _ in 0..50 {
                        let tail = random_lasso(&mut rng, &a);
                        assert!(
                            eval_lasso(f, &tail.prepended(&u)),
                            "{f}: ⊤ at {w:?} refuted by a continuation"
                        );
                    }
                }
                Verdict6::False => {
                    for _ in 0..50 {
                        let tail = random_lasso(&mut rng, &a);
                        assert!(
                            !eval_lasso(f, &tail.prepended(&u)),
                            "{f}: ⊥ at {w:?} refuted by a continuation"
                        );
                    }
                }
                Verdict6::PossiblyConclusive => {
                    assert!(
                        within(state, 3, Verdict6::True) && within(state, 3, Verdict6::False),
                        "{f}: + at {w:?} lacks a ⊤- or ⊥-reaching extension within depth 3"
                    );
                }
                Verdict6::Inconclusive => {
                    assert!(
                        !within(state, 4, Verdict6::True) && !within(state, 4, Verdict6::False),
                        "{f}: × at {w:?} has a final extension within depth 4"
                    );
                }
                _ => {
                    // ∓/± are validated via the reachability table
                    let (rt, rf) = finals[state as usize];
                    match m.output(state) {
                        Verdict6::PossiblyTrue => assert!(rt && !rf, "{f} at {w:?}"),
                        Verdict6::PossiblyFalse => assert!(!rt && rf, "{f} at {w:?}"),
                        _ => unreachable!(),
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(
        5,
        &format!(
            "oracle soundness over {} formulas / {checked_words} words in {elapsed:?}",
            formulas.len()
        ),
    );
}

#[test]
fn criterion_6_cross_path_equalities() {
    let formulas = oracle_formulas();
    for f in &formulas {
        let m = Monitor::from_formula(f).unwrap();

        // vtom versus independent reachability, per state
        for q in m.states() {
            let by_vtom = state_weak_monitorability(&m, q as usize).unwrap();
            let by_reach = match reachable_finals(&m, q) {
                (true, false) => Monitorability4::Positive,
                (false, true) => Monitorability4::Negative,
                (true, true) => Monitorability4::Neutral,
                (false, false) => Monitorability4::Non,
            };
            assert_eq!(by_vtom, by_reach, "{f} state {q}");
            assert_eq!(by_vtom, vtom(m.output(q)), "{f} state {q}");
        }

        // two-valued monitorability equals "every reachable state weakly
        // monitorable"
        let all_weak = m
            .states()
            .all(|q| vtom(m.output(q)) != Monitorability4::Non);
        assert_eq!(monitorability2(&m), all_weak, "{f}");

        // four-valued duality under negation
        let m_neg = Monitor::from_formula(&f.clone().negate()).unwrap();
        let expected = match monitorability4(&m) {
            Monitorability4::Positive => Monitorability4::Negative,
            Monitorability4::Negative => Monitorability4::Positive,
            other => other,
        };
        assert_eq!(monitorability4(&m_neg), expected, "{f}");

        // informativeness: a positive verdict means ⊤ is reachable and ⊥
        // never is; dually for negative; neutral sees both
        let has = |v: Verdict6| m.states().any(|q| m.output(q) == v);
        match monitorability4(&m) {
            Monitorability4::Positive => {
                assert!(has(Verdict6::True) && !has(Verdict6::False), "{f}")
            }
            Monitorability4::Negative => {
                assert!(has(Verdict6::False) && !has(Verdict6::True), "{f}")
            }
            Monitorability4::Neutral => {
                assert!(has(Verdict6::True) && has(Verdict6::False), "{f}")
            }
            Monitorability4::Non => {}
        }
    }
    pass(6, &format!("vtom/reachability, two-valued, and duality equalities on {} formulas", formulas.len()));
}

#[test]
fn criterion_7_minimization_correctness() {
    use ltlmon::automata::{ltl_to_nba, minimize, nba_to_dfa, product_monitor};
    let formulas = oracle_formulas();
    for f in &formulas {
        let a = f.alphabet().unwrap();
        let pos = nba_to_dfa(&ltl_to_nba(f, &a).with_nonempty_marks());
        let neg = nba_to_dfa(&ltl_to_nba(&f.clone().negate(), &a).with_nonempty_marks());
        let raw = product_monitor(&pos, &neg).unwrap();
        let min = minimize(&raw);
        assert_eq!(
            minimize(&min).state_count(),
            min.state_count(),
            "{f}: minimize must be idempotent"
        );
        for w in words_up_to(&a, 5) {
            assert_eq!(raw.output_after(&w), min.output_after(&w), "{f} on {w:?}");
        }
    }
    pass(7, &format!("pre/post-minimization outputs identical over all words up to length 5 on {} formulas", formulas.len()));
}

#[test]
fn criterion_8_pruning_soundness() {
    let formulas = oracle_formulas();
    let mut removable_checked = 0usize;
    for f in &formulas {
        let m = Monitor::from_formula(f).unwrap();
        for policy in HandlerPolicy::ALL {
            for q in m.states() {
                // session status is a pure function of the state output
                // and the policy, so probing it per state covers every
                // session that could ever sit on q
                let status = ltlmon::runtime::session_status(m.output(q), policy);
                if !matches!(status, SessionStatus::Removable(_)) {
                    continue;
                }
                removable_checked += 1;
                // exhaustive depth-4 search: no registered handler may
                // become able to fire
                let mut frontier = vec![q];
                let mut seen = vec![false; m.state_count()];
                seen[q as usize] = true;
                for _ in 0..4 {
                    let mut next = Vec::new();
                    for &v in &frontier {
                        for s in m.alphabet().symbols() {
                            let t = m.step(v, s);
                            if seen[t as usize] {
                                continue;
                            }
                            seen[t as usize] = true;
                            if policy.satisfaction {
                                assert_ne!(
                                    m.output(t),
                                    Verdict6::True,
                                    "{f}: removable state {q} can still fire the satisfaction handler"
                                );
                            }
                            if policy.violation {
                                assert_ne!(
                                    m.output(t),
                                    Verdict6::False,
                                    "{f}: removable state {q} can still fire the violation handler"
                                );
                            }
                            next.push(t);
                        }
                    }
                    frontier = next;
                }
            }
        }
    }
    pass(8, &format!("{removable_checked} removable (state, policy) pairs confirmed by depth-4 search"));
}

#[test]
fn runtime_examples_from_the_analysis() {
    // supporting checks that tie the suites together: session behavior
    // on the running examples
    let phi6 = monitor(PHI[5]);
    let trace = ltlmon::runtime::parse_trace("-\nb\nr\nr\n", phi6.alphabet()).unwrap();
    let report = ltlmon::runtime::run_trace(&phi6, &trace, HandlerPolicy::BOTH).unwrap();
    assert_eq!(report.first_removable, Some(2));
    assert_eq!(report.events_saved, 2);

    for text in BASIC {
        let m = monitor(text);
        let s = open_session(&m, HandlerPolicy::BOTH);
        match text {
            "G F p" => assert!(matches!(s.status(), SessionStatus::Removable(_))),
            _ => assert_eq!(s.status(), SessionStatus::Running),
        }
    }
}
