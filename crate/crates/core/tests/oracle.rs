//! Cross-checks of the automata pipeline against the direct lasso
//! evaluator and against naively coded reference algorithms.

mod common;

use common::{oracle_formulas, random_lasso, words_up_to, PHI};
use ltlmon::automata::{
    ltl_to_nba, minimize, nba_accepts_lasso, nba_to_dfa, nonempty_states, product_monitor, Nba,
    Verdict3,
};
use ltlmon::ltl::{eval_lasso, Alphabet, AtomicProposition, Formula};
use ltlmon::Monitor;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn nba_lasso_acceptance_matches_eval_lasso() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for text in PHI {
        let f: Formula = text.parse().unwrap();
        let a = f.alphabet().unwrap();
        let nba = ltl_to_nba(&f, &a);
        for _ in 0..200 {
            let w = random_lasso(&mut rng, &a);
            assert_eq!(
                nba_accepts_lasso(&nba, &w),
                eval_lasso(&f, &w),
                "{text} on {w}"
            );
        }
    }
}

#[test]
fn nba_lasso_acceptance_matches_eval_lasso_on_random_formulas() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for f in oracle_formulas() {
        let a = f.alphabet().unwrap();
        let nba = ltl_to_nba(&f, &a);
        for _ in 0..100 {
            let w = random_lasso(&mut rng, &a);
            assert_eq!(nba_accepts_lasso(&nba, &w), eval_lasso(&f, &w), "{f} on {w}");
        }
    }
}

// naive per-state emptiness: from q, search for an accepting state f
// reachable from q that lies on a cycle (DFS for a path f -> f of
// length >= 1)
fn naive_nonempty(nba: &Nba) -> Vec<bool> {
    let n = nba.state_count();
    let adj: Vec<Vec<u32>> = (0..n as u32)
        .map(|q| {
            let mut all: Vec<u32> = nba
                .alphabet()
                .symbols()
                .flat_map(|s| nba.successors(q, s).to_vec())
                .collect();
            all.sort_unstable();
            all.dedup();
            all
        })
        .collect();
    let reachable_from = |start: u32| -> Vec<bool> {
        let mut seen = vec![false; n];
        let mut stack = vec![start];
        seen[start as usize] = true;
        while let Some(v) = stack.pop() {
            for &t in &adj[v as usize] {
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    stack.push(t);
                }
            }
        }
        seen
    };
    (0..n as u32)
        .map(|q| {
            let from_q = reachable_from(q);
            (0..n as u32).any(|f| {
                nba.is_accepting(f)
                    && from_q[f as usize]
                    && adj[f as usize].iter().any(|&t| reachable_from(t)[f as usize])
            })
        })
        .collect()
}

#[test]
fn nonempty_states_agrees_with_naive_cycle_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let alphabet = Alphabet::new([AtomicProposition::new("p")]).unwrap();
    for round in 0..250 {
        let n = rng.gen_range(1..=12usize);
        let transitions: Vec<Vec<Vec<u32>>> = (0..n)
            .map(|_| {
                (0..alphabet.symbol_count())
                    .map(|_| {
                        let degree = rng.gen_range(0..=2);
                        let mut targets: Vec<u32> =
                            (0..degree).map(|_| rng.gen_range(0..n as u32)).collect();
                        targets.sort_unstable();
                        targets.dedup();
                        targets
                    })
                    .collect()
            })
            .collect();
        let accepting: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.3)).collect();
        let nba = Nba::new(alphabet.clone(), transitions, vec![0], accepting).unwrap();
        assert_eq!(
            nonempty_states(&nba),
            naive_nonempty(&nba),
            "round {round}, {n} states"
        );
    }
}

#[test]
fn dfa_accepts_exactly_the_non_bad_prefixes_of_the_monitor() {
    for text in PHI {
        let f: Formula = text.parse().unwrap();
        let a = f.alphabet().unwrap();
        let dfa = nba_to_dfa(&ltl_to_nba(&f, &a).with_nonempty_marks());
        let monitor = Monitor::from_formula(&f).unwrap();
        for w in words_up_to(&a, 4) {
            let not_bad = monitor
                .read_word(&common::word(&a, &w))
                .unwrap()
                != ltlmon::Verdict6::False;
            assert_eq!(dfa.accepts(&w), not_bad, "{text} on {w:?}");
        }
    }
}

#[test]
fn product_outputs_are_sound_for_sampled_extensions() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for text in PHI {
        let f: Formula = text.parse().unwrap();
        let a = f.alphabet().unwrap();
        let pos = nba_to_dfa(&ltl_to_nba(&f, &a).with_nonempty_marks());
        let neg = nba_to_dfa(&ltl_to_nba(&f.clone().negate(), &a).with_nonempty_marks());
        let product = product_monitor(&pos, &neg).unwrap();
        for w in words_up_to(&a, 3) {
            let verdict = product.output_after(&w);
            if verdict == Verdict3::Inconclusive {
                continue;
            }
            for _ in 0..20 {
                let tail = random_lasso(&mut rng, &a);
                let whole = tail.prepended(&common::word(&a, &w));
                assert_eq!(
                    eval_lasso(&f, &whole),
                    verdict == Verdict3::True,
                    "{text}: {verdict} at {w:?} refuted by {whole}"
                );
            }
        }
    }
}

#[test]
fn minimization_preserves_outputs_and_is_idempotent() {
    for f in oracle_formulas() {
        let a = f.alphabet().unwrap();
        let pos = nba_to_dfa(&ltl_to_nba(&f, &a).with_nonempty_marks());
        let neg = nba_to_dfa(&ltl_to_nba(&f.clone().negate(), &a).with_nonempty_marks());
        let raw = product_monitor(&pos, &neg).unwrap();
        let min = minimize(&raw);
        assert!(min.state_count() <= raw.state_count());
        assert_eq!(minimize(&min).state_count(), min.state_count(), "{f}");
        for w in words_up_to(&a, 4) {
            assert_eq!(raw.output_after(&w), min.output_after(&w), "{f} on {w:?}");
        }
    }
}

#[test]
fn prefix_classes_partition_and_match_extension_structure() {
    for text in PHI.iter().chain(["F p", "G p", "p U q", "G F p"].iter()) {
        let f: Formula = text.parse().unwrap();
        let a = f.alphabet().unwrap();
        let m = Monitor::from_formula(&f).unwrap();
        for w in words_up_to(&a, 4) {
            let v = m.read_word(&common::word(&a, &w)).unwrap();
            // exactly one of the six classes by construction; check the
            // extension claims for the non-final classes against the
            // one-symbol successor structure
            use ltlmon::Verdict6::*;
            let state = {
                let mut q = m.initial_state();
                for &s in &w {
                    q = m.step(q, s);
                }
                q
            };
            let mut reach_true = false;
            let mut reach_false = false;
            let mut stack = vec![state];
            let mut seen = vec![false; m.state_count()];
            seen[state as usize] = true;
            while let Some(v) = stack.pop() {
                match m.output(v) {
                    True => reach_true = true,
                    False => reach_false = true,
                    _ => {}
                }
                for s in a.symbols() {
                    let t = m.step(v, s);
                    if !seen[t as usize] {
                        seen[t as usize] = true;
                        stack.push(t);
                    }
                }
            }
            let expected = match (m.output(state), reach_true, reach_false) {
                (True, _, _) | (False, _, _) => m.output(state),
                (_, true, false) => PossiblyTrue,
                (_, false, true) => PossiblyFalse,
                (_, true, true) => PossiblyConclusive,
                (_, false, false) => Inconclusive,
            };
            assert_eq!(v, expected, "{text} on {w:?}");
        }
    }
}
