//! Disjunctive-normal-form labels for edge symbol sets.
//!
//! A set of symbols (minterms over the alphabet's propositions) is
//! compressed by repeatedly merging cube pairs that differ in exactly
//! one cared-for bit, then dropping subsumed cubes. Merging keeps the
//! covered set exact; no prime-implicant covering pass runs on top, so
//! the result is not always minimal but is cheap and deterministic.

use crate::ltl::{Alphabet, Symbol};

/// `values` is meaningful only on `care` bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Cube {
    care: u64,
    values: u64,
}

impl Cube {
    fn covers(self, other: Cube) -> bool {
        self.care & other.care == self.care && (self.values ^ other.values) & self.care == 0
    }
}

fn merge_step(cubes: &[Cube]) -> Option<Vec<Cube>> {
    let mut merged_away = vec![false; cubes.len()];
    let mut out: Vec<Cube> = Vec::new();
    let mut any = false;
    for i in 0..cubes.len() {
        for j in i + 1..cubes.len() {
            let (a, b) = (cubes[i], cubes[j]);
            if a.care != b.care {
                continue;
            }
            let diff = (a.values ^ b.values) & a.care;
            if diff.count_ones() == 1 {
                out.push(Cube {
                    care: a.care & !diff,
                    values: a.values & !diff,
                });
                merged_away[i] = true;
                merged_away[j] = true;
                any = true;
            }
        }
    }
    if !any {
        return None;
    }
    for (i, c) in cubes.iter().enumerate() {
        if !merged_away[i] {
            out.push(*c);
        }
    }
    out.sort_unstable();
    out.dedup();
    Some(out)
}

/// Renders the exact propositional formula covering `symbols`.
pub(crate) fn dnf_label(alphabet: &Alphabet, symbols: &[Symbol]) -> String {
    assert!(!symbols.is_empty(), "an edge must carry at least one symbol");
    let full: u64 = (alphabet.symbol_count() - 1) as u64;
    let mut cubes: Vec<Cube> = symbols
        .iter()
        .map(|s| Cube {
            care: full,
            values: s.bits(),
        })
        .collect();
    cubes.sort_unstable();
    cubes.dedup();

    while let Some(next) = merge_step(&cubes) {
        cubes = next;
    }
    // drop cubes strictly covered by another cube
    let kept: Vec<Cube> = cubes
        .iter()
        .copied()
        .filter(|c| {
            !cubes
                .iter()
                .any(|other| other != c && other.covers(*c))
        })
        .collect();

    let cube_text = |c: Cube| -> String {
        if c.care == 0 {
            return "true".into();
        }
        let mut parts = Vec::new();
        for (i, p) in alphabet.propositions().iter().enumerate() {
            let bit = 1u64 << i;
            if c.care & bit != 0 {
                if c.values & bit != 0 {
                    parts.push(p.to_string());
                } else {
                    parts.push(format!("!{p}"));
                }
            }
        }
        parts.join(" & ")
    };

    kept.iter()
        .map(|&c| cube_text(c))
        .collect::<Vec<_>>()
        .join(" | ")
}
