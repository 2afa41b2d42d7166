//! Shared helpers for the integration and acceptance suites.
#![allow(dead_code)] // each test binary uses a different subset

use ltlmon::ltl::{Alphabet, FiniteWord, Formula, LassoWord, Symbol};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The running examples used across the test suites.
pub const PHI: [&str; 6] = [
    "(r && F u) -> ((!b && !u) U n) U u",
    "F r -> G F n",
    "r -> F u",
    "G (r -> !u U n)",
    "r -> !u U n",
    "G F r || (!n -> X !b)",
];

pub const BASIC: [&str; 4] = ["F p", "G p", "p U q", "G F p"];

/// The fixed 20-formula oracle set: the six running examples, four basic
/// connectives, and ten seeded random formulas of size at most six.
pub fn oracle_formulas() -> Vec<Formula> {
    let mut set: Vec<Formula> = PHI
        .iter()
        .chain(BASIC.iter())
        .map(|t| t.parse().unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6d6f6e31);
    while set.len() < 20 {
        let f = random_formula(&mut rng, 6);
        if f.alphabet().unwrap().is_empty() {
            continue; // keep at least one proposition in play
        }
        set.push(f);
    }
    set
}

pub fn random_formula(rng: &mut ChaCha8Rng, budget: usize) -> Formula {
    let atoms = ["p", "q", "r"];
    let leaf = |rng: &mut ChaCha8Rng| match rng.gen_range(0..5) {
        0 => Formula::True,
        1 => Formula::False,
        _ => Formula::atom(atoms[rng.gen_range(0..atoms.len())]),
    };
    if budget <= 1 {
        return leaf(rng);
    }
    let choice = if budget >= 3 {
        rng.gen_range(0..10)
    } else {
        rng.gen_range(0..5) // no binary operators with budget 2
    };
    match choice {
        0 => leaf(rng),
        1 => random_formula(rng, budget - 1).negate(),
        2 => Formula::next(random_formula(rng, budget - 1)),
        3 => Formula::finally(random_formula(rng, budget - 1)),
        4 => Formula::globally(random_formula(rng, budget - 1)),
        k => {
            let left = rng.gen_range(1..=budget - 2);
            let a = random_formula(rng, left);
            let b = random_formula(rng, budget - 1 - left);
            match k {
                5 => a.and(b),
                6 => a.or(b),
                7 => a.implies(b),
                8 => a.until(b),
                _ => a.release(b),
            }
        }
    }
}

/// All words over `a` with length at most `max_len`, as symbol vectors.
pub fn words_up_to(a: &Alphabet, max_len: usize) -> Vec<Vec<Symbol>> {
    let symbols: Vec<Symbol> = a.symbols().collect();
    let mut all: Vec<Vec<Symbol>> = vec![vec![]];
    let mut frontier: Vec<Vec<Symbol>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &s in &symbols {
                let mut w2 = w.clone();
                w2.push(s);
                next.push(w2);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

pub fn word(a: &Alphabet, symbols: &[Symbol]) -> FiniteWord {
    FiniteWord::new(a.clone(), symbols.to_vec())
}

/// A random lasso with prefix length 0..=2 and cycle length 1..=2.
pub fn random_lasso(rng: &mut ChaCha8Rng, a: &Alphabet) -> LassoWord {
    let universe: Vec<Symbol> = a.symbols().collect();
    let prefix_len = rng.gen_range(0..=2);
    let cycle_len = rng.gen_range(1..=2);
    let mut pick = |len: usize| -> FiniteWord {
        let symbols = (0..len)
            .map(|_| universe[rng.gen_range(0..universe.len())])
            .collect();
        FiniteWord::new(a.clone(), symbols)
    };
    let prefix = pick(prefix_len);
    let cycle = pick(cycle_len);
    LassoWord::new(prefix, cycle).unwrap()
}
