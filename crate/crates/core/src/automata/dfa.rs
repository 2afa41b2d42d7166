//! Determinization of marked Büchi automata over finite words.

use std::collections::HashMap;

use super::nba::Nba;
use crate::ltl::{Alphabet, Symbol};

/// Deterministic, total finite automaton produced by the reachable
/// powerset construction. Each state remembers the NBA state subset it
/// stands for.
#[derive(Debug, Clone)]
pub struct Dfa {
    alphabet: Alphabet,
    subsets: Vec<Vec<u32>>,
    /// `transitions[q][symbol_bits]`, total over the alphabet.
    transitions: Vec<Vec<u32>>,
    initial: u32,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial_state(&self) -> u32 {
        self.initial
    }

    pub fn is_accepting(&self, q: u32) -> bool {
        self.accepting[q as usize]
    }

    pub fn step(&self, q: u32, s: Symbol) -> u32 {
        self.transitions[q as usize][s.bits() as usize]
    }

    /// The NBA states this DFA state stands for. Subsets are closed
    /// under the mark-preserving bisimulation used to compress the NBA
    /// before determinization.
    pub fn subset(&self, q: u32) -> &[u32] {
        &self.subsets[q as usize]
    }

    /// True iff the DFA accepts the finite word given as symbols.
    pub fn accepts(&self, word: &[Symbol]) -> bool {
        let mut q = self.initial;
        for &s in word {
            q = self.step(q, s);
        }
        self.is_accepting(q)
    }
}

// Partition of the kept NBA states by mark-preserving bisimulation.
// Two states end up in one block only if they carry the same mark and
// have block-equal successor sets on every symbol, so the quotient NFA
// accepts exactly the same finite words. This collapses the counter
// levels introduced by degeneralization before the exponential step.
struct Quotient {
    block_of: Vec<u32>,
    block_count: usize,
}

fn bisimulation_quotient(nba: &Nba, keep: &[bool], marks: &[bool]) -> Quotient {
    let n = nba.state_count();
    let mut block_of: Vec<u32> = (0..n)
        .map(|q| if keep[q] && marks[q] { 1 } else { 0 })
        .collect();

    loop {
        let mut ids: HashMap<(u32, Vec<Vec<u32>>), u32> = HashMap::new();
        let mut next = vec![0u32; n];
        for q in 0..n {
            if !keep[q] {
                continue; // dropped states keep block 0 and are never explored
            }
            let mut sig = Vec::with_capacity(nba.alphabet().symbol_count());
            for s in nba.alphabet().symbols() {
                let mut succ: Vec<u32> = nba
                    .successors(q as u32, s)
                    .iter()
                    .filter(|&&t| keep[t as usize])
                    .map(|&t| block_of[t as usize])
                    .collect();
                succ.sort_unstable();
                succ.dedup();
                sig.push(succ);
            }
            let fresh = ids.len() as u32;
            next[q] = *ids.entry((block_of[q], sig)).or_insert(fresh);
        }
        let count = ids.len();
        // a refinement round renumbers canonically, so an unchanged
        // partition reproduces the same vector
        if next == block_of {
            return Quotient {
                block_of: next,
                block_count: count,
            };
        }
        block_of = next;
    }
}

/// Powerset construction over the nonemptiness-marked NBA.
///
/// The NFA view accepts a finite word iff some run ends in a marked
/// state, i.e. iff the word has some infinite extension in the Büchi
/// language. States that cannot reach a marked state contribute nothing
/// to any extension and are dropped before building subsets; the empty
/// subset then acts as the rejecting sink that keeps the DFA total.
pub fn nba_to_dfa(nba: &Nba) -> Dfa {
    let marks = nba
        .nonempty_marks()
        .expect("nonempty marks must be computed before determinization");
    let n = nba.state_count();
    let symbol_count = nba.alphabet().symbol_count();

    // keep only states from which a marked state is reachable
    let mut keep = vec![false; n];
    {
        let mut reverse: Vec<Vec<u32>> = vec![Vec::new(); n];
        for q in 0..n as u32 {
            for s in nba.alphabet().symbols() {
                for &t in nba.successors(q, s) {
                    reverse[t as usize].push(q);
                }
            }
        }
        let mut queue: Vec<u32> = (0..n as u32).filter(|&q| marks[q as usize]).collect();
        for &q in &queue {
            keep[q as usize] = true;
        }
        while let Some(q) = queue.pop() {
            for &p in &reverse[q as usize] {
                if !keep[p as usize] {
                    keep[p as usize] = true;
                    queue.push(p);
                }
            }
        }
    }

    let quotient = bisimulation_quotient(nba, &keep, marks);
    let classes = quotient.block_count;
    let words = classes.div_ceil(64);

    // one representative per class, plus class-level marks and members
    let mut representative: Vec<Option<u32>> = vec![None; classes];
    let mut class_marked = vec![false; classes];
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); classes];
    for q in 0..n {
        if !keep[q] {
            continue;
        }
        let c = quotient.block_of[q] as usize;
        representative[c].get_or_insert(q as u32);
        class_marked[c] |= marks[q];
        members[c].push(q as u32);
    }

    // class-level successor masks per symbol
    let mut succ_mask: Vec<Vec<u64>> = vec![vec![0u64; words]; classes * symbol_count];
    for (c, rep) in representative.iter().enumerate() {
        let Some(rep) = rep else { continue };
        for s in nba.alphabet().symbols() {
            let mask = &mut succ_mask[c * symbol_count + s.bits() as usize];
            for &t in nba.successors(*rep, s) {
                if keep[t as usize] {
                    let b = quotient.block_of[t as usize] as usize;
                    mask[b / 64] |= 1 << (b % 64);
                }
            }
        }
    }

    let subset_accepts = |bits: &[u64]| -> bool {
        (0..classes).any(|c| class_marked[c] && bits[c / 64] & (1 << (c % 64)) != 0)
    };

    let mut ids: HashMap<Box<[u64]>, u32> = HashMap::new();
    let mut subset_bits: Vec<Box<[u64]>> = Vec::new();
    let mut transitions: Vec<Vec<u32>> = Vec::new();
    let mut accepting: Vec<bool> = Vec::new();

    let mut initial_bits = vec![0u64; words];
    for &q in nba.initial_states() {
        if keep[q as usize] {
            let c = quotient.block_of[q as usize] as usize;
            initial_bits[c / 64] |= 1 << (c % 64);
        }
    }
    let initial_key: Box<[u64]> = initial_bits.into_boxed_slice();
    ids.insert(initial_key.clone(), 0);
    accepting.push(subset_accepts(&initial_key));
    subset_bits.push(initial_key);

    let mut next = 0usize;
    while next < subset_bits.len() {
        let current = subset_bits[next].clone();
        let mut row = Vec::with_capacity(symbol_count);
        for sym in 0..symbol_count {
            let mut target = vec![0u64; words];
            for (w, &word_bits) in current.iter().enumerate() {
                let mut bits = word_bits;
                while bits != 0 {
                    let c = w * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    for (tw, &m) in succ_mask[c * symbol_count + sym].iter().enumerate() {
                        target[tw] |= m;
                    }
                }
            }
            let key: Box<[u64]> = target.into_boxed_slice();
            let id = match ids.get(&key) {
                Some(&id) => id,
                None => {
                    let id = subset_bits.len() as u32;
                    ids.insert(key.clone(), id);
                    accepting.push(subset_accepts(&key));
                    subset_bits.push(key);
                    id
                }
            };
            row.push(id);
        }
        transitions.push(row);
        next += 1;
    }

    // expand class subsets back to NBA-state subsets for provenance
    let subsets: Vec<Vec<u32>> = subset_bits
        .iter()
        .map(|bits| {
            let mut states: Vec<u32> = Vec::new();
            for (c, m) in members.iter().enumerate() {
                if bits[c / 64] & (1 << (c % 64)) != 0 {
                    states.extend_from_slice(m);
                }
            }
            states.sort_unstable();
            states
        })
        .collect();

    Dfa {
        alphabet: nba.alphabet().clone(),
        subsets,
        transitions,
        initial: 0,
        accepting,
    }
}
