//! Three-valued monitors: the DFA product and Moore minimization.

use super::dfa::Dfa;
use crate::error::Error;
use crate::ltl::{Alphabet, Symbol};

/// Three-valued verdict attached to monitor states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict3 {
    True,
    False,
    Inconclusive,
}

impl std::fmt::Display for Verdict3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict3::True => write!(f, "⊤"),
            Verdict3::False => write!(f, "⊥"),
            Verdict3::Inconclusive => write!(f, "?"),
        }
    }
}

/// Deterministic, total Moore machine with three-valued outputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fsm3 {
    alphabet: Alphabet,
    /// `transitions[q][symbol_bits]`, total.
    transitions: Vec<Vec<u32>>,
    initial: u32,
    outputs: Vec<Verdict3>,
}

impl Fsm3 {
    pub(crate) fn new(
        alphabet: Alphabet,
        transitions: Vec<Vec<u32>>,
        initial: u32,
        outputs: Vec<Verdict3>,
    ) -> Self {
        Self {
            alphabet,
            transitions,
            initial,
            outputs,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial_state(&self) -> u32 {
        self.initial
    }

    pub fn step(&self, q: u32, s: Symbol) -> u32 {
        self.transitions[q as usize][s.bits() as usize]
    }

    pub fn output(&self, q: u32) -> Verdict3 {
        self.outputs[q as usize]
    }

    /// Output after reading the word from the initial state.
    pub fn output_after(&self, word: &[Symbol]) -> Verdict3 {
        let mut q = self.initial;
        for &s in word {
            q = self.step(q, s);
        }
        self.output(q)
    }
}

/// Builds the three-valued monitor as the product of the two prefix
/// DFAs: `a_pos` accepts the words with some satisfying extension,
/// `a_neg` those with some violating extension.
///
/// A pair rejecting in both DFAs cannot be reached for a correctly
/// constructed pipeline (every finite word has some infinite extension);
/// encountering one reports an internal error rather than masking the
/// bug.
pub fn product_monitor(a_pos: &Dfa, a_neg: &Dfa) -> Result<Fsm3, Error> {
    assert_eq!(
        a_pos.alphabet(),
        a_neg.alphabet(),
        "product requires a shared alphabet"
    );
    let alphabet = a_pos.alphabet().clone();
    let symbol_count = alphabet.symbol_count();

    let mut ids = std::collections::HashMap::new();
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    let mut outputs = Vec::new();
    let mut transitions: Vec<Vec<u32>> = Vec::new();

    let classify = |s: u32, t: u32| -> Result<Verdict3, Error> {
        match (a_pos.is_accepting(s), a_neg.is_accepting(t)) {
            (true, false) => Ok(Verdict3::True),
            (false, true) => Ok(Verdict3::False),
            (true, true) => Ok(Verdict3::Inconclusive),
            (false, false) => Err(Error::Internal(
                "product state rejects in both prefix automata".into(),
            )),
        }
    };

    let root = (a_pos.initial_state(), a_neg.initial_state());
    ids.insert(root, 0u32);
    pairs.push(root);
    outputs.push(classify(root.0, root.1)?);

    let mut next = 0usize;
    while next < pairs.len() {
        let (s, t) = pairs[next];
        let mut row = Vec::with_capacity(symbol_count);
        for bits in 0..symbol_count as u64 {
            let sym = Symbol(bits);
            let target = (a_pos.step(s, sym), a_neg.step(t, sym));
            let id = match ids.get(&target) {
                Some(&id) => id,
                None => {
                    let id = pairs.len() as u32;
                    ids.insert(target, id);
                    pairs.push(target);
                    outputs.push(classify(target.0, target.1)?);
                    id
                }
            };
            row.push(id);
        }
        transitions.push(row);
        next += 1;
    }

    Ok(Fsm3::new(alphabet, transitions, 0, outputs))
}

/// Output-preserving Moore minimization by partition refinement.
///
/// The result outputs the same verdict as `m` on every finite word and
/// has the minimum number of states among equivalent total deterministic
/// machines.
pub fn minimize(m: &Fsm3) -> Fsm3 {
    let n = m.state_count();
    let symbol_count = m.alphabet().symbol_count();

    // seed by output, then refine by successor blocks until stable
    let mut block = vec![0u32; n];
    let mut block_count = {
        let mut seen: Vec<Verdict3> = Vec::new();
        for (q, slot) in block.iter_mut().enumerate() {
            let v = m.output(q as u32);
            let b = match seen.iter().position(|&x| x == v) {
                Some(b) => b,
                None => {
                    seen.push(v);
                    seen.len() - 1
                }
            };
            *slot = b as u32;
        }
        seen.len()
    };

    loop {
        let mut signature_ids: std::collections::HashMap<Vec<u32>, u32> =
            std::collections::HashMap::new();
        let mut next_block = vec![0u32; n];
        for q in 0..n {
            let mut sig = Vec::with_capacity(symbol_count + 1);
            sig.push(block[q]);
            for bits in 0..symbol_count as u64 {
                sig.push(block[m.step(q as u32, Symbol(bits)) as usize]);
            }
            let fresh = signature_ids.len() as u32;
            let id = *signature_ids.entry(sig).or_insert(fresh);
            next_block[q] = id;
        }
        let next_count = signature_ids.len();
        if next_count == block_count {
            block = next_block;
            break;
        }
        block = next_block;
        block_count = next_count;
    }

    // quotient machine; block ids were assigned scanning states in order,
    // so numbering is deterministic
    let mut transitions = vec![Vec::new(); block_count];
    let mut outputs = vec![Verdict3::Inconclusive; block_count];
    let mut done = vec![false; block_count];
    for (q, &b) in block.iter().enumerate() {
        let b = b as usize;
        if done[b] {
            continue;
        }
        done[b] = true;
        outputs[b] = m.output(q as u32);
        let mut row = Vec::with_capacity(symbol_count);
        for bits in 0..symbol_count as u64 {
            row.push(block[m.step(q as u32, Symbol(bits)) as usize]);
        }
        transitions[b] = row;
    }

    Fsm3::new(
        m.alphabet().clone(),
        transitions,
        block[m.initial_state() as usize],
        outputs,
    )
}
