//! Nondeterministic Büchi automata: translation from LTL, per-state
//! nonemptiness marking, and a lasso membership check.

use super::nnf::NnfArena;
use super::scc::tarjan_scc;
use super::tableau::build_tableau;
use crate::ltl::{Alphabet, Formula, LassoWord, Symbol};

/// A nondeterministic Büchi automaton over an explicit symbol universe.
#[derive(Debug, Clone)]
pub struct Nba {
    alphabet: Alphabet,
    /// `transitions[q][symbol_bits]` lists the successor states, sorted.
    transitions: Vec<Vec<Vec<u32>>>,
    initial: Vec<u32>,
    accepting: Vec<bool>,
    nonempty: Option<Vec<bool>>,
}

impl Nba {
    /// Builds an automaton from explicit parts. `transitions[q]` must
    /// have one successor list per symbol of the alphabet.
    pub fn new(
        alphabet: Alphabet,
        transitions: Vec<Vec<Vec<u32>>>,
        initial: Vec<u32>,
        accepting: Vec<bool>,
    ) -> Result<Self, crate::error::Error> {
        let n = transitions.len();
        let ok = accepting.len() == n
            && initial.iter().all(|&q| (q as usize) < n)
            && transitions.iter().all(|per_symbol| {
                per_symbol.len() == alphabet.symbol_count()
                    && per_symbol
                        .iter()
                        .all(|targets| targets.iter().all(|&t| (t as usize) < n))
            });
        if !ok {
            return Err(crate::error::Error::Internal(
                "malformed automaton components".into(),
            ));
        }
        Ok(Self {
            alphabet,
            transitions,
            initial,
            accepting,
            nonempty: None,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn state_count(&self) -> usize {
        self.transitions.len()
    }

    pub fn initial_states(&self) -> &[u32] {
        &self.initial
    }

    pub fn is_accepting(&self, q: u32) -> bool {
        self.accepting[q as usize]
    }

    pub fn successors(&self, q: u32, s: Symbol) -> &[u32] {
        &self.transitions[q as usize][s.bits() as usize]
    }

    /// Per-state nonemptiness marks; present only after
    /// [`Nba::with_nonempty_marks`].
    pub fn nonempty_marks(&self) -> Option<&[bool]> {
        self.nonempty.as_deref()
    }

    /// Stores the marks computed by [`nonempty_states`] on the automaton.
    pub fn with_nonempty_marks(mut self) -> Self {
        self.nonempty = Some(nonempty_states(&self));
        self
    }

    // Union of successors over all symbols, deduplicated and sorted.
    fn adjacency(&self) -> Vec<Vec<u32>> {
        self.transitions
            .iter()
            .map(|per_symbol| {
                let mut all: Vec<u32> = per_symbol.iter().flatten().copied().collect();
                all.sort_unstable();
                all.dedup();
                all
            })
            .collect()
    }
}

/// Translates `f` into an NBA over `alphabet` with `L(result) = L(f)`.
///
/// Tableau construction over negation normal form with one acceptance
/// set per `Until`, then counter-based degeneralization restricted to
/// the reachable part. Every proposition of `f` must appear in
/// `alphabet`.
pub fn ltl_to_nba(f: &Formula, alphabet: &Alphabet) -> Nba {
    let mut arena = NnfArena::default();
    let root = arena.intern_formula(f, alphabet, false);
    let tableau = build_tableau(&arena, root);

    let sets = &tableau.acceptance;
    let levels = sets.len().max(1);
    let node_count = tableau.node_count;

    // Degeneralized states are reachable (node, level) pairs, discovered
    // breadth-first so state numbering is stable.
    let mut state_of = vec![u32::MAX; node_count * levels];
    let mut states: Vec<(usize, usize)> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    let push = |node: usize, level: usize,
                    state_of: &mut Vec<u32>,
                    states: &mut Vec<(usize, usize)>,
                    queue: &mut std::collections::VecDeque<usize>| {
        let key = node * levels + level;
        if state_of[key] == u32::MAX {
            state_of[key] = states.len() as u32;
            states.push((node, level));
            queue.push_back(states.len() - 1);
        }
        state_of[key]
    };

    let mut initial = Vec::new();
    for &node in &tableau.initial {
        initial.push(push(node, 0, &mut state_of, &mut states, &mut queue));
    }

    let advance = |node: usize, level: usize| -> usize {
        if sets.is_empty() {
            level
        } else if sets[level][node] {
            (level + 1) % levels
        } else {
            level
        }
    };

    let mut succ_states: Vec<Vec<u32>> = Vec::new();
    while let Some(idx) = queue.pop_front() {
        let (node, level) = states[idx];
        let next_level = advance(node, level);
        let mut row = Vec::with_capacity(tableau.successors[node].len());
        for &next in &tableau.successors[node] {
            row.push(push(next, next_level, &mut state_of, &mut states, &mut queue));
        }
        succ_states.push(row);
    }

    let symbol_count = alphabet.symbol_count();
    let mut transitions = Vec::with_capacity(states.len());
    let mut accepting = Vec::with_capacity(states.len());
    for (idx, &(node, level)) in states.iter().enumerate() {
        let pos = tableau.pos_mask[node];
        let neg = tableau.neg_mask[node];
        let mut per_symbol = Vec::with_capacity(symbol_count);
        for bits in 0..symbol_count as u64 {
            if pos & bits == pos && neg & bits == 0 {
                per_symbol.push(succ_states[idx].clone());
            } else {
                per_symbol.push(Vec::new());
            }
        }
        transitions.push(per_symbol);
        accepting.push(if sets.is_empty() {
            true
        } else {
            level == 0 && sets[0][node]
        });
    }

    Nba {
        alphabet: alphabet.clone(),
        transitions,
        initial,
        accepting,
        nonempty: None,
    }
}

/// States from which some accepting run exists.
///
/// A state qualifies iff it reaches a strongly connected component that
/// contains an accepting state and at least one internal transition.
pub fn nonempty_states(nba: &Nba) -> Vec<bool> {
    let n = nba.state_count();
    let adj = nba.adjacency();
    let mut good = vec![false; n];
    for comp in tarjan_scc(&adj) {
        let has_accepting = comp.iter().any(|&q| nba.accepting[q as usize]);
        if !has_accepting {
            continue;
        }
        let has_internal_edge = comp.len() > 1
            || adj[comp[0] as usize].binary_search(&comp[0]).is_ok();
        if has_internal_edge {
            for &q in &comp {
                good[q as usize] = true;
            }
        }
    }

    // propagate backwards: a state is nonempty iff it reaches a good SCC
    let mut reverse: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (q, targets) in adj.iter().enumerate() {
        for &t in targets {
            reverse[t as usize].push(q as u32);
        }
    }
    let mut marked = good;
    let mut queue: Vec<u32> = (0..n as u32).filter(|&q| marked[q as usize]).collect();
    while let Some(q) = queue.pop() {
        for &p in &reverse[q as usize] {
            if !marked[p as usize] {
                marked[p as usize] = true;
                queue.push(p);
            }
        }
    }
    marked
}

/// True iff the NBA accepts `prefix · cycle^ω`.
///
/// Builds the product of the automaton with the lasso's position graph
/// and looks for a reachable cycle through an accepting state.
pub fn nba_accepts_lasso(nba: &Nba, w: &LassoWord) -> bool {
    assert_eq!(
        nba.alphabet(),
        w.alphabet(),
        "lasso alphabet differs from the automaton alphabet"
    );
    let positions = w.positions();
    let n = nba.state_count();
    if n == 0 {
        return false;
    }
    let id = |q: u32, pos: usize| q as usize * positions + pos;

    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n * positions];
    for q in 0..n as u32 {
        for pos in 0..positions {
            let sym = w.symbol_at(pos);
            let next_pos = w.successor(pos);
            for &t in nba.successors(q, sym) {
                adj[id(q, pos)].push(id(t, next_pos) as u32);
            }
        }
    }

    // reachable product nodes from (initial, 0)
    let mut reachable = vec![false; adj.len()];
    let mut queue: Vec<u32> = Vec::new();
    for &q in nba.initial_states() {
        let node = id(q, 0);
        if !reachable[node] {
            reachable[node] = true;
            queue.push(node as u32);
        }
    }
    while let Some(v) = queue.pop() {
        for &t in &adj[v as usize] {
            if !reachable[t as usize] {
                reachable[t as usize] = true;
                queue.push(t);
            }
        }
    }

    for comp in tarjan_scc(&adj) {
        let touches_accepting_reachable = comp.iter().any(|&v| {
            reachable[v as usize] && nba.accepting[v as usize / positions]
        });
        if !touches_accepting_reachable {
            continue;
        }
        let has_internal_edge = comp.len() > 1
            || adj[comp[0] as usize].contains(&comp[0]);
        if has_internal_edge {
            return true;
        }
    }
    false
}
