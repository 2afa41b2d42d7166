//! Expand-node tableau from LTL (in negation normal form) to a
//! generalized Büchi automaton.
//!
//! Nodes carry the classic `incoming` / `old` / `next` sets; the `new`
//! set only exists while a node is being expanded. A node accepts a
//! symbol when the symbol satisfies every literal recorded in `old`, so
//! transitions are gated on the source node's literals. One acceptance
//! set per `Until` subformula: a node belongs to the set for `a U b`
//! when it does not owe `a U b` or has already discharged it with `b`.

use std::collections::{BTreeSet, HashMap};

use super::bitset::BitSet;
use super::nnf::{NnfArena, NnfId, NnfNode};

const INIT: usize = usize::MAX;

#[derive(Debug, Clone)]
struct Pending {
    incoming: BTreeSet<usize>,
    new: BitSet,
    old: BitSet,
    next: BitSet,
}

#[derive(Debug)]
pub(crate) struct Tableau {
    pub node_count: usize,
    /// Node ids whose `incoming` contains the virtual initial marker.
    pub initial: Vec<usize>,
    /// For each node: propositions required positive / negative.
    pub pos_mask: Vec<u64>,
    pub neg_mask: Vec<u64>,
    /// For each node: successors `q'` with `q ∈ incoming(q')`, sorted.
    pub successors: Vec<Vec<usize>>,
    /// One entry per `Until` subformula: the node set that fulfills it.
    pub acceptance: Vec<Vec<bool>>,
}

pub(crate) fn build_tableau(arena: &NnfArena, root: NnfId) -> Tableau {
    let mut nodes: Vec<(BTreeSet<usize>, BitSet, BitSet)> = Vec::new(); // incoming, old, next
    let mut by_key: HashMap<(BitSet, BitSet), usize> = HashMap::new();
    let mut work: Vec<Pending> = Vec::new();

    let mut initial_new = BitSet::with_capacity(arena.len());
    initial_new.insert(root as usize);
    work.push(Pending {
        incoming: BTreeSet::from([INIT]),
        new: initial_new,
        old: BitSet::with_capacity(arena.len()),
        next: BitSet::with_capacity(arena.len()),
    });

    while let Some(mut node) = work.pop() {
        let Some(bit) = node.new.first() else {
            // fully expanded: merge with an existing node or store
            let key = (node.old.clone().normalized(), node.next.clone().normalized());
            if let Some(&id) = by_key.get(&key) {
                nodes[id].0.extend(node.incoming.iter().copied());
            } else {
                let id = nodes.len();
                by_key.insert(key, id);
                nodes.push((node.incoming, node.old, node.next.clone()));
                work.push(Pending {
                    incoming: BTreeSet::from([id]),
                    new: node.next,
                    old: BitSet::with_capacity(arena.len()),
                    next: BitSet::with_capacity(arena.len()),
                });
            }
            continue;
        };

        node.new.remove(bit);
        let f = bit as NnfId;
        if node.old.contains(bit) {
            work.push(node);
            continue;
        }
        match arena.node(f) {
            NnfNode::True => work.push(node),
            NnfNode::False => {} // contradiction: drop the node
            NnfNode::Lit { prop, positive } => {
                let contradicts = node.old.iter().any(|o| {
                    matches!(arena.node(o as NnfId), NnfNode::Lit { prop: p, positive: s }
                        if p == prop && s != positive)
                });
                if !contradicts {
                    node.old.insert(bit);
                    work.push(node);
                }
            }
            NnfNode::And(a, b) => {
                node.old.insert(bit);
                if !node.old.contains(a as usize) {
                    node.new.insert(a as usize);
                }
                if !node.old.contains(b as usize) {
                    node.new.insert(b as usize);
                }
                work.push(node);
            }
            NnfNode::Or(a, b) => {
                node.old.insert(bit);
                let mut right = node.clone();
                if !node.old.contains(a as usize) {
                    node.new.insert(a as usize);
                }
                if !right.old.contains(b as usize) {
                    right.new.insert(b as usize);
                }
                work.push(right);
                work.push(node);
            }
            NnfNode::Next(a) => {
                node.old.insert(bit);
                node.next.insert(a as usize);
                work.push(node);
            }
            NnfNode::Until(a, b) => {
                node.old.insert(bit);
                let mut right = node.clone();
                // wait: a holds now, the until is owed again next step
                if !node.old.contains(a as usize) {
                    node.new.insert(a as usize);
                }
                node.next.insert(bit);
                // discharge: b holds now
                if !right.old.contains(b as usize) {
                    right.new.insert(b as usize);
                }
                work.push(right);
                work.push(node);
            }
            NnfNode::Release(a, b) => {
                node.old.insert(bit);
                let mut right = node.clone();
                // release now: a and b both hold
                if !node.old.contains(a as usize) {
                    node.new.insert(a as usize);
                }
                if !node.old.contains(b as usize) {
                    node.new.insert(b as usize);
                }
                // keep waiting: b holds now, the release is owed next step
                if !right.old.contains(b as usize) {
                    right.new.insert(b as usize);
                }
                right.next.insert(bit);
                work.push(right);
                work.push(node);
            }
        }
    }

    let node_count = nodes.len();
    let mut initial = Vec::new();
    let mut pos_mask = vec![0u64; node_count];
    let mut neg_mask = vec![0u64; node_count];
    let mut successors: Vec<Vec<usize>> = vec![Vec::new(); node_count];

    for (id, (incoming, old, _)) in nodes.iter().enumerate() {
        if incoming.contains(&INIT) {
            initial.push(id);
        }
        for o in old.iter() {
            if let NnfNode::Lit { prop, positive } = arena.node(o as NnfId) {
                if positive {
                    pos_mask[id] |= 1 << prop;
                } else {
                    neg_mask[id] |= 1 << prop;
                }
            }
        }
        for &src in incoming {
            if src != INIT {
                successors[src].push(id);
            }
        }
    }
    for succ in &mut successors {
        succ.sort_unstable();
    }

    let acceptance = arena
        .untils()
        .into_iter()
        .map(|u| {
            let NnfNode::Until(_, b) = arena.node(u) else {
                unreachable!()
            };
            nodes
                .iter()
                .map(|(_, old, _)| !old.contains(u as usize) || old.contains(b as usize))
                .collect()
        })
        .collect();

    Tableau {
        node_count,
        initial,
        pos_mask,
        neg_mask,
        successors,
        acceptance,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ltl::Formula;

    fn tableau_for(text: &str) -> (Tableau, usize) {
        let f: Formula = text.parse().unwrap();
        let a = f.alphabet().unwrap();
        let mut arena = NnfArena::default();
        let root = arena.intern_formula(&f, &a, false);
        let untils = arena.untils().len();
        (build_tableau(&arena, root), untils)
    }

    #[test]
    fn false_produces_no_nodes() {
        let (t, _) = tableau_for("false");
        assert_eq!(t.node_count, 0);
        assert!(t.initial.is_empty());
    }

    #[test]
    fn true_produces_one_unconstrained_node() {
        let (t, _) = tableau_for("true");
        assert_eq!(t.node_count, 1);
        assert_eq!(t.initial, vec![0]);
        assert_eq!(t.pos_mask[0], 0);
        assert_eq!(t.neg_mask[0], 0);
        assert_eq!(t.successors[0], vec![0]);
    }

    #[test]
    fn until_has_one_acceptance_set() {
        let (t, untils) = tableau_for("p U q");
        assert_eq!(untils, 1);
        assert_eq!(t.acceptance.len(), 1);
        assert!(t.node_count > 0);
    }

    #[test]
    fn contradictory_branch_is_dropped() {
        let (t, _) = tableau_for("p && !p");
        assert_eq!(t.node_count, 0);
    }
}
