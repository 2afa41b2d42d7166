//! Negation normal form over interned nodes.
//!
//! The tableau works on formulas interned into a small arena: each
//! distinct subformula receives one id, so the expansion sets can be bit
//! sets. Atoms are resolved to proposition indices of the target
//! alphabet up front. Constant folding keeps the arena (and hence the
//! node sets) small.

use std::collections::HashMap;

use crate::ltl::{Alphabet, Formula};

pub(crate) type NnfId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum NnfNode {
    True,
    False,
    Lit { prop: u32, positive: bool },
    And(NnfId, NnfId),
    Or(NnfId, NnfId),
    Next(NnfId),
    Until(NnfId, NnfId),
    Release(NnfId, NnfId),
}

#[derive(Debug, Default)]
pub(crate) struct NnfArena {
    nodes: Vec<NnfNode>,
    index: HashMap<NnfNode, NnfId>,
}

impl NnfArena {
    pub fn node(&self, id: NnfId) -> NnfNode {
        self.nodes[id as usize]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Ids of all `Until` nodes, in creation order; these drive the
    /// generalized acceptance sets.
    pub fn untils(&self) -> Vec<NnfId> {
        (0..self.nodes.len() as NnfId)
            .filter(|id| matches!(self.nodes[*id as usize], NnfNode::Until(..)))
            .collect()
    }

    fn intern(&mut self, node: NnfNode) -> NnfId {
        if let Some(id) = self.index.get(&node) {
            return *id;
        }
        let id = self.nodes.len() as NnfId;
        self.nodes.push(node);
        self.index.insert(node, id);
        id
    }

    fn mk_true(&mut self) -> NnfId {
        self.intern(NnfNode::True)
    }

    fn mk_false(&mut self) -> NnfId {
        self.intern(NnfNode::False)
    }

    fn mk_and(&mut self, a: NnfId, b: NnfId) -> NnfId {
        match (self.node(a), self.node(b)) {
            (NnfNode::False, _) | (_, NnfNode::False) => self.mk_false(),
            (NnfNode::True, _) => b,
            (_, NnfNode::True) => a,
            _ if a == b => a,
            _ => self.intern(NnfNode::And(a, b)),
        }
    }

    fn mk_or(&mut self, a: NnfId, b: NnfId) -> NnfId {
        match (self.node(a), self.node(b)) {
            (NnfNode::True, _) | (_, NnfNode::True) => self.mk_true(),
            (NnfNode::False, _) => b,
            (_, NnfNode::False) => a,
            _ if a == b => a,
            _ => self.intern(NnfNode::Or(a, b)),
        }
    }

    fn mk_next(&mut self, a: NnfId) -> NnfId {
        match self.node(a) {
            NnfNode::True => a,
            NnfNode::False => a,
            _ => self.intern(NnfNode::Next(a)),
        }
    }

    fn mk_until(&mut self, a: NnfId, b: NnfId) -> NnfId {
        match (self.node(a), self.node(b)) {
            (_, NnfNode::True) => self.mk_true(),
            (_, NnfNode::False) => self.mk_false(),
            (NnfNode::False, _) => b,
            _ => self.intern(NnfNode::Until(a, b)),
        }
    }

    fn mk_release(&mut self, a: NnfId, b: NnfId) -> NnfId {
        match (self.node(a), self.node(b)) {
            (_, NnfNode::True) => self.mk_true(),
            (_, NnfNode::False) => self.mk_false(),
            (NnfNode::True, _) => b,
            _ => self.intern(NnfNode::Release(a, b)),
        }
    }

    /// Interns `f` (negated when `negate` holds) in negation normal form.
    /// Every proposition of `f` must be present in `alphabet`.
    pub fn intern_formula(&mut self, f: &Formula, alphabet: &Alphabet, negate: bool) -> NnfId {
        match f {
            Formula::True => {
                if negate {
                    self.mk_false()
                } else {
                    self.mk_true()
                }
            }
            Formula::False => {
                if negate {
                    self.mk_true()
                } else {
                    self.mk_false()
                }
            }
            Formula::Atom(p) => {
                let prop = alphabet
                    .index_of(p.name())
                    .unwrap_or_else(|| panic!("proposition {:?} not in alphabet", p.name()))
                    as u32;
                self.intern(NnfNode::Lit {
                    prop,
                    positive: !negate,
                })
            }
            Formula::Not(x) => self.intern_formula(x, alphabet, !negate),
            Formula::And(a, b) => {
                let ia = self.intern_formula(a, alphabet, negate);
                let ib = self.intern_formula(b, alphabet, negate);
                if negate {
                    self.mk_or(ia, ib)
                } else {
                    self.mk_and(ia, ib)
                }
            }
            Formula::Or(a, b) => {
                let ia = self.intern_formula(a, alphabet, negate);
                let ib = self.intern_formula(b, alphabet, negate);
                if negate {
                    self.mk_and(ia, ib)
                } else {
                    self.mk_or(ia, ib)
                }
            }
            Formula::Implies(a, b) => {
                // a -> b ≡ ¬a ∨ b
                let ia = self.intern_formula(a, alphabet, !negate);
                let ib = self.intern_formula(b, alphabet, negate);
                if negate {
                    self.mk_and(ia, ib)
                } else {
                    self.mk_or(ia, ib)
                }
            }
            Formula::Next(x) => {
                let ix = self.intern_formula(x, alphabet, negate);
                self.mk_next(ix)
            }
            Formula::Until(a, b) => {
                let ia = self.intern_formula(a, alphabet, negate);
                let ib = self.intern_formula(b, alphabet, negate);
                if negate {
                    self.mk_release(ia, ib)
                } else {
                    self.mk_until(ia, ib)
                }
            }
            Formula::Release(a, b) => {
                let ia = self.intern_formula(a, alphabet, negate);
                let ib = self.intern_formula(b, alphabet, negate);
                if negate {
                    self.mk_until(ia, ib)
                } else {
                    self.mk_release(ia, ib)
                }
            }
            Formula::Finally(x) => {
                // F x ≡ true U x; ¬F x ≡ false R ¬x
                let ix = self.intern_formula(x, alphabet, negate);
                if negate {
                    let fl = self.mk_false();
                    self.mk_release(fl, ix)
                } else {
                    let tr = self.mk_true();
                    self.mk_until(tr, ix)
                }
            }
            Formula::Globally(x) => {
                let ix = self.intern_formula(x, alphabet, negate);
                if negate {
                    let tr = self.mk_true();
                    self.mk_until(tr, ix)
                } else {
                    let fl = self.mk_false();
                    self.mk_release(fl, ix)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negation_pushes_to_literals() {
        let f: Formula = "!(p U q)".parse().unwrap();
        let a = f.alphabet().unwrap();
        let mut arena = NnfArena::default();
        let id = arena.intern_formula(&f, &a, false);
        match arena.node(id) {
            NnfNode::Release(l, r) => {
                assert!(matches!(
                    arena.node(l),
                    NnfNode::Lit {
                        prop: 0,
                        positive: false
                    }
                ));
                assert!(matches!(
                    arena.node(r),
                    NnfNode::Lit {
                        prop: 1,
                        positive: false
                    }
                ));
            }
            other => panic!("expected Release, got {other:?}"),
        }
    }

    #[test]
    fn constants_fold() {
        let f: Formula = "true U p".parse().unwrap();
        let a = f.alphabet().unwrap();
        let mut arena = NnfArena::default();
        let id = arena.intern_formula(&f, &a, false);
        assert!(matches!(arena.node(id), NnfNode::Until(..)));

        let g: Formula = "p && true".parse().unwrap();
        let mut arena = NnfArena::default();
        let id = arena.intern_formula(&g, &g.alphabet().unwrap(), false);
        assert!(matches!(arena.node(id), NnfNode::Lit { .. }));

        let h: Formula = "p U false".parse().unwrap();
        let mut arena = NnfArena::default();
        let id = arena.intern_formula(&h, &h.alphabet().unwrap(), false);
        assert!(matches!(arena.node(id), NnfNode::False));
    }

    #[test]
    fn shared_subformulas_intern_once() {
        let f: Formula = "(p U q) || (p U q)".parse().unwrap();
        let a = f.alphabet().unwrap();
        let mut arena = NnfArena::default();
        let id = arena.intern_formula(&f, &a, false);
        // Or(x, x) folds to x
        assert!(matches!(arena.node(id), NnfNode::Until(..)));
        assert_eq!(arena.untils().len(), 1);
    }
}
