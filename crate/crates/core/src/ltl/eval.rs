//! Direct LTL evaluation on ultimately periodic words.
//!
//! This is the semantic reference the automata pipeline is tested
//! against: it never builds an automaton. Truth values are computed per
//! subformula over the `|prefix| + |cycle|` distinct positions of the
//! lasso. `Until` is resolved as a least fixpoint (assume-false
//! initialization) and `Release` as a greatest fixpoint, iterated to
//! stability over the cyclic successor relation.

use super::ast::Formula;
use super::word::LassoWord;

/// True iff `prefix · cycle^ω ∈ L(f)`.
///
/// The lasso's alphabet must contain every proposition of `f`.
pub fn eval_lasso(f: &Formula, w: &LassoWord) -> bool {
    truth_table(f, w)[0]
}

// Truth of `f` at every distinct position of the lasso.
fn truth_table(f: &Formula, w: &LassoWord) -> Vec<bool> {
    let n = w.positions();
    match f {
        Formula::True => vec![true; n],
        Formula::False => vec![false; n],
        Formula::Atom(p) => {
            let idx = w
                .alphabet()
                .index_of(p.name())
                .unwrap_or_else(|| panic!("proposition {:?} not in the word alphabet", p.name()));
            (0..n).map(|i| w.symbol_at(i).contains(idx)).collect()
        }
        Formula::Not(x) => truth_table(x, w).into_iter().map(|b| !b).collect(),
        Formula::And(a, b) => zip_with(truth_table(a, w), truth_table(b, w), |x, y| x && y),
        Formula::Or(a, b) => zip_with(truth_table(a, w), truth_table(b, w), |x, y| x || y),
        Formula::Implies(a, b) => zip_with(truth_table(a, w), truth_table(b, w), |x, y| !x || y),
        Formula::Next(x) => {
            let v = truth_table(x, w);
            (0..n).map(|i| v[w.successor(i)]).collect()
        }
        Formula::Until(a, b) => least_fixpoint(w, &truth_table(a, w), &truth_table(b, w)),
        Formula::Release(a, b) => greatest_fixpoint(w, &truth_table(a, w), &truth_table(b, w)),
        Formula::Finally(x) => {
            let n_true = vec![true; n];
            least_fixpoint(w, &n_true, &truth_table(x, w))
        }
        Formula::Globally(x) => {
            let n_false = vec![false; n];
            greatest_fixpoint(w, &n_false, &truth_table(x, w))
        }
    }
}

fn zip_with(a: Vec<bool>, b: Vec<bool>, op: impl Fn(bool, bool) -> bool) -> Vec<bool> {
    a.into_iter().zip(b).map(|(x, y)| op(x, y)).collect()
}

// a U b: v(i) = b(i) ∨ (a(i) ∧ v(succ(i))), least solution.
fn least_fixpoint(w: &LassoWord, a: &[bool], b: &[bool]) -> Vec<bool> {
    let n = w.positions();
    let mut v = vec![false; n];
    loop {
        let mut changed = false;
        for i in (0..n).rev() {
            let next = b[i] || (a[i] && v[w.successor(i)]);
            if next != v[i] {
                v[i] = next;
                changed = true;
            }
        }
        if !changed {
            return v;
        }
    }
}

// a R b: v(i) = b(i) ∧ (a(i) ∨ v(succ(i))), greatest solution.
fn greatest_fixpoint(w: &LassoWord, a: &[bool], b: &[bool]) -> Vec<bool> {
    let n = w.positions();
    let mut v = vec![true; n];
    loop {
        let mut changed = false;
        for i in (0..n).rev() {
            let next = b[i] && (a[i] || v[w.successor(i)]);
            if next != v[i] {
                v[i] = next;
                changed = true;
            }
        }
        if !changed {
            return v;
        }
    }
}
