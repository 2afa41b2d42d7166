//! The automata pipeline: LTL → NBA (tableau), per-state nonemptiness,
//! NBA → DFA (powerset), DFA product with three-valued outputs, and
//! output-preserving minimization.
//!
//! Symbols are enumerated explicitly as the powerset of the alphabet's
//! propositions; the target corpora keep alphabets small, and the
//! explicit universe keeps every stage total and easy to check.

mod bitset;
mod dfa;
mod fsm3;
mod nba;
mod nnf;
mod scc;
mod tableau;

pub use dfa::{nba_to_dfa, Dfa};
pub use fsm3::{minimize, product_monitor, Fsm3, Verdict3};
pub use nba::{ltl_to_nba, nba_accepts_lasso, nonempty_states, Nba};
