//! Synthesis of deterministic monitors from LTL formulas, six-valued
//! verdict semantics, and two-/four-valued monitorability analysis, with
//! an online replay runtime and a pattern-corpus benchmark harness.

pub mod automata;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod ltl;
pub mod monitor;
pub mod monitorability;
pub mod runtime;

pub use error::Error;
pub use ltl::{eval_lasso, Alphabet, AtomicProposition, FiniteWord, Formula, LassoWord, Symbol};
pub use monitor::{Monitor, RenderFormat, Verdict6};
pub use monitorability::{vtom, Monitorability4};
