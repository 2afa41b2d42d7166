//! LTL syntax, alphabets, words, and the direct lasso-word evaluator.

mod alphabet;
mod ast;
mod eval;
mod parser;
mod word;

pub use alphabet::{Alphabet, AtomicProposition, Symbol, MAX_PROPOSITIONS};
pub use ast::Formula;
pub use eval::eval_lasso;
pub use parser::parse;
pub use word::{FiniteWord, LassoWord};
