use super::alphabet::{Alphabet, AtomicProposition};
use crate::error::Error;

/// LTL abstract syntax tree. `Finally`, `Globally`, `Implies` and
/// `Release` are kept as first-class nodes so parsed formulas render back
/// to their source shape; normalization happens during translation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Atom(AtomicProposition),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Next(Box<Formula>),
    Until(Box<Formula>, Box<Formula>),
    Release(Box<Formula>, Box<Formula>),
    Finally(Box<Formula>),
    Globally(Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(AtomicProposition::new(name))
    }

    pub fn negate(self) -> Self {
        Formula::Not(self.into())
    }

    pub fn and(self, rhs: Self) -> Self {
        Formula::And(self.into(), rhs.into())
    }

    pub fn or(self, rhs: Self) -> Self {
        Formula::Or(self.into(), rhs.into())
    }

    pub fn implies(self, rhs: Self) -> Self {
        Formula::Implies(self.into(), rhs.into())
    }

    pub fn until(self, rhs: Self) -> Self {
        Formula::Until(self.into(), rhs.into())
    }

    pub fn release(self, rhs: Self) -> Self {
        Formula::Release(self.into(), rhs.into())
    }

    pub fn next(f: Self) -> Self {
        Formula::Next(f.into())
    }

    pub fn finally(f: Self) -> Self {
        Formula::Finally(f.into())
    }

    pub fn globally(f: Self) -> Self {
        Formula::Globally(f.into())
    }

    /// The propositions occurring in the formula, in first-occurrence
    /// order.
    pub fn alphabet(&self) -> Result<Alphabet, Error> {
        let mut props = Vec::new();
        self.collect_atoms(&mut props);
        Alphabet::new(props)
    }

    fn collect_atoms(&self, out: &mut Vec<AtomicProposition>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Atom(p) => {
                if !out.contains(p) {
                    out.push(p.clone());
                }
            }
            Formula::Not(x) | Formula::Next(x) | Formula::Finally(x) | Formula::Globally(x) => {
                x.collect_atoms(out)
            }
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Until(a, b)
            | Formula::Release(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => 1,
            Formula::Not(x) | Formula::Next(x) | Formula::Finally(x) | Formula::Globally(x) => {
                1 + x.size()
            }
            Formula::And(a, b)
            | Formula::Or(a, b)
            | Formula::Implies(a, b)
            | Formula::Until(a, b)
            | Formula::Release(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Binding strength used by the renderer; higher binds tighter.
    /// Matches the parser: `->` (1, right) < `||` (2) < `&&` (3) <
    /// `U`/`R` (4, right) < unary (5).
    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Until(..) | Formula::Release(..) => 4,
            Formula::Not(_) | Formula::Next(_) | Formula::Finally(_) | Formula::Globally(_) => 5,
            Formula::True | Formula::False | Formula::Atom(_) => 6,
        }
    }

    fn fmt_prec(&self, f: &mut std::fmt::Formatter<'_>, min: u8) -> std::fmt::Result {
        let prec = self.precedence();
        let parens = prec < min;
        if parens {
            write!(f, "(")?;
        }
        match self {
            Formula::True => write!(f, "true")?,
            Formula::False => write!(f, "false")?,
            Formula::Atom(p) => write!(f, "{p}")?,
            Formula::Not(x) => {
                write!(f, "!")?;
                x.fmt_unary_arg(f)?;
            }
            Formula::Next(x) => {
                write!(f, "X ")?;
                x.fmt_unary_arg(f)?;
            }
            Formula::Finally(x) => {
                write!(f, "F ")?;
                x.fmt_unary_arg(f)?;
            }
            Formula::Globally(x) => {
                write!(f, "G ")?;
                x.fmt_unary_arg(f)?;
            }
            Formula::And(a, b) => {
                a.fmt_prec(f, 3)?;
                write!(f, " && ")?;
                b.fmt_prec(f, 4)?;
            }
            Formula::Or(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, " || ")?;
                b.fmt_prec(f, 3)?;
            }
            Formula::Implies(a, b) => {
                a.fmt_prec(f, 2)?;
                write!(f, " -> ")?;
                b.fmt_prec(f, 1)?;
            }
            Formula::Until(a, b) => {
                a.fmt_prec(f, 5)?;
                write!(f, " U ")?;
                b.fmt_prec(f, 4)?;
            }
            Formula::Release(a, b) => {
                a.fmt_prec(f, 5)?;
                write!(f, " R ")?;
                b.fmt_prec(f, 4)?;
            }
        }
        if parens {
            write!(f, ")")?;
        }
        Ok(())
    }

    // Unary operands are parenthesized unless atomic, so `G (F p)` and
    // `!(!p)` round-trip unambiguously.
    fn fmt_unary_arg(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.precedence() >= 6 {
            self.fmt_prec(f, 6)
        } else {
            write!(f, "(")?;
            self.fmt_prec(f, 0)?;
            write!(f, ")")
        }
    }
}

/// Canonical ASCII rendering; `parse(render(f))` is structurally equal
/// to `f`.
impl std::fmt::Display for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.fmt_prec(f, 0)
    }
}

impl std::str::FromStr for Formula {
    type Err = crate::error::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parser::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_with_minimal_parentheses() {
        let f = Formula::atom("p").until(Formula::atom("q"));
        assert_eq!(f.to_string(), "p U q");

        let f = Formula::globally(Formula::finally(Formula::atom("p")));
        assert_eq!(f.to_string(), "G (F p)");

        let f = Formula::atom("a")
            .and(Formula::atom("b"))
            .or(Formula::atom("c"));
        assert_eq!(f.to_string(), "a && b || c");

        let f = Formula::atom("a").until(Formula::atom("b").and(Formula::atom("c")));
        assert_eq!(f.to_string(), "a U (b && c)");

        let f = Formula::atom("r").implies(
            Formula::Not(Formula::atom("u").into()).until(Formula::atom("n")),
        );
        assert_eq!(f.to_string(), "r -> !u U n");
    }

    #[test]
    fn quoted_atoms_render_quoted() {
        let f = Formula::atom("call").and(Formula::atom("F"));
        assert_eq!(f.to_string(), "call && \"F\"");
    }

    #[test]
    fn alphabet_in_first_occurrence_order() {
        let f: Formula = "(r && F u) -> ((!b && !u) U n) U u".parse().unwrap();
        let alphabet = f.alphabet().unwrap();
        let names: Vec<&str> = alphabet.propositions().iter().map(|p| p.name()).collect();
        assert_eq!(names, vec!["r", "u", "b", "n"]);
    }

    #[test]
    fn alphabet_of_constant_is_empty() {
        let f = Formula::True;
        assert!(f.alphabet().unwrap().is_empty());
    }
}
