use super::alphabet::{Alphabet, Symbol};
use crate::error::Error;

/// A finite sequence of symbols over one alphabet; possibly empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteWord {
    alphabet: Alphabet,
    symbols: Vec<Symbol>,
}

impl FiniteWord {
    pub fn new(alphabet: Alphabet, symbols: Vec<Symbol>) -> Self {
        assert!(
            symbols.iter().all(|s| alphabet.admits(*s)),
            "symbol outside the alphabet"
        );
        Self { alphabet, symbols }
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            symbols: Vec::new(),
        }
    }

    /// Builds a word from per-position proposition name sets.
    pub fn from_names<'a, I, S>(alphabet: &Alphabet, events: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = &'a str>,
    {
        let mut symbols = Vec::new();
        for event in events {
            symbols.push(alphabet.symbol_from_names(event)?);
        }
        Ok(Self {
            alphabet: alphabet.clone(),
            symbols,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// A copy of this word with `s` appended.
    pub fn extended(&self, s: Symbol) -> Self {
        let mut symbols = self.symbols.clone();
        symbols.push(s);
        Self::new(self.alphabet.clone(), symbols)
    }

    /// Concatenation; both words must share an alphabet.
    pub fn concat(&self, other: &FiniteWord) -> Self {
        assert_eq!(self.alphabet, other.alphabet, "alphabet mismatch");
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Self::new(self.alphabet.clone(), symbols)
    }
}

impl std::fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.symbols.is_empty() {
            return write!(f, "ε");
        }
        let parts: Vec<String> = self
            .symbols
            .iter()
            .map(|s| self.alphabet.render_symbol(*s))
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// The ultimately periodic infinite word `prefix · cycle^ω`. The cycle is
/// never empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LassoWord {
    prefix: FiniteWord,
    cycle: FiniteWord,
}

impl LassoWord {
    pub fn new(prefix: FiniteWord, cycle: FiniteWord) -> Result<Self, Error> {
        if prefix.alphabet() != cycle.alphabet() {
            return Err(Error::Internal(
                "lasso prefix and cycle use different alphabets".into(),
            ));
        }
        if cycle.is_empty() {
            return Err(Error::Internal("lasso cycle must be non-empty".into()));
        }
        Ok(Self { prefix, cycle })
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.prefix.alphabet()
    }

    pub fn prefix(&self) -> &FiniteWord {
        &self.prefix
    }

    pub fn cycle(&self) -> &FiniteWord {
        &self.cycle
    }

    /// Total number of distinct positions, `|prefix| + |cycle|`.
    pub fn positions(&self) -> usize {
        self.prefix.len() + self.cycle.len()
    }

    /// The symbol at distinct-position index `i`.
    pub fn symbol_at(&self, i: usize) -> Symbol {
        if i < self.prefix.len() {
            self.prefix.symbols()[i]
        } else {
            self.cycle.symbols()[i - self.prefix.len()]
        }
    }

    /// Successor of a distinct position: the cycle wraps back onto itself.
    pub fn successor(&self, i: usize) -> usize {
        if i + 1 < self.positions() {
            i + 1
        } else {
            self.prefix.len()
        }
    }

    /// The lasso denoting the same word with its first symbol dropped.
    pub fn shifted(&self) -> LassoWord {
        if !self.prefix.is_empty() {
            let prefix = FiniteWord::new(
                self.prefix.alphabet().clone(),
                self.prefix.symbols()[1..].to_vec(),
            );
            LassoWord::new(prefix, self.cycle.clone()).unwrap()
        } else {
            let mut rotated = self.cycle.symbols().to_vec();
            rotated.rotate_left(1);
            LassoWord::new(
                FiniteWord::empty(self.cycle.alphabet().clone()),
                FiniteWord::new(self.cycle.alphabet().clone(), rotated),
            )
            .unwrap()
        }
    }

    /// `u · self`: the same lasso with `u` prepended to the prefix.
    pub fn prepended(&self, u: &FiniteWord) -> LassoWord {
        LassoWord::new(u.concat(&self.prefix), self.cycle.clone()).unwrap()
    }
}

impl std::fmt::Display for LassoWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}·({})^ω", self.prefix, self.cycle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ltl::alphabet::AtomicProposition;

    fn ab() -> Alphabet {
        Alphabet::new([AtomicProposition::new("p"), AtomicProposition::new("q")]).unwrap()
    }

    #[test]
    fn lasso_requires_nonempty_cycle() {
        let a = ab();
        assert!(LassoWord::new(FiniteWord::empty(a.clone()), FiniteWord::empty(a)).is_err());
    }

    #[test]
    fn shifted_rotates_cycle_when_prefix_empty() {
        let a = ab();
        let s0 = a.symbol_from_names(["p"]).unwrap();
        let s1 = a.symbol_from_names(["q"]).unwrap();
        let w = LassoWord::new(
            FiniteWord::empty(a.clone()),
            FiniteWord::new(a.clone(), vec![s0, s1]),
        )
        .unwrap();
        let shifted = w.shifted();
        assert_eq!(shifted.cycle().symbols(), &[s1, s0]);
    }

    #[test]
    fn positions_wrap_into_cycle() {
        let a = ab();
        let s0 = a.symbol_from_names(["p"]).unwrap();
        let s1 = a.symbol_from_names(["q"]).unwrap();
        let w = LassoWord::new(
            FiniteWord::new(a.clone(), vec![s0]),
            FiniteWord::new(a.clone(), vec![s1]),
        )
        .unwrap();
        assert_eq!(w.positions(), 2);
        assert_eq!(w.successor(0), 1);
        assert_eq!(w.successor(1), 1);
    }
}
