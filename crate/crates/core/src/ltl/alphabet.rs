use std::sync::Arc;

use crate::error::Error;

/// Hard cap on alphabet size: symbols are enumerated explicitly as the
/// powerset of the propositions, so 2^|AP| must stay small.
pub const MAX_PROPOSITIONS: usize = 16;

/// A named boolean observable. Names are case-sensitive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomicProposition {
    name: String,
}

impl AtomicProposition {
    /// Creates a proposition. The name must be non-empty and must not
    /// contain quotes or whitespace.
    pub fn new(name: impl Into<String>) -> Self {
        let name = name.into();
        assert!(
            !name.is_empty() && !name.contains('"') && !name.contains(char::is_whitespace),
            "invalid proposition name {name:?}"
        );
        Self { name }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// True when the name can be written without quotes in the concrete
    /// syntax (identifier-shaped and not an operator keyword).
    pub fn is_bare(&self) -> bool {
        let mut chars = self.name.chars();
        let head_ok = chars
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_');
        let tail_ok = chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        head_ok && tail_ok && !matches!(self.name.as_str(), "U" | "R" | "X" | "F" | "G" | "true" | "false")
    }
}

impl std::fmt::Display for AtomicProposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_bare() {
            write!(f, "{}", self.name)
        } else {
            write!(f, "\"{}\"", self.name)
        }
    }
}

/// One observation: the set of propositions that hold at an instant.
/// A symbol is a bitmask relative to the owning [`Alphabet`]'s
/// proposition order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol(pub(crate) u64);

impl Symbol {
    pub const EMPTY: Symbol = Symbol(0);

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, prop_index: usize) -> bool {
        self.0 & (1 << prop_index) != 0
    }
}

/// An ordered set of propositions. The symbol universe is the powerset,
/// so there are exactly `2^|propositions|` symbols; the empty proposition
/// set still yields the single symbol `{}`.
#[derive(Debug, Clone)]
pub struct Alphabet {
    props: Arc<Vec<AtomicProposition>>,
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.props, &other.props) || self.props == other.props
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    /// Builds an alphabet from propositions, keeping first occurrences of
    /// duplicate names.
    pub fn new(props: impl IntoIterator<Item = AtomicProposition>) -> Result<Self, Error> {
        let mut unique: Vec<AtomicProposition> = Vec::new();
        for p in props {
            if !unique.contains(&p) {
                unique.push(p);
            }
        }
        if unique.len() > MAX_PROPOSITIONS {
            return Err(Error::TooManyPropositions {
                count: unique.len(),
                max: MAX_PROPOSITIONS,
            });
        }
        Ok(Self {
            props: Arc::new(unique),
        })
    }

    pub fn empty() -> Self {
        Self {
            props: Arc::new(Vec::new()),
        }
    }

    pub fn propositions(&self) -> &[AtomicProposition] {
        &self.props
    }

    pub fn len(&self) -> usize {
        self.props.len()
    }

    pub fn is_empty(&self) -> bool {
        self.props.is_empty()
    }

    pub fn symbol_count(&self) -> usize {
        1 << self.props.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.props.iter().position(|p| p.name() == name)
    }

    /// All symbols in bitmask order.
    pub fn symbols(&self) -> impl Iterator<Item = Symbol> {
        (0..self.symbol_count() as u64).map(Symbol)
    }

    /// All symbols sorted lexicographically by their sorted proposition
    /// name sets. This is the canonical exploration order used for state
    /// numbering and rendering.
    pub fn ordered_symbols(&self) -> Vec<Symbol> {
        let mut syms: Vec<Symbol> = self.symbols().collect();
        syms.sort_by_cached_key(|s| self.names_of(*s));
        syms
    }

    /// The proposition names that hold in `s`, sorted by name.
    pub fn names_of(&self, s: Symbol) -> Vec<String> {
        let mut names: Vec<String> = self
            .props
            .iter()
            .enumerate()
            .filter(|(i, _)| s.contains(*i))
            .map(|(_, p)| p.name().to_string())
            .collect();
        names.sort();
        names
    }

    /// Builds the symbol in which exactly the named propositions hold.
    pub fn symbol_from_names<'a>(
        &self,
        names: impl IntoIterator<Item = &'a str>,
    ) -> Result<Symbol, Error> {
        let mut bits = 0u64;
        let mut unknown = Vec::new();
        let mut seen = Vec::new();
        for name in names {
            seen.push(name.to_string());
            match self.index_of(name) {
                Some(i) => bits |= 1 << i,
                None => unknown.push(name.to_string()),
            }
        }
        if unknown.is_empty() {
            Ok(Symbol(bits))
        } else {
            Err(Error::UnknownSymbol {
                symbol: seen,
                unknown,
            })
        }
    }

    /// True when `s` only uses bits backed by this alphabet.
    pub fn admits(&self, s: Symbol) -> bool {
        let mask = (self.symbol_count() - 1) as u64;
        s.0 & !mask == 0
    }

    /// Renders a symbol as a proposition set, e.g. `{p, q}`
    /// or `{}`.
    pub fn render_symbol(&self, s: Symbol) -> String {
        format!("{{{}}}", self.names_of(s).join(", "))
    }
}
