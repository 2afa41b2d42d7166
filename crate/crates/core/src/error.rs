use thiserror::Error;

/// Position-annotated syntax error produced by the formula parser.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    /// Tokens that would have been accepted at the error position.
    pub expected: Vec<String>,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "syntax error at {}:{}: {}",
            self.line, self.column, self.message
        )?;
        if !self.expected.is_empty() {
            write!(f, "; expected one of: {}", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("unknown propositions: {{{}}}", names.join(", "))]
    UnknownPropositions { names: Vec<String> },

    #[error("event {{{}}} uses propositions outside the monitor alphabet: {{{}}}",
            symbol.join(", "), unknown.join(", "))]
    UnknownSymbol {
        symbol: Vec<String>,
        unknown: Vec<String>,
    },

    #[error("alphabet has {count} propositions; at most {max} are supported")]
    TooManyPropositions { count: usize, max: usize },

    #[error("unknown state id {0}")]
    UnknownState(usize),

    #[error("internal consistency violation: {0}")]
    Internal(String),

    #[error("api misuse: {0}")]
    ApiMisuse(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
