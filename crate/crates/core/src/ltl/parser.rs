//! Recursive-descent parser for the concrete LTL syntax.
//!
//! Precedence, loosest to tightest: `<->`, `->` (right-associative),
//! `||`, `&&`, `U`/`R` (right-associative), unary (`!`, `X`, `F`, `G`,
//! with `<>` and `[]` as aliases of `F` and `G`). Single `&` and `|` are
//! accepted as aliases of `&&` and `||`. `a <-> b` desugars to
//! `(a -> b) && (b -> a)`.

use super::ast::Formula;
use crate::error::ParseError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Not,
    And,
    Or,
    Implies,
    Iff,
    Next,
    Finally,
    Globally,
    Until,
    Release,
    True,
    False,
    Ident(String),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Not => "'!'".into(),
            Tok::And => "'&&'".into(),
            Tok::Or => "'||'".into(),
            Tok::Implies => "'->'".into(),
            Tok::Iff => "'<->'".into(),
            Tok::Next => "'X'".into(),
            Tok::Finally => "'F'".into(),
            Tok::Globally => "'G'".into(),
            Tok::Until => "'U'".into(),
            Tok::Release => "'R'".into(),
            Tok::True => "'true'".into(),
            Tok::False => "'false'".into(),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut column = 1usize;
    let mut chars = text.chars().peekable();

    macro_rules! push {
        ($tok:expr, $len:expr) => {{
            out.push(Spanned {
                tok: $tok,
                line,
                column,
            });
            column += $len;
        }};
    }

    while let Some(&c) = chars.peek() {
        match c {
            '\n' => {
                chars.next();
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                column += 1;
            }
            '(' => {
                chars.next();
                push!(Tok::LParen, 1);
            }
            ')' => {
                chars.next();
                push!(Tok::RParen, 1);
            }
            '!' => {
                chars.next();
                push!(Tok::Not, 1);
            }
            '&' => {
                chars.next();
                let len = if chars.peek() == Some(&'&') {
                    chars.next();
                    2
                } else {
                    1
                };
                push!(Tok::And, len);
            }
            '|' => {
                chars.next();
                let len = if chars.peek() == Some(&'|') {
                    chars.next();
                    2
                } else {
                    1
                };
                push!(Tok::Or, len);
            }
            '-' => {
                chars.next();
                if chars.peek() == Some(&'>') {
                    chars.next();
                    push!(Tok::Implies, 2);
                } else {
                    return Err(ParseError {
                        line,
                        column,
                        message: "stray '-'".into(),
                        expected: vec!["'->'".into()],
                    });
                }
            }
            '<' => {
                chars.next();
                match chars.peek() {
                    Some(&'>') => {
                        chars.next();
                        push!(Tok::Finally, 2);
                    }
                    Some(&'-') => {
                        chars.next();
                        if chars.peek() == Some(&'>') {
                            chars.next();
                            push!(Tok::Iff, 3);
                        } else {
                            return Err(ParseError {
                                line,
                                column,
                                message: "stray '<-'".into(),
                                expected: vec!["'<->'".into()],
                            });
                        }
                    }
                    _ => {
                        return Err(ParseError {
                            line,
                            column,
                            message: "stray '<'".into(),
                            expected: vec!["'<>'".into(), "'<->'".into()],
                        })
                    }
                }
            }
            '[' => {
                chars.next();
                if chars.peek() == Some(&']') {
                    chars.next();
                    push!(Tok::Globally, 2);
                } else {
                    return Err(ParseError {
                        line,
                        column,
                        message: "stray '['".into(),
                        expected: vec!["'[]'".into()],
                    });
                }
            }
            '"' => {
                chars.next();
                let mut name = String::new();
                let mut closed = false;
                let mut len = 2;
                for d in chars.by_ref() {
                    if d == '"' {
                        closed = true;
                        break;
                    }
                    if d == '\n' {
                        break;
                    }
                    name.push(d);
                    len += 1;
                }
                if !closed || name.is_empty() {
                    return Err(ParseError {
                        line,
                        column,
                        message: if closed {
                            "empty quoted proposition".into()
                        } else {
                            "unterminated quoted proposition".into()
                        },
                        expected: vec!["quoted proposition name".into()],
                    });
                }
                push!(Tok::Ident(name), len);
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                let len = name.len();
                let tok = match name.as_str() {
                    "true" => Tok::True,
                    "false" => Tok::False,
                    "U" => Tok::Until,
                    "R" => Tok::Release,
                    "X" => Tok::Next,
                    "F" => Tok::Finally,
                    "G" => Tok::Globally,
                    _ => Tok::Ident(name),
                };
                push!(tok, len);
            }
            other => {
                return Err(ParseError {
                    line,
                    column,
                    message: format!("unexpected character {other:?}"),
                    expected: Vec::new(),
                });
            }
        }
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

const FORMULA_STARTERS: &[&str] = &[
    "'('", "'!'", "'X'", "'F'", "'G'", "'<>'", "'[]'", "'true'", "'false'", "identifier",
];

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: String, expected: &[&str]) -> ParseError {
        let at = self.peek();
        ParseError {
            line: at.line,
            column: at.column,
            message,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn unexpected(&self, expected: &[&str]) -> ParseError {
        let at = self.peek();
        let what = if at.tok == Tok::Eof {
            "unexpected end of input".to_string()
        } else {
            format!("unexpected {}", at.tok.describe())
        };
        self.error(what, expected)
    }

    // iff := impl ('<->' impl)*
    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implication()?;
        while self.peek().tok == Tok::Iff {
            self.bump();
            let rhs = self.implication()?;
            lhs = lhs
                .clone()
                .implies(rhs.clone())
                .and(rhs.implies(lhs));
        }
        Ok(lhs)
    }

    // impl := or ('->' impl)?   (right-associative)
    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.peek().tok == Tok::Implies {
            self.bump();
            let rhs = self.implication()?;
            Ok(lhs.implies(rhs))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.peek().tok == Tok::Or {
            self.bump();
            let rhs = self.conjunction()?;
            lhs = lhs.or(rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.until()?;
        while self.peek().tok == Tok::And {
            self.bump();
            let rhs = self.until()?;
            lhs = lhs.and(rhs);
        }
        Ok(lhs)
    }

    // until := unary (('U' | 'R') until)?   (right-associative)
    fn until(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.unary()?;
        match self.peek().tok {
            Tok::Until => {
                self.bump();
                let rhs = self.until()?;
                Ok(lhs.until(rhs))
            }
            Tok::Release => {
                self.bump();
                let rhs = self.until()?;
                Ok(lhs.release(rhs))
            }
            _ => Ok(lhs),
        }
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().tok {
            Tok::Not => {
                self.bump();
                Ok(self.unary()?.negate())
            }
            Tok::Next => {
                self.bump();
                Ok(Formula::next(self.unary()?))
            }
            Tok::Finally => {
                self.bump();
                Ok(Formula::finally(self.unary()?))
            }
            Tok::Globally => {
                self.bump();
                Ok(Formula::globally(self.unary()?))
            }
            _ => self.primary(),
        }
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().tok.clone() {
            Tok::True => {
                self.bump();
                Ok(Formula::True)
            }
            Tok::False => {
                self.bump();
                Ok(Formula::False)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::atom(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.iff()?;
                if self.peek().tok == Tok::RParen {
                    self.bump();
                    Ok(inner)
                } else {
                    Err(self.unexpected(&["')'"]))
                }
            }
            _ => Err(self.unexpected(FORMULA_STARTERS)),
        }
    }
}

/// Parses a single formula; trailing input is an error.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    if p.peek().tok == Tok::Eof {
        return Err(p.error("empty input".into(), FORMULA_STARTERS));
    }
    let formula = p.iff()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.unexpected(&["operator", "end of input"]));
    }
    Ok(formula)
}
