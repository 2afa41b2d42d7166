//! Formula corpus files: one formula per line, `#` starts a comment,
//! blank lines are ignored. A trailing `# @expect: <verdict>` comment
//! pins the expected analysis result for the line.

use crate::monitorability::Monitorability4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    /// 1-based source line number.
    pub line: usize,
    /// Formula text with comments stripped.
    pub text: String,
    /// Raw expectation annotation, if any.
    pub expect: Option<String>,
}

/// A validated `@expect:` annotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Class(Monitorability4),
    Monitorable(bool),
}

impl Expectation {
    pub fn parse(text: &str) -> Option<Expectation> {
        match text.trim() {
            "positive" | "positively monitorable" => {
                Some(Expectation::Class(Monitorability4::Positive))
            }
            "negative" | "negatively monitorable" => {
                Some(Expectation::Class(Monitorability4::Negative))
            }
            "neutral" | "neutrally monitorable" => {
                Some(Expectation::Class(Monitorability4::Neutral))
            }
            "non" | "non-monitorable" => Some(Expectation::Class(Monitorability4::Non)),
            "monitorable" => Some(Expectation::Monitorable(true)),
            _ => None,
        }
    }

    pub fn matches(self, verdict: Monitorability4) -> bool {
        match self {
            Expectation::Class(c) => c == verdict,
            Expectation::Monitorable(m) => (verdict != Monitorability4::Non) == m,
        }
    }
}

/// Splits a corpus file into entries. Structure never fails; formula
/// syntax is checked by whoever analyzes the entries.
pub fn parse_corpus(text: &str) -> Vec<CorpusEntry> {
    let mut entries = Vec::new();
    for (i, raw_line) in text.lines().enumerate() {
        let (body, comment) = match raw_line.find('#') {
            Some(at) => (&raw_line[..at], Some(&raw_line[at + 1..])),
            None => (raw_line, None),
        };
        let body = body.trim();
        if body.is_empty() {
            continue;
        }
        let expect = comment.and_then(|c| {
            let c = c.trim();
            c.strip_prefix("@expect:").map(|v| v.trim().to_string())
        });
        entries.push(CorpusEntry {
            line: i + 1,
            text: body.to_string(),
            expect,
        });
    }
    entries
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_lines_comments_and_expectations() {
        let text = "\
# corpus header
[](p)
p U q # @expect: neutral

<>r # plain comment
";
        let entries = parse_corpus(text);
        assert_eq!(entries.len(), 3);
        assert_eq!(entries[0].line, 2);
        assert_eq!(entries[0].text, "[](p)");
        assert_eq!(entries[0].expect, None);
        assert_eq!(entries[1].expect.as_deref(), Some("neutral"));
        assert_eq!(entries[2].text, "<>r");
        assert_eq!(entries[2].expect, None);
    }

    #[test]
    fn expectation_vocabulary() {
        assert_eq!(
            Expectation::parse("negatively monitorable"),
            Some(Expectation::Class(Monitorability4::Negative))
        );
        assert_eq!(
            Expectation::parse("monitorable"),
            Some(Expectation::Monitorable(true))
        );
        assert_eq!(Expectation::parse("bogus"), None);
        assert!(Expectation::parse("non-monitorable")
            .unwrap()
            .matches(Monitorability4::Non));
        assert!(Expectation::parse("monitorable")
            .unwrap()
            .matches(Monitorability4::Negative));
        assert!(!Expectation::parse("monitorable")
            .unwrap()
            .matches(Monitorability4::Non));
    }
}
