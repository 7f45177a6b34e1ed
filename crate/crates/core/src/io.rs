//! Plain-text hypergraph files.
//!
//! One hyperedge per line as whitespace-separated vertex labels. A token
//! starting with `#` begins a comment that runs to the end of the line, so
//! labels such as `v#2` are allowed. Blank lines are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Severity, Violation};

/// Parses hypergraph text. Labels get indices in first-appearance order and
/// edges keep line order. Violations are reported against source lines.
pub fn parse_str(text: &str) -> Result<Hypergraph> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let mut edge = Vec::new();
        for token in raw.split_whitespace() {
            if token.starts_with('#') {
                break;
            }
            let next = labels.len();
            let v = *index.entry(token).or_insert(next);
            if v == next {
                labels.push(token.to_string());
            }
            if edge.contains(&v) {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex '{token}' repeated"),
                });
            }
            edge.push(v);
        }
        if !edge.is_empty() {
            edges.push(edge);
            lines.push(line);
        }
    }
    if edges.is_empty() {
        return Err(Error::NoHyperedges);
    }
    let h = Hypergraph::from_raw(labels, edges);
    if let Some(v) = h
        .validate()
        .into_iter()
        .find(|v| v.severity() == Severity::Error)
    {
        return Err(located(&v, &lines));
    }
    Ok(h)
}

fn located(v: &Violation, lines: &[usize]) -> Error {
    let (line, message) = match *v {
        Violation::Singleton { edge } => (lines[edge], "cardinality-one hyperedge".to_string()),
        Violation::Duplicate { first, second } => (
            lines[second],
            format!("hyperedge duplicates the one at line {}", lines[first]),
        ),
        Violation::Nested { inner, outer } => (
            lines[inner],
            format!("hyperedge contained in the one at line {}", lines[outer]),
        ),
        Violation::EmptyEdge { edge } | Violation::VertexOutOfRange { edge, .. } => {
            (lines[edge], v.to_string())
        }
        Violation::IsolatedVertex { .. } => unreachable!("warnings are filtered out"),
    };
    Error::Parse { line, message }
}

pub fn parse_path<P: AsRef<Path>>(path: P) -> Result<Hypergraph> {
    parse_str(&std::fs::read_to_string(path)?)
}

/// One line per edge, labels separated by single spaces.
pub fn emit(h: &Hypergraph) -> String {
    let mut out = String::new();
    for e in h.edges() {
        let labels: Vec<&str> = e.iter().map(|&v| h.label(v)).collect();
        let _ = writeln!(out, "{}", labels.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn parses_small_example() {
        let h = parse_str("1 2 3\n1 4 5\n3 4 5\n").unwrap();
        assert_eq!(h, families::small_example());
    }

    #[test]
    fn comments_and_blank_lines() {
        let h = parse_str("a b\n# comment\n\nb c   # trailing\n").unwrap();
        assert_eq!(h.labels(), ["a", "b", "c"]);
        assert_eq!(h.edges(), [vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn hash_inside_label() {
        let h = parse_str("v#1 v#2\nv#2 w\n").unwrap();
        assert_eq!(h.vertex_count(), 3);
    }

    #[test]
    fn singleton_error_names_line() {
        let err = parse_str("1\n").unwrap_err();
        assert_eq!(err.to_string(), "cardinality-one hyperedge at line 1");
        let err = parse_str("# header\na b\nc\n").unwrap_err();
        assert_eq!(err.to_string(), "cardinality-one hyperedge at line 3");
    }

    #[test]
    fn nested_and_duplicate_errors() {
        let err = parse_str("a b c\n\na b\n").unwrap_err();
        assert_eq!(
            err.to_string(),
            "hyperedge contained in the one at line 1 at line 3"
        );
        let err = parse_str("a b\nb a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_str("a b a\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn empty_input() {
        assert!(matches!(parse_str("# nothing\n"), Err(Error::NoHyperedges)));
    }

    #[test]
    fn round_trip() {
        for h in [
            families::small_example(),
            families::collar_21(),
            families::fano_plane(),
        ] {
            assert_eq!(parse_str(&emit(&h)).unwrap(), h);
        }
    }
}
