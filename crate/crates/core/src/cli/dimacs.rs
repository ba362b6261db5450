//! DIMACS `.col` edge format with an optional `c meta key=value` header.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DimacsError {
    #[error("line {line}: {msg}")]
    SyntaxError { line: usize, msg: String },
    #[error("header declares {declared} edges but {found} were given")]
    CountMismatch { declared: usize, found: usize },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InstanceFile {
    pub graph: Graph,
    pub meta: BTreeMap<String, String>,
}

fn syntax(line: usize, msg: impl Into<String>) -> DimacsError {
    DimacsError::SyntaxError {
        line,
        msg: msg.into(),
    }
}

pub fn parse_dimacs(text: &str) -> Result<Graph, DimacsError> {
    parse_instance(text).map(|f| f.graph)
}

pub fn parse_instance(text: &str) -> Result<InstanceFile, DimacsError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut meta = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match tag {
            "c" => {
                if toks.next() == Some("meta") {
                    for kv in toks {
                        let (k, v) = kv
                            .split_once('=')
                            .ok_or_else(|| syntax(line, format!("bad meta entry {kv:?}")))?;
                        meta.insert(k.to_string(), v.to_string());
                    }
                }
            }
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "second problem line"));
                }
                if toks.next() != Some("edge") {
                    return Err(syntax(line, "expected \"p edge n m\""));
                }
                let n = number(toks.next(), line)?;
                let m = number(toks.next(), line)?;
                if toks.next().is_some() {
                    return Err(syntax(line, "trailing tokens"));
                }
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| syntax(line, "edge before problem line"))?;
                let u = number(toks.next(), line)?;
                let v = number(toks.next(), line)?;
                if toks.next().is_some() {
                    return Err(syntax(line, "trailing tokens"));
                }
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(syntax(line, format!("vertex out of range 1..={n}")));
                }
                if u == v {
                    return Err(syntax(line, "self-loop"));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(DimacsError::DuplicateEdge { line, u, v });
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(syntax(line, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) =
        header.ok_or_else(|| syntax(text.lines().count().max(1), "missing problem line"))?;
    if edges.len() != m {
        return Err(DimacsError::CountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(InstanceFile {
        graph: Graph::from_edges(n, &edges),
        meta,
    })
}

fn number(tok: Option<&str>, line: usize) -> Result<usize, DimacsError> {
    let tok = tok.ok_or_else(|| syntax(line, "missing number"))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("not a number: {tok:?}")))
}

/// Writes `g` (compacted, so ids become `1..=n`) with its metadata.
pub fn emit_instance(f: &InstanceFile) -> String {
    let (g, _) = f.graph.compact();
    let mut out = String::new();
    if !f.meta.is_empty() {
        out.push_str("c meta");
        for (k, v) in &f.meta {
            let _ = write!(out, " {k}={v}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.u + 1, e.v + 1);
    }
    out
}

pub fn emit_dimacs(g: &Graph) -> String {
    emit_instance(&InstanceFile {
        graph: g.clone(),
        meta: BTreeMap::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_dimacs("c a comment\np edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\n"),
            Err(DimacsError::CountMismatch {
                declared: 3,
                found: 2
            })
        );
        assert!(matches!(
            parse_dimacs("p edge 3 2\ne 1 2\ne 2 1\n"),
            Err(DimacsError::DuplicateEdge { line: 3, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 3 1\ne 1 4\n"),
            Err(DimacsError::SyntaxError { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs("e 1 2\n"),
            Err(DimacsError::SyntaxError { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 2 1\nx\n"),
            Err(DimacsError::SyntaxError { line: 2, .. })
        ));
        assert!(matches!(
            parse_dimacs(""),
            Err(DimacsError::SyntaxError { .. })
        ));
    }

    #[test]
    fn meta_round_trip() {
        let mut meta = BTreeMap::new();
        meta.insert("family".to_string(), "S(2,2,2,1)".to_string());
        meta.insert("seed".to_string(), "7".to_string());
        let f = InstanceFile {
            graph: Graph::cycle(5),
            meta,
        };
        assert_eq!(parse_instance(&emit_instance(&f)).unwrap(), f);
    }
}
