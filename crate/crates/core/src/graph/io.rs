//! Edge-list, JSON and DOT formats.
//!
//! Edge list: lines starting with `#` are comments and blank lines are
//! skipped; the first data line is `n m`, followed by exactly `m` lines
//! `u v` with `0 <= u, v < n`, `u != v` and no edge listed twice in either
//! orientation.
//!
//! JSON: `{"n": 3, "edges": [[0, 1], [1, 2]], "labels": ["a", "b", "c"]}`
//! where `labels` is optional.

use super::Graph;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Json,
}

impl GraphFormat {
    /// `.json` files are JSON, everything else is an edge list.
    pub fn from_path(path: &std::path::Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("json") => GraphFormat::Json,
            _ => GraphFormat::EdgeList,
        }
    }

    pub fn parse(self, text: &str) -> Result<Graph> {
        match self {
            GraphFormat::EdgeList => parse_edge_list(text),
            GraphFormat::Json => parse_json(text),
        }
    }
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| syntax(line_no, format!("missing {what}")))?;
        tok.parse::<usize>()
            .map_err(|_| syntax(line_no, format!("expected a non-negative integer for {what}, found {tok:?}")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if let Some(extra) = fields.next() {
        return Err(syntax(line_no, format!("unexpected trailing field {extra:?}")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = data.next().ok_or_else(|| syntax(1, "missing header line \"n m\""))?;
    let (n, m) = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line_no, line) in data {
        if edges.len() == m {
            return Err(syntax(line_no, format!("more than the declared {m} edges")));
        }
        let (u, v) = parse_pair(line_no, line)?;
        for w in [u, v] {
            if w >= n {
                return Err(syntax(line_no, format!("vertex {w} out of range (n = {n})")));
            }
        }
        if u == v {
            return Err(syntax(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(syntax(line_no, format!("duplicate edge {{{u}, {v}}}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        let last = text.lines().count().max(1);
        return Err(syntax(last, format!("expected {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| syntax(e.line(), e.to_string()))?;
    let g = Graph::from_edges(doc.n, doc.edges.iter().map(|e| (e[0], e[1])))?;
    match doc.labels {
        Some(labels) => g.with_labels(labels),
        None => Ok(g),
    }
}

pub fn to_json(g: &Graph) -> String {
    let doc = JsonGraph {
        n: g.n(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        labels: g.labels().map(<[String]>::to_vec),
    };
    serde_json::to_string(&doc).expect("graph serializes")
}

/// Edge list with optional leading comment lines.
pub fn to_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.n() {
        let label = g.labels().map_or_else(|| v.to_string(), |l| l[v].clone());
        let _ = writeln!(out, "  {v} [label=\"{}\"];", label.replace('"', "\\\""));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{cycle, path};

    #[test]
    fn parses_examples() {
        assert_eq!(parse_edge_list("3 2\n0 1\n1 2").unwrap(), path(3));
        assert_eq!(parse_edge_list("1 0").unwrap(), Graph::empty(1));
        assert_eq!(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0").unwrap(), cycle(4));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a path\n\n3 2\n# middle\n0 1\n\n1 2\n";
        assert_eq!(parse_edge_list(text).unwrap(), path(3));
    }

    fn line_of(err: Error) -> usize {
        match err {
            Error::Syntax { line, .. } => line,
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of(parse_edge_list("3 2\n0 1\n1 x").unwrap_err()), 3);
        assert_eq!(line_of(parse_edge_list("3 1\n0 3").unwrap_err()), 2);
        assert_eq!(line_of(parse_edge_list("3 1\n2 2").unwrap_err()), 2);
        assert_eq!(line_of(parse_edge_list("3 2\n0 1\n1 0").unwrap_err()), 3);
        assert_eq!(line_of(parse_edge_list("3 1\n0 1\n1 2").unwrap_err()), 3);
        assert!(parse_edge_list("3 2\n0 1").is_err());
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3").is_err());
        assert!(parse_edge_list("3 1\n0 1 2").is_err());
    }

    #[test]
    fn json_round_trip_with_labels() {
        let g = path(3)
            .with_labels(vec!["a".into(), "b".into(), "c".into()])
            .unwrap();
        let text = to_json(&g);
        assert_eq!(parse_json(&text).unwrap(), g);
        assert_eq!(
            parse_json(r#"{"n": 3, "edges": [[0, 1], [1, 2]]}"#).unwrap(),
            path(3)
        );
        assert!(parse_json(r#"{"n": 2, "edges": [[0, 0]]}"#).is_err());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = cycle(7);
        let text = to_edge_list(&g, &["seven-cycle".to_string()]);
        assert!(text.starts_with("# seven-cycle\n7 7\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn dot_export() {
        let dot = to_dot(&path(2), "g");
        assert!(dot.contains("0 -- 1;"));
        assert!(dot.starts_with("graph g {"));
    }
}
