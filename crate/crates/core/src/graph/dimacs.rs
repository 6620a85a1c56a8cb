//! DIMACS edge-list reading and writing.
//!
//! Accepted input: optional `c` comment lines, one `p edge <n> <m>` header,
//! then exactly `m` lines `e <u> <v>` with endpoints in `1..=n`. Parsing is
//! strict — self loops, duplicate edges, out-of-range endpoints, and
//! mismatched edge counts are all rejected with a descriptive error.
//!
//! Output is canonical: header, then edges sorted with each written as
//! `e u v`, `u < v`. Vertices are relabeled to `1..=n` if the graph's
//! vertex set is not already contiguous from 1.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(u32, usize)> = None;
    let mut graph = Graph::new();
    let mut edges_seen = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let lineno = idx + 1;
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(Error::Input(format!("line {lineno}: duplicate p line")));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(Error::Input(format!(
                        "line {lineno}: expected `p edge <n> <m>`, got `{line}`"
                    )));
                }
                let n: u32 = fields[2]
                    .parse()
                    .map_err(|_| Error::Input(format!("line {lineno}: bad vertex count")))?;
                let m: usize = fields[3]
                    .parse()
                    .map_err(|_| Error::Input(format!("line {lineno}: bad edge count")))?;
                graph = Graph::with_vertices(n);
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header
                    .ok_or_else(|| Error::Input(format!("line {lineno}: e line before p line")))?;
                if fields.len() != 3 {
                    return Err(Error::Input(format!(
                        "line {lineno}: expected `e <u> <v>`, got `{line}`"
                    )));
                }
                let u: u32 = fields[1]
                    .parse()
                    .map_err(|_| Error::Input(format!("line {lineno}: bad endpoint")))?;
                let v: u32 = fields[2]
                    .parse()
                    .map_err(|_| Error::Input(format!("line {lineno}: bad endpoint")))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(Error::Input(format!(
                        "line {lineno}: endpoint out of range 1..={n}"
                    )));
                }
                graph.add_edge(u, v).map_err(|e| match e {
                    Error::Input(msg) => Error::Input(format!("line {lineno}: {msg}")),
                    other => other,
                })?;
                edges_seen += 1;
            }
            other => {
                return Err(Error::Input(format!(
                    "line {lineno}: unknown record type `{other}`"
                )));
            }
        }
    }

    let (_, m) = header.ok_or_else(|| Error::Input("missing p line".into()))?;
    if edges_seen != m {
        return Err(Error::Input(format!(
            "header promised {m} edges, found {edges_seen}"
        )));
    }
    Ok(graph)
}

pub fn emit_dimacs(g: &Graph) -> String {
    // relabel to 1..=n when the vertex set has holes or does not start at 1
    let relabel: BTreeMap<u32, u32> = g
        .vertices()
        .enumerate()
        .map(|(i, v)| (v, i as u32 + 1))
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, "p edge {} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        let (mut a, mut b) = (relabel[&u], relabel[&v]);
        if a > b {
            std::mem::swap(&mut a, &mut b);
        }
        let _ = writeln!(out, "e {a} {b}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_small_instance() {
        let text = "c a triangle plus a pendant\np edge 4 4\ne 1 2\ne 2 3\ne 1 3\ne 3 4\n";
        let g = parse_dimacs(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert!(g.has_edge(1, 3));
        assert!(!g.has_edge(1, 4));
    }

    #[test]
    fn roundtrip_is_identity_on_canonical_output() {
        let text = "p edge 5 3\ne 4 5\ne 1 2\ne 2 5\n";
        let g = parse_dimacs(text).unwrap();
        let emitted = emit_dimacs(&g);
        assert_eq!(emitted, "p edge 5 3\ne 1 2\ne 2 5\ne 4 5\n");
        let g2 = parse_dimacs(&emitted).unwrap();
        assert_eq!(emit_dimacs(&g2), emitted);
    }

    #[test]
    fn emit_relabels_sparse_vertex_sets() {
        let mut g = Graph::new();
        for v in [3u32, 7, 10] {
            g.add_vertex(v);
        }
        g.add_edge(7, 3).unwrap();
        g.add_edge(10, 3).unwrap();
        assert_eq!(emit_dimacs(&g), "p edge 3 2\ne 1 2\ne 1 3\n");
    }

    #[test]
    fn rejects_malformed_input() {
        let cases: &[(&str, &str)] = &[
            ("", "missing p line"),
            ("e 1 2\np edge 2 1\n", "before p"),
            ("p edge 2 1\np edge 2 1\ne 1 2\n", "duplicate"),
            ("p clique 2 1\ne 1 2\n", "expected `p edge"),
            ("p edge 2 2\ne 1 2\n", "promised 2 edges"),
            ("p edge 2 1\ne 1 3\n", "out of range"),
            ("p edge 2 1\ne 1 1\n", "loop"),
            ("p edge 3 2\ne 1 2\ne 2 1\n", "duplicate edge"),
            ("p edge 2 1\nq 1 2\n", "unknown record"),
            ("p edge 2 1\ne 1 two\n", "bad endpoint"),
        ];
        for (text, needle) in cases {
            let err = parse_dimacs(text).unwrap_err().to_string();
            assert!(err.contains(needle), "`{text}` gave `{err}`");
        }
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = "\nc header comment\np edge 2 1\nc between\n\ne 1 2\nc trailing\n";
        let g = parse_dimacs(text).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }
}
