//! DIMACS-like edge-list format.
//!
//! ```text
//! c optional comment
//! p edge <n> <m>
//! e <u> <v>
//! ```
//!
//! Vertices are 1-based. Emission is canonical: the header, then every edge
//! once as `e u v` with `u < v`, sorted lexicographically.

use std::fmt::Write as _;
use std::io::Read;

use log::warn;

use crate::error::GraphError;
use crate::graph::Graph;

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} {tok:?}")))
}

/// Parses a graph from edge-list text.
///
/// Duplicate edges are merged with a warning; an edge count that disagrees
/// with the header is also only warned about.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut graph: Option<Graph> = None;
    let mut declared_m = 0;
    let mut edge_lines = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if graph.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                match toks.next() {
                    Some("edge") => {}
                    Some(other) => {
                        return Err(parse_err(line, format!("unsupported format {other:?}")))
                    }
                    None => return Err(parse_err(line, "malformed header")),
                }
                let n = parse_usize(toks.next(), line, "vertex count")?;
                declared_m = parse_usize(toks.next(), line, "edge count")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens in header"));
                }
                graph = Some(Graph::empty(n));
            }
            "e" => {
                let u = parse_usize(toks.next(), line, "endpoint")?;
                let v = parse_usize(toks.next(), line, "endpoint")?;
                if toks.next().is_some() {
                    return Err(parse_err(line, "trailing tokens in edge line"));
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop at vertex {u}")));
                }
                let g = graph
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "edge before header"))?;
                for x in [u, v] {
                    if !g.contains_vertex(x) {
                        return Err(parse_err(
                            line,
                            format!("vertex {x} out of range 1..={}", g.n()),
                        ));
                    }
                }
                edge_lines += 1;
                if !g.insert(u, v) {
                    warn!("line {line}: duplicate edge {{{u}, {v}}} ignored");
                }
            }
            other => return Err(parse_err(line, format!("unknown line type {other:?}"))),
        }
    }

    let graph = graph.ok_or_else(|| parse_err(text.lines().count().max(1), "missing header"))?;
    if edge_lines != declared_m {
        warn!("header declares {declared_m} edges but {edge_lines} edge lines were read");
    }
    Ok(graph)
}

/// Reads and parses a graph from any reader.
pub fn read_graph<R: Read>(mut reader: R) -> Result<Graph, GraphError> {
    let mut text = String::new();
    reader
        .read_to_string(&mut text)
        .map_err(|e| parse_err(0, e.to_string()))?;
    parse_graph(&text)
}

/// Canonical edge-list text for `g`.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path() {
        let g = parse_graph("p edge 3 2\ne 1 2\ne 2 3\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn parses_isolated_vertices() {
        let g = parse_graph("c two lonely vertices\np edge 2 0\n").unwrap();
        assert_eq!((g.n(), g.edge_count()), (2, 0));
    }

    #[test]
    fn rejects_self_loop() {
        let err = parse_graph("e 1 1").unwrap_err();
        assert_eq!(
            err,
            GraphError::Parse {
                line: 1,
                message: "self-loop at vertex 1".into()
            }
        );
        let err = parse_graph("p edge 3 1\ne 2 2\n").unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(
            parse_graph("p edge x 1"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p col 3 1"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("p edge 3 1\ne 1 4\n"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("e 1 2\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_graph("c nothing\n"),
            Err(GraphError::Parse { .. })
        ));
        assert!(parse_graph("p edge 2 0\np edge 2 0\n").is_err());
        assert!(parse_graph("p edge 2 1\ne 1\n").is_err());
        assert!(parse_graph("p edge 2 1\nx 1 2\n").is_err());
    }

    #[test]
    fn duplicates_are_merged() {
        let g = parse_graph("p edge 3 3\ne 1 2\ne 2 1\ne 2 3\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn emission_is_canonical() {
        let g = parse_graph("p edge 4 3\ne 4 2\ne 3 1\ne 2 1\n").unwrap();
        assert_eq!(write_graph(&g), "p edge 4 3\ne 1 2\ne 1 3\ne 2 4\n");
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }
}
