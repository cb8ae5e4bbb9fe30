//! SNAP-style edge-list ingestion.

use std::collections::HashMap;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Bijection between the ids found in an input file and dense internal ids.
///
/// Internal ids are assigned in ascending order of external id.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NodeIdMap {
    external: Vec<u64>,
    internal: HashMap<u64, u32>,
}

impl NodeIdMap {
    fn from_sorted_unique(external: Vec<u64>) -> Self {
        let internal = external.iter().enumerate().map(|(i, &e)| (e, i as u32)).collect();
        NodeIdMap { external, internal }
    }

    /// Identity map over `0..n`, used for generated graphs.
    pub fn identity(n: usize) -> Self {
        Self::from_sorted_unique((0..n as u64).collect())
    }

    pub fn len(&self) -> usize {
        self.external.len()
    }

    pub fn is_empty(&self) -> bool {
        self.external.is_empty()
    }

    pub fn external(&self, internal: usize) -> Option<u64> {
        self.external.get(internal).copied()
    }

    pub fn internal(&self, external: u64) -> Option<usize> {
        self.internal.get(&external).map(|&i| i as usize)
    }
}

/// Summary of one ingestion run.
///
/// `edges` follows the graph's convention (unordered pairs when undirected).
/// `edge_rows` is the raw number of data lines, which is what SNAP headers
/// usually count; `undirected_pairs` is the symmetrized pair count. Header
/// values are echoed for cross-checking only and never used.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoadReport {
    pub nodes: usize,
    pub edges: usize,
    pub dropped_self_loops: usize,
    pub dropped_duplicates: usize,
    pub edge_rows: usize,
    pub undirected_pairs: usize,
    pub header_nodes: Option<u64>,
    pub header_edges: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct Loaded {
    pub graph: Graph,
    pub ids: NodeIdMap,
    pub report: LoadReport,
}

/// Parses `# Nodes: 5242 Edges: 28980`-style header comments.
fn scan_header(comment: &str, nodes: &mut Option<u64>, edges: &mut Option<u64>) {
    let mut tokens = comment.split_whitespace();
    while let Some(tok) = tokens.next() {
        let slot = match tok.trim_end_matches(':').to_ascii_lowercase().as_str() {
            "nodes" => &mut *nodes,
            "edges" => &mut *edges,
            _ => continue,
        };
        if let Some(value) = tokens.next().and_then(|t| t.parse().ok()) {
            *slot = Some(value);
        }
    }
}

fn parse_id(tok: &str, line: usize) -> Result<u64> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer node id, found {tok:?}"),
    })
}

/// Reads a whitespace-separated two-column edge list.
///
/// Lines starting with `#` are comments; blank lines are skipped. Self-loops
/// and repeated edges are dropped and counted; ids are remapped densely.
pub fn load_edge_list<R: BufRead>(mut source: R, directed: bool) -> Result<Loaded> {
    let mut rows: Vec<(u64, u64)> = Vec::new();
    let mut header_nodes = None;
    let mut header_edges = None;
    let mut buf = String::new();
    let mut line_no = 0usize;
    loop {
        buf.clear();
        if source.read_line(&mut buf)? == 0 {
            break;
        }
        line_no += 1;
        let line = buf.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            scan_header(comment, &mut header_nodes, &mut header_edges);
            continue;
        }
        let mut tokens = line.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => rows.push((parse_id(a, line_no)?, parse_id(b, line_no)?)),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected two columns, found {}", line.split_whitespace().count()),
                })
            }
        }
    }

    let mut external: Vec<u64> = rows.iter().flat_map(|&(a, b)| [a, b]).collect();
    external.sort_unstable();
    external.dedup();
    let index = |e: u64| external.binary_search(&e).expect("id collected above");
    let edges: Vec<(usize, usize)> = rows.iter().map(|&(a, b)| (index(a), index(b))).collect();
    let (graph, drops) = Graph::build(external.len(), edges, directed)?;
    let undirected_pairs = if directed { graph.undirected_view().edge_count() } else { graph.edge_count() };

    let report = LoadReport {
        nodes: graph.node_count(),
        edges: graph.edge_count(),
        dropped_self_loops: drops.self_loops,
        dropped_duplicates: drops.duplicates,
        edge_rows: rows.len(),
        undirected_pairs,
        header_nodes,
        header_edges,
    };
    Ok(Loaded { graph, ids: NodeIdMap::from_sorted_unique(external), report })
}

/// Writes the graph's edges as `u v` lines using external ids.
pub fn write_edge_list<W: Write>(g: &Graph, ids: &NodeIdMap, mut w: W) -> Result<()> {
    for (u, v) in g.edges() {
        let eu = ids.external(u).ok_or_else(|| Error::argument("id map does not cover graph"))?;
        let ev = ids.external(v).ok_or_else(|| Error::argument("id map does not cover graph"))?;
        writeln!(w, "{eu} {ev}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str, directed: bool) -> Result<Loaded> {
        load_edge_list(text.as_bytes(), directed)
    }

    #[test]
    fn minimal_path() {
        let l = load("0 1\n1 2", false).unwrap();
        assert_eq!(l.graph.node_count(), 3);
        assert_eq!(l.graph.edge_count(), 2);
    }

    #[test]
    fn loop_and_duplicate_collapsed() {
        let l = load("0 0\n0 1\n0 1", false).unwrap();
        assert_eq!(l.graph.node_count(), 2);
        assert_eq!(l.graph.edge_count(), 1);
        assert_eq!(l.report.dropped_self_loops, 1);
        assert_eq!(l.report.dropped_duplicates, 1);
        assert_eq!(l.report.edge_rows, 3);
    }

    #[test]
    fn header_counts_are_reported_not_trusted() {
        let text = "# Directed graph\n# Nodes: 99 Edges: 1000\n# FromNodeId\tToNodeId\n10\t20\r\n20\t10\r\n";
        let l = load(text, false).unwrap();
        assert_eq!(l.report.header_nodes, Some(99));
        assert_eq!(l.report.header_edges, Some(1000));
        assert_eq!(l.report.nodes, 2);
        assert_eq!(l.report.edges, 1);
        assert_eq!(l.report.edge_rows, 2);
        assert_eq!(l.ids.external(0), Some(10));
        assert_eq!(l.ids.internal(20), Some(1));
    }

    #[test]
    fn malformed_lines_name_the_line() {
        match load("0 1\n# c\n1 2 3\n", false) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match load("0 x\n", false) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(load("7\n", false), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(load("-1 2\n", false), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let l = load("", true).unwrap();
        assert_eq!(l.graph.node_count(), 0);
        assert_eq!(l.graph.edge_count(), 0);
        let l = load("# only comments\n\n", false).unwrap();
        assert_eq!(l.graph.node_count(), 0);
    }

    #[test]
    fn directed_reports_both_conventions() {
        let l = load("1 2\n2 1\n2 3\n", true).unwrap();
        assert_eq!(l.report.edges, 3);
        assert_eq!(l.report.undirected_pairs, 2);
    }

    #[test]
    fn write_uses_external_ids() {
        let l = load("100 7\n7 42\n", false).unwrap();
        let mut out = Vec::new();
        write_edge_list(&l.graph, &l.ids, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "7 42\n7 100\n");
    }

    #[test]
    fn report_json_has_required_fields() {
        let l = load("0 1\n", false).unwrap();
        let v: serde_json::Value = serde_json::to_value(&l.report).unwrap();
        for key in ["nodes", "edges", "dropped_self_loops", "dropped_duplicates"] {
            assert!(v.get(key).is_some(), "missing {key}");
        }
    }
}
