//! Divisive clustering by repeated removal of the highest-betweenness edge.
//!
//! After each removal betweenness is recomputed, but only inside the
//! component that lost the edge: shortest paths elsewhere are untouched, so
//! the other scores are already current.

use serde::Serialize;

use super::betweenness::{accumulate_from, EdgeIndexed};
use super::partition::{modularity, undirected, Partition};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default refusal threshold for [`girvan_newman`].
pub const DEFAULT_EDGE_LIMIT: usize = 20_000;

/// Scores within this relative distance are treated as tied.
const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GnTarget {
    /// Return the split with the highest modularity.
    MaxQ,
    /// Return the first split with at least this many components.
    Communities(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GnOptions {
    /// Refuse graphs with more edges than this; `None` disables the guard.
    pub edge_limit: Option<usize>,
}

impl Default for GnOptions {
    fn default() -> Self {
        GnOptions { edge_limit: Some(DEFAULT_EDGE_LIMIT) }
    }
}

/// One edge removal.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GnStep {
    pub removed_edge: (usize, usize),
    pub num_components: usize,
    #[serde(rename = "Q")]
    pub modularity: f64,
}

#[derive(Debug, Clone)]
pub struct GnResult {
    pub partition: Partition,
    pub modularity: f64,
    pub dendrogram: Vec<GnStep>,
}

fn pick_edge(scores: &[f64], edges: &[(usize, usize)], alive: &[bool]) -> usize {
    let mut best: Option<usize> = None;
    for (id, &s) in scores.iter().enumerate() {
        if !alive[id] {
            continue;
        }
        best = match best {
            None => Some(id),
            Some(b) => {
                let tol = TIE_TOLERANCE * scores[b].abs().max(1.0);
                if s > scores[b] + tol || ((s - scores[b]).abs() <= tol && edges[id] < edges[b]) {
                    Some(id)
                } else {
                    Some(b)
                }
            }
        };
    }
    best.expect("at least one live edge")
}

pub fn girvan_newman(g: &Graph, target: GnTarget, options: GnOptions) -> Result<GnResult> {
    let ug = undirected(g);
    let n = ug.node_count();
    if let GnTarget::Communities(k) = target {
        if k > n {
            return Err(Error::argument(format!("cannot split {n} nodes into {k} communities")));
        }
    }
    if ug.edge_count() == 0 {
        return Err(Error::ModularityUndefined);
    }
    if let Some(limit) = options.edge_limit {
        if ug.edge_count() > limit {
            return Err(Error::SizeLimit { edges: ug.edge_count(), limit });
        }
    }

    let mut work = EdgeIndexed::new(&ug);
    let mut alive = vec![true; work.edges.len()];
    let all: Vec<usize> = (0..n).collect();
    let mut scores = accumulate_from(&work, &all);

    let mut current = Partition::components(&ug);
    let mut best = (current.clone(), modularity(&ug, &current)?);
    let mut dendrogram = Vec::new();
    if let GnTarget::Communities(k) = target {
        if current.community_count() >= k {
            return Ok(GnResult { partition: best.0, modularity: best.1, dendrogram });
        }
    }

    let mut seen = vec![false; n];
    for _ in 0..work.edges.len() {
        let id = pick_edge(&scores, &work.edges, &alive);
        let (u, v) = work.edges[id];
        work.remove(id);
        alive[id] = false;
        scores[id] = 0.0;

        seen.iter_mut().for_each(|s| *s = false);
        let mut affected = work.component(u, &mut seen);
        if !seen[v] {
            affected.extend(work.component(v, &mut seen));
        }
        for &x in &affected {
            for &(_, e) in &work.adj[x] {
                scores[e as usize] = 0.0;
            }
        }
        let fresh = accumulate_from(&work, &affected);
        for &x in &affected {
            for &(_, e) in &work.adj[x] {
                scores[e as usize] = fresh[e as usize];
            }
        }

        let labels = component_labels(&work);
        current = Partition::new(&ug, &labels)?;
        let q = modularity(&ug, &current)?;
        dendrogram.push(GnStep { removed_edge: (u, v), num_components: current.community_count(), modularity: q });
        match target {
            GnTarget::MaxQ => {
                if q > best.1 {
                    best = (current.clone(), q);
                }
            }
            GnTarget::Communities(k) => {
                if current.community_count() >= k {
                    return Ok(GnResult { partition: current, modularity: q, dendrogram });
                }
            }
        }
    }
    Ok(GnResult { partition: best.0, modularity: best.1, dendrogram })
}

fn component_labels(work: &EdgeIndexed) -> Vec<usize> {
    let n = work.node_count();
    let mut labels = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for s in 0..n {
        if labels[s] == usize::MAX {
            for v in work.component(s, &mut seen) {
                labels[v] = s;
            }
        }
    }
    labels
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)], false).unwrap()
    }

    #[test]
    fn bridge_first_and_triangles_returned() {
        let g = two_triangles();
        let r = girvan_newman(&g, GnTarget::MaxQ, GnOptions::default()).unwrap();
        assert_eq!(r.dendrogram[0].removed_edge, (2, 3));
        assert_eq!(r.dendrogram[0].num_components, 2);
        assert!((r.dendrogram[0].modularity - 5.0 / 14.0).abs() < 1e-15);
        assert_eq!(r.partition.assignment(), &[0, 0, 0, 1, 1, 1]);
        assert!((r.modularity - 5.0 / 14.0).abs() < 1e-15);
        assert_eq!(r.dendrogram.len(), 7);
    }

    #[test]
    fn k_communities_stops_early() {
        let g = two_triangles();
        let r = girvan_newman(&g, GnTarget::Communities(2), GnOptions::default()).unwrap();
        assert_eq!(r.dendrogram.len(), 1);
        assert_eq!(r.partition.community_count(), 2);
        let r = girvan_newman(&g, GnTarget::Communities(1), GnOptions::default()).unwrap();
        assert!(r.dendrogram.is_empty());
        assert!(girvan_newman(&g, GnTarget::Communities(7), GnOptions::default()).is_err());
    }

    #[test]
    fn triangle_keeps_single_community() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)], false).unwrap();
        let r = girvan_newman(&g, GnTarget::MaxQ, GnOptions::default()).unwrap();
        assert_eq!(r.partition.community_count(), 1);
        assert_eq!(r.modularity, 0.0);
        assert!(r.dendrogram.iter().all(|s| s.modularity <= 0.0));
    }

    #[test]
    fn edgeless_is_undefined() {
        let g = Graph::empty(2, false);
        assert!(matches!(girvan_newman(&g, GnTarget::MaxQ, GnOptions::default()), Err(Error::ModularityUndefined)));
    }

    #[test]
    fn size_guard() {
        let g = two_triangles();
        let opts = GnOptions { edge_limit: Some(6) };
        assert!(matches!(girvan_newman(&g, GnTarget::MaxQ, opts), Err(Error::SizeLimit { edges: 7, limit: 6 })));
        assert!(girvan_newman(&g, GnTarget::MaxQ, GnOptions { edge_limit: None }).is_ok());
    }

    #[test]
    fn dendrogram_json_shape() {
        let step = GnStep { removed_edge: (2, 3), num_components: 2, modularity: 0.5 };
        assert_eq!(serde_json::to_string(&step).unwrap(), r#"{"removed_edge":[2,3],"num_components":2,"Q":0.5}"#);
    }
}
