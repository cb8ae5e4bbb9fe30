//! Compact simple-graph representation.
//!
//! A [`Graph`] is immutable once built. Adjacency is stored in CSR form
//! (offsets + flat neighbor array) with every neighbor list sorted, so
//! neighbor queries are slices and membership tests are binary searches.
//! Undirected graphs store each edge in both endpoint lists; directed
//! graphs keep a second CSR for in-neighbors.

mod bfs;
mod io;

pub use bfs::{bfs_distances, Bfs, Orientation};
pub use io::{load_edge_list, write_edge_list, LoadReport, Loaded, NodeIdMap};

use std::io::Write;

use crate::error::{Error, Result};

/// Which degree to count on a directed graph. Undirected graphs ignore it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DegreeMode {
    Out,
    In,
    Total,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Csr {
    /// Builds from pairs already sorted by (source, target) and deduplicated.
    fn from_sorted_pairs(node_count: usize, pairs: &[(u32, u32)]) -> Self {
        let mut offsets = vec![0usize; node_count + 1];
        for &(u, _) in pairs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..node_count {
            offsets[i + 1] += offsets[i];
        }
        let targets = pairs.iter().map(|&(_, v)| v).collect();
        Csr { offsets, targets }
    }

    #[inline]
    fn row(&self, v: usize) -> &[u32] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// Counts of input edges discarded while building a simple graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DropStats {
    pub self_loops: usize,
    pub duplicates: usize,
}

/// An immutable simple graph over dense node ids `0..node_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    directed: bool,
    edge_count: usize,
    out: Csr,
    /// Present only for directed graphs.
    inc: Option<Csr>,
}

impl Graph {
    /// Builds a simple graph, silently dropping self-loops and repeated edges.
    ///
    /// For undirected graphs `(u, v)` and `(v, u)` are the same edge.
    pub fn from_edges<I>(node_count: usize, edges: I, directed: bool) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::build(node_count, edges, directed).map(|(g, _)| g)
    }

    /// Same as [`Graph::from_edges`] but also reports what was dropped.
    pub fn build<I>(node_count: usize, edges: I, directed: bool) -> Result<(Graph, DropStats)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if node_count > u32::MAX as usize {
            return Err(Error::argument("node count exceeds u32 id space"));
        }
        let mut stats = DropStats::default();
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x >= node_count {
                    return Err(Error::NodeOutOfRange { node: x, node_count });
                }
            }
            if u == v {
                stats.self_loops += 1;
                continue;
            }
            let (a, b) = if directed || u < v { (u, v) } else { (v, u) };
            pairs.push((a as u32, b as u32));
        }
        pairs.sort_unstable();
        let before = pairs.len();
        pairs.dedup();
        stats.duplicates = before - pairs.len();
        Ok((Self::from_canonical_pairs(node_count, pairs, directed), stats))
    }

    /// `pairs` must be sorted, deduplicated and loop-free; for undirected
    /// graphs each pair must satisfy `u < v`.
    fn from_canonical_pairs(node_count: usize, pairs: Vec<(u32, u32)>, directed: bool) -> Graph {
        let edge_count = pairs.len();
        if directed {
            let out = Csr::from_sorted_pairs(node_count, &pairs);
            let mut rev: Vec<(u32, u32)> = pairs.into_iter().map(|(u, v)| (v, u)).collect();
            rev.sort_unstable();
            let inc = Csr::from_sorted_pairs(node_count, &rev);
            Graph { directed, edge_count, out, inc: Some(inc) }
        } else {
            let mut both = Vec::with_capacity(pairs.len() * 2);
            for &(u, v) in &pairs {
                both.push((u, v));
                both.push((v, u));
            }
            both.sort_unstable();
            let out = Csr::from_sorted_pairs(node_count, &both);
            Graph { directed, edge_count, out, inc: None }
        }
    }

    pub fn empty(node_count: usize, directed: bool) -> Graph {
        Self::from_canonical_pairs(node_count, Vec::new(), directed)
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.out.offsets.len() - 1
    }

    /// Unordered pairs for undirected graphs, ordered pairs for directed ones.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn is_directed(&self) -> bool {
        self.directed
    }

    /// Out-neighbors (all neighbors when undirected), sorted ascending.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        self.out.row(v)
    }

    /// In-neighbors, sorted ascending. Same as [`Graph::neighbors`] when undirected.
    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &[u32] {
        match &self.inc {
            Some(inc) => inc.row(v),
            None => self.out.row(v),
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count() && v < self.node_count() && self.neighbors(u).binary_search(&(v as u32)).is_ok()
    }

    pub fn degree(&self, node: usize, mode: DegreeMode) -> Result<usize> {
        self.check_node(node)?;
        Ok(self.degree_unchecked(node, mode))
    }

    #[inline]
    pub(crate) fn degree_unchecked(&self, node: usize, mode: DegreeMode) -> usize {
        if !self.directed {
            return self.neighbors(node).len();
        }
        match mode {
            DegreeMode::Out => self.neighbors(node).len(),
            DegreeMode::In => self.in_neighbors(node).len(),
            DegreeMode::Total => self.neighbors(node).len() + self.in_neighbors(node).len(),
        }
    }

    pub(crate) fn check_node(&self, node: usize) -> Result<()> {
        if node < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node, node_count: self.node_count() })
        }
    }

    /// Iterates edges once each: `u < v` for undirected graphs, `u -> v` for
    /// directed ones. Order is ascending by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let directed = self.directed;
        (0..self.node_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(move |&v| (u, v as usize))
                .filter(move |&(u, v)| directed || u < v)
        })
    }

    /// Symmetrized simple graph; an edge exists iff either orientation did.
    pub fn undirected_view(&self) -> Graph {
        if !self.directed {
            return self.clone();
        }
        let mut pairs: Vec<(u32, u32)> = self
            .edges()
            .map(|(u, v)| if u < v { (u as u32, v as u32) } else { (v as u32, u as u32) })
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        Self::from_canonical_pairs(self.node_count(), pairs, false)
    }

    /// Returns the graph with node `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.node_count() {
            return Err(Error::argument("permutation length differs from node count"));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::argument("not a permutation"));
            }
        }
        Graph::from_edges(self.node_count(), self.edges().map(|(u, v)| (perm[u], perm[v])), self.directed)
    }

    /// Sum of degrees over all nodes (out-degrees when directed).
    pub fn degree_sum(&self) -> usize {
        self.out.targets.len()
    }

    /// Writes sorted `u v` lines, LF-terminated, no header.
    pub fn write_canonical<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        for (u, v) in self.edges() {
            writeln!(w, "{u} {v}")?;
        }
        Ok(())
    }

    pub fn to_canonical_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_canonical(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("edge list is ASCII")
    }

    /// Connected components (weak components when directed), labelled
    /// densely in order of their smallest node.
    pub fn components(&self) -> Vec<usize> {
        let n = self.node_count();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                let ins = if self.directed { self.in_neighbors(v) } else { &[][..] };
                for &w in self.neighbors(v).iter().chain(ins) {
                    let w = w as usize;
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }
}
