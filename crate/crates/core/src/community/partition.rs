use std::borrow::Cow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Community operations are defined on undirected graphs; directed input is
/// symmetrized first.
pub(crate) fn undirected(g: &Graph) -> Cow<'_, Graph> {
    if g.is_directed() {
        Cow::Owned(g.undirected_view())
    } else {
        Cow::Borrowed(g)
    }
}

/// Node -> community assignment with per-community edge and degree totals.
///
/// Community ids are dense, numbered in order of each community's smallest
/// node. `intra_edges[s]` is the number of edges with both endpoints in `s`
/// and `degree_sums[s]` the total degree of its members, both measured on
/// the (symmetrized) graph the partition was built against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    assignment: Vec<usize>,
    sizes: Vec<usize>,
    intra_edges: Vec<usize>,
    degree_sums: Vec<usize>,
}

/// Relabels arbitrary labels densely by first appearance.
fn dense_labels(labels: &[usize]) -> (Vec<usize>, usize) {
    let mut map = std::collections::HashMap::new();
    let dense = labels
        .iter()
        .map(|&l| {
            let next = map.len();
            *map.entry(l).or_insert(next)
        })
        .collect();
    (dense, map.len())
}

/// `(l_s, d_s)` for each community of a dense assignment on an undirected graph.
fn community_totals(g: &Graph, assignment: &[usize], count: usize) -> (Vec<usize>, Vec<usize>) {
    let mut intra = vec![0; count];
    let mut degree = vec![0; count];
    for v in 0..g.node_count() {
        degree[assignment[v]] += g.neighbors(v).len();
    }
    for (u, v) in g.edges() {
        if assignment[u] == assignment[v] {
            intra[assignment[u]] += 1;
        }
    }
    (intra, degree)
}

impl Partition {
    /// Builds a partition of `g` from one label per node. Labels may be any
    /// values; equal labels mean the same community.
    pub fn new(g: &Graph, labels: &[usize]) -> Result<Partition> {
        if labels.len() != g.node_count() {
            return Err(Error::argument(format!(
                "assignment covers {} nodes, graph has {}",
                labels.len(),
                g.node_count()
            )));
        }
        let (assignment, count) = dense_labels(labels);
        let ug = undirected(g);
        let (intra_edges, degree_sums) = community_totals(&ug, &assignment, count);
        let mut sizes = vec![0; count];
        for &c in &assignment {
            sizes[c] += 1;
        }
        Ok(Partition { assignment, sizes, intra_edges, degree_sums })
    }

    /// Every node in its own community.
    pub fn singletons(g: &Graph) -> Partition {
        let labels: Vec<usize> = (0..g.node_count()).collect();
        Self::new(g, &labels).expect("label count matches")
    }

    /// All nodes in one community.
    pub fn whole(g: &Graph) -> Partition {
        Self::new(g, &vec![0; g.node_count()]).expect("label count matches")
    }

    /// One community per connected component.
    pub fn components(g: &Graph) -> Partition {
        Self::new(g, &g.components()).expect("label count matches")
    }

    pub fn node_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn community_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn community_of(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn intra_edges(&self) -> &[usize] {
        &self.intra_edges
    }

    pub fn degree_sums(&self) -> &[usize] {
        &self.degree_sums
    }

    /// Members of each community, ascending.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.community_count()];
        for (v, &c) in self.assignment.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// True when every community of `self` lies inside one community of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        if self.node_count() != coarser.node_count() {
            return false;
        }
        let mut parent = vec![usize::MAX; self.community_count()];
        self.assignment.iter().zip(&coarser.assignment).all(|(&fine, &coarse)| {
            let slot = &mut parent[fine];
            if *slot == usize::MAX {
                *slot = coarse;
            }
            *slot == coarse
        })
    }
}

/// `Q = Σ_s [ l_s/|E| - (d_s / 2|E|)^2 ]`, evaluated on the symmetrized graph.
///
/// The sum is accumulated in integers as `(4|E| Σ l_s - Σ d_s^2) / 4|E|^2`,
/// so the result carries a single rounding and does not depend on the order
/// of communities.
pub fn modularity(g: &Graph, p: &Partition) -> Result<f64> {
    if p.node_count() != g.node_count() {
        return Err(Error::argument(format!(
            "partition covers {} nodes, graph has {}",
            p.node_count(),
            g.node_count()
        )));
    }
    let ug = undirected(g);
    let m = ug.edge_count();
    if m == 0 {
        return Err(Error::ModularityUndefined);
    }
    let (intra, degree) = community_totals(&ug, p.assignment(), p.community_count());
    let m = m as i128;
    let inside: i128 = intra.iter().map(|&l| l as i128).sum::<i128>() * 4 * m;
    let expected: i128 = degree.iter().map(|&d| (d as i128) * (d as i128)).sum();
    Ok(ratio(inside - expected, 4 * m * m))
}

/// `num / den`, exact to one rounding when both fit in 53 bits.
fn ratio(num: i128, den: i128) -> f64 {
    let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i128;
    (num / g) as f64 / (den / g) as f64
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
