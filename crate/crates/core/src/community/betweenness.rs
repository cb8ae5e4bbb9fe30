//! Edge betweenness by shortest-path dependency accumulation (Brandes).
//!
//! For a source `s`, BFS yields path counts `σ_s(v)`; walking nodes in
//! reverse BFS order, each edge `(v, w)` with `dist(w) = dist(v) + 1`
//! receives `σ_s(v) / σ_s(w) · (1 + δ_s(w))` and that amount is added to
//! `δ_s(v)`. Summing over all sources counts each unordered pair twice, so
//! the total is halved.

use rayon::prelude::*;

use super::partition::undirected;
use crate::graph::Graph;

const SOURCE_CHUNK: usize = 32;

/// Adjacency with edge ids that supports edge removal.
#[derive(Debug, Clone)]
pub(crate) struct EdgeIndexed {
    pub(crate) adj: Vec<Vec<(u32, u32)>>,
    pub(crate) edges: Vec<(usize, usize)>,
}

impl EdgeIndexed {
    /// `g` must be undirected. Edge ids follow `g.edges()` order.
    pub(crate) fn new(g: &Graph) -> Self {
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut adj = vec![Vec::new(); g.node_count()];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v as u32, id as u32));
            adj[v].push((u as u32, id as u32));
        }
        EdgeIndexed { adj, edges }
    }

    pub(crate) fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn remove(&mut self, id: usize) {
        let (u, v) = self.edges[id];
        self.adj[u].retain(|&(_, e)| e as usize != id);
        self.adj[v].retain(|&(_, e)| e as usize != id);
    }

    /// Nodes reachable from `s`.
    pub(crate) fn component(&self, s: usize, seen: &mut [bool]) -> Vec<usize> {
        let mut out = vec![s];
        seen[s] = true;
        let mut head = 0;
        while head < out.len() {
            let v = out[head];
            head += 1;
            for &(w, _) in &self.adj[v] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    out.push(w as usize);
                }
            }
        }
        out
    }
}

struct Workspace {
    dist: Vec<u32>,
    sigma: Vec<f64>,
    delta: Vec<f64>,
    order: Vec<u32>,
}

impl Workspace {
    fn new(n: usize) -> Self {
        Workspace { dist: vec![u32::MAX; n], sigma: vec![0.0; n], delta: vec![0.0; n], order: Vec::new() }
    }

    fn accumulate(&mut self, g: &EdgeIndexed, s: usize, scores: &mut [f64]) {
        for &v in &self.order {
            let v = v as usize;
            self.dist[v] = u32::MAX;
            self.sigma[v] = 0.0;
            self.delta[v] = 0.0;
        }
        self.order.clear();
        self.dist[s] = 0;
        self.sigma[s] = 1.0;
        self.order.push(s as u32);
        let mut head = 0;
        while head < self.order.len() {
            let v = self.order[head] as usize;
            head += 1;
            for &(w, _) in &g.adj[v] {
                let w = w as usize;
                if self.dist[w] == u32::MAX {
                    self.dist[w] = self.dist[v] + 1;
                    self.order.push(w as u32);
                }
                if self.dist[w] == self.dist[v] + 1 {
                    self.sigma[w] += self.sigma[v];
                }
            }
        }
        for &w in self.order.iter().rev() {
            let w = w as usize;
            let coeff = (1.0 + self.delta[w]) / self.sigma[w];
            for &(v, e) in &g.adj[w] {
                let v = v as usize;
                if self.dist[v] != u32::MAX && self.dist[v] + 1 == self.dist[w] {
                    let c = self.sigma[v] * coeff;
                    scores[e as usize] += c;
                    self.delta[v] += c;
                }
            }
        }
    }
}

/// Raw (doubled) scores from the given sources, indexed by edge id.
/// Chunks are reduced in a fixed order so the result does not depend on
/// the thread count.
pub(crate) fn accumulate_from(g: &EdgeIndexed, sources: &[usize]) -> Vec<f64> {
    let m = g.edges.len();
    let partials: Vec<Vec<f64>> = sources
        .par_chunks(SOURCE_CHUNK)
        .map(|chunk| {
            let mut ws = Workspace::new(g.node_count());
            let mut scores = vec![0.0; m];
            for &s in chunk {
                ws.accumulate(g, s, &mut scores);
            }
            scores
        })
        .collect();
    let mut total = vec![0.0; m];
    for p in partials {
        for (t, x) in total.iter_mut().zip(p) {
            *t += x;
        }
    }
    total
}

/// `B(e)` for every edge: the sum over unordered node pairs of the
/// fraction of their shortest paths that use `e`.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeBetweenness {
    edges: Vec<(usize, usize)>,
    scores: Vec<f64>,
}

impl EdgeBetweenness {
    /// Edges as `(u, v)` with `u < v`, ascending, aligned with [`EdgeBetweenness::scores`].
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn get(&self, u: usize, v: usize) -> Option<f64> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok().map(|i| self.scores[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        self.edges.iter().copied().zip(self.scores.iter().copied())
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }
}

pub fn edge_betweenness(g: &Graph) -> EdgeBetweenness {
    let ug = undirected(g);
    let indexed = EdgeIndexed::new(&ug);
    let sources: Vec<usize> = (0..indexed.node_count()).collect();
    let scores = accumulate_from(&indexed, &sources).into_iter().map(|x| x / 2.0).collect();
    EdgeBetweenness { edges: indexed.edges, scores }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_of_three() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)], false).unwrap();
        let b = edge_betweenness(&g);
        assert_eq!(b.get(0, 1), Some(2.0));
        assert_eq!(b.get(2, 1), Some(2.0));
    }

    #[test]
    fn triangle_all_one() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)], false).unwrap();
        assert!(edge_betweenness(&g).scores().iter().all(|&s| s == 1.0));
    }

    #[test]
    fn bridge_is_maximal() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)], false).unwrap();
        let b = edge_betweenness(&g);
        // 3 x 3 pairs cross the bridge, {2, 3} among them.
        assert_eq!(b.get(2, 3), Some(9.0));
        assert_eq!(b.get(0, 2), Some(4.0));
        assert_eq!(b.get(0, 1), Some(1.0));
        for ((u, v), s) in b.iter() {
            if (u, v) != (2, 3) {
                assert!(s < 9.0);
            }
        }
    }

    #[test]
    fn square_splits_paths() {
        // 4-cycle: each opposite pair has two shortest paths.
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)], false).unwrap();
        let b = edge_betweenness(&g);
        // each edge: its endpoint pair (1) + two opposite pairs * 1/2 = 2
        assert!(b.scores().iter().all(|&s| (s - 2.0).abs() < 1e-12));
    }

    #[test]
    fn empty_graph() {
        assert!(edge_betweenness(&Graph::empty(4, false)).is_empty());
    }
}
