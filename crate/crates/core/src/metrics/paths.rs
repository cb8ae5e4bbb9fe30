//! Shortest-path statistics: closeness centrality and hop plots.
//!
//! Directed graphs are traversed as undirected here, so reachability is
//! symmetric and pair counts match the symmetrized graph.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bfs, Graph, Orientation};

/// Sources handed to one worker at a time. Fixed so the reduction tree does
/// not depend on the number of threads.
const SOURCE_CHUNK: usize = 64;

/// Default number of BFS sources in sampled mode.
pub const DEFAULT_SAMPLE_SOURCES: usize = 256;

/// `(r - 1) / Σ dist` over the `r` nodes reachable from `node` (itself
/// included); an isolated node scores 0.
pub fn closeness_centrality(g: &Graph, node: usize) -> Result<f64> {
    g.check_node(node)?;
    let mut bfs = Bfs::new(g.node_count());
    Ok(closeness_with(&mut bfs, g, node))
}

fn closeness_with(bfs: &mut Bfs, g: &Graph, node: usize) -> f64 {
    bfs.run(g, node, Orientation::Undirected);
    let reached = bfs.order().len();
    if reached <= 1 {
        return 0.0;
    }
    let total: u64 = bfs.order().iter().map(|&v| bfs.distance(v as usize).unwrap_or(0) as u64).sum();
    (reached - 1) as f64 / total as f64
}

/// Closeness of every node.
pub fn closeness_all(g: &Graph) -> Vec<f64> {
    (0..g.node_count())
        .into_par_iter()
        .map_init(|| Bfs::new(g.node_count()), |bfs, v| closeness_with(bfs, g, v))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum HopPlotMode {
    #[default]
    Exact,
    /// BFS from `sources` nodes drawn uniformly without replacement; pair
    /// counts are scaled by `node_count / sources`.
    Sample { sources: usize, seed: u64 },
}

/// Cumulative reachable-pair counts by hop distance.
///
/// `pairs[h]` is the number of ordered pairs `(u, v)`, `u != v`, with
/// `dist(u, v) <= h`; `pairs[0] = 0`. Unordered counts are half of these,
/// and every fraction derived from them is the same under either
/// convention.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HopPlot {
    pub pairs: Vec<f64>,
    pub h_max: usize,
    pub q: f64,
    pub effective_diameter: f64,
    pub sources: usize,
    pub exact: bool,
}

impl HopPlot {
    pub fn total_pairs(&self) -> f64 {
        self.pairs[self.h_max]
    }

    /// Fraction of connected pairs within `h` hops.
    pub fn fraction(&self, h: usize) -> f64 {
        self.pairs[h.min(self.h_max)] / self.total_pairs()
    }

    /// `(h, g(h))` using unordered pair counts, `h >= 1`.
    pub fn unordered(&self) -> Vec<(usize, f64)> {
        self.pairs.iter().enumerate().skip(1).map(|(h, &p)| (h, p / 2.0)).collect()
    }
}

/// Real-valued hop count at which a fraction `q` of all connected pairs is
/// reached, interpolating linearly between the bracketing integer hops.
///
/// `cumulative[h]` must be non-decreasing with `cumulative[0] = 0` and a
/// positive last entry.
pub fn effective_diameter(cumulative: &[f64], q: f64) -> f64 {
    let total = *cumulative.last().expect("non-empty hop counts");
    let target = q * total;
    let h = cumulative.iter().position(|&g| g >= target).expect("q <= 1");
    if h == 0 {
        return 0.0;
    }
    let (lo, hi) = (cumulative[h - 1], cumulative[h]);
    (h - 1) as f64 + (target - lo) / (hi - lo)
}

/// Per-distance (non-cumulative) ordered pair counts from the given sources.
fn pair_counts(g: &Graph, sources: &[usize]) -> Vec<u64> {
    let partials: Vec<Vec<u64>> = sources
        .par_chunks(SOURCE_CHUNK)
        .map(|chunk| {
            let mut bfs = Bfs::new(g.node_count());
            let mut acc: Vec<u64> = Vec::new();
            for &s in chunk {
                bfs.run(g, s, Orientation::Undirected);
                let levels = bfs.level_sizes();
                if acc.len() < levels.len() {
                    acc.resize(levels.len(), 0);
                }
                for (h, &c) in levels.iter().enumerate().skip(1) {
                    acc[h] += c;
                }
            }
            acc
        })
        .collect();
    let mut total: Vec<u64> = Vec::new();
    for p in partials {
        if total.len() < p.len() {
            total.resize(p.len(), 0);
        }
        for (t, c) in total.iter_mut().zip(p) {
            *t += c;
        }
    }
    total
}

pub fn hop_plot(g: &Graph, q: f64, mode: HopPlotMode) -> Result<HopPlot> {
    let n = g.node_count();
    if !(q > 0.0 && q <= 1.0) {
        return Err(Error::argument(format!("quantile must lie in (0, 1], got {q}")));
    }
    if n < 2 {
        return Err(Error::argument("hop plot needs at least two nodes"));
    }
    let (sources, exact): (Vec<usize>, bool) = match mode {
        HopPlotMode::Exact => ((0..n).collect(), true),
        HopPlotMode::Sample { sources: 0, .. } => {
            return Err(Error::argument("sampled hop plot needs at least one source"))
        }
        HopPlotMode::Sample { sources, .. } if sources >= n => ((0..n).collect(), false),
        HopPlotMode::Sample { sources, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut picked = rand::seq::index::sample(&mut rng, n, sources).into_vec();
            picked.sort_unstable();
            (picked, false)
        }
    };
    let per_hop = pair_counts(g, &sources);
    if per_hop.iter().all(|&c| c == 0) {
        return Err(Error::NoReachablePairs);
    }
    let scale = n as f64 / sources.len() as f64;
    let mut pairs = Vec::with_capacity(per_hop.len().max(1));
    let mut running = 0u64;
    pairs.push(0.0);
    for &c in per_hop.iter().skip(1) {
        running += c;
        pairs.push(running as f64 * scale);
    }
    let h_max = pairs.len() - 1;
    let effective_diameter = effective_diameter(&pairs, q);
    Ok(HopPlot { pairs, h_max, q, effective_diameter, sources: sources.len(), exact })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)), false).unwrap()
    }

    #[test]
    fn closeness_on_path() {
        let g = path(3);
        assert_eq!(closeness_centrality(&g, 1).unwrap(), 1.0);
        assert!((closeness_centrality(&g, 0).unwrap() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn closeness_isolated_and_range() {
        let g = Graph::from_edges(3, [(0, 1)], false).unwrap();
        assert_eq!(closeness_centrality(&g, 2).unwrap(), 0.0);
        assert!(closeness_centrality(&g, 3).is_err());
    }

    #[test]
    fn star_center_is_most_central() {
        let star = Graph::from_edges(6, (1..6).map(|i| (0, i)), false).unwrap();
        let c = closeness_all(&star);
        assert!(c[1..].iter().all(|&x| x < c[0]));
    }

    #[test]
    fn path4_hop_plot() {
        let hp = hop_plot(&path(4), 0.9, HopPlotMode::Exact).unwrap();
        assert_eq!(hp.unordered(), vec![(1, 3.0), (2, 5.0), (3, 6.0)]);
        assert_eq!(hp.h_max, 3);
        assert!((hp.effective_diameter - 2.4).abs() < 1e-12);
    }

    #[test]
    fn complete_graph_diameter_below_one() {
        let n = 7;
        let k = Graph::from_edges(n, (0..n).flat_map(|u| (0..u).map(move |v| (u, v))), false).unwrap();
        for q in [0.1, 0.5, 0.9, 1.0] {
            let hp = hop_plot(&k, q, HopPlotMode::Exact).unwrap();
            assert!(hp.effective_diameter <= 1.0);
        }
    }

    #[test]
    fn no_reachable_pairs() {
        assert!(matches!(hop_plot(&Graph::empty(3, false), 0.9, HopPlotMode::Exact), Err(Error::NoReachablePairs)));
        assert!(matches!(hop_plot(&Graph::empty(1, false), 0.9, HopPlotMode::Exact), Err(Error::Argument(_))));
        assert!(hop_plot(&path(3), 0.0, HopPlotMode::Exact).is_err());
        assert!(hop_plot(&path(3), 1.5, HopPlotMode::Exact).is_err());
    }

    #[test]
    fn sample_all_equals_exact() {
        let g = path(9);
        let exact = hop_plot(&g, 0.9, HopPlotMode::Exact).unwrap();
        let sampled = hop_plot(&g, 0.9, HopPlotMode::Sample { sources: 9, seed: 5 }).unwrap();
        assert_eq!(exact.pairs, sampled.pairs);
        assert_eq!(exact.effective_diameter, sampled.effective_diameter);
    }

    #[test]
    fn interpolation_hits_integer_exactly() {
        assert_eq!(effective_diameter(&[0.0, 5.0, 10.0], 0.5), 1.0);
        assert_eq!(effective_diameter(&[0.0, 5.0, 10.0], 1.0), 2.0);
    }
}
