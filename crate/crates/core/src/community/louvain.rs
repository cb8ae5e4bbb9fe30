//! Louvain modularity maximization.
//!
//! Phase 1 sweeps nodes in a seeded random order and moves each to the
//! neighboring community with the largest modularity gain, repeating
//! sweeps until a sweep gains less than `min_gain`. Phase 2 collapses every
//! community into one node; intra-community edges become a self-loop of
//! weight `2 l_s` so that node strengths, and therefore modularity, are
//! preserved. Levels repeat until a level gains less than `min_gain`.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::partition::{modularity, undirected, Partition};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MIN_GAIN: f64 = 1e-7;

/// Gains closer than this to the stay-put gain are not worth a move.
const MOVE_EPSILON: f64 = 1e-12;

/// Symmetric weighted graph used between aggregation levels.
struct Level {
    /// Off-diagonal neighbors with weights; each undirected edge appears in both lists.
    adj: Vec<Vec<(usize, f64)>>,
    /// Diagonal entry `A_ii`.
    self_loop: Vec<f64>,
    /// `k_i = Σ_j A_ij`, diagonal included.
    strength: Vec<f64>,
    two_m: f64,
}

impl Level {
    fn from_graph(g: &Graph) -> Level {
        let n = g.node_count();
        let adj: Vec<Vec<(usize, f64)>> =
            (0..n).map(|v| g.neighbors(v).iter().map(|&w| (w as usize, 1.0)).collect()).collect();
        let strength: Vec<f64> = adj.iter().map(|a| a.len() as f64).collect();
        let two_m = strength.iter().sum();
        Level { adj, self_loop: vec![0.0; n], strength, two_m }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn modularity(&self, comm: &[usize], count: usize) -> f64 {
        let mut inside = vec![0.0; count];
        let mut total = vec![0.0; count];
        for v in 0..self.len() {
            let c = comm[v];
            total[c] += self.strength[v];
            inside[c] += self.self_loop[v];
            for &(w, wt) in &self.adj[v] {
                if comm[w] == c {
                    inside[c] += wt;
                }
            }
        }
        inside.iter().zip(&total).map(|(&i, &t)| i / self.two_m - (t / self.two_m).powi(2)).sum()
    }

    /// Collapses communities (dense ids `0..count`) into nodes.
    fn aggregate(&self, comm: &[usize], count: usize) -> Level {
        let mut self_loop = vec![0.0; count];
        let mut strength = vec![0.0; count];
        let mut rows: Vec<std::collections::BTreeMap<usize, f64>> = vec![Default::default(); count];
        for v in 0..self.len() {
            let c = comm[v];
            strength[c] += self.strength[v];
            self_loop[c] += self.self_loop[v];
            for &(w, wt) in &self.adj[v] {
                let d = comm[w];
                if c == d {
                    self_loop[c] += wt;
                } else {
                    *rows[c].entry(d).or_insert(0.0) += wt;
                }
            }
        }
        let adj = rows.into_iter().map(|r| r.into_iter().collect()).collect();
        Level { adj, self_loop, strength, two_m: self.two_m }
    }
}

/// Local moving phase. Returns dense community ids, their count, and the
/// total modularity gained.
fn local_moves(level: &Level, rng: &mut ChaCha8Rng, min_gain: f64) -> (Vec<usize>, usize, f64) {
    let n = level.len();
    let two_m = level.two_m;
    let m = two_m / 2.0;
    let mut comm: Vec<usize> = (0..n).collect();
    let mut total: Vec<f64> = level.strength.clone();
    let mut link = vec![0.0; n];
    let mut touched: Vec<usize> = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    let mut gained = 0.0;

    loop {
        order.shuffle(rng);
        let mut sweep_gain = 0.0;
        for &v in &order {
            let own = comm[v];
            let k = level.strength[v];
            touched.clear();
            for &(w, wt) in &level.adj[v] {
                let c = comm[w];
                if link[c] == 0.0 {
                    touched.push(c);
                }
                link[c] += wt;
            }
            total[own] -= k;
            let stay = link[own] - total[own] * k / two_m;
            let mut best = own;
            let mut best_gain = stay;
            for &c in &touched {
                if c == own {
                    continue;
                }
                let gain = link[c] - total[c] * k / two_m;
                let better = if best == own {
                    gain > stay + MOVE_EPSILON
                } else {
                    gain > best_gain || (gain == best_gain && c < best)
                };
                if better {
                    best = c;
                    best_gain = gain;
                }
            }
            total[best] += k;
            if best != own {
                comm[v] = best;
                sweep_gain += (best_gain - stay) / m;
            }
            for &c in &touched {
                link[c] = 0.0;
            }
        }
        gained += sweep_gain;
        if sweep_gain < min_gain {
            break;
        }
    }

    let mut dense = vec![usize::MAX; n];
    let mut count = 0;
    for c in comm.iter_mut() {
        if dense[*c] == usize::MAX {
            dense[*c] = count;
            count += 1;
        }
        *c = dense[*c];
    }
    (comm, count, gained)
}

/// Runs Louvain and returns the node-level partition.
///
/// Directed graphs are symmetrized. The same `seed` always yields the same
/// partition. On graphs where the heuristic would end below the
/// connected-components partition (modularity < 0) the components are
/// returned instead.
pub fn louvain(g: &Graph, seed: u64, min_gain: f64) -> Result<Partition> {
    let ug = undirected(g);
    if ug.edge_count() == 0 {
        return Err(Error::ModularityUndefined);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut level = Level::from_graph(&ug);
    // node -> current super-node
    let mut membership: Vec<usize> = (0..ug.node_count()).collect();
    loop {
        let before = level.modularity(&(0..level.len()).collect::<Vec<_>>(), level.len());
        let (comm, count, _) = local_moves(&level, &mut rng, min_gain);
        if count == level.len() {
            break;
        }
        let after = level.modularity(&comm, count);
        for m in membership.iter_mut() {
            *m = comm[*m];
        }
        level = level.aggregate(&comm, count);
        if after - before < min_gain {
            break;
        }
    }
    let partition = Partition::new(&ug, &membership)?;
    if modularity(&ug, &partition)? < 0.0 {
        return Ok(Partition::components(&ug));
    }
    Ok(partition)
}
