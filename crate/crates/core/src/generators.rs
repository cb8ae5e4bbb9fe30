//! Seeded random graph models: Erdős–Rényi, Watts–Strogatz,
//! Newman–Watts–Strogatz, Barabási–Albert and Holme–Kim.
//!
//! Every model draws from [`ChaCha8Rng`] seeded with `GenSpec::seed`. ChaCha
//! output is specified independently of platform and word size, so a spec
//! reproduces the same graph everywhere given the pinned `rand` version.
//! All outputs are simple undirected graphs.

use std::collections::HashSet;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Model choice together with the parameters that model uses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "snake_case")]
pub enum Model {
    /// `G(n, p)`.
    ErdosRenyi { p: f64 },
    /// Ring lattice with `k` neighbors per node, each edge rewired with probability `p`.
    WattsStrogatz { k: usize, p: f64 },
    /// Ring lattice plus one shortcut per lattice edge with probability `p`.
    NewmanWattsStrogatz { k: usize, p: f64 },
    /// Preferential attachment, `m` edges per arriving node.
    BarabasiAlbert { m: usize },
    /// Preferential attachment with triad formation probability `p_t`.
    HolmeKim { m: usize, p_t: f64 },
}

impl Model {
    pub fn short_name(&self) -> &'static str {
        match self {
            Model::ErdosRenyi { .. } => "er",
            Model::WattsStrogatz { .. } => "ws",
            Model::NewmanWattsStrogatz { .. } => "nws",
            Model::BarabasiAlbert { .. } => "ba",
            Model::HolmeKim { .. } => "hk",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub n: usize,
    pub seed: u64,
    #[serde(flatten)]
    pub model: Model,
}

impl GenSpec {
    pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Self {
        GenSpec { n, seed, model: Model::ErdosRenyi { p } }
    }

    pub fn watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> Self {
        GenSpec { n, seed, model: Model::WattsStrogatz { k, p } }
    }

    pub fn newman_watts_strogatz(n: usize, k: usize, p: f64, seed: u64) -> Self {
        GenSpec { n, seed, model: Model::NewmanWattsStrogatz { k, p } }
    }

    pub fn barabasi_albert(n: usize, m: usize, seed: u64) -> Self {
        GenSpec { n, seed, model: Model::BarabasiAlbert { m } }
    }

    pub fn holme_kim(n: usize, m: usize, p_t: f64, seed: u64) -> Self {
        GenSpec { n, seed, model: Model::HolmeKim { m, p_t } }
    }

    pub fn validate(&self) -> Result<()> {
        let prob = |name: &str, p: f64| {
            if (0.0..=1.0).contains(&p) {
                Ok(())
            } else {
                Err(Error::argument(format!("{name} must lie in [0, 1], got {p}")))
            }
        };
        let lattice = |k: usize| {
            if k < 2 || !k.is_multiple_of(2) {
                Err(Error::argument(format!("k must be an even integer >= 2, got {k}")))
            } else if k >= self.n {
                Err(Error::argument(format!("k must be below n ({} >= {})", k, self.n)))
            } else {
                Ok(())
            }
        };
        let attach = |m: usize| {
            if m < 1 {
                Err(Error::argument("m must be at least 1"))
            } else if m >= self.n {
                Err(Error::argument(format!("m must be below n ({} >= {})", m, self.n)))
            } else {
                Ok(())
            }
        };
        match self.model {
            Model::ErdosRenyi { p } => prob("p", p),
            Model::WattsStrogatz { k, p } | Model::NewmanWattsStrogatz { k, p } => {
                prob("p", p)?;
                lattice(k)
            }
            Model::BarabasiAlbert { m } => attach(m),
            Model::HolmeKim { m, p_t } => {
                prob("p_t", p_t)?;
                attach(m)
            }
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Counters describing what a stochastic construction did.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenStats {
    /// WS: lattice edges re-pointed.
    pub rewired: usize,
    /// WS: rewiring attempts abandoned because the node was already adjacent to everyone.
    pub rewire_exhausted: usize,
    /// NWS: shortcuts added.
    pub shortcuts: usize,
    /// NWS: shortcut draws skipped because the graph was already complete.
    pub shortcuts_rejected: usize,
    /// HK: edges placed by triad formation.
    pub triad_edges: usize,
}

#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub stats: GenStats,
}

/// Builds the graph described by `spec`.
pub fn generate(spec: &GenSpec) -> Result<Generated> {
    match spec.model {
        Model::ErdosRenyi { .. } => gen_erdos_renyi(spec),
        Model::WattsStrogatz { .. } => gen_watts_strogatz(spec),
        Model::NewmanWattsStrogatz { .. } => gen_newman_watts_strogatz(spec),
        Model::BarabasiAlbert { .. } => gen_barabasi_albert(spec),
        Model::HolmeKim { .. } => gen_holme_kim(spec),
    }
}

fn wrong_model(expected: &str, spec: &GenSpec) -> Error {
    Error::argument(format!("expected a {expected} spec, got {}", spec.model.short_name()))
}

fn finish(n: usize, edges: Vec<(usize, usize)>, stats: GenStats) -> Result<Generated> {
    Ok(Generated { graph: Graph::from_edges(n, edges, false)?, stats })
}

/// Includes each of the `n(n-1)/2` pairs independently with probability `p`.
///
/// Pairs are visited in the order (1,0), (2,0), (2,1), (3,0), ... and the
/// gap to the next included pair is drawn from the geometric distribution,
/// which is equivalent to one Bernoulli trial per pair but runs in
/// O(n + edges).
pub fn gen_erdos_renyi(spec: &GenSpec) -> Result<Generated> {
    let Model::ErdosRenyi { p } = spec.model else {
        return Err(wrong_model("er", spec));
    };
    spec.validate()?;
    let n = spec.n;
    let mut edges = Vec::new();
    if p >= 1.0 {
        for v in 1..n {
            edges.extend((0..v).map(|w| (v, w)));
        }
    } else if p > 0.0 {
        let mut rng = spec.rng();
        let log_q = (1.0 - p).ln();
        let (mut v, mut w) = (1usize, -1i64);
        while v < n {
            let r: f64 = rng.random();
            w += 1 + ((1.0 - r).ln() / log_q).floor() as i64;
            while w >= v as i64 && v < n {
                w -= v as i64;
                v += 1;
            }
            if v < n {
                edges.push((v, w as usize));
            }
        }
    }
    finish(n, edges, GenStats::default())
}

/// Lattice edges `(u, u + j mod n)` for `u` ascending then `j = 1..=k/2`.
fn ring_lattice(n: usize, k: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (1..=k / 2).map(move |j| (u, (u + j) % n))).collect()
}

fn adjacency_sets(n: usize, edges: &[(usize, usize)]) -> Vec<HashSet<usize>> {
    let mut adj = vec![HashSet::new(); n];
    for &(u, v) in edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    adj
}

/// Ring lattice whose edges are each rewired with probability `p`.
///
/// Edges are visited in lattice order; a rewired edge `(u, v)` keeps `u`
/// and replaces its clockwise endpoint `v` by a uniform node that is
/// neither `u` nor already adjacent to `u`.
pub fn gen_watts_strogatz(spec: &GenSpec) -> Result<Generated> {
    let Model::WattsStrogatz { k, p } = spec.model else {
        return Err(wrong_model("ws", spec));
    };
    spec.validate()?;
    let n = spec.n;
    let mut rng = spec.rng();
    let mut edges = ring_lattice(n, k);
    let mut adj = adjacency_sets(n, &edges);
    let mut stats = GenStats::default();
    for edge in edges.iter_mut() {
        if rng.random::<f64>() >= p {
            continue;
        }
        let (u, v) = *edge;
        if adj[u].len() >= n - 1 {
            stats.rewire_exhausted += 1;
            continue;
        }
        let w = loop {
            let w = rng.random_range(0..n);
            if w != u && !adj[u].contains(&w) {
                break w;
            }
        };
        adj[u].remove(&v);
        adj[v].remove(&u);
        adj[u].insert(w);
        adj[w].insert(u);
        *edge = (u, w);
        stats.rewired += 1;
    }
    finish(n, edges, stats)
}

/// Ring lattice plus shortcuts; lattice edges are never removed.
///
/// For each lattice edge, with probability `p` a uniformly chosen pair of
/// distinct non-adjacent nodes is joined.
pub fn gen_newman_watts_strogatz(spec: &GenSpec) -> Result<Generated> {
    let Model::NewmanWattsStrogatz { k, p } = spec.model else {
        return Err(wrong_model("nws", spec));
    };
    spec.validate()?;
    let n = spec.n;
    let mut rng = spec.rng();
    let mut edges = ring_lattice(n, k);
    let mut adj = adjacency_sets(n, &edges);
    let complete = n * (n - 1) / 2;
    let mut stats = GenStats::default();
    for _ in 0..edges.len() {
        if rng.random::<f64>() >= p {
            continue;
        }
        if edges.len() >= complete {
            stats.shortcuts_rejected += 1;
            continue;
        }
        let (a, b) = loop {
            let a = rng.random_range(0..n);
            let b = rng.random_range(0..n);
            if a != b && !adj[a].contains(&b) {
                break (a, b);
            }
        };
        adj[a].insert(b);
        adj[b].insert(a);
        edges.push((a, b));
        stats.shortcuts += 1;
    }
    finish(n, edges, stats)
}

/// Preferential attachment from a seed clique on `m + 1` nodes.
///
/// Final edge count is `C(m+1, 2) + m (n - m - 1)`.
pub fn gen_barabasi_albert(spec: &GenSpec) -> Result<Generated> {
    let Model::BarabasiAlbert { m } = spec.model else {
        return Err(wrong_model("ba", spec));
    };
    spec.validate()?;
    preferential_attachment(spec, m, 0.0)
}

/// Barabási–Albert with triad formation.
///
/// After a preferential edge to `v`, each further edge of the same arriving
/// node goes with probability `p_t` to a uniform neighbor of `v` not yet
/// linked; when none is available a preferential draw is used instead.
/// With `p_t = 0` this consumes the RNG exactly like [`gen_barabasi_albert`].
pub fn gen_holme_kim(spec: &GenSpec) -> Result<Generated> {
    let Model::HolmeKim { m, p_t } = spec.model else {
        return Err(wrong_model("hk", spec));
    };
    spec.validate()?;
    preferential_attachment(spec, m, p_t)
}

fn link(u: usize, v: usize, edges: &mut Vec<(usize, usize)>, endpoints: &mut Vec<u32>, adj: &mut [Vec<u32>]) {
    edges.push((u, v));
    endpoints.push(u as u32);
    endpoints.push(v as u32);
    adj[u].push(v as u32);
    adj[v].push(u as u32);
}

fn preferential_attachment(spec: &GenSpec, m: usize, p_t: f64) -> Result<Generated> {
    let n = spec.n;
    let mut rng = spec.rng();
    let mut edges = Vec::with_capacity(m * (m + 1) / 2 + m * n.saturating_sub(m + 1));
    // Every edge contributes both endpoints, so a uniform draw from this
    // list picks node i with probability k_i / sum_j k_j.
    let mut endpoints: Vec<u32> = Vec::with_capacity(2 * edges.capacity());
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut stats = GenStats::default();

    for u in 0..=m {
        for v in 0..u {
            link(u, v, &mut edges, &mut endpoints, &mut adj);
        }
    }

    let mut chosen: Vec<usize> = Vec::with_capacity(m);
    let mut candidates: Vec<u32> = Vec::new();
    for u in (m + 1)..n {
        chosen.clear();
        let mut anchor: Option<usize> = None;
        while chosen.len() < m {
            let mut target = None;
            if let Some(v) = anchor {
                if p_t > 0.0 && rng.random::<f64>() < p_t {
                    candidates.clear();
                    candidates.extend(adj[v].iter().copied().filter(|&w| !chosen.contains(&(w as usize))));
                    if let Some(&w) = candidates.choose(&mut rng) {
                        target = Some(w as usize);
                        stats.triad_edges += 1;
                    }
                }
            }
            let target = match target {
                Some(w) => w,
                None => {
                    let v = loop {
                        let v = endpoints[rng.random_range(0..endpoints.len())] as usize;
                        if !chosen.contains(&v) {
                            break v;
                        }
                    };
                    anchor = Some(v);
                    v
                }
            };
            chosen.push(target);
        }
        // Edges are linked after all targets are picked so the new node's
        // own edges never feed back into this round's draws.
        for &v in &chosen {
            link(u, v, &mut edges, &mut endpoints, &mut adj);
        }
    }
    finish(n, edges, stats)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_extremes() {
        let g = gen_erdos_renyi(&GenSpec::erdos_renyi(30, 0.0, 1)).unwrap().graph;
        assert_eq!((g.node_count(), g.edge_count()), (30, 0));
        let g = gen_erdos_renyi(&GenSpec::erdos_renyi(30, 1.0, 1)).unwrap().graph;
        assert_eq!(g.edge_count(), 435);
    }

    #[test]
    fn ws_lattice_limit() {
        let g = gen_watts_strogatz(&GenSpec::watts_strogatz(20, 4, 0.0, 1)).unwrap().graph;
        assert_eq!(g.edge_count(), 40);
        assert!((0..20).all(|v| g.neighbors(v).len() == 4));
    }

    #[test]
    fn ws_preserves_edge_count() {
        for seed in 0..5 {
            let out = gen_watts_strogatz(&GenSpec::watts_strogatz(50, 6, 0.7, seed)).unwrap();
            assert_eq!(out.graph.edge_count(), 150);
            assert!(out.stats.rewired > 0);
        }
    }

    #[test]
    fn ws_dense_exhaustion_keeps_edge() {
        // n = 5, k = 4 is already complete: nothing can be rewired.
        let out = gen_watts_strogatz(&GenSpec::watts_strogatz(5, 4, 1.0, 3)).unwrap();
        assert_eq!(out.graph.edge_count(), 10);
        assert_eq!(out.stats.rewire_exhausted, 10);
    }

    #[test]
    fn nws_p0_equals_ws_p0() {
        let a = gen_newman_watts_strogatz(&GenSpec::newman_watts_strogatz(20, 4, 0.0, 9)).unwrap().graph;
        let b = gen_watts_strogatz(&GenSpec::watts_strogatz(20, 4, 0.0, 9)).unwrap().graph;
        assert_eq!(a, b);
    }

    #[test]
    fn nws_edge_bounds() {
        for seed in 0..20 {
            let g = gen_newman_watts_strogatz(&GenSpec::newman_watts_strogatz(20, 4, 1.0, seed)).unwrap().graph;
            assert!(g.edge_count() > 40 && g.edge_count() <= 80, "{}", g.edge_count());
            assert!(g.components().iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn ba_edge_count_and_seed_clique() {
        let g = gen_barabasi_albert(&GenSpec::barabasi_albert(4, 3, 0)).unwrap().graph;
        assert_eq!(g.edge_count(), 6);
        for (n, m) in [(100, 1), (100, 3), (57, 5)] {
            let g = gen_barabasi_albert(&GenSpec::barabasi_albert(n, m, 7)).unwrap().graph;
            assert_eq!(g.edge_count(), m * (m + 1) / 2 + m * (n - m - 1));
        }
    }

    #[test]
    fn hk_seed_clique_and_degeneracy() {
        let g = gen_holme_kim(&GenSpec::holme_kim(5, 4, 0.5, 0)).unwrap().graph;
        assert_eq!(g.edge_count(), 10);
        let hk = gen_holme_kim(&GenSpec::holme_kim(300, 3, 0.0, 11)).unwrap();
        let ba = gen_barabasi_albert(&GenSpec::barabasi_albert(300, 3, 11)).unwrap();
        assert_eq!(hk.graph, ba.graph);
        assert_eq!(hk.stats.triad_edges, 0);
    }

    #[test]
    fn hk_edge_count_matches_ba_formula() {
        let g = gen_holme_kim(&GenSpec::holme_kim(200, 4, 0.9, 2)).unwrap().graph;
        assert_eq!(g.edge_count(), 10 + 4 * 195);
    }

    #[test]
    fn invalid_specs_rejected() {
        let bad = [
            GenSpec::erdos_renyi(10, 1.5, 0),
            GenSpec::erdos_renyi(10, -0.1, 0),
            GenSpec::watts_strogatz(10, 3, 0.1, 0),
            GenSpec::watts_strogatz(10, 10, 0.1, 0),
            GenSpec::watts_strogatz(10, 0, 0.1, 0),
            GenSpec::newman_watts_strogatz(4, 4, 0.1, 0),
            GenSpec::barabasi_albert(10, 0, 0),
            GenSpec::barabasi_albert(3, 3, 0),
            GenSpec::holme_kim(10, 2, 1.1, 0),
        ];
        for spec in bad {
            assert!(matches!(generate(&spec), Err(Error::Argument(_))), "{spec:?}");
        }
        assert!(gen_erdos_renyi(&GenSpec::barabasi_albert(10, 2, 0)).is_err());
    }

    #[test]
    fn deterministic_per_seed() {
        let spec = GenSpec::holme_kim(500, 3, 0.6, 42);
        let a = generate(&spec).unwrap().graph.to_canonical_string();
        let b = generate(&spec).unwrap().graph.to_canonical_string();
        assert_eq!(a, b);
        let c = generate(&GenSpec { seed: 43, ..spec }).unwrap().graph.to_canonical_string();
        assert_ne!(a, c);
    }

    #[test]
    fn spec_json_roundtrip() {
        let spec = GenSpec::watts_strogatz(20, 4, 0.25, 1);
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"n":20,"seed":1,"model":"watts_strogatz","k":4,"p":0.25}"#);
        assert_eq!(serde_json::from_str::<GenSpec>(&json).unwrap(), spec);
    }
}
