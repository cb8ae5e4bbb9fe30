//! Independent reference computations used by the integration and
//! acceptance tests. None of these call into the library's algorithms
//! beyond building graphs and reading adjacency.
#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use netmorph::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ZETA_2: f64 = std::f64::consts::PI * std::f64::consts::PI / 6.0;
pub const ZETA_2_5: f64 = 1.341_487_257_250_917;
pub const ZETA_3: f64 = 1.202_056_903_159_594_2;

pub fn two_triangles() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (2, 3)], false).unwrap()
}

/// Simple undirected G(n, p) by independent coin flips per pair.
pub fn coin_flip_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges, false).unwrap()
}

/// Connected graph: a random spanning tree plus extra coin-flip edges.
pub fn connected_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.random_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges, false).unwrap()
}

pub fn distances_from(g: &Graph, s: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.node_count()];
    dist[s] = Some(0);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let d = dist[v].unwrap();
        for &w in g.neighbors(v) {
            let w = w as usize;
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Every shortest path from `s` to `t`, as node sequences.
pub fn all_shortest_paths(g: &Graph, s: usize, t: usize) -> Vec<Vec<usize>> {
    let to_t = distances_from(g, t);
    let Some(len) = to_t[s] else {
        return Vec::new();
    };
    let mut paths = Vec::new();
    let mut stack = vec![vec![s]];
    while let Some(path) = stack.pop() {
        let v = *path.last().unwrap();
        if v == t {
            paths.push(path);
            continue;
        }
        let remaining = len - (path.len() - 1);
        for &w in g.neighbors(v) {
            if to_t[w as usize] == Some(remaining - 1) {
                let mut next = path.clone();
                next.push(w as usize);
                stack.push(next);
            }
        }
    }
    paths
}

/// Edge betweenness straight from its definition: for every unordered pair
/// of distinct nodes, each edge receives the share of the pair's shortest
/// paths that traverse it.
pub fn betweenness_by_enumeration(g: &Graph) -> BTreeMap<(usize, usize), f64> {
    let mut b: BTreeMap<(usize, usize), f64> = g.edges().map(|e| (e, 0.0)).collect();
    let n = g.node_count();
    for s in 0..n {
        for t in s + 1..n {
            let paths = all_shortest_paths(g, s, t);
            if paths.is_empty() {
                continue;
            }
            let share = 1.0 / paths.len() as f64;
            for p in &paths {
                for w in p.windows(2) {
                    let key = (w[0].min(w[1]), w[0].max(w[1]));
                    *b.get_mut(&key).unwrap() += share;
                }
            }
        }
    }
    b
}

/// Modularity in adjacency-matrix form:
/// `Q = 1/(2m) Σ_ij [A_ij − k_i k_j / (2m)] δ(c_i, c_j)`.
pub fn modularity_matrix_form(g: &Graph, labels: &[usize]) -> f64 {
    let n = g.node_count();
    let two_m = 2.0 * g.edge_count() as f64;
    let k: Vec<f64> = (0..n).map(|v| g.neighbors(v).len() as f64).collect();
    let mut q = 0.0;
    for i in 0..n {
        for j in 0..n {
            if labels[i] == labels[j] {
                let a = if g.has_edge(i, j) { 1.0 } else { 0.0 };
                q += a - k[i] * k[j] / two_m;
            }
        }
    }
    q / two_m
}

/// Calls `f` with every set partition of `0..n` as a restricted growth string.
pub fn for_each_set_partition(n: usize, mut f: impl FnMut(&[usize])) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut a = vec![0usize; n];
    loop {
        f(&a);
        // next restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return;
            }
            let max_prefix = a[..i].iter().copied().max().unwrap();
            if a[i] <= max_prefix {
                a[i] += 1;
                for x in a[i + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Maximum modularity over every partition of the node set.
pub fn brute_force_max_modularity(g: &Graph) -> (f64, Vec<usize>) {
    let mut best = (f64::NEG_INFINITY, Vec::new());
    for_each_set_partition(g.node_count(), |labels| {
        let q = modularity_matrix_form(g, labels);
        if q > best.0 {
            best = (q, labels.to_vec());
        }
    });
    best
}

/// Draws from the discrete power law `P(k) = k^-gamma / zeta(gamma)`,
/// `k >= 1`, by inverting a tabulated CDF. Beyond the table the continuous
/// tail approximation is used.
pub struct PowerLawSampler {
    cdf: Vec<f64>,
    gamma: f64,
    zeta: f64,
}

impl PowerLawSampler {
    const TABLE: usize = 1_000_000;

    pub fn new(gamma: f64, zeta: f64) -> Self {
        let mut cdf = Vec::with_capacity(Self::TABLE);
        let mut acc = 0.0;
        for k in 1..=Self::TABLE {
            acc += (k as f64).powf(-gamma) / zeta;
            cdf.push(acc);
        }
        PowerLawSampler { cdf, gamma, zeta }
    }

    /// Table mass plus the integral tail estimate; should be 1.
    pub fn total_mass(&self) -> f64 {
        let k = Self::TABLE as f64 + 0.5;
        self.cdf[Self::TABLE - 1] + k.powf(1.0 - self.gamma) / ((self.gamma - 1.0) * self.zeta)
    }

    pub fn sample(&self, rng: &mut impl Rng) -> usize {
        let u: f64 = rng.random();
        let idx = self.cdf.partition_point(|&c| c < u);
        if idx < self.cdf.len() {
            return idx + 1;
        }
        let rest = 1.0 - u;
        let k0 = Self::TABLE as f64 + 0.5;
        let tail = k0.powf(1.0 - self.gamma) / ((self.gamma - 1.0) * self.zeta);
        let k = k0 * (tail / rest.max(f64::MIN_POSITIVE)).powf(1.0 / (self.gamma - 1.0));
        k.round().max(Self::TABLE as f64 + 1.0) as usize
    }
}

/// Poisson probabilities `P(X = k)` for `k in 0..=kmax`.
pub fn poisson_pmf(lambda: f64, kmax: usize) -> Vec<f64> {
    let mut pmf = Vec::with_capacity(kmax + 1);
    let mut p = (-lambda).exp();
    for k in 0..=kmax {
        if k > 0 {
            p *= lambda / k as f64;
        }
        pmf.push(p);
    }
    pmf
}

/// Pearson chi-square statistic of observed counts against a Poisson law,
/// pooling both tails so every bin expects at least 5 observations.
/// Returns `(statistic, degrees_of_freedom)`.
pub fn poisson_chi_square(counts: &BTreeMap<usize, usize>, n: usize, lambda: f64) -> (f64, usize) {
    let kmax = counts.keys().copied().max().unwrap_or(0).max((lambda * 4.0) as usize + 20);
    let pmf = poisson_pmf(lambda, kmax);
    let expected: Vec<f64> = pmf.iter().map(|p| p * n as f64).collect();

    // bins as inclusive ranges [lo, hi]; the last bin is open-ended
    let mut lo = 0;
    let mut acc = 0.0;
    let mut bins: Vec<(usize, usize)> = Vec::new();
    for (k, &e) in expected.iter().enumerate() {
        acc += e;
        if acc >= 5.0 {
            bins.push((lo, k));
            lo = k + 1;
            acc = 0.0;
        }
    }
    let (last_lo, _) = bins.pop().expect("at least one bin");
    bins.push((last_lo, usize::MAX));
    // the open tail must also expect >= 5
    while bins.len() > 1 {
        let (lo, _) = bins[bins.len() - 1];
        let tail: f64 = n as f64 * (1.0 - pmf[..lo].iter().sum::<f64>());
        if tail >= 5.0 {
            break;
        }
        bins.pop();
        let (prev_lo, _) = bins.pop().unwrap();
        bins.push((prev_lo, usize::MAX));
    }

    let mut stat = 0.0;
    for &(lo, hi) in &bins {
        let observed: usize = counts.range(lo..=hi).map(|(_, &c)| c).sum();
        let p: f64 = if hi == usize::MAX { 1.0 - pmf[..lo].iter().sum::<f64>() } else { pmf[lo..=hi].iter().sum() };
        let e = p * n as f64;
        stat += (observed as f64 - e).powi(2) / e;
    }
    (stat, bins.len() - 1)
}

/// Sum over connected unordered pairs of their hop distance.
pub fn total_pair_distance(g: &Graph) -> f64 {
    (0..g.node_count())
        .map(|s| distances_from(g, s).iter().skip(s + 1).flatten().sum::<usize>() as f64)
        .sum()
}

pub fn mean_clustering_by_definition(g: &Graph) -> f64 {
    let n = g.node_count();
    let mut total = 0.0;
    for v in 0..n {
        let nb = g.neighbors(v);
        let k = nb.len();
        if k < 2 {
            continue;
        }
        let mut links = 0;
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if g.has_edge(a as usize, b as usize) {
                    links += 1;
                }
            }
        }
        total += 2.0 * links as f64 / (k * (k - 1)) as f64;
    }
    total / n as f64
}
