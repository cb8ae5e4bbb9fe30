use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DegreeMode, Graph};

/// Exact degree -> node-count mapping.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeHistogram {
    counts: BTreeMap<usize, usize>,
    n: usize,
    mode: DegreeMode,
}

impl DegreeHistogram {
    /// Builds a histogram from raw values (degrees, community sizes, ...).
    pub fn from_values<I: IntoIterator<Item = usize>>(values: I, mode: DegreeMode) -> Self {
        let mut counts = BTreeMap::new();
        let mut n = 0;
        for v in values {
            *counts.entry(v).or_insert(0) += 1;
            n += 1;
        }
        DegreeHistogram { counts, n, mode }
    }

    /// Builds from explicit `(value, count)` pairs; zero counts are ignored.
    pub fn from_counts<I: IntoIterator<Item = (usize, usize)>>(pairs: I, mode: DegreeMode) -> Self {
        let mut counts = BTreeMap::new();
        let mut n = 0;
        for (k, c) in pairs {
            if c > 0 {
                *counts.entry(k).or_insert(0) += c;
                n += c;
            }
        }
        DegreeHistogram { counts, n, mode }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> DegreeMode {
        self.mode
    }

    pub fn count(&self, k: usize) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// `(degree, count)` pairs in ascending degree order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&k, &c)| (k, c))
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.counts.keys().next_back().copied()
    }

    /// `(k, P(k))` for every observed degree.
    pub fn pdf(&self) -> Vec<(usize, f64)> {
        let n = self.n as f64;
        self.iter().map(|(k, c)| (k, c as f64 / n)).collect()
    }
}

pub fn degree_histogram(g: &Graph, mode: DegreeMode) -> DegreeHistogram {
    DegreeHistogram::from_values((0..g.node_count()).map(|v| g.degree_unchecked(v, mode)), mode)
}

/// Complementary cumulative distribution: for each observed degree `k`,
/// the fraction of nodes with degree `>= k`.
///
/// For a power law `P(k) ~ k^-γ` the tail behaves as `k^-(γ-1)`.
pub fn ccdf(h: &DegreeHistogram) -> Result<Vec<(usize, f64)>> {
    if h.n == 0 {
        return Err(Error::argument("ccdf of an empty histogram"));
    }
    let n = h.n as f64;
    let mut remaining = h.n;
    let mut out = Vec::with_capacity(h.counts.len());
    for (k, c) in h.iter() {
        out.push((k, remaining as f64 / n));
        remaining -= c;
    }
    Ok(out)
}
