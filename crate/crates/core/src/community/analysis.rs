use std::collections::BTreeMap;

use serde::Serialize;

use super::partition::{undirected, Partition};
use crate::graph::{DegreeMode, Graph};
use crate::metrics::{fit_power_law, DegreeHistogram, FitMethod, PowerLawFit, XminPolicy};

/// Community size -> number of communities of that size, with a power-law
/// fit of the sizes when one is possible.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CommunitySizeDistribution {
    pub histogram: BTreeMap<usize, usize>,
    pub fit: Option<PowerLawFit>,
    /// Why `fit` is absent, when it is.
    pub fit_error: Option<String>,
}

impl CommunitySizeDistribution {
    pub fn community_count(&self) -> usize {
        self.histogram.values().sum()
    }

    pub fn sigma(&self) -> Option<f64> {
        self.fit.map(|f| f.gamma)
    }
}

pub fn community_sizes(p: &Partition) -> CommunitySizeDistribution {
    community_sizes_with(p, FitMethod::Mle, XminPolicy::KsScan)
}

pub fn community_sizes_with(p: &Partition, method: FitMethod, xmin: XminPolicy) -> CommunitySizeDistribution {
    let hist = DegreeHistogram::from_values(p.sizes().iter().copied(), DegreeMode::Total);
    let histogram: BTreeMap<usize, usize> = hist.iter().collect();
    if histogram.len() < 2 {
        return CommunitySizeDistribution {
            histogram,
            fit: None,
            fit_error: Some("fewer than 2 distinct community sizes".into()),
        };
    }
    match fit_power_law(&hist, method, xmin) {
        Ok(fit) => CommunitySizeDistribution { histogram, fit: Some(fit), fit_error: None },
        Err(e) => CommunitySizeDistribution { histogram, fit: None, fit_error: Some(e.to_string()) },
    }
}

/// Share of all nodes above which the largest community marks the whole
/// partition as biased.
pub const GIANT_FRACTION: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AdvisoryThresholds {
    /// Communities with fewer intra-community edges than `sqrt(|E| / 2)` are flagged.
    pub min_intra_edges: f64,
    pub giant_fraction: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResolutionAdvisory {
    /// Community ids that may be below the resolvable scale.
    pub flagged_communities: Vec<usize>,
    /// The largest community holds more than `giant_fraction` of the nodes.
    pub biased: bool,
    pub largest_fraction: f64,
    pub thresholds: AdvisoryThresholds,
}

/// Flags partitions that modularity optimization is likely to have
/// resolved poorly.
pub fn resolution_advisory(g: &Graph, p: &Partition) -> ResolutionAdvisory {
    let edges = undirected(g).edge_count();
    let min_intra_edges = (edges as f64 / 2.0).sqrt();
    let flagged_communities = p
        .intra_edges()
        .iter()
        .enumerate()
        .filter(|&(_, &l)| (l as f64) < min_intra_edges)
        .map(|(s, _)| s)
        .collect();
    let largest = p.sizes().iter().copied().max().unwrap_or(0);
    let largest_fraction = if p.node_count() == 0 { 0.0 } else { largest as f64 / p.node_count() as f64 };
    ResolutionAdvisory {
        flagged_communities,
        biased: largest_fraction > GIANT_FRACTION,
        largest_fraction,
        thresholds: AdvisoryThresholds { min_intra_edges, giant_fraction: GIANT_FRACTION },
    }
}
