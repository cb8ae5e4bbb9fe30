//! Modularity, edge betweenness, Girvan–Newman, Louvain, and analysis of
//! the resulting partitions.
//!
//! All operations work on undirected graphs; directed input is symmetrized
//! with [`Graph::undirected_view`](crate::graph::Graph::undirected_view)
//! before anything is computed.

mod analysis;
mod betweenness;
mod girvan_newman;
mod louvain;
mod partition;

pub use analysis::{
    community_sizes, community_sizes_with, resolution_advisory, AdvisoryThresholds, CommunitySizeDistribution,
    ResolutionAdvisory, GIANT_FRACTION,
};
pub use betweenness::{edge_betweenness, EdgeBetweenness};
pub use girvan_newman::{girvan_newman, GnOptions, GnResult, GnStep, GnTarget, DEFAULT_EDGE_LIMIT};
pub use louvain::{louvain, DEFAULT_MIN_GAIN};
pub use partition::{modularity, Partition};
