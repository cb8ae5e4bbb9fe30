//! Degree distributions, power-law fitting, clustering, closeness and hop
//! plots.

mod clustering;
mod degree;
mod paths;
mod powerlaw;
mod zeta;

pub use clustering::{clustering_coefficient, local_clustering};
pub use degree::{ccdf, degree_histogram, DegreeHistogram};
pub use paths::{
    closeness_all, closeness_centrality, effective_diameter, hop_plot, HopPlot, HopPlotMode,
    DEFAULT_SAMPLE_SOURCES,
};
pub use powerlaw::{fit_power_law, FitMethod, PowerLawFit, XminPolicy, MIN_SCAN_TAIL};
pub use zeta::hurwitz_zeta;
