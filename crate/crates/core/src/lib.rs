pub mod cli;
pub mod community;
pub mod error;
pub mod generators;
pub mod graph;
pub mod metrics;

pub use error::{Error, Result};
pub use graph::{DegreeMode, Graph};
