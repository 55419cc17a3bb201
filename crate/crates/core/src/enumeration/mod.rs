//! Isomorph-free generation of graphs, orientations and tournaments, and the
//! dicritical census built on top of them.

mod arboricity;
mod augment;
mod bound;
mod census;
mod checkpoint;
mod graphs;
mod orientations;
mod tournaments;

use thiserror::Error;

pub use arboricity::{arboricity, edge_arboricity, vertex_arboricity_partition};
pub use bound::{verify_census_bound, verify_census_bound_with, BoundCheck, BoundOptions};
pub use census::{
    dicritical_census, dicritical_census_with, ArboricityFilter, CensusOptions, CensusReport, CensusStats, Witness,
};
pub use graphs::{gen_graphs, MAX_ORDER};
pub use orientations::{for_each_orientation, gen_orientations};
pub use tournaments::gen_tournaments;

#[derive(Debug, Error)]
pub enum EnumerationError {
    #[error("order {order} exceeds the generator limit of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("infeasible constraints: {0}")]
    Infeasible(String),
    #[error("checkpoint {path}: {source}")]
    CheckpointIo { path: String, source: std::io::Error },
    #[error("checkpoint {path}: {reason}")]
    CheckpointFormat { path: String, reason: String },
    #[error("thread pool: {0}")]
    Threads(String),
}
