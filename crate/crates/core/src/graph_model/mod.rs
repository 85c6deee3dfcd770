//! Complete multipartite blocks, their gluing into multi-block graphs, and
//! the distance matrix computed by two independent routes.

mod distances;
pub mod generators;
mod graph;
mod source;
mod spec;

pub use distances::{
    bfs_distances, block_path_distances, build_multipartite, compose_block_values, graham_compose, DistanceMatrix,
};
pub use graph::{
    validate, validate_layout, BlockFile, BlockPlacement, GraphFile, MultiBlockGraph, ValidationReport, Violation,
};
pub use source::parse_graph_source;
pub use spec::MultipartiteSpec;
