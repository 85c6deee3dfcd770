//! Inputs shared by the benchmarks in `benches/`.

use distblock_core::graph_model::generators::{path, star_of_blocks};
use distblock_core::graph_model::{bfs_distances, build_multipartite};
use distblock_core::{ExactMatrix, MultiBlockGraph, MultipartiteSpec};

pub fn block(parts: &[usize]) -> MultipartiteSpec {
    MultipartiteSpec::new(parts.to_vec()).expect("benchmark specs are valid")
}

pub fn block_matrix(parts: &[usize]) -> ExactMatrix {
    build_multipartite(&block(parts)).into_matrix()
}

/// `copies` copies of one block glued at a single vertex.
pub fn star(parts: &[usize], copies: usize) -> MultiBlockGraph {
    star_of_blocks(&block(parts), copies).expect("benchmark stars are valid")
}

pub fn path_graph(n: usize) -> MultiBlockGraph {
    path(n)
}

pub fn distance_matrix(g: &MultiBlockGraph) -> ExactMatrix {
    bfs_distances(g).expect("benchmark graphs are connected").into_matrix()
}
