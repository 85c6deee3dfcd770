//! `lambda`, `mu` and the Laplacian-like matrix for blocks and multi-block
//! graphs, and the inverse distance matrix built from them.

mod lapexp;
mod multi;
mod single;

pub use lapexp::{lapexp_check, LapExpReport, LapExpSide};
pub use multi::{
    graph_laplacian, inverse_from_spectral, inverse_multiblock, rank_one_obstruction, spectral_multiblock,
    tree_inverse, GraphLaplacian, SpectralData,
};
pub use single::{inverse_single_block, lambda_of, lap_like_single, mu_single};
