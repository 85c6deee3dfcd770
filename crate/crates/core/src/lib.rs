pub mod closed_forms;
pub mod error;
pub mod exact_linalg;
pub mod graph_model;
pub mod singularity_lab;
pub mod spectral;
pub mod sweep;
pub mod t6_family;

pub use error::{Error, Result};
pub use exact_linalg::{ExactMatrix, Rational};
pub use graph_model::{MultiBlockGraph, MultipartiteSpec};
