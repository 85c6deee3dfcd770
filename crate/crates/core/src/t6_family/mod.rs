//! One `T_6` block and `b` copies of `T_n` glued at a central vertex that
//! lies in the large part of every block. `cof D = 0` here, so the
//! rank-one inverse does not apply; the inverse has its own closed form.
//!
//! Vertex order: the two base vertices of `T_6`, its three other large-part
//! vertices, then for each `T_n` its two base vertices and its `n - 3` other
//! large-part vertices, and the center last.

mod blocks;
mod steps;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_linalg::{from_bigint, Rational};
use crate::graph_model::MultiBlockGraph;

pub use blocks::{build_r, build_t6_tn, inverse_t6_tn, inverse_t6_tn_blocks, T6TnMatrices};
pub use steps::{verify_steps, StepOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct T6TnSpec {
    n: usize,
    b: usize,
}

impl T6TnSpec {
    pub fn new(n: usize, b: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::OutOfRange(format!("T_n needs n >= 3, got {n}")));
        }
        if n == 6 {
            return Err(Error::OutOfRange("n = 6 is excluded: the closed forms divide by n - 6".into()));
        }
        if b == 0 {
            return Err(Error::OutOfRange("b must be at least 1".into()));
        }
        Ok(Self { n, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn vertex_count(&self) -> usize {
        6 + self.b * (self.n - 1)
    }

    pub fn center(&self) -> usize {
        self.vertex_count() - 1
    }

    /// The same graph as a [`MultiBlockGraph`], numbered in the family's
    /// vertex order so its distance matrix lines up with [`build_t6_tn`].
    pub fn graph(&self) -> MultiBlockGraph {
        let c = self.center();
        let mut layout = vec![vec![vec![0], vec![1], vec![2, 3, 4, c]]];
        for t in 0..self.b {
            let start = 5 + t * (self.n - 1);
            let mut large: Vec<usize> = (start + 2..start + self.n - 1).collect();
            large.push(c);
            layout.push(vec![vec![start], vec![start + 1], large]);
        }
        MultiBlockGraph::new(self.vertex_count(), layout).expect("family layout is a valid block tree")
    }

    pub(crate) fn n_minus_6(&self) -> i64 {
        self.n as i64 - 6
    }
}

/// `det D = (-1)^{nb+1} 2^{(n-3)b+4} (n-6)^b`.
pub fn det_t6_tn(spec: &T6TnSpec) -> Rational {
    let (n, b) = (spec.n, spec.b);
    let sign = if (n * b + 1) % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let power = BigInt::from(2).pow(((n - 3) * b + 4) as u32);
    from_bigint(sign * power * BigInt::from(spec.n_minus_6()).pow(b as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{determinant, rat};
    use crate::graph_model::bfs_distances;

    #[test]
    fn rejects_bad_parameters() {
        assert!(T6TnSpec::new(6, 1).is_err());
        assert!(T6TnSpec::new(7, 0).is_err());
        assert!(T6TnSpec::new(2, 1).is_err());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_t6_tn(&T6TnSpec::new(7, 1).unwrap()), rat(256));
        assert_eq!(det_t6_tn(&T6TnSpec::new(3, 1).unwrap()), rat(-48));
        assert_eq!(det_t6_tn(&T6TnSpec::new(5, 2).unwrap()), rat(-256));
        for (n, b) in [(7, 1), (3, 1), (5, 2), (4, 3)] {
            let s = T6TnSpec::new(n, b).unwrap();
            let d = bfs_distances(&s.graph()).unwrap().into_matrix();
            assert_eq!(determinant(&d).unwrap(), det_t6_tn(&s), "n = {n}, b = {b}");
        }
    }

    #[test]
    fn graph_shape() {
        let s = T6TnSpec::new(7, 2).unwrap();
        let g = s.graph();
        assert_eq!(g.vertex_count(), 18);
        assert_eq!(g.cut_vertices(), vec![s.center()]);
        assert!(g.blocks().iter().all(|b| b.part_of(s.center()) == Some(2)));
    }
}
