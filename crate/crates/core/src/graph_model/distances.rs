use std::collections::VecDeque;

use super::graph::MultiBlockGraph;
use super::spec::MultipartiteSpec;
use crate::closed_forms::{cof_closed, det_closed};
use crate::error::{Error, Result};
use crate::exact_linalg::{block_assemble, rat, ExactMatrix, Rational};

/// Shortest-path distance matrix in vertex-identifier order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix(ExactMatrix);

impl DistanceMatrix {
    pub fn matrix(&self) -> &ExactMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ExactMatrix {
        self.0
    }

    fn from_table(table: &[Vec<u32>]) -> Self {
        let n = table.len();
        Self(ExactMatrix::from_fn(n, n, |i, j| rat(i64::from(table[i][j]))))
    }
}

/// Block form of `D(K_{n_1..n_m})`: `2(J - I)` on the diagonal, `J` off it.
pub fn build_multipartite(spec: &MultipartiteSpec) -> DistanceMatrix {
    let parts = spec.parts();
    let grid: Vec<Vec<ExactMatrix>> = parts
        .iter()
        .enumerate()
        .map(|(i, &ni)| {
            parts
                .iter()
                .enumerate()
                .map(|(j, &nj)| {
                    if i == j {
                        ExactMatrix::ones(ni, ni).sub(&ExactMatrix::identity(ni)).expect("square blocks").scale(&rat(2))
                    } else {
                        ExactMatrix::ones(ni, nj)
                    }
                })
                .collect()
        })
        .collect();
    DistanceMatrix(block_assemble(&grid).expect("consistent block grid"))
}

/// All-pairs shortest paths by breadth-first search over the block edges.
pub fn bfs_distances(g: &MultiBlockGraph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut table = vec![vec![u32::MAX; n]; n];
    let mut queue = VecDeque::new();
    for (s, row) in table.iter_mut().enumerate() {
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if row[v] == u32::MAX {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        if row.contains(&u32::MAX) {
            return Err(Error::Disconnected);
        }
    }
    Ok(DistanceMatrix::from_table(&table))
}

/// Distances summed along the unique block path of the block-cut tree.
pub fn block_path_distances(g: &MultiBlockGraph) -> Result<DistanceMatrix> {
    let n = g.vertex_count();
    let mut table = vec![vec![u32::MAX; n]; n];
    let mut queue = VecDeque::new();
    for (s, row) in table.iter_mut().enumerate() {
        let mut block_done = vec![false; g.block_count()];
        row[s] = 0;
        queue.push_back(s);
        while let Some(w) = queue.pop_front() {
            for &(b, _) in g.membership(w) {
                if std::mem::replace(&mut block_done[b], true) {
                    continue;
                }
                let block = &g.blocks()[b];
                for x in block.vertices() {
                    if x != w && row[x] == u32::MAX {
                        row[x] = row[w] + block.local_distance(w, x).expect("both in block");
                        queue.push_back(x);
                    }
                }
            }
        }
        if row.contains(&u32::MAX) {
            return Err(Error::Disconnected);
        }
    }
    Ok(DistanceMatrix::from_table(&table))
}

/// `(det D(G), cof D(G))` from per-block closed forms:
/// `cof D(G) = prod cof D(G_i)` and
/// `det D(G) = sum_i det D(G_i) prod_{j != i} cof D(G_j)`.
pub fn graham_compose(g: &MultiBlockGraph) -> (Rational, Rational) {
    let per_block: Vec<(Rational, Rational)> =
        g.blocks().iter().map(|b| (det_closed(b.spec()), cof_closed(b.spec()))).collect();
    compose_block_values(&per_block)
}

/// Composition rule on explicit `(det, cof)` pairs, one per block.
pub fn compose_block_values(per_block: &[(Rational, Rational)]) -> (Rational, Rational) {
    let cof: Rational = per_block.iter().map(|(_, c)| c).product();
    let det = (0..per_block.len())
        .map(|i| per_block.iter().enumerate().map(|(j, (d, c))| if i == j { d } else { c }).product::<Rational>())
        .sum();
    (det, cof)
}
