use num_traits::Zero;
use serde::Serialize;

use super::single::{lambda_of, lap_like_single, mu_single};
use crate::error::{Error, Result};
use crate::exact_linalg::{cofactor_sum, determinant, inverse, rat, ratio, vector_to_json, ExactMatrix, Rational};
use crate::graph_model::MultiBlockGraph;

/// `lambda_G`, `mu_G` and the Laplacian-like matrix of a multi-block graph,
/// all in vertex-identifier order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralData {
    pub lambda: Rational,
    pub mu: Vec<Rational>,
    pub lap_like: ExactMatrix,
}

impl SpectralData {
    pub fn invariants_hold(&self) -> bool {
        let n = self.mu.len();
        let zero = vec![rat(0); n];
        self.mu.iter().sum::<Rational>() == rat(1)
            && self.lap_like.row_sums() == zero
            && self.lap_like.col_sums() == zero
            && self.lap_like.is_symmetric()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "lambda": crate::exact_linalg::format_rational(&self.lambda),
            "mu": vector_to_json(&self.mu),
            "lap_like": crate::exact_linalg::matrix_to_json(&self.lap_like),
        })
    }
}

/// Sums the per-block data: `lambda_G = sum lambda_t`,
/// `mu_G(v) = sum_t mu_t(v) - (k - 1)` where `v` lies in `k` blocks and
/// `mu_t` is zero off block `t`, and `L = sum_t L_t` padded with zeros.
pub fn spectral_multiblock(g: &MultiBlockGraph) -> Result<SpectralData> {
    let n = g.vertex_count();
    let mut lambda = rat(0);
    let mut mu = vec![rat(0); n];
    let mut lap_like = ExactMatrix::zeros(n, n);
    for (t, block) in g.blocks().iter().enumerate() {
        let spec = block.spec();
        let tag = |e: Error| match e {
            Error::ZeroCofactor { parts, .. } => Error::ZeroCofactor { block: t, parts },
            other => other,
        };
        lambda += lambda_of(spec).map_err(tag)?;
        let ids: Vec<usize> = block.vertices().collect();
        let local_mu = mu_single(spec).map_err(tag)?;
        let local_lap = lap_like_single(spec).map_err(tag)?;
        for (a, &u) in ids.iter().enumerate() {
            mu[u] += &local_mu[a];
            for (b, &v) in ids.iter().enumerate() {
                lap_like[(u, v)] += &local_lap[(a, b)];
            }
        }
    }
    for (v, m) in mu.iter_mut().enumerate() {
        *m -= rat(g.membership(v).len() as i64 - 1);
    }
    Ok(SpectralData { lambda, mu, lap_like })
}

/// `D(G)^{-1} = -L + (1/lambda_G) mu mu^t`.
pub fn inverse_multiblock(g: &MultiBlockGraph) -> Result<ExactMatrix> {
    inverse_from_spectral(&spectral_multiblock(g)?)
}

pub fn inverse_from_spectral(s: &SpectralData) -> Result<ExactMatrix> {
    if s.lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    ExactMatrix::outer(&s.mu, &s.mu).scale(&s.lambda.recip()).sub(&s.lap_like)
}

/// Whether `D^{-1}` fails to be a rank-one perturbation of a Laplacian-like
/// matrix, i.e. `cof D = 0`. Computed both as `cof D` and as `1^t D^{-1} 1`;
/// an error if they disagree.
pub fn rank_one_obstruction(d: &ExactMatrix) -> Result<bool> {
    let det = determinant(d)?;
    if det.is_zero() {
        return Err(Error::Singular { det });
    }
    let by_cofactor = cofactor_sum(d)?.is_zero();
    let by_inverse = inverse(d)?.total().is_zero();
    if by_cofactor != by_inverse {
        return Err(Error::IdentityFailure {
            name: "rank-one obstruction".into(),
            detail: format!("cof D = 0 is {by_cofactor} but 1^t D^-1 1 = 0 is {by_inverse}"),
        });
    }
    Ok(by_cofactor)
}

/// Degree matrix minus adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphLaplacian(pub ExactMatrix);

pub fn graph_laplacian(g: &MultiBlockGraph) -> GraphLaplacian {
    let n = g.vertex_count();
    let mut l = ExactMatrix::zeros(n, n);
    for (u, nbrs) in g.adjacency().iter().enumerate() {
        l[(u, u)] = rat(nbrs.len() as i64);
        for &v in nbrs {
            l[(u, v)] = rat(-1);
        }
    }
    GraphLaplacian(l)
}

/// `-L/2 + tau tau^t / (2(n - 1))` with `tau(v) = 2 - deg(v)`; the inverse
/// distance matrix of a tree.
pub fn tree_inverse(g: &MultiBlockGraph) -> Result<ExactMatrix> {
    let n = g.vertex_count();
    if n < 2 || g.blocks().iter().any(|b| b.spec().parts() != [1, 1]) {
        return Err(Error::InvalidSpec("tree inverse needs a tree on at least two vertices".into()));
    }
    let tau: Vec<Rational> = g.degrees().iter().map(|&d| rat(2 - d as i64)).collect();
    let l = graph_laplacian(g).0;
    l.scale(&ratio(-1, 2)).add(&ExactMatrix::outer(&tau, &tau).scale(&ratio(1, 2 * (n as i64 - 1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph_model::generators::{path, star_of_blocks, tree};
    use crate::graph_model::{bfs_distances, MultipartiteSpec};
    use crate::spectral::lapexp_check;

    #[test]
    fn path_three() {
        let g = path(3);
        let s = spectral_multiblock(&g).unwrap();
        assert_eq!(s.lambda, rat(1));
        assert_eq!(s.mu, vec![ratio(1, 2), rat(0), ratio(1, 2)]);
        assert!(s.invariants_hold());
        let d = bfs_distances(&g).unwrap().into_matrix();
        assert!(lapexp_check(&d, &s.lambda, &s.mu, &s.lap_like).unwrap().all());
    }

    #[test]
    fn inverses_match_oracle() {
        let p4 = path(4);
        let tri_pendant =
            MultiBlockGraph::new(4, vec![vec![vec![0], vec![1], vec![2]], vec![vec![2], vec![3]]]).unwrap();
        for g in [p4, tri_pendant] {
            let d = bfs_distances(&g).unwrap().into_matrix();
            assert_eq!(inverse_multiblock(&g).unwrap(), inverse(&d).unwrap());
        }
    }

    #[test]
    fn tree_formula() {
        let g = tree(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(tree_inverse(&g).unwrap(), inverse_multiblock(&g).unwrap());
        assert_eq!(spectral_multiblock(&g).unwrap().lambda, rat(2));
    }

    #[test]
    fn star_of_t7() {
        let g = star_of_blocks(&MultipartiteSpec::t(7).unwrap(), 3).unwrap();
        assert_eq!(spectral_multiblock(&g).unwrap().lambda, rat(-6));
    }

    #[test]
    fn obstruction() {
        assert!(!rank_one_obstruction(bfs_distances(&path(3)).unwrap().matrix()).unwrap());
        let k3 = ExactMatrix::from_i64_rows(&[[0, 1, 1], [1, 0, 1], [1, 1, 0]]);
        assert!(!rank_one_obstruction(&k3).unwrap());
        let singular = ExactMatrix::from_i64_rows(&[[1, 1], [1, 1]]);
        assert!(matches!(rank_one_obstruction(&singular), Err(Error::Singular { .. })));
    }

    #[test]
    fn zero_cofactor_block_is_reported() {
        let g = star_of_blocks(&MultipartiteSpec::t(6).unwrap(), 2).unwrap();
        assert!(matches!(spectral_multiblock(&g), Err(Error::ZeroCofactor { block: 0, .. })));
    }
}
