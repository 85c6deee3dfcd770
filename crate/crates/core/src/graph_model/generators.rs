//! Ready-made graphs: trees, stars of blocks, random multi-block graphs.

use std::collections::{BTreeSet, HashSet};

use rand::Rng;

use super::graph::MultiBlockGraph;
use super::spec::MultipartiteSpec;
use crate::error::{Error, Result};

/// A tree as `n - 1` blocks `K_{1,1}`.
pub fn tree(vertex_count: usize, edges: &[(usize, usize)]) -> Result<MultiBlockGraph> {
    if vertex_count >= 2 && edges.len() != vertex_count - 1 {
        return Err(Error::InvalidSpec(format!(
            "a tree on {vertex_count} vertices has {} edges, got {}",
            vertex_count - 1,
            edges.len()
        )));
    }
    MultiBlockGraph::new(vertex_count, edges.iter().map(|&(u, v)| vec![vec![u], vec![v]]).collect())
}

/// The path `0 - 1 - ... - (n-1)`; `n >= 2`.
pub fn path(n: usize) -> MultiBlockGraph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    tree(n, &edges).expect("paths are trees")
}

/// Blocks glued at one central vertex (identifier 0). In each block the
/// center takes the first slot of the last part; for `T_n` that is a vertex
/// of the large part, not a base vertex.
pub fn star(specs: &[MultipartiteSpec]) -> Result<MultiBlockGraph> {
    if specs.is_empty() {
        return Err(Error::InvalidSpec("a star needs at least one block".into()));
    }
    let mut next = 1;
    let mut layout = Vec::with_capacity(specs.len());
    for spec in specs {
        let last = spec.m() - 1;
        let parts = spec
            .parts()
            .iter()
            .enumerate()
            .map(|(p, &size)| {
                let mut ids = Vec::with_capacity(size);
                let fresh = if p == last {
                    ids.push(0);
                    size - 1
                } else {
                    size
                };
                ids.extend(next..next + fresh);
                next += fresh;
                ids
            })
            .collect();
        layout.push(parts);
    }
    MultiBlockGraph::new(next, layout)
}

/// `b` copies of `spec` sharing one central vertex.
pub fn star_of_blocks(spec: &MultipartiteSpec, b: usize) -> Result<MultiBlockGraph> {
    star(&vec![spec.clone(); b])
}

#[derive(Clone, Copy, Debug)]
pub struct RandomGraphConfig {
    pub max_vertices: usize,
    pub max_parts: usize,
    pub max_part_size: usize,
}

impl Default for RandomGraphConfig {
    fn default() -> Self {
        Self { max_vertices: 30, max_parts: 4, max_part_size: 3 }
    }
}

fn random_spec<R: Rng + ?Sized>(
    rng: &mut R,
    cfg: &RandomGraphConfig,
    max_order: usize,
    accept: &dyn Fn(&MultipartiteSpec) -> bool,
) -> Option<MultipartiteSpec> {
    for _ in 0..1000 {
        let m = rng.gen_range(2..=cfg.max_parts.max(2));
        let parts: Vec<usize> = (0..m).map(|_| rng.gen_range(1..=cfg.max_part_size.max(1))).collect();
        let spec = MultipartiteSpec::new(parts).expect("m >= 2, parts >= 1");
        if spec.order() <= max_order && accept(&spec) {
            return Some(spec);
        }
    }
    None
}

/// Grows a random multi-block graph by repeatedly attaching a fresh block
/// at a uniformly chosen existing vertex. Only blocks passing `accept` are
/// used.
pub fn random_multiblock<R: Rng + ?Sized>(
    rng: &mut R,
    cfg: &RandomGraphConfig,
    accept: &dyn Fn(&MultipartiteSpec) -> bool,
) -> MultiBlockGraph {
    let target = rng.gen_range(2..=cfg.max_vertices.max(2));
    let first = random_spec(rng, cfg, target, accept)
        .or_else(|| MultipartiteSpec::complete(2).ok().filter(|s| accept(s)))
        .expect("no acceptable block fits the vertex budget");
    let mut layout = MultiBlockGraph::single(&first).layout();
    let mut n = first.order();
    while n < target {
        let Some(spec) = random_spec(rng, cfg, target - n + 1, accept) else { break };
        let anchor = rng.gen_range(0..n);
        let anchor_part = rng.gen_range(0..spec.m());
        let parts = spec
            .parts()
            .iter()
            .enumerate()
            .map(|(p, &size)| {
                let mut ids = Vec::with_capacity(size);
                let fresh = if p == anchor_part {
                    ids.push(anchor);
                    size - 1
                } else {
                    size
                };
                ids.extend(n..n + fresh);
                n += fresh;
                ids
            })
            .collect();
        layout.push(parts);
    }
    MultiBlockGraph::new(n, layout).expect("attaching at one vertex keeps the block tree valid")
}

fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| rooted_code(adj, w, v)).collect();
    children.sort();
    format!("({})", children.concat())
}

/// Canonical string of a free tree: the smallest rooted code over its centers.
fn tree_code(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut remaining: BTreeSet<usize> = (0..n).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while remaining.len() > 2 {
        let mut next = Vec::new();
        for &leaf in &leaves {
            remaining.remove(&leaf);
            for &w in &adj[leaf] {
                if remaining.contains(&w) {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        leaves = next;
    }
    remaining.iter().map(|&c| rooted_code(&adj, c, usize::MAX)).min().unwrap_or_default()
}

/// One representative edge list per isomorphism class of trees on `n >= 2`
/// vertices.
pub fn nonisomorphic_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(n >= 2, "trees need at least two vertices here");
    let mut current = vec![vec![(0, 1)]];
    for k in 2..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for edges in &current {
            for v in 0..k {
                let mut grown = edges.clone();
                grown.push((v, k));
                if seen.insert(tree_code(k + 1, &grown)) {
                    next.push(grown);
                }
            }
        }
        current = next;
    }
    current
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tree_counts_match_known_sequence() {
        // Number of unlabeled trees: 1, 1, 1, 2, 3, 6, 11, 23, 47, 106.
        let counts: Vec<usize> = (2..=10).map(|n| nonisomorphic_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn star_layout() {
        let g = star_of_blocks(&MultipartiteSpec::t(7).unwrap(), 3).unwrap();
        assert_eq!(g.vertex_count(), 1 + 3 * 6);
        assert_eq!(g.cut_vertices(), vec![0]);
        assert_eq!(g.blocks()[1].part_of(0), Some(2));
    }

    #[test]
    fn random_graphs_are_valid_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let cfg = RandomGraphConfig::default();
        for _ in 0..50 {
            let g = random_multiblock(&mut rng, &cfg, &|_| true);
            assert!(g.vertex_count() <= cfg.max_vertices);
            assert!(crate::graph_model::validate(&g).is_valid());
        }
    }

    #[test]
    fn tree_rejects_wrong_edge_count() {
        assert!(tree(4, &[(0, 1)]).is_err());
        assert!(tree(3, &[(0, 1), (1, 2)]).is_ok());
    }
}
