use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::spec::MultipartiteSpec;
use crate::error::{Error, Result};

/// One multipartite block placed on global vertex identifiers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPlacement {
    spec: MultipartiteSpec,
    vertex_ids: Vec<Vec<usize>>,
}

impl BlockPlacement {
    pub fn spec(&self) -> &MultipartiteSpec {
        &self.spec
    }

    /// Identifiers per part.
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.vertex_ids
    }

    /// Vertices in part order, matching the row order of the block's own
    /// distance matrix.
    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertex_ids.iter().flatten().copied()
    }

    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.vertex_ids.iter().position(|p| p.contains(&v))
    }

    pub fn contains(&self, v: usize) -> bool {
        self.part_of(v).is_some()
    }

    /// Distance inside the block: 0, 1 across parts, 2 within a part.
    pub fn local_distance(&self, u: usize, v: usize) -> Option<u32> {
        let pu = self.part_of(u)?;
        let pv = self.part_of(v)?;
        Some(if u == v {
            0
        } else if pu == pv {
            2
        } else {
            1
        })
    }
}

/// Reasons a block layout is not a multi-block graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NoBlocks,
    TooFewParts { block: usize, parts: usize },
    EmptyPart { block: usize, part: usize },
    VertexOutOfRange { block: usize, vertex: usize },
    RepeatedVertex { block: usize, vertex: usize },
    UncoveredVertex { vertex: usize },
    OverlappingBlocks { first: usize, second: usize, shared: Vec<usize> },
    BlockCycle { block: usize, vertex: usize },
    Disconnected { components: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoBlocks => write!(f, "graph has no blocks"),
            Self::TooFewParts { block, parts } => write!(f, "block {block} has {parts} part(s), needs at least 2"),
            Self::EmptyPart { block, part } => write!(f, "block {block} part {part} is empty"),
            Self::VertexOutOfRange { block, vertex } => {
                write!(f, "block {block} uses vertex {vertex} outside the vertex range")
            }
            Self::RepeatedVertex { block, vertex } => write!(f, "block {block} lists vertex {vertex} more than once"),
            Self::UncoveredVertex { vertex } => write!(f, "vertex {vertex} belongs to no block"),
            Self::OverlappingBlocks { first, second, shared } => {
                write!(f, "blocks {first} and {second} share {} vertices {shared:?}", shared.len())
            }
            Self::BlockCycle { block, vertex } => {
                write!(f, "block {block} closes a cycle in the block tree at vertex {vertex}")
            }
            Self::Disconnected { components } => write!(f, "graph has {components} connected components"),
        }
    }
}

/// Outcome of [`validate_layout`]: violations, plus the block-cut structure
/// when the layout is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub cut_vertices: Vec<usize>,
    /// Edges `(block, cut vertex)` of the block-cut tree.
    pub block_tree: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        Self((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Checks a raw layout (per block, per part, vertex identifiers) against
/// the multi-block graph invariants.
pub fn validate_layout(vertex_count: usize, blocks: &[Vec<Vec<usize>>]) -> ValidationReport {
    let mut violations = Vec::new();
    if blocks.is_empty() {
        violations.push(Violation::NoBlocks);
    }
    let mut vertex_sets: Vec<BTreeSet<usize>> = Vec::with_capacity(blocks.len());
    let mut structurally_sound = true;
    for (b, parts) in blocks.iter().enumerate() {
        if parts.len() < 2 {
            violations.push(Violation::TooFewParts { block: b, parts: parts.len() });
            structurally_sound = false;
        }
        let mut seen = BTreeSet::new();
        for (p, part) in parts.iter().enumerate() {
            if part.is_empty() {
                violations.push(Violation::EmptyPart { block: b, part: p });
                structurally_sound = false;
            }
            for &v in part {
                if v >= vertex_count {
                    violations.push(Violation::VertexOutOfRange { block: b, vertex: v });
                    structurally_sound = false;
                } else if !seen.insert(v) {
                    violations.push(Violation::RepeatedVertex { block: b, vertex: v });
                    structurally_sound = false;
                }
            }
        }
        vertex_sets.push(seen);
    }

    let mut block_count_of = vec![0usize; vertex_count];
    for set in &vertex_sets {
        for &v in set {
            block_count_of[v] += 1;
        }
    }
    for (v, &c) in block_count_of.iter().enumerate() {
        if c == 0 {
            violations.push(Violation::UncoveredVertex { vertex: v });
        }
    }

    for a in 0..vertex_sets.len() {
        for b in a + 1..vertex_sets.len() {
            let shared: Vec<usize> = vertex_sets[a].intersection(&vertex_sets[b]).copied().collect();
            if shared.len() > 1 {
                violations.push(Violation::OverlappingBlocks { first: a, second: b, shared });
            }
        }
    }

    // Block-vertex incidence graph: nodes 0..b are blocks, b.. are vertices.
    let nb = vertex_sets.len();
    let mut uf = UnionFind::new(nb + vertex_count);
    let mut cycle_reported = false;
    for (b, set) in vertex_sets.iter().enumerate() {
        for &v in set {
            if !uf.union(b, nb + v) && !cycle_reported {
                violations.push(Violation::BlockCycle { block: b, vertex: v });
                cycle_reported = true;
            }
        }
    }
    let roots: BTreeSet<usize> =
        (0..vertex_count).filter(|&v| block_count_of[v] > 0).map(|v| uf.find(nb + v)).collect();
    if roots.len() > 1 {
        violations.push(Violation::Disconnected { components: roots.len() });
    }

    let mut report = ValidationReport { violations, ..Default::default() };
    if structurally_sound {
        report.cut_vertices = (0..vertex_count).filter(|&v| block_count_of[v] > 1).collect();
        for (b, set) in vertex_sets.iter().enumerate() {
            for &v in set {
                if block_count_of[v] > 1 {
                    report.block_tree.push((b, v));
                }
            }
        }
    }
    report
}

/// A connected graph whose blocks are complete multipartite graphs glued
/// along a block-cut tree. Vertex identifiers are `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiBlockGraph {
    vertex_count: usize,
    blocks: Vec<BlockPlacement>,
    /// For each vertex, the `(block, part)` pairs containing it.
    membership: Vec<Vec<(usize, usize)>>,
}

impl MultiBlockGraph {
    pub fn new(vertex_count: usize, layout: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        let report = validate_layout(vertex_count, &layout);
        if !report.is_valid() {
            return Err(Error::InvalidGraph(report.violations));
        }
        let mut membership = vec![Vec::new(); vertex_count];
        let blocks = layout
            .into_iter()
            .enumerate()
            .map(|(b, parts)| {
                for (p, part) in parts.iter().enumerate() {
                    for &v in part {
                        membership[v].push((b, p));
                    }
                }
                let spec = MultipartiteSpec::new(parts.iter().map(Vec::len).collect())?;
                Ok(BlockPlacement { spec, vertex_ids: parts })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { vertex_count, blocks, membership })
    }

    /// The block `spec` alone, with vertices numbered in part order.
    pub fn single(spec: &MultipartiteSpec) -> Self {
        let mut next = 0;
        let parts = spec
            .parts()
            .iter()
            .map(|&n| {
                let ids: Vec<usize> = (next..next + n).collect();
                next += n;
                ids
            })
            .collect();
        Self::new(spec.order(), vec![parts]).expect("a single block is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn blocks(&self) -> &[BlockPlacement] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// `(block, part)` pairs containing `v`; its length is the number of
    /// blocks through `v`.
    pub fn membership(&self, v: usize) -> &[(usize, usize)] {
        &self.membership[v]
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count).filter(|&v| self.membership[v].len() > 1).collect()
    }

    pub fn layout(&self) -> Vec<Vec<Vec<usize>>> {
        self.blocks.iter().map(|b| b.vertex_ids.clone()).collect()
    }

    /// Adjacency lists: `u ~ v` iff they sit in different parts of a block.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for block in &self.blocks {
            for (i, pi) in block.vertex_ids.iter().enumerate() {
                for pj in &block.vertex_ids[i + 1..] {
                    for &u in pi {
                        for &v in pj {
                            adj[u].push(v);
                            adj[v].push(u);
                        }
                    }
                }
            }
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency().iter().map(Vec::len).collect()
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            vertex_count: self.vertex_count,
            blocks: self.blocks.iter().map(|b| BlockFile { parts: b.vertex_ids.clone() }).collect(),
        }
    }

    pub fn from_file(file: GraphFile) -> Result<Self> {
        Self::new(file.vertex_count, file.blocks.into_iter().map(|b| b.parts).collect())
    }
}

/// On-disk graph description:
/// `{"vertex_count": N, "blocks": [{"parts": [[ids...], ...]}, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub vertex_count: usize,
    pub blocks: Vec<BlockFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockFile {
    pub parts: Vec<Vec<usize>>,
}

/// Full report for an already-built graph, including the block-cut tree.
pub fn validate(g: &MultiBlockGraph) -> ValidationReport {
    validate_layout(g.vertex_count, &g.layout())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_triangle_with_pendant() {
        let g = MultiBlockGraph::new(4, vec![vec![vec![0], vec![1], vec![2]], vec![vec![2], vec![3]]]).unwrap();
        let r = validate(&g);
        assert!(r.is_valid());
        assert_eq!(r.cut_vertices, vec![2]);
        assert_eq!(r.block_tree, vec![(0, 2), (1, 2)]);
        assert_eq!(g.membership(2).len(), 2);
    }

    #[test]
    fn rejects_overlap_cycle_and_disconnection() {
        let overlap = validate_layout(3, &[vec![vec![0], vec![1], vec![2]], vec![vec![0], vec![1]]]);
        assert!(overlap.violations.iter().any(|v| matches!(v, Violation::OverlappingBlocks { .. })));

        let triangle_of_edges =
            validate_layout(3, &[vec![vec![0], vec![1]], vec![vec![1], vec![2]], vec![vec![2], vec![0]]]);
        assert!(triangle_of_edges.violations.iter().any(|v| matches!(v, Violation::BlockCycle { .. })));

        let split = validate_layout(4, &[vec![vec![0], vec![1]], vec![vec![2], vec![3]]]);
        assert_eq!(split.violations, vec![Violation::Disconnected { components: 2 }]);

        let bad = validate_layout(3, &[vec![vec![0, 0], vec![5]], vec![vec![1]]]);
        assert!(bad.violations.contains(&Violation::RepeatedVertex { block: 0, vertex: 0 }));
        assert!(bad.violations.contains(&Violation::VertexOutOfRange { block: 0, vertex: 5 }));
        assert!(bad.violations.contains(&Violation::TooFewParts { block: 1, parts: 1 }));
        assert!(bad.violations.contains(&Violation::UncoveredVertex { vertex: 2 }));

        assert!(matches!(MultiBlockGraph::new(0, vec![]), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn single_block_has_no_cut_vertices() {
        let g = MultiBlockGraph::single(&MultipartiteSpec::new(vec![2, 3]).unwrap());
        assert!(g.cut_vertices().is_empty());
        assert_eq!(g.degrees(), vec![3, 3, 2, 2, 2]);
        let back =
            MultiBlockGraph::from_file(serde_json::from_str(&serde_json::to_string(&g.to_file()).unwrap()).unwrap())
                .unwrap();
        assert_eq!(back, g);
    }
}
