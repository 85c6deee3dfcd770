//! Textual graph descriptions accepted on the command line.

use std::path::Path;

use super::generators::{star_of_blocks, tree};
use super::graph::{GraphFile, MultiBlockGraph};
use super::spec::MultipartiteSpec;
use crate::error::{Error, Result};
use crate::t6_family::T6TnSpec;

/// Parses one of
///
/// * `tree:0-1,1-2,1-3` (edge list; vertex count is the largest id + 1)
/// * `star_of_blocks:1,1,5x3` (`b` copies of a spec on a common vertex)
/// * `t6_tn:7,2` (one `T_6` and `b` copies of `T_n` on a central vertex)
/// * `block:2,3,4` (a single multipartite block)
/// * inline JSON starting with `{`
/// * otherwise, a path to a JSON graph file.
pub fn parse_graph_source(source: &str) -> Result<MultiBlockGraph> {
    let s = source.trim();
    if let Some(rest) = s.strip_prefix("tree:") {
        let mut edges = Vec::new();
        for e in rest.split(',').filter(|e| !e.trim().is_empty()) {
            let (u, v) =
                e.split_once('-').ok_or_else(|| Error::Parse(format!("tree edge {e:?} is not of the form u-v")))?;
            let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex id {x:?}")));
            edges.push((parse(u)?, parse(v)?));
        }
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
        return tree(n, &edges);
    }
    if let Some(rest) = s.strip_prefix("star_of_blocks:") {
        let (spec, b) =
            rest.rsplit_once('x').ok_or_else(|| Error::Parse(format!("expected <spec>x<b>, got {rest:?}")))?;
        let b: usize = b.trim().parse().map_err(|_| Error::Parse(format!("bad block count {b:?}")))?;
        return star_of_blocks(&spec.parse::<MultipartiteSpec>()?, b);
    }
    if let Some(rest) = s.strip_prefix("t6_tn:") {
        let (n, b) = rest.split_once(',').ok_or_else(|| Error::Parse(format!("expected <n>,<b>, got {rest:?}")))?;
        let n = n.trim().parse().map_err(|_| Error::Parse(format!("bad n {n:?}")))?;
        let b = b.trim().parse().map_err(|_| Error::Parse(format!("bad b {b:?}")))?;
        return Ok(T6TnSpec::new(n, b)?.graph());
    }
    if let Some(rest) = s.strip_prefix("block:") {
        return Ok(MultiBlockGraph::single(&rest.parse()?));
    }
    let text = if s.starts_with('{') {
        s.to_owned()
    } else {
        std::fs::read_to_string(Path::new(s)).map_err(|e| Error::Parse(format!("cannot read graph file {s:?}: {e}")))?
    };
    let file: GraphFile = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("invalid graph JSON: {e}")))?;
    MultiBlockGraph::from_file(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortcuts() {
        assert_eq!(parse_graph_source("tree:0-1,1-2").unwrap().block_count(), 2);
        let star = parse_graph_source("star_of_blocks:1,1,5x3").unwrap();
        assert_eq!(star.vertex_count(), 19);
        assert_eq!(parse_graph_source("t6_tn:7,1").unwrap().vertex_count(), 12);
        assert_eq!(parse_graph_source("block:2,3").unwrap().vertex_count(), 5);
        let inline = parse_graph_source(r#"{"vertex_count": 3, "blocks": [{"parts": [[0],[1],[2]]}]}"#).unwrap();
        assert_eq!(inline.block_count(), 1);
        assert!(parse_graph_source("tree:0-1,2-3").is_err());
        assert!(parse_graph_source("/nonexistent/graph.json").is_err());
        assert!(parse_graph_source("t6_tn:6,1").is_err());
    }
}
