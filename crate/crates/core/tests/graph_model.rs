use distblock_core::graph_model::generators::star_of_blocks;
use distblock_core::graph_model::{parse_graph_source, validate};
use distblock_core::sweep;
use distblock_core::t6_family::T6TnSpec;
use distblock_core::MultipartiteSpec;

#[test]
fn distance_constructions_agree_on_wider_sample() {
    let r = sweep::graph_suite(10, 17, 120, 30);
    assert!(r.passed(), "{:?}", r.failures.first());
}

#[test]
fn sources_parse_to_valid_graphs() {
    for src in ["tree:0-1,1-2,1-3", "star_of_blocks:1,1,4x3", "t6_tn:7,2", "block:2,3,3"] {
        let g = parse_graph_source(src).unwrap();
        assert!(validate(&g).is_valid(), "{src}");
    }
    assert!(parse_graph_source("t6_tn:6,1").is_err());
    assert!(parse_graph_source("tree:0-1,2-3").is_err());
}

#[test]
fn star_shares_only_the_center() {
    let spec: MultipartiteSpec = "2,3".parse().unwrap();
    let g = star_of_blocks(&spec, 4).unwrap();
    assert_eq!(g.vertex_count(), 1 + 4 * 4);
    assert_eq!(g.cut_vertices(), vec![0]);
}

#[test]
fn t6_family_cuts_at_the_center() {
    let spec = T6TnSpec::new(5, 3).unwrap();
    let g = spec.graph();
    assert_eq!(g.cut_vertices(), vec![spec.center()]);
    assert_eq!(g.block_count(), 4);
}
