use distblock_core::closed_forms::{cof_closed, det_closed, det_cm, identity_suite, invariants};
use distblock_core::exact_linalg::{cofactor_sum, determinant, matrix_from_json, matrix_to_json, ratio, ExactMatrix};
use distblock_core::graph_model::generators::{random_multiblock, RandomGraphConfig};
use distblock_core::graph_model::{bfs_distances, build_multipartite, MultiBlockGraph, MultipartiteSpec};
use distblock_core::singularity_lab::classify;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn parts(max_m: usize, max_part: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=max_part, 2..=max_m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closed_forms_match_oracle(p in parts(5, 5)) {
        let spec = MultipartiteSpec::new(p).unwrap();
        let d = build_multipartite(&spec).into_matrix();
        prop_assert_eq!(determinant(&d).unwrap(), det_closed(&spec));
        prop_assert_eq!(cofactor_sum(&d).unwrap(), cof_closed(&spec));
    }

    #[test]
    fn invariants_are_symmetric(mut p in parts(8, 40)) {
        let before = invariants(&p);
        p.reverse();
        let after = invariants(&p);
        prop_assert_eq!(before.alpha, after.alpha);
        prop_assert_eq!(before.gamma, after.gamma);
        prop_assert_eq!(before.beta, after.beta);
    }

    #[test]
    fn identities_hold(p in parts(9, 30)) {
        prop_assume!(p != [1, 1]);
        identity_suite(&p, 4).unwrap();
    }

    #[test]
    fn cm_determinant_routes_agree(p in prop::collection::vec(1usize..=9, 1..=6)) {
        det_cm(&p).unwrap();
    }

    #[test]
    fn verdict_matches_closed_forms(p in parts(10, 60)) {
        let spec = MultipartiteSpec::new(p).unwrap();
        let v = classify(&spec);
        prop_assert_eq!(v.det.zero, det_closed(&spec).is_zero());
        prop_assert_eq!(v.cof.zero, cof_closed(&spec).is_zero());
    }

    #[test]
    fn matrix_json_round_trip(entries in prop::collection::vec((-50i64..50, 1i64..20), 9)) {
        let m = ExactMatrix::new(3, 3, entries.iter().map(|&(a, b)| ratio(a, b)).collect()).unwrap();
        prop_assert_eq!(matrix_from_json(&matrix_to_json(&m)).unwrap(), m);
    }

    #[test]
    fn graph_file_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_multiblock(&mut rng, &RandomGraphConfig::default(), &|_| true);
        let json = serde_json::to_string(&g.to_file()).unwrap();
        let back = MultiBlockGraph::from_file(serde_json::from_str(&json).unwrap()).unwrap();
        prop_assert_eq!(bfs_distances(&back).unwrap(), bfs_distances(&g).unwrap());
    }
}
