//! Exhaustive and randomized verification suites. Each suite compares a
//! closed form with the exact linear-algebra oracle over a bounded range and
//! collects counterexamples; an empty failure list means the range passed.
//! Instances run in parallel and results come back in input order.

use std::collections::BTreeSet;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::{cof_closed, det_closed, invariants, reciprocal_sum, reciprocal_sum_solution};
use crate::error::Result;
use crate::exact_linalg::{certify_singularity, cofactor_sum, determinant, inverse, rat, ratio};
use crate::graph_model::generators::{nonisomorphic_trees, random_multiblock, tree, RandomGraphConfig};
use crate::graph_model::{
    bfs_distances, block_path_distances, build_multipartite, graham_compose, MultiBlockGraph, MultipartiteSpec,
};
use crate::singularity_lab::{
    classify, compositions_up_to, family_cases, lambda_sign_brute, lambda_single, negative_lambda_classifier,
    negative_lambda_family, sorted_specs, zero_lambda_multiblock, Sign, ZeroLambdaFamily,
};
use crate::spectral::{
    inverse_from_spectral, inverse_single_block, lap_like_single, lapexp_check, mu_single, rank_one_obstruction,
    spectral_multiblock, tree_inverse,
};
use crate::t6_family::{build_t6_tn, det_t6_tn, inverse_t6_tn, inverse_t6_tn_blocks, verify_steps, T6TnSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub failures: Vec<Counterexample>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    fn merge(name: &str, parts: Vec<SuiteReport>) -> Self {
        let mut out = SuiteReport { suite: name.into(), checked: 0, failures: Vec::new() };
        for p in parts {
            out.checked += p.checked;
            out.failures.extend(p.failures);
        }
        out
    }
}

type Check = std::result::Result<(), String>;

fn run<T: Sync>(
    name: &str,
    items: &[T],
    label: impl Fn(&T) -> String + Sync,
    check: impl Fn(&T) -> Check + Sync,
) -> SuiteReport {
    let failures: Vec<Counterexample> = items
        .par_iter()
        .filter_map(|item| check(item).err().map(|detail| Counterexample { instance: label(item), detail }))
        .collect();
    SuiteReport { suite: name.into(), checked: items.len(), failures }
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn specs_up_to(max_total: usize) -> Vec<MultipartiteSpec> {
    compositions_up_to(max_total)
        .into_iter()
        .map(|p| MultipartiteSpec::new(p).expect("compositions have m >= 2"))
        .collect()
}

fn spec_label(s: &MultipartiteSpec) -> String {
    format!("({s})")
}

/// Closed-form cofactor and determinant against the oracle.
pub fn closed_forms_suite(max_total: usize) -> SuiteReport {
    run("closed-forms", &specs_up_to(max_total), spec_label, |s| {
        let d = build_multipartite(s).into_matrix();
        let (det, cof) = (lift(determinant(&d))?, lift(cofactor_sum(&d))?);
        ensure(det == det_closed(s), || format!("det: oracle {det}, closed {}", det_closed(s)))?;
        ensure(cof == cof_closed(s), || format!("cof: oracle {cof}, closed {}", cof_closed(s)))
    })
}

/// Singularity verdicts against the oracle, including witness checks.
pub fn singularity_suite(max_total: usize) -> SuiteReport {
    run("singularity", &specs_up_to(max_total), spec_label, |s| {
        let d = build_multipartite(s).into_matrix();
        let det_zero = lift(determinant(&d))?.is_zero();
        let cof_zero = lift(cofactor_sum(&d))?.is_zero();
        let v = classify(s);
        ensure(v.det.zero == det_zero, || format!("det verdict {} but oracle zero = {det_zero}", v.det.zero))?;
        ensure(v.cof.zero == cof_zero, || format!("cof verdict {} but oracle zero = {cof_zero}", v.cof.zero))?;
        for (what, verdict) in [("det", &v.det), ("cof", &v.cof)] {
            if let Some(w) = &verdict.witness {
                ensure(w.equality_holds() && w.bound_holds, || format!("{what} witness fails: {w:?}"))?;
            }
        }
        Ok(())
    })
}

/// Block-form inverse of a single block against the oracle and the rank-one form.
pub fn single_inverse_suite(max_total: usize) -> SuiteReport {
    let specs: Vec<MultipartiteSpec> =
        specs_up_to(max_total).into_iter().filter(|s| !det_closed(s).is_zero()).collect();
    run("single-block-inverse", &specs, spec_label, |s| {
        let d = build_multipartite(s).into_matrix();
        let closed = lift(inverse_single_block(s))?;
        ensure(lift(closed.mul(&d))?.is_identity(), || "closed inverse times D is not I".into())?;
        ensure(closed == lift(inverse(&d))?, || "closed inverse differs from oracle inverse".into())?;
        if !invariants(s.parts()).gamma.is_zero() {
            let spectral = single_spectral(s)?;
            let rank_one = lift(inverse_from_spectral(&spectral))?;
            ensure(rank_one == closed, || "-L + mu mu^t / lambda differs from block-form inverse".into())?;
        }
        Ok(())
    })
}

fn single_spectral(s: &MultipartiteSpec) -> std::result::Result<crate::spectral::SpectralData, String> {
    Ok(crate::spectral::SpectralData {
        lambda: lift(lambda_single(s))?.lambda,
        mu: lift(mu_single(s))?,
        lap_like: lift(lap_like_single(s))?,
    })
}

/// Left and right LapExp conditions for every block with `gamma != 0`.
pub fn lapexp_single_suite(max_total: usize) -> SuiteReport {
    let specs: Vec<MultipartiteSpec> =
        specs_up_to(max_total).into_iter().filter(|s| !invariants(s.parts()).gamma.is_zero()).collect();
    run("lapexp-single", &specs, spec_label, |s| {
        let d = build_multipartite(s).into_matrix();
        let sd = single_spectral(s)?;
        let report = lift(lapexp_check(&d, &sd.lambda, &sd.mu, &sd.lap_like))?;
        ensure(report.all(), || format!("{report:?}"))
    })
}

fn nonzero_gamma(spec: &MultipartiteSpec) -> bool {
    !invariants(spec.parts()).gamma.is_zero()
}

/// `count` random multi-block graphs whose blocks all have `gamma != 0`;
/// with `require_nonzero_lambda`, graphs with `lambda_G = 0` are redrawn.
pub fn random_graphs(
    seed: u64,
    count: usize,
    max_vertices: usize,
    require_nonzero_lambda: bool,
) -> Vec<MultiBlockGraph> {
    let cfg = RandomGraphConfig { max_vertices, ..RandomGraphConfig::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = random_multiblock(&mut rng, &cfg, &nonzero_gamma);
        if require_nonzero_lambda && spectral_multiblock(&g).map_or(true, |s| s.lambda.is_zero()) {
            continue;
        }
        out.push(g);
    }
    out
}

fn graph_label(g: &MultiBlockGraph) -> String {
    serde_json::to_string(&g.to_file()).expect("graph files serialize")
}

/// LapExp conditions and `SpectralData` invariants on random multi-block graphs.
pub fn lapexp_random_suite(seed: u64, count: usize, max_vertices: usize) -> SuiteReport {
    run("lapexp-random", &random_graphs(seed, count, max_vertices, false), graph_label, |g| {
        let d = lift(bfs_distances(g))?.into_matrix();
        let s = lift(spectral_multiblock(g))?;
        ensure(s.invariants_hold(), || "mu^t 1 = 1, L 1 = 0 or symmetry fails".into())?;
        let report = lift(lapexp_check(&d, &s.lambda, &s.mu, &s.lap_like))?;
        ensure(report.all(), || format!("{report:?}"))
    })
}

/// `-L + mu mu^t / lambda` against the oracle inverse on random graphs.
pub fn multiblock_inverse_suite(seed: u64, count: usize, max_vertices: usize) -> SuiteReport {
    run("multiblock-inverse", &random_graphs(seed, count, max_vertices, true), graph_label, |g| {
        let d = lift(bfs_distances(g))?.into_matrix();
        let closed = lift(inverse_from_spectral(&lift(spectral_multiblock(g))?))?;
        ensure(closed == lift(inverse(&d))?, || "rank-one inverse differs from oracle".into())
    })
}

/// Distance constructions agree, and cofactor/determinant composition
/// matches the oracle on random graphs.
pub fn graph_suite(max_total: usize, seed: u64, count: usize, max_vertices: usize) -> SuiteReport {
    let blocks = run("block-form", &specs_up_to(max_total), spec_label, |s| {
        let g = MultiBlockGraph::single(s);
        ensure(build_multipartite(s) == lift(bfs_distances(&g))?, || "block form differs from BFS".into())
    });
    let cfg = RandomGraphConfig { max_vertices, ..RandomGraphConfig::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs: Vec<MultiBlockGraph> = (0..count).map(|_| random_multiblock(&mut rng, &cfg, &|_| true)).collect();
    let random = run("random-distances", &graphs, graph_label, |g| {
        let d = lift(bfs_distances(g))?;
        ensure(d == lift(block_path_distances(g))?, || "BFS differs from block-path distances".into())?;
        if g.vertex_count() <= 20 {
            let (det, cof) = graham_compose(g);
            let m = d.into_matrix();
            ensure(det == lift(determinant(&m))?, || format!("composed det {det} differs from oracle"))?;
            ensure(cof == lift(cofactor_sum(&m))?, || format!("composed cof {cof} differs from oracle"))?;
        }
        Ok(())
    });
    SuiteReport::merge("graph-model", vec![blocks, random])
}

/// Trees on `2..=max_n` vertices: determinant by composition, by
/// `lambda_G cof D(G)` and by the oracle; inverse by the rank-one form, the
/// tree formula and the oracle.
pub fn tree_suite(max_n: usize) -> SuiteReport {
    let trees: Vec<(usize, Vec<(usize, usize)>)> =
        (2..=max_n).flat_map(|n| nonisomorphic_trees(n).into_iter().map(move |e| (n, e))).collect();
    run(
        "trees",
        &trees,
        |(n, e)| format!("n = {n}, edges {e:?}"),
        |(n, edges)| {
            let g = lift(tree(*n, edges))?;
            let n = *n as i64;
            let expected = rat(if n % 2 == 1 { 1 } else { -1 } * (n - 1)) * rat(2).pow((n - 2) as i32);
            let d = lift(bfs_distances(&g))?.into_matrix();
            let (det, cof) = graham_compose(&g);
            let s = lift(spectral_multiblock(&g))?;
            ensure(det == expected, || format!("composed det {det}, expected {expected}"))?;
            ensure(&s.lambda * &cof == expected, || "lambda cof D differs".into())?;
            ensure(lift(determinant(&d))? == expected, || "oracle det differs".into())?;
            let oracle = lift(inverse(&d))?;
            ensure(lift(inverse_from_spectral(&s))? == oracle, || "rank-one inverse differs".into())?;
            ensure(lift(tree_inverse(&g))? == oracle, || "tree inverse formula differs".into())
        },
    )
}

/// `lambda(T_n) = -2/(n-6)`, `cof D(T_6) = 0`, and the tripartite zero sets.
pub fn tn_constants_suite(max_part: usize) -> SuiteReport {
    let ns: Vec<usize> = (3..=12).collect();
    let lambdas = run(
        "t-n-lambda",
        &ns,
        |n| format!("T_{n}"),
        |&n| {
            let spec = MultipartiteSpec::t(n).map_err(|e| e.to_string())?;
            let d = build_multipartite(&spec).into_matrix();
            let (det, cof) = (lift(determinant(&d))?, lift(cofactor_sum(&d))?);
            if n == 6 {
                return ensure(cof.is_zero() && !det.is_zero(), || format!("T_6: det {det}, cof {cof}"));
            }
            let expected = ratio(-2, n as i64 - 6);
            ensure(det / cof == expected, || "oracle det/cof differs from -2/(n-6)".into())?;
            ensure(lift(lambda_single(&spec))?.lambda == expected, || "closed lambda differs".into())
        },
    );
    let tripartite = sorted_specs(3, max_part);
    let oracle: Vec<(bool, bool)> = tripartite
        .par_iter()
        .map(|s| {
            let d = build_multipartite(s).into_matrix();
            let det = determinant(&d).expect("square");
            let cof = cofactor_sum(&d).expect("square");
            (det.is_zero(), cof.is_zero())
        })
        .collect();
    let is_k22n = |p: &[usize]| p.iter().filter(|&&x| x == 2).count() >= 2;
    let det_set: BTreeSet<String> =
        tripartite.iter().zip(&oracle).filter(|(_, o)| o.0).map(|(s, _)| s.to_string()).collect();
    let cof_set: BTreeSet<String> =
        tripartite.iter().zip(&oracle).filter(|(_, o)| o.1).map(|(s, _)| s.to_string()).collect();
    let want_det: BTreeSet<String> =
        tripartite.iter().filter(|s| is_k22n(s.parts())).map(ToString::to_string).collect();
    let mut want_cof = want_det.clone();
    want_cof.insert("1,1,4".into());
    let mut failures = Vec::new();
    if det_set != want_det {
        failures.push(Counterexample { instance: "tripartite det zero set".into(), detail: format!("{det_set:?}") });
    }
    if cof_set != want_cof {
        failures.push(Counterexample { instance: "tripartite cof zero set".into(), detail: format!("{cof_set:?}") });
    }
    let sets = SuiteReport { suite: "tripartite-zero-sets".into(), checked: tripartite.len(), failures };
    SuiteReport::merge("t-n-constants", vec![lambdas, sets])
}

/// The exact negative-lambda sets for `m = 2..=5` and agreement with the
/// brute-force sign of `beta / gamma`.
pub fn negative_lambda_suite(max_part: usize) -> SuiteReport {
    let ms: Vec<usize> = (2..=5).collect();
    run(
        "negative-lambda",
        &ms,
        |m| format!("m = {m}"),
        |&m| {
            let found = negative_lambda_classifier(m, max_part);
            let brute: Vec<MultipartiteSpec> = sorted_specs(m, max_part)
                .into_iter()
                .filter(|s| lambda_sign_brute(s) == Some(Sign::Negative))
                .collect();
            ensure(found == brute, || format!("classifier {found:?} vs brute force {brute:?}"))?;
            let expected: Vec<MultipartiteSpec> = sorted_specs(m, max_part)
                .into_iter()
                .filter(|s| match (m, s.parts()) {
                    (3, &[1, 1, n]) => n >= 5,
                    // n5 > 4 + 4/(n4 - 4)  <=>  (n4 - 4)(n5 - 4) > 4
                    (5, &[1, 1, 1, a, b]) => a >= 5 && (a - 4) * (b - 4) > 4,
                    _ => false,
                })
                .collect();
            ensure(found == expected, || format!("classifier {found:?} vs expected {expected:?}"))
        },
    )
}

/// The default `lambda = 0` instances.
pub fn zero_lambda_instances() -> Vec<ZeroLambdaFamily> {
    let mut out = Vec::new();
    for x in 1..=3 {
        out.push(ZeroLambdaFamily::PairedT { t3: 1, x, t4: 0, y: 0, t5: 0, z: 0 });
        out.push(ZeroLambdaFamily::PairedT { t3: 0, x: 0, t4: 1, y: x, t5: 0, z: 0 });
        out.push(ZeroLambdaFamily::PairedT { t3: 0, x: 0, t4: 0, y: 0, t5: 1, z: x });
    }
    out.push(ZeroLambdaFamily::PairedT { t3: 2, x: 1, t4: 1, y: 2, t5: 1, z: 3 });
    for m in [1, 3, 4] {
        out.push(ZeroLambdaFamily::CompleteMix { m });
    }
    out
}

/// `lambda_G = 0`, every block has nonzero cofactor, and the assembled
/// distance matrix is singular (certified).
pub fn zero_lambda_suite(instances: &[ZeroLambdaFamily]) -> SuiteReport {
    // Large instances are certified one at a time; the certifier itself is serial.
    let failures: Vec<Counterexample> = instances
        .iter()
        .filter_map(|family| {
            check_zero_lambda(family).err().map(|detail| Counterexample { instance: format!("{family:?}"), detail })
        })
        .collect();
    SuiteReport { suite: "zero-lambda".into(), checked: instances.len(), failures }
}

fn check_zero_lambda(family: &ZeroLambdaFamily) -> Check {
    let g = lift(zero_lambda_multiblock(family))?;
    let s = lift(spectral_multiblock(&g))?;
    ensure(s.lambda.is_zero(), || format!("lambda_G = {}", s.lambda))?;
    for block in g.blocks() {
        let cof = lift(cofactor_sum(build_multipartite(block.spec()).matrix()))?;
        ensure(!cof.is_zero(), || format!("block {} has cof D = 0", block.spec()))?;
    }
    let d = lift(bfs_distances(&g))?.into_matrix();
    ensure(lift(certify_singularity(&d))?.is_singular(), || "distance matrix certified nonsingular".into())?;
    if d.rows() <= 60 {
        ensure(lift(determinant(&d))?.is_zero(), || "oracle determinant nonzero".into())?;
    }
    Ok(())
}

pub const T6_GRID_N: [usize; 7] = [3, 4, 5, 7, 8, 9, 10];

/// Determinant, both inverse constructions, the ten block steps and the
/// rank-one obstruction over `n x b`.
pub fn t6_grid_suite(ns: &[usize], bs: &[usize]) -> SuiteReport {
    let grid: Vec<(usize, usize)> = ns.iter().flat_map(|&n| bs.iter().map(move |&b| (n, b))).collect();
    run(
        "t6-family",
        &grid,
        |(n, b)| format!("n = {n}, b = {b}"),
        |&(n, b)| {
            let spec = lift(T6TnSpec::new(n, b))?;
            let m = build_t6_tn(&spec);
            ensure(m.d == lift(bfs_distances(&spec.graph()))?.into_matrix(), || "D differs from BFS".into())?;
            let det = lift(determinant(&m.d))?;
            ensure(det == det_t6_tn(&spec), || format!("oracle det {det}, closed {}", det_t6_tn(&spec)))?;
            let c = lift(inverse_t6_tn(&spec))?;
            ensure(c == inverse_t6_tn_blocks(&spec), || "the two inverse constructions differ".into())?;
            ensure(lift(m.d.mul(&c))?.is_identity(), || "D C != I".into())?;
            ensure(lift(c.mul(&m.d))?.is_identity(), || "C D != I".into())?;
            let failed: Vec<usize> = verify_steps(&spec).iter().filter(|s| !s.holds).map(|s| s.step).collect();
            ensure(failed.is_empty(), || format!("steps {failed:?} fail"))?;
            ensure(lift(cofactor_sum(&m.d))?.is_zero(), || "cof D != 0".into())?;
            ensure(lift(rank_one_obstruction(&m.d))?, || "not obstructed".into())
        },
    )
}

/// The reciprocal-sum solver for `p <= max_p`, and `seeds` distinct
/// negative-lambda specs for every admissible case with `m <= max_m`.
pub fn solver_suite(max_p: usize, max_m: usize, seeds: u64) -> SuiteReport {
    let pairs: Vec<(usize, usize)> = (1..=max_p).flat_map(|p| (1..=2 * p).map(move |r| (p, r))).collect();
    let solver = run(
        "reciprocal-sum",
        &pairs,
        |(p, r)| format!("p = {p}, r = {r}"),
        |&(p, r)| {
            let q = lift(reciprocal_sum_solution(p, r))?;
            ensure(q.len() == p && q.iter().all(|&x| x > 0), || format!("bad shape {q:?}"))?;
            ensure(reciprocal_sum(&q) == ratio(r as i64, 2), || format!("{q:?} sums to {}", reciprocal_sum(&q)))
        },
    );
    let cases: Vec<(usize, usize)> =
        (5..=max_m).flat_map(|m| family_cases(m).into_iter().map(move |c| (m, c.k))).collect();
    let families = run(
        "negative-lambda-family",
        &cases,
        |(m, k)| format!("m = {m}, k = {k}"),
        |&(m, k)| {
            let mut seen = BTreeSet::new();
            for seed in 0..seeds {
                let spec = lift(negative_lambda_family(m, k, seed))?;
                ensure(spec.m() == m, || format!("{spec} has the wrong number of parts"))?;
                ensure(lambda_sign_brute(&spec) == Some(Sign::Negative), || format!("{spec} is not negative"))?;
                seen.insert(spec.canonical());
            }
            ensure(seen.len() as u64 == seeds, || format!("only {} distinct specs", seen.len()))
        },
    );
    SuiteReport::merge("solvers", vec![solver, families])
}

/// Every suite name accepted by [`run_named`].
pub const SUITES: [&str; 13] = [
    "closed-forms",
    "singularity",
    "single-inverse",
    "lapexp-single",
    "lapexp-random",
    "multiblock-inverse",
    "graph-model",
    "trees",
    "t-n-constants",
    "negative-lambda",
    "zero-lambda",
    "t6-family",
    "solvers",
];

/// Bounds for [`run_named`].
#[derive(Clone, Copy, Debug)]
pub struct SweepBounds {
    pub max_total: usize,
    pub seed: u64,
    pub count: usize,
    pub max_vertices: usize,
}

impl Default for SweepBounds {
    fn default() -> Self {
        Self { max_total: 12, seed: 0, count: 200, max_vertices: 30 }
    }
}

/// Runs one suite by name with the given bounds.
pub fn run_named(name: &str, b: &SweepBounds) -> Option<SuiteReport> {
    Some(match name {
        "closed-forms" => closed_forms_suite(b.max_total),
        "singularity" => singularity_suite(b.max_total),
        "single-inverse" => single_inverse_suite(b.max_total),
        "lapexp-single" => lapexp_single_suite(b.max_total),
        "lapexp-random" => lapexp_random_suite(b.seed, b.count, b.max_vertices),
        "multiblock-inverse" => multiblock_inverse_suite(b.seed, b.count, b.max_vertices),
        "graph-model" => graph_suite(b.max_total, b.seed, b.count, b.max_vertices),
        "trees" => tree_suite(10),
        "t-n-constants" => tn_constants_suite(b.max_total.min(10)),
        "negative-lambda" => negative_lambda_suite(b.max_total),
        "zero-lambda" => zero_lambda_suite(&zero_lambda_instances()),
        "t6-family" => t6_grid_suite(&T6_GRID_N, &[1, 2, 3]),
        "solvers" => solver_suite(12, 9, 50),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::ExactMatrix;

    #[test]
    fn small_bounds_pass() {
        assert!(closed_forms_suite(7).passed());
        assert!(singularity_suite(7).passed());
        assert!(single_inverse_suite(7).passed());
        assert!(lapexp_single_suite(7).passed());
        assert!(lapexp_random_suite(1, 10, 12).passed());
        assert!(multiblock_inverse_suite(2, 10, 12).passed());
        assert!(graph_suite(6, 3, 10, 14).passed());
        assert!(tree_suite(6).passed());
        assert!(tn_constants_suite(5).passed());
        assert!(negative_lambda_suite(7).passed());
        assert!(t6_grid_suite(&[3, 7], &[1, 2]).passed());
        assert!(solver_suite(5, 7, 5).passed());
        let small = [ZeroLambdaFamily::PairedT { t3: 1, x: 1, t4: 0, y: 0, t5: 0, z: 0 }];
        assert!(zero_lambda_suite(&small).passed());
    }

    #[test]
    fn random_graphs_are_reproducible() {
        assert_eq!(random_graphs(9, 5, 20, true), random_graphs(9, 5, 20, true));
    }

    #[test]
    fn unknown_suite() {
        assert!(run_named("nope", &SweepBounds::default()).is_none());
    }

    #[test]
    fn lifted_errors_are_reported() {
        let bad = ExactMatrix::zeros(2, 3);
        assert!(lift(determinant(&bad)).is_err());
    }
}
