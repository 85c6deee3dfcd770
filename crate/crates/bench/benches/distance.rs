use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use distblock_bench::{block, block_matrix, distance_matrix, path_graph, star};
use distblock_core::closed_forms::det_closed;
use distblock_core::exact_linalg::{certify_singularity, determinant, inverse};
use distblock_core::graph_model::graham_compose;
use distblock_core::singularity_lab::{zero_lambda_multiblock, ZeroLambdaFamily};
use distblock_core::spectral::inverse_multiblock;
use distblock_core::t6_family::{inverse_t6_tn, T6TnSpec};

fn determinants(c: &mut Criterion) {
    let mut g = c.benchmark_group("determinant");
    for parts in [vec![2, 3, 5], vec![3, 4, 5, 6], vec![4, 5, 6, 7, 8]] {
        let label = format!("{parts:?}");
        let d = block_matrix(&parts);
        let spec = block(&parts);
        g.bench_with_input(BenchmarkId::new("bareiss", &label), &d, |b, d| b.iter(|| determinant(black_box(d))));
        g.bench_with_input(BenchmarkId::new("closed", &label), &spec, |b, s| b.iter(|| det_closed(black_box(s))));
    }
    let tree = path_graph(40);
    g.bench_function("compose/path40", |b| b.iter(|| graham_compose(black_box(&tree))));
    g.finish();
}

fn inverses(c: &mut Criterion) {
    let mut g = c.benchmark_group("inverse");
    g.sample_size(20);
    for copies in [2, 4, 8] {
        let graph = star(&[1, 2, 3], copies);
        let d = distance_matrix(&graph);
        g.bench_with_input(BenchmarkId::new("oracle", copies), &d, |b, d| b.iter(|| inverse(black_box(d))));
        g.bench_with_input(BenchmarkId::new("rank-one", copies), &graph, |b, gr| {
            b.iter(|| inverse_multiblock(black_box(gr)))
        });
    }
    for (n, copies) in [(7, 1), (7, 3), (10, 3)] {
        let spec = T6TnSpec::new(n, copies).expect("valid family member");
        g.bench_with_input(BenchmarkId::new("t6-closed", format!("{n}x{copies}")), &spec, |b, s| {
            b.iter(|| inverse_t6_tn(black_box(s)))
        });
    }
    g.finish();
}

fn singularity(c: &mut Criterion) {
    let mut g = c.benchmark_group("certify");
    g.sample_size(10);
    let graph = zero_lambda_multiblock(&ZeroLambdaFamily::CompleteMix { m: 1 }).expect("lambda = 0 family");
    let d = distance_matrix(&graph);
    g.bench_function("complete-mix-1", |b| b.iter(|| certify_singularity(black_box(&d))));
    g.finish();
}

criterion_group!(benches, determinants, inverses, singularity);
criterion_main!(benches);
