// Runs without the libtest harness so the per-criterion lines always print.

use distblock_core::sweep::{self, SuiteReport, T6_GRID_N};

fn report(criterion: usize, name: &str, parts: Vec<SuiteReport>) -> bool {
    let checked: usize = parts.iter().map(|p| p.checked).sum();
    let first = parts.iter().flat_map(|p| p.failures.iter()).next();
    let ok = first.is_none() && parts.iter().all(SuiteReport::passed);
    let status = if ok { "PASS" } else { "FAIL" };
    println!("criterion {criterion:>2} {status} {name} ({checked} checked)");
    if let Some(c) = first {
        println!("    first counterexample: {} :: {}", c.instance, c.detail);
    }
    ok
}

fn main() {
    let results = [
        report(1, "closed-form cof and det, total <= 12", vec![sweep::closed_forms_suite(12)]),
        report(2, "singularity verdicts, total <= 12", vec![sweep::singularity_suite(12)]),
        report(3, "single-block inverse", vec![sweep::single_inverse_suite(12)]),
        report(
            4,
            "lapexp conditions, blocks and 200 random graphs",
            vec![sweep::lapexp_single_suite(12), sweep::lapexp_random_suite(0, 200, 30)],
        ),
        report(5, "multi-block inverse on random graphs", vec![sweep::multiblock_inverse_suite(0, 200, 30)]),
        report(6, "trees up to 10 vertices", vec![sweep::tree_suite(10)]),
        report(7, "T_n constants and tripartite zero sets", vec![sweep::tn_constants_suite(10)]),
        report(8, "negative lambda for m <= 5", vec![sweep::negative_lambda_suite(12)]),
        report(9, "lambda = 0 multi-block families", vec![sweep::zero_lambda_suite(&sweep::zero_lambda_instances())]),
        report(10, "T6 with n pendant T_n blocks", vec![sweep::t6_grid_suite(&T6_GRID_N, &[1, 2, 3])]),
        report(11, "reciprocal-sum solver and negative-lambda families", vec![sweep::solver_suite(12, 9, 50)]),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
