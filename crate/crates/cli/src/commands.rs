use std::collections::BTreeSet;

use distblock_core::closed_forms::{cof_closed, det_closed, det_cm, invariants};
use distblock_core::exact_linalg::{
    certify_singularity, cofactor_sum, determinant, format_rational, inverse, matrix_to_json, vector_to_json,
    ExactMatrix, Rational,
};
use distblock_core::graph_model::{bfs_distances, build_multipartite, graham_compose, parse_graph_source};
use distblock_core::singularity_lab::{
    classify, family_cases, lambda_sign_brute, lambda_single, negative_lambda_classifier, negative_lambda_family,
    sorted_specs, zero_lambda_multiblock, Sign, ZeroLambdaFamily,
};
use distblock_core::spectral::{inverse_multiblock, lapexp_check, rank_one_obstruction, spectral_multiblock};
use distblock_core::sweep::{self, SweepBounds};
use distblock_core::t6_family::{build_t6_tn, det_t6_tn, inverse_t6_tn, inverse_t6_tn_blocks, verify_steps, T6TnSpec};
use distblock_core::{MultiBlockGraph, MultipartiteSpec};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::args::{Emit, FamilyKind, Filter, GlobalOpts, Method, What};
use crate::report::RunReport;

/// Input problems, unmet preconditions and exceeded budgets; exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub type Reports = Result<Vec<RunReport>, InputError>;

pub const DEFAULT_ORACLE_BUDGET: usize = 64;

pub struct Ctx {
    pub argv: Vec<String>,
    pub opts: GlobalOpts,
}

impl Ctx {
    fn report(&self, inputs: Value) -> RunReport {
        RunReport::new(&self.argv, &inputs)
    }

    fn budget(&self) -> usize {
        self.opts.max_vertices.unwrap_or(DEFAULT_ORACLE_BUDGET)
    }

    fn oracle_budget(&self, n: usize) -> Result<(), InputError> {
        if n > self.budget() {
            return Err(InputError(format!(
                "budget exceeded: oracle on {n} vertices, --max-vertices is {}",
                self.budget()
            )));
        }
        Ok(())
    }
}

fn r(x: &Rational) -> Value {
    format_rational(x).into()
}

fn parse_spec(s: &str) -> Result<MultipartiteSpec, InputError> {
    Ok(s.parse::<MultipartiteSpec>()?)
}

pub fn invariants_cmd(ctx: &Ctx, spec: &str) -> Reports {
    let spec = parse_spec(spec)?;
    let mut rep = ctx.report(json!({ "command": "invariants", "spec": spec.to_string() }));
    let inv = invariants(spec.parts());
    rep.output("spec", spec.to_string())
        .output("alpha", inv.alpha.to_string())
        .output("beta", inv.beta.to_string())
        .output("gamma", inv.gamma.to_string())
        .output("cof", r(&cof_closed(&spec)))
        .output("det", r(&det_closed(&spec)))
        .output("lambda", inv.lambda().map_or(Value::Null, |l| r(&l)))
        .output("det_cm", r(&det_cm(spec.parts())?));
    if ctx.opts.verify {
        ctx.oracle_budget(spec.order())?;
        let d = build_multipartite(&spec).into_matrix();
        let (det, cof) = (determinant(&d)?, cofactor_sum(&d)?);
        rep.verdict("det_matches_oracle", det == det_closed(&spec), || json!({ "oracle": r(&det) }));
        rep.verdict("cof_matches_oracle", cof == cof_closed(&spec), || json!({ "oracle": r(&cof) }));
    }
    Ok(vec![rep])
}

fn oracle_zeros(spec: &MultipartiteSpec) -> Result<(bool, bool), InputError> {
    let d = build_multipartite(spec).into_matrix();
    Ok((determinant(&d)?.is_zero(), cofactor_sum(&d)?.is_zero()))
}

pub fn classify_cmd(ctx: &Ctx, specs: &[String]) -> Reports {
    specs
        .iter()
        .map(|s| {
            let spec = parse_spec(s)?;
            let mut rep = ctx.report(json!({ "command": "classify", "spec": spec.to_string() }));
            let v = classify(&spec);
            rep.output("spec", spec.to_string()).output("verdict", serde_json::to_value(&v)?);
            if ctx.opts.verify {
                ctx.oracle_budget(spec.order())?;
                let (det0, cof0) = oracle_zeros(&spec)?;
                rep.verdict("det_verdict_matches_oracle", v.det.zero == det0, || spec.to_string().into());
                rep.verdict("cof_verdict_matches_oracle", v.cof.zero == cof0, || spec.to_string().into());
            }
            Ok(rep)
        })
        .collect()
}

fn oracle_lambda(spec: &MultipartiteSpec) -> Result<Option<Rational>, InputError> {
    let d = build_multipartite(spec).into_matrix();
    let cof = cofactor_sum(&d)?;
    Ok((!cof.is_zero()).then(|| determinant(&d).map(|det| det / cof)).transpose()?)
}

pub fn enumerate_cmd(ctx: &Ctx, m: usize, max_part: usize, filter: Filter) -> Reports {
    if m < 2 || max_part == 0 {
        return Err(InputError("enumerate needs m >= 2 and --max-part >= 1".into()));
    }
    let all = sorted_specs(m, max_part);
    let selected: Vec<MultipartiteSpec> = match filter {
        Filter::Det0 => all.iter().filter(|s| classify(s).det.zero).cloned().collect(),
        Filter::Cof0 => all.iter().filter(|s| classify(s).cof.zero).cloned().collect(),
        Filter::Lneg => negative_lambda_classifier(m, max_part),
    };
    let filter_name = format!("{filter:?}").to_lowercase();
    let mut reports: Vec<RunReport> = selected
        .iter()
        .map(|s| {
            let mut rep = ctx.report(json!({ "command": "enumerate", "filter": filter_name, "spec": s.to_string() }));
            rep.output("spec", s.to_string());
            if filter == Filter::Lneg {
                let lambda = lambda_single(s).map(|l| l.lambda)?;
                rep.output("lambda", r(&lambda));
            }
            Ok(rep)
        })
        .collect::<Result<_, InputError>>()?;
    if ctx.opts.verify {
        ctx.oracle_budget(m * max_part)?;
        let mut expected = BTreeSet::new();
        for s in &all {
            let hit = match filter {
                Filter::Det0 => oracle_zeros(s)?.0,
                Filter::Cof0 => oracle_zeros(s)?.1,
                Filter::Lneg => oracle_lambda(s)?.is_some_and(|l| l < Rational::zero()),
            };
            if hit {
                expected.insert(s.to_string());
            }
        }
        let found: BTreeSet<String> = selected.iter().map(ToString::to_string).collect();
        for (rep, s) in reports.iter_mut().zip(&selected) {
            let key = s.to_string();
            rep.verdict("oracle_agrees", expected.contains(&key), || key.clone().into());
        }
        let mut summary =
            ctx.report(json!({ "command": "enumerate", "filter": filter_name, "m": m, "max_part": max_part }));
        summary.output("candidates", all.len()).output("selected", found.len());
        summary.verdict("set_matches_oracle", found == expected, || {
            json!({
                "missing": expected.difference(&found).collect::<Vec<_>>(),
                "extra": found.difference(&expected).collect::<Vec<_>>(),
            })
        });
        reports.push(summary);
    }
    Ok(reports)
}

fn params_object(params: &str) -> Result<serde_json::Map<String, Value>, InputError> {
    match serde_json::from_str::<Value>(params)? {
        Value::Object(map) => Ok(map),
        _ => Err(InputError("--params must be a JSON object".into())),
    }
}

fn param(map: &serde_json::Map<String, Value>, key: &str) -> Result<Option<u64>, InputError> {
    map.get(key)
        .map(|v| v.as_u64().ok_or_else(|| InputError(format!("parameter {key} must be a non-negative integer"))))
        .transpose()
}

pub fn family_cmd(ctx: &Ctx, kind: FamilyKind, params: &str) -> Reports {
    let mut map = params_object(params)?;
    match kind {
        FamilyKind::NegativeLambda => negative_family(ctx, &map),
        FamilyKind::PairedT | FamilyKind::CompleteMix => {
            let tag = if kind == FamilyKind::PairedT { "paired-t" } else { "complete-mix" };
            if kind == FamilyKind::PairedT {
                for key in ["t3", "x", "t4", "y", "t5", "z"] {
                    map.entry(key).or_insert(0.into());
                }
            }
            map.insert("kind".into(), tag.into());
            let family: ZeroLambdaFamily = serde_json::from_value(Value::Object(map))?;
            zero_family(ctx, &family)
        }
    }
}

fn zero_family(ctx: &Ctx, family: &ZeroLambdaFamily) -> Reports {
    let mut rep = ctx.report(json!({ "command": "family", "family": family }));
    let g = zero_lambda_multiblock(family)?;
    let blocks = family.blocks()?;
    rep.output("family", serde_json::to_value(family)?)
        .output("blocks", blocks.iter().map(ToString::to_string).collect::<Vec<_>>())
        .output("vertex_count", g.vertex_count())
        .output("lambda", "0");
    if ctx.opts.verify {
        let s = spectral_multiblock(&g)?;
        rep.verdict("lambda_is_zero", s.lambda.is_zero(), || r(&s.lambda));
        for b in &blocks {
            let cof = cofactor_sum(build_multipartite(b).matrix())?;
            rep.verdict("block_cofactors_nonzero", !cof.is_zero(), || b.to_string().into());
        }
        let d = bfs_distances(&g)?.into_matrix();
        let cert = certify_singularity(&d)?;
        rep.verdict("certified_singular", cert.is_singular(), || json!(format!("{cert:?}")));
        if g.vertex_count() <= ctx.budget() {
            let det = determinant(&d)?;
            rep.verdict("oracle_det_zero", det.is_zero(), || r(&det));
        }
    }
    Ok(vec![rep])
}

fn negative_family(ctx: &Ctx, map: &serde_json::Map<String, Value>) -> Reports {
    let need = |key| param(map, key)?.ok_or_else(|| InputError(format!("negative-lambda needs parameter {key}")));
    let m = need("m")? as usize;
    let k = need("k")? as usize;
    let seed = param(map, "seed")?.unwrap_or(ctx.opts.seed);
    let spec = negative_lambda_family(m, k, seed)?;
    let case = family_cases(m).into_iter().find(|c| c.k == k);
    let mut rep = ctx.report(json!({ "command": "family", "kind": "negative-lambda", "m": m, "k": k, "seed": seed }));
    let lambda = lambda_single(&spec)?.lambda;
    rep.output("spec", spec.to_string()).output("case", serde_json::to_value(case)?).output("lambda", r(&lambda));
    if ctx.opts.verify {
        rep.verdict("lambda_negative", lambda_sign_brute(&spec) == Some(Sign::Negative), || spec.to_string().into());
        if spec.order() <= ctx.budget() {
            let oracle = oracle_lambda(&spec)?;
            rep.verdict("lambda_matches_oracle", oracle.as_ref() == Some(&lambda), || {
                oracle.as_ref().map_or(Value::Null, r)
            });
        }
    }
    Ok(vec![rep])
}

struct Resolved {
    graph: MultiBlockGraph,
    t6: Option<T6TnSpec>,
}

fn resolve(source: &str) -> Result<Resolved, InputError> {
    let graph = parse_graph_source(source)?;
    let t6 = match source.trim().strip_prefix("t6_tn:") {
        Some(rest) => {
            let (n, b) = rest.split_once(',').ok_or_else(|| InputError(format!("bad t6_tn source {source:?}")))?;
            Some(T6TnSpec::new(n.trim().parse()?, b.trim().parse()?)?)
        }
        None => None,
    };
    Ok(Resolved { graph, t6 })
}

fn closed_inverse(g: &Resolved) -> Result<ExactMatrix, InputError> {
    Ok(match &g.t6 {
        Some(spec) => inverse_t6_tn(spec)?,
        None => inverse_multiblock(&g.graph)?,
    })
}

fn oracle_matrix(ctx: &Ctx, g: &MultiBlockGraph) -> Result<ExactMatrix, InputError> {
    ctx.oracle_budget(g.vertex_count())?;
    Ok(bfs_distances(g)?.into_matrix())
}

pub fn compute_cmd(ctx: &Ctx, source: &str, what: What) -> Reports {
    let g = resolve(source)?;
    let what_name = format!("{what:?}").to_lowercase();
    let mut rep = ctx.report(json!({ "command": "compute", "graph": g.graph.to_file(), "what": what_name }));
    rep.output("vertex_count", g.graph.vertex_count());
    match what {
        What::Det | What::Cof => {
            let (det, cof) = graham_compose(&g.graph);
            let closed = match (&g.t6, what) {
                (Some(spec), What::Det) => det_t6_tn(spec),
                (_, What::Det) => det,
                _ => cof,
            };
            rep.output(&what_name, r(&closed));
            if ctx.opts.verify {
                let d = oracle_matrix(ctx, &g.graph)?;
                let oracle = if what == What::Det { determinant(&d)? } else { cofactor_sum(&d)? };
                rep.verdict("matches_oracle", oracle == closed, || json!({ "oracle": r(&oracle) }));
            }
        }
        What::Lambda => {
            let s = spectral_multiblock(&g.graph)?;
            rep.output("lambda", r(&s.lambda));
            if ctx.opts.verify {
                let d = oracle_matrix(ctx, &g.graph)?;
                let (det, cof) = (determinant(&d)?, cofactor_sum(&d)?);
                let ok = !cof.is_zero() && &det / &cof == s.lambda;
                rep.verdict("matches_oracle", ok, || json!({ "det": r(&det), "cof": r(&cof) }));
            }
        }
        What::Mu => {
            let s = spectral_multiblock(&g.graph)?;
            rep.output("lambda", r(&s.lambda)).output("mu", vector_to_json(&s.mu));
            if ctx.opts.verify {
                let d = oracle_matrix(ctx, &g.graph)?;
                let lx = lapexp_check(&d, &s.lambda, &s.mu, &s.lap_like)?;
                for (side, v) in [("left", lx.left), ("right", lx.right)] {
                    rep.verdict(&format!("{side}_mu_sums_to_one"), v.mu_sums_to_one, || side.into());
                    rep.verdict(&format!("{side}_lap_annihilates_ones"), v.lap_annihilates_ones, || side.into());
                    rep.verdict(&format!("{side}_mu_eigen"), v.mu_eigen, || side.into());
                    rep.verdict(&format!("{side}_lap_identity"), v.lap_identity, || side.into());
                }
            }
        }
        What::Inverse => {
            let closed = closed_inverse(&g)?;
            rep.output("inverse", matrix_to_json(&closed));
            if ctx.opts.verify {
                let oracle = inverse(&oracle_matrix(ctx, &g.graph)?)?;
                rep.verdict("matches_oracle", oracle == closed, || matrix_to_json(&oracle));
            }
        }
    }
    Ok(vec![rep])
}

pub fn inverse_cmd(ctx: &Ctx, source: &str, method: Method) -> Reports {
    let g = resolve(source)?;
    let method_name = format!("{method:?}").to_lowercase();
    let mut rep = ctx.report(json!({ "command": "inverse", "graph": g.graph.to_file(), "method": method_name }));
    let closed = (method != Method::Oracle).then(|| closed_inverse(&g)).transpose()?;
    let compare = method == Method::Both || (ctx.opts.verify && method == Method::Closed);
    let oracle = (method == Method::Oracle || compare)
        .then(|| oracle_matrix(ctx, &g.graph).and_then(|d| Ok(inverse(&d)?)))
        .transpose()?;
    let shown = closed.as_ref().or(oracle.as_ref()).expect("one method ran");
    rep.output("vertex_count", g.graph.vertex_count()).output("inverse", matrix_to_json(shown));
    if let (Some(c), Some(o)) = (&closed, &oracle) {
        rep.verdict("closed_equals_oracle", c == o, || matrix_to_json(o));
    }
    Ok(vec![rep])
}

pub fn t6_cmd(ctx: &Ctx, n: usize, b: usize, emit: Option<Emit>) -> Reports {
    let spec = T6TnSpec::new(n, b)?;
    let mut rep = ctx.report(json!({ "command": "t6", "n": n, "b": b }));
    rep.output("n", n)
        .output("b", b)
        .output("vertex_count", spec.vertex_count())
        .output("center", spec.center())
        .output("det", r(&det_t6_tn(&spec)));
    let mats = build_t6_tn(&spec);
    let c = inverse_t6_tn(&spec)?;
    if let Some(e) = emit {
        let m = match e {
            Emit::D => &mats.d,
            Emit::L => &mats.l,
            Emit::R => &mats.r,
            Emit::C => &c,
        };
        rep.output(&format!("{e:?}"), matrix_to_json(m));
    }
    if ctx.opts.verify {
        ctx.oracle_budget(spec.vertex_count())?;
        let bfs = bfs_distances(&spec.graph())?.into_matrix();
        rep.verdict("d_matches_bfs", bfs == mats.d, || "D".into());
        let det = determinant(&mats.d)?;
        rep.verdict("det_matches_oracle", det == det_t6_tn(&spec), || r(&det));
        rep.verdict("dc_is_identity", mats.d.mul(&c)?.is_identity(), || "D C".into());
        rep.verdict("cd_is_identity", c.mul(&mats.d)?.is_identity(), || "C D".into());
        rep.verdict("block_form_agrees", inverse_t6_tn_blocks(&spec) == c, || "C".into());
        for step in verify_steps(&spec).into_iter().filter(|s| s.applicable) {
            rep.verdict(&format!("step_{:02}", step.step), step.holds, || json!(step.step));
        }
        rep.verdict("rank_one_obstructed", rank_one_obstruction(&mats.d)?, || "1^t D^-1 1".into());
    }
    Ok(vec![rep])
}

pub fn sweep_cmd(ctx: &Ctx, suite: &str, max_total: usize, count: usize) -> Reports {
    let names: Vec<&str> = if suite == "all" { sweep::SUITES.to_vec() } else { vec![suite] };
    let bounds =
        SweepBounds { max_total, seed: ctx.opts.seed, count, max_vertices: ctx.opts.max_vertices.unwrap_or(30) };
    if max_total > 16 || bounds.max_vertices > 60 || count > 10_000 {
        return Err(InputError(
            "budget exceeded: sweeps allow --max-total <= 16, --max-vertices <= 60, --count <= 10000".into(),
        ));
    }
    names
        .into_iter()
        .map(|name| {
            let report = sweep::run_named(name, &bounds).ok_or_else(|| {
                InputError(format!("unknown suite {name:?}; expected one of {} or all", sweep::SUITES.join(", ")))
            })?;
            let mut rep = ctx.report(json!({
                "command": "sweep", "suite": name, "max_total": max_total, "seed": bounds.seed,
                "count": count, "max_vertices": bounds.max_vertices,
            }));
            rep.output("suite", name).output("checked", report.checked).output("failures", report.failures.len());
            rep.verdict("passed", report.passed(), || {
                serde_json::to_value(report.failures.first()).unwrap_or_default()
            });
            Ok(rep)
        })
        .collect()
}
