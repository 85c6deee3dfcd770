mod args;
mod commands;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::Ctx;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx { argv: std::env::args().skip(1).collect(), opts: cli.global.clone() };
    let start = Instant::now();
    let (result, default_format) = match &cli.command {
        Command::Invariants { spec } => (commands::invariants_cmd(&ctx, spec), Format::Json),
        Command::Classify { specs } => (commands::classify_cmd(&ctx, specs), Format::Jsonl),
        Command::Enumerate { m, max_part, filter } => {
            (commands::enumerate_cmd(&ctx, *m, *max_part, *filter), Format::Jsonl)
        }
        Command::Family { kind, params } => (commands::family_cmd(&ctx, *kind, params), Format::Jsonl),
        Command::Compute { graph, what } => (commands::compute_cmd(&ctx, graph, *what), Format::Json),
        Command::Inverse { graph, method } => (commands::inverse_cmd(&ctx, graph, *method), Format::Json),
        Command::T6 { n, b, emit } => (commands::t6_cmd(&ctx, *n, *b, *emit), Format::Json),
        Command::Sweep { suite, max_total, count } => {
            (commands::sweep_cmd(&ctx, suite, *max_total, *count), Format::Jsonl)
        }
    };
    let mut reports = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {}", e.0);
            return ExitCode::from(2);
        }
    };
    if cli.global.timing {
        let ms = start.elapsed().as_millis() as u64;
        reports.iter_mut().for_each(|r| r.timing_ms = Some(ms));
    }
    let mut out = std::io::stdout().lock();
    if let Err(e) = report::write_reports(&mut out, &reports, cli.global.format.unwrap_or(default_format)) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match first_counterexample(&reports) {
        Some(first) => {
            eprintln!("verification failed: {first}");
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}

fn first_counterexample(reports: &[report::RunReport]) -> Option<String> {
    let bad = reports.iter().find(|r| r.failed())?;
    Some(serde_json::to_string(&bad.counterexample).expect("values serialize"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use report::RunReport;
    use serde_json::Value;

    #[test]
    fn failure_reports_the_earliest_counterexample() {
        let mut ok = RunReport::new(&[], &Value::Null);
        ok.verdict("fine", true, || Value::Null);
        let mut bad = RunReport::new(&[], &Value::Null);
        bad.verdict("broken", false, || "2,2,5".into());
        assert_eq!(first_counterexample(&[ok.clone()]), None);
        let first = first_counterexample(&[ok, bad]).unwrap();
        assert!(first.contains("broken") && first.contains("2,2,5"));
    }
}
