//! CLI entry point: `verify`, `eval`, and `gen`.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use harness::gen::{
    gen_bordism, gen_chain, gen_config, gen_cyclic_map, gen_injective_chain, gen_object,
};
use harness::{default_trials, run_suite, trial_rng, Params, Report, SUITE_NAMES};
use serde_json::json;

#[derive(Parser)]
#[command(name = "harness", about = "Seeded verification suites for cob1", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite (or `all`) and report failures.
    Verify {
        /// Suite name, or `all`.
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Trials to run; defaults to the suite's standard count.
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long, default_value_t = 8)]
        max_points: usize,
        /// Restrict suites that sample a cocycle degree to this k.
        #[arg(long)]
        k: Option<usize>,
        /// Print the report as JSON instead of human-readable text.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a cochain or functor on a JSON input file.
    Eval {
        /// One of: alpha, beta, gamma, igusa, reduced-sign, averaged-sign,
        /// compose, compose-reduced, to-bordism, from-bordism, lambda-to-u.
        what: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Generate a random instance of the given kind as JSON.
    Gen {
        /// One of: object, bordism, chain, cyclic-map, injective-chain,
        /// config.
        kind: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        max_points: usize,
        #[arg(long, default_value_t = 0)]
        degree: i64,
        #[arg(long, default_value_t = 2)]
        length: usize,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        labels: usize,
        #[arg(long)]
        reduced: bool,
    },
}

fn print_report(report: &Report, elapsed: std::time::Duration, as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_string_pretty(report).unwrap());
        return;
    }
    let status = if report.passed() { "ok" } else { "FAILED" };
    println!(
        "{:<24} seed {:<4} {:>5} trials  {:>3} failures  {:>8.2?}  {status}",
        report.suite,
        report.seed,
        report.trials,
        report.failures.len(),
        elapsed,
    );
    for failure in &report.failures {
        println!("  trial {}: {} != {}", failure.trial, failure.lhs, failure.rhs);
        println!("    counterexample: {}", failure.counterexample);
    }
}

fn verify(
    suite: &str,
    seed: u64,
    trials: Option<u64>,
    params: &Params,
    as_json: bool,
) -> Result<bool, String> {
    let names: Vec<&str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else if SUITE_NAMES.contains(&suite) {
        vec![suite]
    } else {
        return Err(format!("unknown suite {suite:?}"));
    };
    let mut all_passed = true;
    for name in names {
        let start = Instant::now();
        let report = run_suite(name, params, seed, trials.unwrap_or_else(|| default_trials(name)))?;
        print_report(&report, start.elapsed(), as_json);
        all_passed &= report.passed();
    }
    Ok(all_passed)
}

fn generate(kind: &str, args: &Command) -> Result<serde_json::Value, String> {
    let Command::Gen { seed, max_points, degree, length, k, labels, reduced, .. } = args else {
        unreachable!()
    };
    let mut rng = trial_rng(*seed, kind, 0);
    let value = match kind {
        "object" => json!(gen_object(&mut rng, *degree, *max_points)),
        "bordism" => {
            let source = gen_object(&mut rng, *degree, *max_points);
            let target = gen_object(&mut rng, *degree, *max_points);
            json!(gen_bordism(&mut rng, &source, &target, *reduced))
        }
        "chain" => json!(gen_chain(&mut rng, *length, 0, 0, *max_points, *reduced)),
        "cyclic-map" => json!(gen_cyclic_map(&mut rng, (*max_points).max(1))),
        "injective-chain" => json!(gen_injective_chain(&mut rng, *k, (*max_points).max(1))),
        "config" => json!(gen_config(&mut rng, *labels, *max_points + *labels)),
        other => return Err(format!("unknown kind {other:?}")),
    };
    Ok(value)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify { suite, seed, trials, max_points, k, json } => {
            let params = Params { max_points: *max_points, k: *k };
            match verify(suite, *seed, *trials, &params, *json) {
                Ok(true) => ExitCode::SUCCESS,
                Ok(false) => ExitCode::from(1),
                Err(message) => {
                    eprintln!("error: {message}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Eval { what, input, k } => {
            let result = std::fs::read_to_string(input)
                .map_err(|e| format!("cannot read {}: {e}", input.display()))
                .and_then(|text| {
                    serde_json::from_str(&text).map_err(|e| format!("invalid JSON: {e}"))
                })
                .and_then(|value| harness::eval::eval(what, &value, *k));
            match result {
                Ok(value) => {
                    println!("{}", serde_json::to_string_pretty(&value).unwrap());
                    ExitCode::SUCCESS
                }
                Err(message) => {
                    eprintln!("error: {message}");
                    ExitCode::from(2)
                }
            }
        }
        Command::Gen { kind, .. } => match generate(kind, &cli.command) {
            Ok(value) => {
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
                ExitCode::SUCCESS
            }
            Err(message) => {
                eprintln!("error: {message}");
                ExitCode::from(2)
            }
        },
    }
}
