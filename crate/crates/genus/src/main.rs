//! Command-line front end: run a named verification scenario and emit a
//! canonical JSON report. Exit codes: 0 PASS, 1 FAIL, 2 usage error,
//! 3 budget exhausted.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use genus::scenario::{run_scenario, Scenario, ScenarioConfig};

#[derive(Parser)]
#[command(
    name = "genus",
    about = "Finite-scale verification of two residually finite group constructions",
    after_help = "Scenarios: branch-density, branch-power-closure, branch-distinguish, \
                  branch-conditions, soluble-decode, soluble-conjugator, \
                  soluble-ideal-equality, soluble-translate, all"
)]
struct Cli {
    /// Scenario name.
    scenario: String,

    /// Bitstring lambda (branch scenarios index from 0, soluble from 1).
    #[arg(long)]
    lambda: Option<String>,

    /// First bitstring of a pair.
    #[arg(long)]
    mu: Option<String>,

    /// Second bitstring of a pair.
    #[arg(long)]
    nu: Option<String>,

    /// Tree depth / chain level, scenario dependent.
    #[arg(long)]
    depth: Option<usize>,

    /// Period m of the normal subgroup N_m.
    #[arg(long)]
    period: Option<usize>,

    /// Number of seeded-random samples.
    #[arg(long)]
    samples: Option<usize>,

    /// Number of bits to decode (soluble-decode).
    #[arg(long)]
    len: Option<usize>,

    /// Master seed; defaults to $GENUS_SEED, then 0.
    #[arg(long)]
    seed: Option<u64>,

    /// Also write the report to this path.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Wall-clock budget; checks past it report FAIL-INCONCLUSIVE.
    #[arg(long)]
    budget_ms: Option<u64>,
}

fn usage_exit(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let scenario: Scenario = match cli.scenario.parse() {
        Ok(s) => s,
        Err(e) => return usage_exit(&e.to_string()),
    };
    let seed = match cli.seed {
        Some(s) => s,
        None => match std::env::var("GENUS_SEED") {
            Ok(raw) => match raw.parse() {
                Ok(s) => s,
                Err(_) => return usage_exit(&format!("GENUS_SEED is not a u64: {raw:?}")),
            },
            Err(_) => 0,
        },
    };

    let out = cli.out;
    let cfg = ScenarioConfig {
        scenario,
        lambda: cli.lambda,
        mu: cli.mu,
        nu: cli.nu,
        depth: cli.depth,
        period: cli.period,
        samples: cli.samples,
        len: cli.len,
        seed,
        budget_ms: cli.budget_ms,
    };

    let report = match run_scenario(&cfg) {
        Ok(r) => r,
        Err(e) => return usage_exit(&e.to_string()),
    };

    print!("{}", report.to_json());
    if let Some(path) = &out {
        if let Err(e) = report.write(path) {
            eprintln!("error: cannot write report to {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
