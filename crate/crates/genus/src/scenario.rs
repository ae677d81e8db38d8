//! Named verification scenarios: validated configuration, deterministic
//! per-scenario seed substreams, per-check time budgets, and report assembly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde_json::{json, Value};
use thiserror::Error;

use crate::lambda::{LambdaError, LambdaSeq};
use crate::report::{CheckResult, Report, Status};
use crate::solring::{
    conjugator, conjugator_postcondition, decode_prefix, translate_check,
    verify_annihilator_equality, NormalN, SolError,
};
use crate::treewreath::{condition_check, density_check, distinguish_pair, power_closure_check};

#[derive(Debug, Error)]
pub enum UsageError {
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error(transparent)]
    Lambda(#[from] LambdaError),
    #[error("{0}")]
    BadParam(String),
}

impl From<SolError> for UsageError {
    fn from(e: SolError) -> UsageError {
        UsageError::BadParam(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    BranchDensity,
    BranchPowerClosure,
    BranchDistinguish,
    BranchConditions,
    SolubleDecode,
    SolubleConjugator,
    SolubleIdealEquality,
    SolubleTranslate,
    All,
}

impl Scenario {
    pub const ALL_NAMES: [&'static str; 9] = [
        "branch-density",
        "branch-power-closure",
        "branch-distinguish",
        "branch-conditions",
        "soluble-decode",
        "soluble-conjugator",
        "soluble-ideal-equality",
        "soluble-translate",
        "all",
    ];

    pub fn name(self) -> &'static str {
        match self {
            Scenario::BranchDensity => "branch-density",
            Scenario::BranchPowerClosure => "branch-power-closure",
            Scenario::BranchDistinguish => "branch-distinguish",
            Scenario::BranchConditions => "branch-conditions",
            Scenario::SolubleDecode => "soluble-decode",
            Scenario::SolubleConjugator => "soluble-conjugator",
            Scenario::SolubleIdealEquality => "soluble-ideal-equality",
            Scenario::SolubleTranslate => "soluble-translate",
            Scenario::All => "all",
        }
    }
}

impl FromStr for Scenario {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Scenario, UsageError> {
        match s {
            "branch-density" => Ok(Scenario::BranchDensity),
            "branch-power-closure" => Ok(Scenario::BranchPowerClosure),
            "branch-distinguish" => Ok(Scenario::BranchDistinguish),
            "branch-conditions" => Ok(Scenario::BranchConditions),
            "soluble-decode" => Ok(Scenario::SolubleDecode),
            "soluble-conjugator" => Ok(Scenario::SolubleConjugator),
            "soluble-ideal-equality" => Ok(Scenario::SolubleIdealEquality),
            "soluble-translate" => Ok(Scenario::SolubleTranslate),
            "all" => Ok(Scenario::All),
            other => Err(UsageError::UnknownScenario(other.to_string())),
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Debug, Clone)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    pub lambda: Option<String>,
    pub mu: Option<String>,
    pub nu: Option<String>,
    pub depth: Option<usize>,
    pub period: Option<usize>,
    pub samples: Option<usize>,
    pub len: Option<usize>,
    pub seed: u64,
    pub budget_ms: Option<u64>,
}

impl ScenarioConfig {
    pub fn new(scenario: Scenario, seed: u64) -> ScenarioConfig {
        ScenarioConfig {
            scenario,
            lambda: None,
            mu: None,
            nu: None,
            depth: None,
            period: None,
            samples: None,
            len: None,
            seed,
            budget_ms: None,
        }
    }
}

/// Deterministic per-scenario seed substream derived from the master seed
/// and the scenario name (FNV-1a).
fn substream(master: u64, name: &str) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for b in name.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h ^ master.wrapping_mul(0x9e3779b97f4a7c15)
}

/// Runs checks against a shared wall-clock budget. A check that would start
/// after the budget is spent is recorded as FAIL-INCONCLUSIVE, never
/// silently skipped.
struct Runner {
    report: Report,
    start: Instant,
    budget: Option<Duration>,
}

impl Runner {
    fn new(report: Report, budget_ms: Option<u64>) -> Runner {
        Runner {
            report,
            start: Instant::now(),
            budget: budget_ms.map(Duration::from_millis),
        }
    }

    fn check<E: fmt::Display>(
        &mut self,
        name: &str,
        run: impl FnOnce() -> Result<(Status, BTreeMap<String, Value>), E>,
    ) {
        if let Some(budget) = self.budget {
            if self.start.elapsed() > budget {
                self.report.push(CheckResult {
                    name: name.to_string(),
                    status: Status::FailInconclusive,
                    details: [(
                        "reason".to_string(),
                        json!("time budget exhausted before this check started"),
                    )]
                    .into_iter()
                    .collect(),
                    elapsed_ms: 0,
                });
                return;
            }
        }
        let begin = Instant::now();
        let (status, details) = match run() {
            Ok(ok) => ok,
            Err(e) => (
                Status::Error,
                [("error".to_string(), json!(e.to_string()))]
                    .into_iter()
                    .collect(),
            ),
        };
        self.report.push(CheckResult {
            name: name.to_string(),
            status,
            details,
            elapsed_ms: begin.elapsed().as_millis() as u64,
        });
    }
}

fn details(pairs: impl IntoIterator<Item = (&'static str, Value)>) -> BTreeMap<String, Value> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

struct Resolved {
    lambda: LambdaSeq,
    mu: LambdaSeq,
    nu: LambdaSeq,
    depth: usize,
    period: usize,
    samples: usize,
    len: usize,
    seed: u64,
}

fn resolve(cfg: &ScenarioConfig, scenario: Scenario) -> Result<Resolved, UsageError> {
    let origin = match scenario {
        Scenario::BranchDensity | Scenario::BranchPowerClosure | Scenario::BranchDistinguish => 0,
        _ => 1,
    };
    let (d_lambda, d_mu, d_nu, d_depth, d_samples) = match scenario {
        Scenario::BranchDensity => ("0", "000", "010", 2, 50),
        Scenario::BranchPowerClosure => ("0", "000", "010", 2, 50),
        Scenario::BranchDistinguish => ("0", "000", "010", 3, 50),
        Scenario::SolubleConjugator => ("10110", "010", "111", 6, 500),
        Scenario::SolubleIdealEquality => ("10110", "0110", "1001", 6, 500),
        Scenario::SolubleTranslate => ("10110", "10", "01", 4, 500),
        _ => ("10110", "010", "111", 3, 500),
    };
    let lambda = LambdaSeq::new(cfg.lambda.as_deref().unwrap_or(d_lambda), origin)?;
    let mu = LambdaSeq::new(cfg.mu.as_deref().unwrap_or(d_mu), origin)?;
    let nu = LambdaSeq::new(cfg.nu.as_deref().unwrap_or(d_nu), origin)?;
    let period = cfg.period.unwrap_or(1);
    if period < 1 || period > 60 {
        return Err(UsageError::BadParam(format!(
            "--period must lie in 1..=60, got {period}"
        )));
    }
    let depth = cfg.depth.unwrap_or(d_depth);
    if depth < 1 {
        return Err(UsageError::BadParam("--depth must be >= 1".to_string()));
    }
    let len = cfg.len.unwrap_or(lambda.prefix_len()).max(1);
    Ok(Resolved {
        lambda,
        mu,
        nu,
        depth,
        period,
        samples: cfg.samples.unwrap_or(d_samples),
        len,
        seed: substream(cfg.seed, scenario.name()),
    })
}

fn big(x: &num_bigint::BigUint) -> Value {
    json!(x.to_string())
}

fn run_branch_density(r: &mut Runner, p: &Resolved) {
    for n in 1..=p.depth {
        let lambda = p.lambda.clone();
        r.check(&format!("density-depth-{n}"), || {
            let out = density_check(&lambda, n)?;
            Ok::<_, crate::treewreath::TreeError>((
                Status::from_pass(out.pass),
                details([
                    ("lambda", json!(lambda.to_string())),
                    ("depth", json!(n)),
                    ("order", big(&out.order)),
                    ("expected", big(&out.expected)),
                ]),
            ))
        });
    }
}

fn run_branch_power_closure(r: &mut Runner, p: &Resolved) {
    let (depth, samples, seed) = (p.depth, p.samples, p.seed);
    let level = depth - 1;
    r.check("power-closure", || {
        let out = power_closure_check(depth, level.max(1), samples, seed)?;
        let status = if out.pass {
            Status::Pass
        } else if out.inconclusive {
            Status::FailInconclusive
        } else {
            Status::Fail
        };
        Ok::<_, crate::treewreath::TreeError>((
            status,
            details([
                ("depth", json!(depth)),
                ("level", json!(level.max(1))),
                ("samples", json!(samples)),
                ("powers_in_kernel", json!(out.powers_in_kernel)),
                ("achieved", big(&out.achieved)),
                ("expected", big(&out.expected)),
            ]),
        ))
    });
}

fn run_branch_distinguish(r: &mut Runner, p: &Resolved) {
    let (mu, nu, depth) = (p.mu.clone(), p.nu.clone(), p.depth);
    r.check("distinguish", || {
        let out = distinguish_pair(&mu, &nu, depth)?;
        Ok::<_, crate::treewreath::TreeError>((
            Status::from_pass(out.pass),
            details([
                ("mu", json!(mu.to_string())),
                ("nu", json!(nu.to_string())),
                ("depth", json!(depth)),
                ("index", json!(out.index)),
                ("vertex", json!(out.vertex)),
                ("section_orders", json!([out.orders.0, out.orders.1])),
                ("automorphism_count", json!(out.automorphism_count)),
            ]),
        ))
    });
}

fn run_branch_conditions(r: &mut Runner) {
    let out = condition_check();
    r.check("alt5-two-transitive", || {
        Ok::<_, std::convert::Infallible>((
            Status::from_pass(out.two_transitive),
            details([("two_transitive", json!(out.two_transitive))]),
        ))
    });
    r.check("pair-group-perfect", || {
        Ok::<_, std::convert::Infallible>((
            Status::from_pass(out.p_perfect && out.p_order == 3600u32.into()),
            details([
                ("order", big(&out.p_order)),
                ("expected_order", json!("3600")),
                ("perfect", json!(out.p_perfect)),
            ]),
        ))
    });
    r.check("projection-images-full", || {
        Ok::<_, std::convert::Infallible>((
            Status::from_pass(out.phi_images_full),
            details([("images_full", json!(out.phi_images_full))]),
        ))
    });
}

fn run_soluble_decode(r: &mut Runner, p: &Resolved) {
    let (lambda, len) = (p.lambda.clone(), p.len);
    r.check("decode-round-trip", || {
        let decoded = decode_prefix(&lambda, len)?;
        let expected: String = (1..=len)
            .map(|n| char::from(b'0' + lambda.bit(n).expect("origin 1")))
            .collect();
        Ok::<_, SolError>((
            Status::from_pass(decoded == expected),
            details([
                ("lambda", json!(lambda.to_string())),
                ("len", json!(len)),
                ("decoded", json!(decoded)),
                ("expected", json!(expected)),
            ]),
        ))
    });
}

fn run_soluble_conjugator(r: &mut Runner, p: &Resolved) {
    let (alpha, beta, n) = (p.mu.clone(), p.nu.clone(), p.depth);
    r.check("conjugator-postcondition", || {
        let g = conjugator(&alpha, &beta, n)?;
        let ok = conjugator_postcondition(&alpha, &beta, n)?;
        Ok::<_, SolError>((
            Status::from_pass(ok),
            details([
                ("alpha", json!(alpha.to_string())),
                ("beta", json!(beta.to_string())),
                ("levels", json!(n)),
                ("conjugator", json!(g.to_string())),
            ]),
        ))
    });
}

fn run_soluble_ideal_equality(r: &mut Runner, p: &Resolved) {
    let (alpha, beta, period, samples, seed) =
        (p.mu.clone(), p.nu.clone(), p.period, p.samples, p.seed);
    r.check("ideal-equality", || {
        let n = NormalN::new(period)?;
        let out = verify_annihilator_equality(&alpha, &beta, &n, samples, seed)?;
        Ok::<_, SolError>((
            Status::from_pass(out.pass),
            details([
                ("alpha", json!(alpha.to_string())),
                ("beta", json!(beta.to_string())),
                ("gamma", json!(out.gamma.to_string())),
                ("period", json!(period)),
                ("conjugator", json!(out.conjugator.to_string())),
                ("samples", json!(out.samples)),
                ("disagreements", json!(out.disagreements)),
                ("hypothesis_violation", json!(out.hypothesis_violation)),
            ]),
        ))
    });
}

fn run_soluble_translate(r: &mut Runner, p: &Resolved) {
    let (alpha, beta, n, samples, seed) =
        (p.mu.clone(), p.nu.clone(), p.depth, p.samples, p.seed);
    r.check("translate", || {
        let g = conjugator(&alpha, &beta, n)?;
        let out = translate_check(&alpha, &g, samples, seed)?;
        Ok::<_, SolError>((
            Status::from_pass(out.pass),
            details([
                ("alpha", json!(alpha.to_string())),
                ("gamma", json!(out.gamma.to_string())),
                ("conjugator", json!(g.to_string())),
                ("samples", json!(out.samples)),
                ("disagreements", json!(out.disagreements)),
            ]),
        ))
    });
}

pub fn run_scenario(cfg: &ScenarioConfig) -> Result<Report, UsageError> {
    let parts: Vec<Scenario> = match cfg.scenario {
        Scenario::All => vec![
            Scenario::BranchDensity,
            Scenario::BranchPowerClosure,
            Scenario::BranchDistinguish,
            Scenario::BranchConditions,
            Scenario::SolubleDecode,
            Scenario::SolubleConjugator,
            Scenario::SolubleIdealEquality,
            Scenario::SolubleTranslate,
        ],
        s => vec![s],
    };

    // Validate every part before running anything.
    let resolved: Vec<Resolved> = parts
        .iter()
        .map(|&s| resolve(cfg, s))
        .collect::<Result<_, _>>()?;

    let mut parameters = BTreeMap::new();
    parameters.insert("seed".to_string(), json!(cfg.seed));
    if let Some(b) = cfg.budget_ms {
        parameters.insert("budget_ms".to_string(), json!(b));
    }
    for (key, v) in [
        ("lambda", &cfg.lambda),
        ("mu", &cfg.mu),
        ("nu", &cfg.nu),
    ] {
        if let Some(v) = v {
            parameters.insert(key.to_string(), json!(v));
        }
    }
    for (key, v) in [
        ("depth", cfg.depth),
        ("period", cfg.period),
        ("samples", cfg.samples),
        ("len", cfg.len),
    ] {
        if let Some(v) = v {
            parameters.insert(key.to_string(), json!(v));
        }
    }

    let report = Report::new(cfg.scenario.name(), parameters);
    let mut runner = Runner::new(report, cfg.budget_ms);
    for (scenario, p) in parts.iter().zip(&resolved) {
        match scenario {
            Scenario::BranchDensity => run_branch_density(&mut runner, p),
            Scenario::BranchPowerClosure => run_branch_power_closure(&mut runner, p),
            Scenario::BranchDistinguish => run_branch_distinguish(&mut runner, p),
            Scenario::BranchConditions => run_branch_conditions(&mut runner),
            Scenario::SolubleDecode => run_soluble_decode(&mut runner, p),
            Scenario::SolubleConjugator => run_soluble_conjugator(&mut runner, p),
            Scenario::SolubleIdealEquality => run_soluble_ideal_equality(&mut runner, p),
            Scenario::SolubleTranslate => run_soluble_translate(&mut runner, p),
            Scenario::All => unreachable!("flattened above"),
        }
    }
    Ok(runner.report)
}
