//! Seeded generation of random admissible configurations and the
//! randomized property driver.
//!
//! Each trial draws from its own ChaCha stream of the single seed, so runs
//! are reproducible and independent of how trials are scheduled on threads.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{run_checks, tail_check, CheckResult};
use crate::config::{Configuration, PointKind};

/// Probability that a point with an admissible satellite option becomes
/// satellite.
pub const SATELLITE_BIAS: f64 = 0.3;

/// Longest satellite tail the driver appends.
pub const MAX_TAIL: usize = 5;

pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// A random configuration with `1..=max_points` points. Each point after
/// `p_2` turns satellite with probability [`SATELLITE_BIAS`], choosing its
/// older divisor uniformly among the admissible ones; the tangent segment
/// is uniform among the valid lengths.
pub fn random_configuration<R: Rng>(rng: &mut R, max_points: usize) -> Configuration {
    let n = rng.gen_range(1..=max_points.max(1));
    let mut lists: Vec<Vec<usize>> = Vec::with_capacity(n);
    for index in 1..=n {
        let prox = match index {
            1 => vec![],
            2 => vec![1],
            _ => {
                let options = &lists[index - 2];
                if rng.gen_bool(SATELLITE_BIAS) {
                    let older = *options.choose(rng).expect("p_{i-1} has a predecessor");
                    vec![index - 1, older]
                } else {
                    vec![index - 1]
                }
            }
        };
        lists.push(prox);
    }
    let cfg = Configuration::build(&lists, None).expect("generated proximities are admissible");
    let lo = n.min(2);
    let hi = cfg.max_tangent_count();
    let k = rng.gen_range(lo..=hi);
    cfg.with_tangent_count(k)
        .expect("tangent count within the valid range")
}

/// A random admissible satellite tail of length `1..=max_len`, or `None`
/// when the configuration cannot take one.
pub fn random_tail<R: Rng>(rng: &mut R, cfg: &Configuration, max_len: usize) -> Option<Vec<usize>> {
    if cfg.len() < 2 || cfg.last().kind() == PointKind::Satellite || max_len == 0 {
        return None;
    }
    let len = rng.gen_range(1..=max_len);
    let mut targets = vec![cfg.len() - 1];
    let mut prox = [cfg.len(), cfg.len() - 1];
    for _ in 1..len {
        let choice = *prox.choose(rng).expect("two options");
        targets.push(choice);
        prox = [prox[0] + 1, choice];
    }
    Some(targets)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub trial: u64,
    pub proximity: Vec<Vec<usize>>,
    pub tangent_count: usize,
    pub failures: Vec<CheckResult>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub max_points: usize,
    pub trials: u64,
    pub seed: u64,
    pub passed: u64,
    pub failed: u64,
    pub tail_checks: u64,
    pub tail_findings: u64,
    pub first_counterexample: Option<Counterexample>,
}

impl FuzzSummary {
    pub fn clean(&self) -> bool {
        self.failed == 0 && self.tail_findings == 0
    }
}

struct TrialOutcome {
    failures: Vec<CheckResult>,
    tail: Option<CheckResult>,
    cfg: Configuration,
}

fn run_trial(seed: u64, trial: u64, max_points: usize) -> TrialOutcome {
    let mut rng = trial_rng(seed, trial);
    let cfg = random_configuration(&mut rng, max_points);
    let failures: Vec<CheckResult> = run_checks(&cfg).into_iter().filter(|r| !r.passed).collect();
    let tail = random_tail(&mut rng, &cfg, MAX_TAIL).map(|targets| tail_check(&cfg, &targets));
    TrialOutcome {
        failures,
        tail,
        cfg,
    }
}

/// Runs the property suite on `trials` random configurations.
pub fn fuzz(max_points: usize, trials: u64, seed: u64) -> FuzzSummary {
    let outcomes: Vec<TrialOutcome> = (0..trials)
        .into_par_iter()
        .map(|trial| run_trial(seed, trial, max_points))
        .collect();
    let mut summary = FuzzSummary {
        max_points,
        trials,
        seed,
        passed: 0,
        failed: 0,
        tail_checks: 0,
        tail_findings: 0,
        first_counterexample: None,
    };
    for (trial, outcome) in outcomes.into_iter().enumerate() {
        let mut failures = outcome.failures;
        if let Some(tail) = outcome.tail {
            summary.tail_checks += 1;
            if !tail.passed {
                summary.tail_findings += 1;
                failures.push(tail);
            }
        }
        if failures.is_empty() {
            summary.passed += 1;
            continue;
        }
        summary.failed += 1;
        if summary.first_counterexample.is_none() {
            summary.first_counterexample = Some(Counterexample {
                trial: trial as u64,
                proximity: outcome.cfg.proximity_lists(),
                tangent_count: outcome.cfg.tangent_count(),
                failures,
            });
        }
    }
    summary
}
