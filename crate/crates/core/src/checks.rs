//! Built-in identities, each computed along two independent routes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::bounds::{satellite_tail_comparison, ValuationBundle};
use crate::config::Configuration;
use crate::invariants::{
    from_maximal_contact, last_maximal_contact_by_curvette, multiplicity_sequence,
};
use crate::surface::{
    intersect_hirzebruch, lambda_divisor, nef_on_generators, npi_check, Generator,
};

/// Deltas at which the generator pairings and `Λ²` are checked.
pub const CHECKED_DELTAS: std::ops::RangeInclusive<u64> = 0..=3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl CheckResult {
    fn new(name: &'static str, failure: Option<String>) -> Self {
        Self {
            name,
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        }
    }
}

pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

/// Runs every per-valuation identity.
pub fn run_checks(cfg: &Configuration) -> Vec<CheckResult> {
    let bundle = ValuationBundle::new(cfg.clone());
    vec![
        CheckResult::new("sum_of_squares", sum_of_squares(&bundle)),
        CheckResult::new("proximity_equalities", proximity_equalities(&bundle)),
        CheckResult::new("rebuild_round_trip", rebuild_round_trip(cfg)),
        CheckResult::new(
            "maximal_contact_round_trip",
            maximal_contact_round_trip(&bundle),
        ),
        CheckResult::new("delta0_oracle", delta0_oracle(&bundle)),
        CheckResult::new("lambda_square", lambda_square(&bundle)),
        CheckResult::new("nef_generators", nef_generators(&bundle)),
        CheckResult::new("bound_dominance", bound_dominance(&bundle)),
        CheckResult::new("mu_hat_dominates_volume", mu_hat_dominates_volume(&bundle)),
        CheckResult::new("tangent_range", tangent_range(&bundle)),
        CheckResult::new("first_puiseux_exponent", first_puiseux_exponent(&bundle)),
    ]
}

/// `β̄_{g+1}` from the curvette pairing against `Σ v_i²`.
pub fn sum_of_squares(bundle: &ValuationBundle) -> Option<String> {
    let direct = bundle.record.multiplicities.sum_of_squares();
    let curvette = last_maximal_contact_by_curvette(&bundle.cfg);
    let reported = bundle.record.beta_bar.last();
    (direct != curvette || &direct != reported)
        .then(|| format!("Σv² = {direct}, curvette = {curvette}, β̄_last = {reported}"))
}

pub fn proximity_equalities(bundle: &ValuationBundle) -> Option<String> {
    let v = bundle.record.multiplicities.values();
    let n = v.len();
    if v[n - 1] != BigInt::one() {
        return Some(format!("v_n = {}", v[n - 1]));
    }
    for i in 1..n {
        let sum: BigInt = bundle
            .cfg
            .proximate_points(i)
            .into_iter()
            .map(|j| &v[j - 1])
            .sum();
        if sum != v[i - 1] {
            return Some(format!("v_{i} = {} but Σ_(j->{i}) v_j = {sum}", v[i - 1]));
        }
    }
    None
}

pub fn rebuild_round_trip(cfg: &Configuration) -> Option<String> {
    match Configuration::build(&cfg.proximity_lists(), Some(cfg.tangent_count())) {
        Ok(rebuilt) if rebuilt.points() == cfg.points() => None,
        Ok(rebuilt) => Some(format!("rebuilt {rebuilt}")),
        Err(e) => Some(e.to_string()),
    }
}

pub fn maximal_contact_round_trip(bundle: &ValuationBundle) -> Option<String> {
    match from_maximal_contact(&bundle.record.beta_bar.beta_bar, 0) {
        Ok(rebuilt) => {
            let v = multiplicity_sequence(&rebuilt);
            if v != bundle.record.multiplicities {
                Some(format!("multiplicities differ: {:?}", v.values()))
            } else if rebuilt.proximity_lists() != bundle.cfg.proximity_lists() {
                Some(format!("proximity differs: {rebuilt}"))
            } else {
                None
            }
        }
        Err(e) => Some(e.to_string()),
    }
}

/// `δ₀` against the smallest `δ` found by linear search with the
/// non-positivity test.
pub fn delta0_oracle(bundle: &ValuationBundle) -> Option<String> {
    if bundle.cfg.is_m_adic() {
        return (bundle.delta0 != -1)
            .then(|| format!("δ₀ = {} for the m-adic valuation", bundle.delta0));
    }
    let limit = bundle.cfg.len() as u64 + 1;
    let smallest = (0..=limit).find(|&d| npi_check(&bundle.cfg, d).non_positive);
    let Some(smallest) = smallest else {
        return Some(format!("no δ <= {limit} is non-positive"));
    };
    if smallest as i64 != bundle.delta0 {
        return Some(format!(
            "δ₀ = {} but linear search gives {smallest}",
            bundle.delta0
        ));
    }
    if smallest > 0 && npi_check(&bundle.cfg, smallest - 1).non_positive {
        return Some(format!("non-positive already at δ = {}", smallest - 1));
    }
    None
}

/// The non-positivity witness equals `Λ·Λ` computed by the pairing.
pub fn lambda_square(bundle: &ValuationBundle) -> Option<String> {
    let extra = bundle.delta0.max(0) as u64;
    for delta in CHECKED_DELTAS.chain(std::iter::once(extra)) {
        let lambda = lambda_divisor(&bundle.cfg, delta);
        let square = intersect_hirzebruch(&lambda, &lambda).expect("same surface");
        let witness = npi_check(&bundle.cfg, delta).witness;
        if square != witness {
            return Some(format!("δ = {delta}: Λ² = {square}, witness = {witness}"));
        }
    }
    None
}

pub fn nef_generators(bundle: &ValuationBundle) -> Option<String> {
    let n = bundle.cfg.len();
    for delta in CHECKED_DELTAS {
        for (g, pairing) in nef_on_generators(&bundle.cfg, delta) {
            let expected = match g {
                Generator::Exceptional(i) if i == n => BigInt::one(),
                _ => BigInt::zero(),
            };
            if pairing != expected {
                return Some(format!(
                    "δ = {delta}: Λ·{g} = {pairing}, expected {expected}"
                ));
            }
        }
    }
    None
}

/// combinatorial bound >= `1 - ⌈1/vol^N⌉` >= `1 - n`.
pub fn bound_dominance(bundle: &ValuationBundle) -> Option<String> {
    let Ok(comb) = bundle.combinatorial_lambda_bound() else {
        return None;
    };
    let middle = bundle.normalized_volume_bound();
    let trivial = bundle.trivial_bound();
    (!(comb >= middle && middle >= trivial))
        .then(|| format!("combinatorial {comb}, volume {middle}, trivial {trivial}"))
}

pub fn mu_hat_dominates_volume(bundle: &ValuationBundle) -> Option<String> {
    let bound = bundle.mu_hat_upper_bound();
    (&bound * &bound < *bundle.inverse_volume()).then(|| {
        format!(
            "bound {bound} squared is below β̄_last = {}",
            bundle.inverse_volume()
        )
    })
}

/// `β̄_0 < t <= β̄_1` whenever there is a tangent line.
pub fn tangent_range(bundle: &ValuationBundle) -> Option<String> {
    let t = bundle.tangent_value();
    if bundle.cfg.is_m_adic() {
        return (!t.is_one()).then(|| format!("t = {t} for the m-adic valuation"));
    }
    (!(bundle.beta0() < t && t <= bundle.beta1()))
        .then(|| format!("t = {t} outside ({}, {}]", bundle.beta0(), bundle.beta1()))
}

/// `β̄_1 = β'_1·β̄_0` when there is at least one satellite block.
pub fn first_puiseux_exponent(bundle: &ValuationBundle) -> Option<String> {
    if bundle.record.beta_bar.genus() == 0 {
        return None;
    }
    let product =
        &bundle.record.puiseux.beta_prime[1] * BigRational::from_integer(bundle.beta0().clone());
    let beta1 = BigRational::from_integer(bundle.beta1().clone());
    (product != beta1).then(|| format!("β'_1·β̄_0 = {product}, β̄_1 = {beta1}"))
}

/// The satellite-tail comparison as a check result.
pub fn tail_check(cfg: &Configuration, targets: &[usize]) -> CheckResult {
    let failure = match satellite_tail_comparison(cfg, targets) {
        Ok(c) if c.holds() => None,
        Ok(c) => Some(format!(
            "tail {targets:?}: δ₀ {} -> {}, difference {}",
            c.delta0_before, c.delta0_after, c.difference
        )),
        Err(e) => Some(e.to_string()),
    };
    CheckResult::new("satellite_tail", failure)
}
