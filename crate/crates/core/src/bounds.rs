//! Degree bounds, Seshadri-type bounds and bounded-negativity bounds.
//!
//! Everything here is exact: bounds are integers or `BigRational`s, and
//! `⌈x⌉⁺` is evaluated on rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use thiserror::Error;

use crate::config::{ConfigError, Configuration, PointKind};
use crate::invariants::{from_maximal_contact, InvariantError, InvariantRecord};
use crate::rational::{ceil, ceil_plus, integer, ratio};
use crate::surface::{npi_check, strict_transform_plane};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("multiplicity vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("multiplicity at p_{point} is negative")]
    NegativeMultiplicity { point: usize },
    #[error("the combinatorial bound needs a tangent line, so at least two centers")]
    NoTangentLine,
    #[error("a multi-valuation needs at least one valuation")]
    NoValuations,
    #[error("aligned point count {given} is below the lower bound {minimum}")]
    AlignedMu { given: u64, minimum: u64 },
    #[error("the Tono family needs a >= 3 and e >= 0, got a = {a}, e = {e}")]
    TonoParameters { a: i64, e: i64 },
    #[error("Tono({a},{e}): {what} is {got}, expected {expected}")]
    TonoMismatch {
        a: i64,
        e: i64,
        what: &'static str,
        got: String,
        expected: String,
    },
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

/// A configuration with its invariants and `δ₀`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationBundle {
    pub cfg: Configuration,
    pub record: InvariantRecord,
    pub delta0: i64,
}

impl ValuationBundle {
    pub fn new(cfg: Configuration) -> Self {
        let record = InvariantRecord::compute(&cfg);
        let delta0 = delta0_from_record(&record);
        Self {
            cfg,
            record,
            delta0,
        }
    }

    pub fn beta0(&self) -> &BigInt {
        self.record.beta_bar.first()
    }

    pub fn beta1(&self) -> &BigInt {
        self.record.beta_bar.second()
    }

    /// `β̄_{g+1} = 1/vol(ν)`.
    pub fn inverse_volume(&self) -> &BigInt {
        self.record.beta_bar.last()
    }

    pub fn tangent_value(&self) -> &BigInt {
        &self.record.tangent_value
    }

    /// `(β̄_{g+1} - 2·β̄_0·t) / t²`, the quantity whose positive ceiling is `δ₀`.
    pub fn delta_ratio(&self) -> BigRational {
        delta_ratio(&self.record)
    }

    /// `deg C >= Σ v_i m_i / (β̄_0 + (1 + δ₀)·t)` for curves through the
    /// centers with multiplicities at least `m`.
    pub fn degree_lower_bound(&self, m: &[BigInt]) -> Result<BigRational, BoundsError> {
        let v = self.record.multiplicities.values();
        if m.len() != v.len() {
            return Err(BoundsError::LengthMismatch {
                expected: v.len(),
                got: m.len(),
            });
        }
        if let Some(point) = m.iter().position(|x| x.is_negative()) {
            return Err(BoundsError::NegativeMultiplicity { point: point + 1 });
        }
        let value: BigInt = v.iter().zip(m).map(|(a, b)| a * b).sum();
        Ok(BigRational::new(value, self.mu_hat_upper_bound()))
    }

    /// `β̄_0 + (1 + δ₀)·t`.
    pub fn mu_hat_upper_bound(&self) -> BigInt {
        self.beta0() + BigInt::from(1 + self.delta0) * self.tangent_value()
    }

    /// `μ̂ = value / degree` when the supplied curve is supraminimal, that
    /// is `value² > β̄_{g+1}·degree²`.
    pub fn supraminimal_certificate(
        &self,
        curve_value: &BigInt,
        curve_degree: &BigInt,
    ) -> Option<BigRational> {
        let lhs = curve_value * curve_value;
        let rhs = self.inverse_volume() * curve_degree * curve_degree;
        (curve_degree.is_positive() && lhs > rhs)
            .then(|| BigRational::new(curve_value.clone(), curve_degree.clone()))
    }

    /// `C̃²/deg(C)² >= -(1 + δ₀)` for curves other than the tangent line.
    pub fn ratio_bound(&self) -> i64 {
        -(1 + self.delta0)
    }

    /// The bound on `λ_{L*}(X_ν)` that only uses `β̄_0`, `β̄_1` and `β̄_{g+1}`.
    pub fn combinatorial_lambda_bound(&self) -> Result<BigInt, BoundsError> {
        let n = self.cfg.len();
        if n < 2 {
            return Err(BoundsError::NoTangentLine);
        }
        let b0 = self.beta0();
        let b1 = self.beta1();
        let inv_vol_n = BigRational::new(self.inverse_volume().clone(), b0 * b0);
        let q = BigRational::new(b0.clone(), b1.clone());
        let two = integer(2);
        let p3_satellite = n >= 3 && self.cfg.point(3).kind() == PointKind::Satellite;
        if p3_satellite {
            let x = &q * &q * &inv_vol_n - &two * &q;
            Ok(-BigInt::one() - ceil_plus(&x))
        } else {
            let line_part = BigInt::one() - ceil(&BigRational::new(b1.clone(), b0.clone()));
            let x = ratio(1, 4) * &inv_vol_n - &two * &q;
            let other = -BigInt::one() - ceil_plus(&x);
            Ok(line_part.min(other))
        }
    }

    /// `1 - ⌈1/vol^N⌉`, the lower end of the dominance chain.
    pub fn normalized_volume_bound(&self) -> BigInt {
        BigInt::one() - ceil(&self.record.normalized_volume.recip())
    }

    /// `1 - n`.
    pub fn trivial_bound(&self) -> BigInt {
        BigInt::one() - BigInt::from(self.cfg.len())
    }

    pub fn report(&self, aligned_mu: Option<u64>) -> BoundReport {
        let mv = MultiValuation::new(vec![self.clone()], aligned_mu)
            .unwrap_or_else(|_| MultiValuation::general_position(vec![self.clone()]));
        BoundReport::new(self, &mv)
    }
}

fn delta_ratio(record: &InvariantRecord) -> BigRational {
    let t = &record.tangent_value;
    let numer = record.beta_bar.last() - BigInt::from(2) * record.beta_bar.first() * t;
    BigRational::new(numer, t * t)
}

fn delta0_from_record(record: &InvariantRecord) -> i64 {
    if record.is_m_adic {
        return -1;
    }
    ceil_plus(&delta_ratio(record))
        .to_i64()
        .expect("δ₀ is below the number of centers")
}

/// `δ₀(ν)`: `-1` for the `m`-adic valuation, otherwise
/// `⌈(β̄_{g+1} - 2·β̄_0·t)/t²⌉⁺`.
pub fn delta0(cfg: &Configuration) -> i64 {
    delta0_from_record(&InvariantRecord::compute(cfg))
}

/// Several valuations blown up together, with the size `μ` of a maximal
/// set of aligned centers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiValuation {
    pub bundles: Vec<ValuationBundle>,
    pub aligned_mu: u64,
}

impl MultiValuation {
    /// Uses `aligned_mu` when given (it must respect the lower bound),
    /// otherwise the general-position value.
    pub fn new(
        bundles: Vec<ValuationBundle>,
        aligned_mu: Option<u64>,
    ) -> Result<Self, BoundsError> {
        if bundles.is_empty() {
            return Err(BoundsError::NoValuations);
        }
        let minimum = general_position_mu(&bundles);
        let aligned_mu = match aligned_mu {
            Some(given) if given < minimum => {
                return Err(BoundsError::AlignedMu { given, minimum })
            }
            Some(given) => given,
            None => minimum,
        };
        Ok(Self {
            bundles,
            aligned_mu,
        })
    }

    /// Valuations at mutually general points: the largest aligned set is a
    /// tangent segment, or any two centers.
    pub fn general_position(bundles: Vec<ValuationBundle>) -> Self {
        let aligned_mu = general_position_mu(&bundles);
        Self {
            bundles,
            aligned_mu,
        }
    }

    pub fn len(&self) -> usize {
        self.bundles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bundles.is_empty()
    }

    /// `-Σ δ₀(ν_i) - 2N + 1`.
    pub fn multi_ratio_bound(&self) -> i64 {
        let sum: i64 = self.bundles.iter().map(|b| b.delta0).sum();
        -sum - 2 * self.bundles.len() as i64 + 1
    }

    /// `λ_{L*}(Z) >= min(1 - μ, -Σ δ₀(ν_i) - 2N + 1)`.
    pub fn lambda_lower_bound(&self) -> i64 {
        (1 - self.aligned_mu as i64).min(self.multi_ratio_bound())
    }
}

fn general_position_mu(bundles: &[ValuationBundle]) -> u64 {
    let total: usize = bundles.iter().map(|b| b.cfg.len()).sum();
    let tangent = bundles
        .iter()
        .map(|b| b.cfg.tangent_count())
        .max()
        .unwrap_or(0);
    tangent.max(total.min(2)) as u64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundEntry {
    pub value: BigRational,
    /// Which result produced the value.
    pub source: &'static str,
}

impl BoundEntry {
    fn new(value: BigRational, source: &'static str) -> Self {
        Self { value, source }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// Degree bound for curves with the general element's multiplicities `v`.
    pub degree_bound: BoundEntry,
    pub mu_hat_upper: BoundEntry,
    pub ratio_bound: BoundEntry,
    pub multi_ratio_bound: BoundEntry,
    pub lambda_bound: BoundEntry,
    pub combinatorial_lambda_bound: Option<BoundEntry>,
    pub trivial_bound: BoundEntry,
}

impl BoundReport {
    pub fn new(bundle: &ValuationBundle, mv: &MultiValuation) -> Self {
        let v = bundle.record.multiplicities.values();
        Self {
            degree_bound: BoundEntry::new(
                bundle.degree_lower_bound(v).expect("v has the right shape"),
                "degree lower bound through the centers",
            ),
            mu_hat_upper: BoundEntry::new(
                integer(bundle.mu_hat_upper_bound()),
                "upper bound on the Seshadri-type constant",
            ),
            ratio_bound: BoundEntry::new(
                integer(bundle.ratio_bound()),
                "self-intersection ratio bound (tangent line excluded)",
            ),
            multi_ratio_bound: BoundEntry::new(
                integer(mv.multi_ratio_bound()),
                "multi-valuation self-intersection ratio bound",
            ),
            lambda_bound: BoundEntry::new(
                integer(mv.lambda_lower_bound()),
                "lambda_L* lower bound with aligned points",
            ),
            combinatorial_lambda_bound: bundle
                .combinatorial_lambda_bound()
                .ok()
                .map(|b| BoundEntry::new(integer(b), "combinatorial lambda_L* lower bound")),
            trivial_bound: BoundEntry::new(integer(bundle.trivial_bound()), "trivial bound 1 - n"),
        }
    }
}

/// Outcome of appending a satellite tail to a valuation ending in a free point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TailComparison {
    pub delta0_before: i64,
    pub delta0_after: i64,
    /// `δ-ratio(ν) - δ-ratio(ν')`.
    pub difference: BigRational,
}

impl TailComparison {
    pub fn delta0_not_increased(&self) -> bool {
        self.delta0_after <= self.delta0_before
    }

    pub fn difference_in_unit_interval(&self) -> bool {
        self.difference.is_positive() && self.difference < BigRational::one()
    }

    pub fn holds(&self) -> bool {
        self.delta0_not_increased() && self.difference_in_unit_interval()
    }
}

/// Extends `cfg` by a satellite tail, recomputes everything from scratch
/// and compares `δ₀` before and after. Violations are reported, not raised.
pub fn satellite_tail_comparison(
    cfg: &Configuration,
    targets: &[usize],
) -> Result<TailComparison, BoundsError> {
    let extended = cfg.extend_with_satellite_tail(targets)?;
    let before = ValuationBundle::new(cfg.clone());
    let after = ValuationBundle::new(extended);
    Ok(TailComparison {
        delta0_before: before.delta0,
        delta0_after: after.delta0,
        difference: before.delta_ratio() - after.delta_ratio(),
    })
}

/// Closed-form invariants of the Tono example valuation `ν_{a,e}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TonoExpected {
    pub beta_bar: Vec<BigInt>,
    pub tangent_value: BigInt,
    pub delta0: i64,
    /// `((e+2)a⁴ - 2a³) / (a² + 1)`.
    pub mu_hat: BigRational,
    /// `(e+2)a² - a`.
    pub mu_hat_bound: BigInt,
    /// `((a²+1)² - (e+2)a⁴ + 2a³) / (a²+1)²`.
    pub ratio: BigRational,
    /// `a² + 1`, the degree of the cuspidal curve.
    pub curve_degree: BigInt,
    /// `(e+1)a⁴ - 2a³ - 2a² - a` free points appended after the cusp resolution.
    pub free_points: usize,
}

impl TonoExpected {
    pub fn new(a: i64, e: i64) -> Self {
        let a_ = BigInt::from(a);
        let e_ = BigInt::from(e);
        let a2 = &a_ * &a_;
        let a3 = &a2 * &a_;
        let a4 = &a2 * &a2;
        let last: BigInt = (&e_ + 2) * &a4 - BigInt::from(2) * &a3;
        let degree: BigInt = &a2 + 1;
        let free: BigInt = (&e_ + 1) * &a4 - BigInt::from(2) * &a3 - BigInt::from(2) * &a2 - &a_;
        Self {
            beta_bar: vec![
                &a2 - &a_,
                a2.clone(),
                &a3 + BigInt::from(2) * &a_ + 1,
                last.clone(),
            ],
            tangent_value: a2.clone(),
            delta0: e,
            mu_hat: BigRational::new(last.clone(), degree.clone()),
            mu_hat_bound: (&e_ + 2) * &a2 - &a_,
            ratio: BigRational::new(&degree * &degree - &last, &degree * &degree),
            curve_degree: degree,
            free_points: free.to_usize().expect("non-negative for a >= 3"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TonoFamily {
    pub a: i64,
    pub e: i64,
    pub bundle: ValuationBundle,
    pub expected: TonoExpected,
    /// `μ̂` certified by the cuspidal curve.
    pub certified_mu_hat: BigRational,
    /// `C̃²/deg(C)²` for the cuspidal curve.
    pub curve_ratio: BigRational,
}

/// Builds `ν_{a,e}` from `(a²-a, a², a³+2a+1)` plus the free tail and checks
/// every closed-form invariant; any disagreement is an error.
pub fn tono_family(a: i64, e: i64) -> Result<TonoFamily, BoundsError> {
    if a < 3 || e < 0 {
        return Err(BoundsError::TonoParameters { a, e });
    }
    let expected = TonoExpected::new(a, e);
    let cfg = from_maximal_contact(&expected.beta_bar[..3], 0)?
        .append_free_chain(expected.free_points)
        .with_name(format!("tono(a={a},e={e})"));
    let bundle = ValuationBundle::new(cfg);

    let mismatch = |what: &'static str, got: String, want: String| BoundsError::TonoMismatch {
        a,
        e,
        what,
        got,
        expected: want,
    };
    let got_beta = &bundle.record.beta_bar.beta_bar;
    if *got_beta != expected.beta_bar {
        return Err(mismatch(
            "beta_bar",
            format!("{got_beta:?}"),
            format!("{:?}", expected.beta_bar),
        ));
    }
    if *bundle.tangent_value() != expected.tangent_value {
        return Err(mismatch(
            "t",
            bundle.tangent_value().to_string(),
            expected.tangent_value.to_string(),
        ));
    }
    if bundle.delta0 != expected.delta0 {
        return Err(mismatch("delta0", bundle.delta0.to_string(), e.to_string()));
    }
    let bound = bundle.mu_hat_upper_bound();
    if bound != expected.mu_hat_bound {
        return Err(mismatch(
            "mu_hat bound",
            bound.to_string(),
            expected.mu_hat_bound.to_string(),
        ));
    }

    // the cuspidal curve passes through every center with multiplicities v
    let v = bundle.record.multiplicities.values().to_vec();
    let curve_value: BigInt = v.iter().map(|x| x * x).sum();
    let certified = bundle
        .supraminimal_certificate(&curve_value, &expected.curve_degree)
        .ok_or_else(|| mismatch("supraminimal certificate", "none".into(), "some".into()))?;
    if certified != expected.mu_hat {
        return Err(mismatch(
            "mu_hat",
            certified.to_string(),
            expected.mu_hat.to_string(),
        ));
    }
    let curve = strict_transform_plane(&bundle.cfg, expected.curve_degree.clone(), v, true)
        .expect("the curve respects the proximity inequalities");
    let degree_sq = &expected.curve_degree * &expected.curve_degree;
    let curve_ratio = BigRational::new(curve.self_intersection(), degree_sq);
    if curve_ratio != expected.ratio {
        return Err(mismatch(
            "ratio",
            curve_ratio.to_string(),
            expected.ratio.to_string(),
        ));
    }
    if !npi_check(&bundle.cfg, expected.delta0 as u64).non_positive {
        return Err(mismatch(
            "non-positivity at delta0",
            "false".into(),
            "true".into(),
        ));
    }
    Ok(TonoFamily {
        a,
        e,
        bundle,
        expected,
        certified_mu_hat: certified,
        curve_ratio,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn cusp() -> ValuationBundle {
        ValuationBundle::new(Configuration::build(&[vec![], vec![1], vec![2, 1]], None).unwrap())
    }

    fn m_adic() -> ValuationBundle {
        ValuationBundle::new(Configuration::m_adic())
    }

    #[test]
    fn delta0_values() {
        assert_eq!(m_adic().delta0, -1);
        assert_eq!(cusp().delta0, 0);
        assert_eq!(tono_family(4, 1).unwrap().bundle.delta0, 1);
        assert_eq!(delta0(&Configuration::free_chain(2).unwrap()), 0);
    }

    #[test]
    fn degree_bounds() {
        assert_eq!(m_adic().degree_lower_bound(&big(&[5])).unwrap(), integer(5));
        assert_eq!(
            cusp().degree_lower_bound(&big(&[1, 1, 1])).unwrap(),
            ratio(4, 5)
        );
        let tono = tono_family(3, 0).unwrap();
        let v = tono.bundle.record.multiplicities.values().to_vec();
        assert_eq!(tono.bundle.degree_lower_bound(&v).unwrap(), ratio(36, 5));
        assert_eq!(
            cusp().degree_lower_bound(&big(&[1, 1])),
            Err(BoundsError::LengthMismatch {
                expected: 3,
                got: 2
            })
        );
        assert_eq!(
            cusp().degree_lower_bound(&big(&[1, -1, 0])),
            Err(BoundsError::NegativeMultiplicity { point: 2 })
        );
    }

    #[test]
    fn mu_hat_bounds_and_certificates() {
        assert_eq!(m_adic().mu_hat_upper_bound(), BigInt::one());
        assert_eq!(
            tono_family(3, 0).unwrap().bundle.mu_hat_upper_bound(),
            BigInt::from(15)
        );
        assert_eq!(
            tono_family(4, 1).unwrap().bundle.mu_hat_upper_bound(),
            BigInt::from(44)
        );
        assert_eq!(
            m_adic().supraminimal_certificate(&BigInt::one(), &BigInt::one()),
            None
        );
        let t30 = tono_family(3, 0).unwrap();
        assert_eq!(
            t30.bundle
                .supraminimal_certificate(&BigInt::from(108), &BigInt::from(10)),
            Some(ratio(54, 5))
        );
        let t41 = tono_family(4, 1).unwrap();
        assert_eq!(t41.certified_mu_hat, ratio(640, 17));
    }

    #[test]
    fn ratio_and_lambda_bounds() {
        assert_eq!(m_adic().ratio_bound(), 0);
        let t30 = tono_family(3, 0).unwrap().bundle;
        let t41 = tono_family(4, 1).unwrap().bundle;
        assert_eq!(t30.ratio_bound(), -1);
        assert_eq!(t41.ratio_bound(), -2);

        let single = MultiValuation::new(vec![t30.clone()], Some(2)).unwrap();
        assert_eq!(single.multi_ratio_bound(), -1);
        assert_eq!(single.lambda_lower_bound(), -1);
        let double = MultiValuation::new(vec![t30.clone(), t30.clone()], None).unwrap();
        assert_eq!(double.multi_ratio_bound(), -3);
        let mv41 = MultiValuation::new(vec![t41], Some(2)).unwrap();
        assert_eq!(mv41.lambda_lower_bound(), -2);

        let two_points = MultiValuation::new(vec![m_adic(), m_adic()], None).unwrap();
        assert_eq!(two_points.aligned_mu, 2);
        assert_eq!(two_points.lambda_lower_bound(), -1);

        assert_eq!(
            MultiValuation::new(vec![t30], Some(1)),
            Err(BoundsError::AlignedMu {
                given: 1,
                minimum: 2
            })
        );
        assert_eq!(
            MultiValuation::new(vec![], None),
            Err(BoundsError::NoValuations)
        );
    }

    #[test]
    fn multi_ratio_bound_with_given_deltas() {
        // δ₀ = 0, 1, 2 via Tono(3,0), Tono(4,1), Tono(3,2)
        let bundles = vec![
            tono_family(3, 0).unwrap().bundle,
            tono_family(4, 1).unwrap().bundle,
            tono_family(3, 2).unwrap().bundle,
        ];
        let mv = MultiValuation::new(bundles, None).unwrap();
        assert_eq!(mv.multi_ratio_bound(), -8);
    }

    #[test]
    fn combinatorial_bounds() {
        assert_eq!(
            cusp().combinatorial_lambda_bound().unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            tono_family(3, 0)
                .unwrap()
                .bundle
                .combinatorial_lambda_bound()
                .unwrap(),
            BigInt::from(-1)
        );
        let two = ValuationBundle::new(Configuration::free_chain(2).unwrap());
        assert_eq!(two.combinatorial_lambda_bound().unwrap(), BigInt::from(-1));
        assert_eq!(
            m_adic().combinatorial_lambda_bound(),
            Err(BoundsError::NoTangentLine)
        );
    }

    #[test]
    fn tail_comparisons() {
        let two = Configuration::free_chain(2).unwrap();
        let c = satellite_tail_comparison(&two, &[1]).unwrap();
        assert_eq!((c.delta0_before, c.delta0_after), (0, 0));
        assert_eq!(c.difference, ratio(1, 6));
        assert!(c.holds());

        let t30 = tono_family(3, 0).unwrap().bundle.cfg;
        let c = satellite_tail_comparison(&t30, &[16]).unwrap();
        assert!(c.delta0_after <= 0);

        let t41 = tono_family(4, 1).unwrap().bundle.cfg;
        for targets in t41.satellite_tail_choices(3) {
            let c = satellite_tail_comparison(&t41, &targets).unwrap();
            assert!(c.delta0_after <= 1);
        }
        let cusp_cfg = cusp().cfg;
        assert!(matches!(
            satellite_tail_comparison(&cusp_cfg, &[2]),
            Err(BoundsError::Config(ConfigError::TailBase))
        ));
    }

    #[test]
    fn tono_examples() {
        let t = tono_family(3, 0).unwrap();
        assert_eq!(t.expected.beta_bar, big(&[6, 9, 34, 108]));
        assert_eq!(t.certified_mu_hat, ratio(54, 5));
        assert_eq!(t.expected.mu_hat_bound, BigInt::from(15));
        assert_eq!(t.bundle.delta0, 0);
        assert_eq!(t.curve_ratio, ratio(-2, 25));
        assert_eq!(
            integer(t.expected.mu_hat_bound.clone()) / &t.certified_mu_hat,
            ratio(25, 18)
        );
        assert_eq!(t.bundle.cfg.len(), 17);

        let t = tono_family(4, 1).unwrap();
        assert_eq!(t.expected.beta_bar, big(&[12, 16, 73, 640]));
        assert_eq!(t.certified_mu_hat, ratio(640, 17));
        assert_eq!(t.expected.mu_hat_bound, BigInt::from(44));

        assert_eq!(
            tono_family(2, 0).unwrap_err(),
            BoundsError::TonoParameters { a: 2, e: 0 }
        );
        assert_eq!(
            tono_family(3, -1).unwrap_err(),
            BoundsError::TonoParameters { a: 3, e: -1 }
        );
    }

    #[test]
    fn report_entries() {
        let t = tono_family(4, 1).unwrap();
        let report = t.bundle.report(None);
        assert_eq!(report.mu_hat_upper.value, integer(44));
        assert_eq!(report.lambda_bound.value, integer(-2));
        assert_eq!(report.ratio_bound.value, integer(-2));
        let comb = report.combinatorial_lambda_bound.unwrap().value;
        assert!(comb >= report.trivial_bound.value);
        assert!(m_adic().report(None).combinatorial_lambda_bound.is_none());
    }
}
