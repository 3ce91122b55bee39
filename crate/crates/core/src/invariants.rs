//! Numerical invariants of a divisorial valuation, read off its
//! configuration: multiplicities, curvette vectors, maximal contact values,
//! Puiseux exponents, volumes and the value of the tangent line. Also the
//! inverse map from maximal contact values back to a configuration.
//!
//! Conventions: `v_i = ν(m_{i-1})` for `i = 1..n`, so `v_1 = β̄_0` and every
//! vector indexed by points has length `n`. All values are arbitrary
//! precision.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::config::{ConfigError, Configuration};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("point index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("vector of length {got} does not match the {expected} points of the configuration")]
    LengthMismatch { expected: usize, got: usize },
    #[error("maximal contact sequence is empty")]
    EmptySequence,
    #[error("maximal contact value β̄_{index} must be positive")]
    NonPositive { index: usize },
    #[error("gcd of β̄_0..β̄_{index} does not drop strictly")]
    GcdNotDecreasing { index: usize },
    #[error("gcd of the sequence never reaches 1; append further maximal contact values")]
    Incomplete,
    #[error("the sequence continues past β̄_{last}, which already closes it")]
    TooLong { last: usize },
    #[error("β̄_{index} is too small: it must exceed {bound}")]
    TooSmall { index: usize, bound: BigInt },
    #[error("recomputed maximal contact values {got:?} differ from the requested {expected:?}")]
    Mismatch {
        expected: Vec<BigInt>,
        got: Vec<BigInt>,
    },
    #[error(transparent)]
    Config(#[from] ConfigError),
}

/// `(v_1, ..., v_n)`: the multiplicities of a general element at each center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityVector(Vec<BigInt>);

impl MultiplicityVector {
    pub fn values(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum_of_squares(&self) -> BigInt {
        self.0.iter().map(|v| v * v).sum()
    }

    pub fn into_vec(self) -> Vec<BigInt> {
        self.0
    }
}

/// Solves `w_k = 1`, `w_i = 0` for `i > k` and `w_i = Σ_{j -> i, j <= k} w_j`
/// for `i < k`, pushing each finished value onto its proximity targets.
fn proximity_recursion(cfg: &Configuration, k: usize) -> Vec<BigInt> {
    let mut w = vec![BigInt::zero(); cfg.len()];
    w[k - 1] = BigInt::one();
    for i in (2..=k).rev() {
        let (head, tail) = w.split_at_mut(i - 1);
        let wi = &tail[0];
        if wi.is_zero() {
            continue;
        }
        for &t in cfg.point(i).proximate_to() {
            head[t - 1] += wi;
        }
    }
    w
}

pub fn multiplicity_sequence(cfg: &Configuration) -> MultiplicityVector {
    MultiplicityVector(proximity_recursion(cfg, cfg.len()))
}

/// Multiplicities at `p_1..p_n` of a curvette through `p_1..p_k`.
pub fn curvette_vector(cfg: &Configuration, k: usize) -> Result<Vec<BigInt>, InvariantError> {
    if k == 0 || k > cfg.len() {
        return Err(InvariantError::IndexOutOfRange {
            index: k,
            n: cfg.len(),
        });
    }
    Ok(proximity_recursion(cfg, k))
}

/// `Σ m_i m'_i`, the intersection number of two germs with the given
/// virtual multiplicities at the centers.
pub fn noether_pairing(
    cfg: &Configuration,
    m: &[BigInt],
    m_prime: &[BigInt],
) -> Result<BigInt, InvariantError> {
    for got in [m.len(), m_prime.len()] {
        if got != cfg.len() {
            return Err(InvariantError::LengthMismatch {
                expected: cfg.len(),
                got,
            });
        }
    }
    Ok(m.iter().zip(m_prime).map(|(a, b)| a * b).sum())
}

/// `β̄_0, ..., β̄_{g+1}` with the running gcds `e_j = gcd(β̄_0, ..., β̄_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalContactValues {
    pub beta_bar: Vec<BigInt>,
    pub gcd_chain: Vec<BigInt>,
}

impl MaximalContactValues {
    fn new(beta_bar: Vec<BigInt>) -> Self {
        let gcd_chain = gcd_chain(&beta_bar);
        Self {
            beta_bar,
            gcd_chain,
        }
    }

    pub fn genus(&self) -> usize {
        self.beta_bar.len() - 2
    }

    pub fn first(&self) -> &BigInt {
        &self.beta_bar[0]
    }

    /// `β̄_1`; for the `m`-adic valuation this is also the last value.
    pub fn second(&self) -> &BigInt {
        &self.beta_bar[1]
    }

    pub fn last(&self) -> &BigInt {
        self.beta_bar.last().expect("at least two values")
    }
}

fn gcd_chain(values: &[BigInt]) -> Vec<BigInt> {
    let mut chain: Vec<BigInt> = Vec::with_capacity(values.len());
    for v in values {
        let e = match chain.last() {
            Some(prev) => prev.gcd(v),
            None => v.clone(),
        };
        chain.push(e);
    }
    chain
}

/// `β̄_0 = v_1`, `β̄_j` the value of a curvette through `p_1..p_{r_j}`,
/// and `β̄_{g+1} = Σ v_i²`.
pub fn maximal_contact_values(cfg: &Configuration) -> MaximalContactValues {
    let v = multiplicity_sequence(cfg);
    let blocks = cfg.block_decomposition();
    let mut beta_bar = Vec::with_capacity(blocks.genus + 2);
    beta_bar.push(v.values()[0].clone());
    for &r in &blocks.last_free {
        let w = proximity_recursion(cfg, r);
        beta_bar.push(w.iter().zip(v.values()).map(|(a, b)| a * b).sum());
    }
    beta_bar.push(v.sum_of_squares());
    MaximalContactValues::new(beta_bar)
}

/// `β̄_{g+1}` as the value of a curvette through every center, computed
/// without going through `Σ v_i²`.
pub fn last_maximal_contact_by_curvette(cfg: &Configuration) -> BigInt {
    let v = multiplicity_sequence(cfg);
    let w = proximity_recursion(cfg, cfg.len());
    noether_pairing(cfg, v.values(), &w).expect("lengths agree")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PuiseuxExponents {
    /// `β'_0 = 1, β'_1, ..., β'_{g+1}`.
    pub beta_prime: Vec<BigRational>,
    /// Run lengths of equal multiplicities over each closed block `C_j`.
    pub run_lengths: Vec<Vec<usize>>,
}

/// `⟨a_1; a_2, ..., a_s⟩ = a_1 + 1/(a_2 + 1/(... + 1/a_s))`.
pub fn continued_fraction(digits: &[usize]) -> BigRational {
    let mut iter = digits.iter().rev();
    let mut acc = match iter.next() {
        Some(&last) => BigRational::from_integer(BigInt::from(last)),
        None => return BigRational::zero(),
    };
    for &d in iter {
        acc = BigRational::from_integer(BigInt::from(d)) + acc.recip();
    }
    acc
}

/// Per block `C_j = {p_{ℓ_{j-1}}, ..., p_{ℓ_j}}` (closed, the shared
/// endpoint included), the lengths of the runs of equal `v_i` form the
/// continued fraction of `β'_j`.
pub fn puiseux_exponents(cfg: &Configuration) -> PuiseuxExponents {
    let v = multiplicity_sequence(cfg);
    let blocks = cfg.block_decomposition();
    let mut beta_prime = vec![BigRational::one()];
    let mut run_lengths = Vec::with_capacity(blocks.genus + 1);
    for range in blocks.blocks() {
        let values = &v.values()[range.start() - 1..*range.end()];
        let mut runs: Vec<usize> = Vec::new();
        let mut prev: Option<&BigInt> = None;
        for value in values {
            match (prev, runs.last_mut()) {
                (Some(p), Some(count)) if p == value => *count += 1,
                _ => runs.push(1),
            }
            prev = Some(value);
        }
        beta_prime.push(continued_fraction(&runs));
        run_lengths.push(runs);
    }
    PuiseuxExponents {
        beta_prime,
        run_lengths,
    }
}

pub fn volume(cfg: &Configuration) -> BigRational {
    let beta = maximal_contact_values(cfg);
    BigRational::new(BigInt::one(), beta.last().clone())
}

pub fn normalized_volume(cfg: &Configuration) -> BigRational {
    let beta = maximal_contact_values(cfg);
    BigRational::new(beta.first() * beta.first(), beta.last().clone())
}

/// `t(ν)`: the value of the tangent line, which has multiplicity one at
/// each center it passes through; `1` for the `m`-adic valuation.
pub fn tangent_value(cfg: &Configuration) -> BigInt {
    if cfg.is_m_adic() {
        return BigInt::one();
    }
    let v = multiplicity_sequence(cfg);
    v.values()[..cfg.tangent_count()].iter().sum()
}

/// The derived-invariant bundle of one valuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantRecord {
    pub multiplicities: MultiplicityVector,
    pub beta_bar: MaximalContactValues,
    pub puiseux: PuiseuxExponents,
    pub volume: BigRational,
    pub normalized_volume: BigRational,
    pub tangent_value: BigInt,
    pub is_m_adic: bool,
}

impl InvariantRecord {
    pub fn compute(cfg: &Configuration) -> Self {
        let multiplicities = multiplicity_sequence(cfg);
        let beta_bar = maximal_contact_values(cfg);
        let puiseux = puiseux_exponents(cfg);
        let last = beta_bar.last().clone();
        let first = beta_bar.first().clone();
        let tangent_value = if cfg.is_m_adic() {
            BigInt::one()
        } else {
            multiplicities.values()[..cfg.tangent_count()].iter().sum()
        };
        Self {
            volume: BigRational::new(BigInt::one(), last.clone()),
            normalized_volume: BigRational::new(&first * &first, last),
            multiplicities,
            beta_bar,
            puiseux,
            tangent_value,
            is_m_adic: cfg.is_m_adic(),
        }
    }
}

/// Rebuilds a configuration from maximal contact values.
///
/// `beta_bar` lists `β̄_0, ..., β̄_g` (the gcd first reaching 1 at `β̄_g`),
/// optionally followed by `β̄_{g+1}`. Without `β̄_{g+1}` the configuration
/// stops at the last satellite point; with it, free points are appended
/// until `Σ v_i² = β̄_{g+1}`. `trailing_free` further free points follow.
/// The result is recomputed and compared before it is returned.
pub fn from_maximal_contact(
    beta_bar: &[BigInt],
    trailing_free: usize,
) -> Result<Configuration, InvariantError> {
    if beta_bar.is_empty() {
        return Err(InvariantError::EmptySequence);
    }
    if let Some(index) = beta_bar.iter().position(|b| !b.is_positive()) {
        return Err(InvariantError::NonPositive { index });
    }
    let gcds = gcd_chain(beta_bar);
    for j in 1..gcds.len() {
        if gcds[j - 1].is_one() {
            break;
        }
        if gcds[j] >= gcds[j - 1] {
            return Err(InvariantError::GcdNotDecreasing { index: j });
        }
    }
    let genus = gcds
        .iter()
        .position(BigInt::is_one)
        .ok_or(InvariantError::Incomplete)?;
    if beta_bar.len() > genus + 2 {
        return Err(InvariantError::TooLong { last: genus + 1 });
    }

    // characteristic exponents: β_1 = β̄_1, β_{j+1} = β̄_{j+1} - n_j β̄_j + β_j
    let mut characteristic: Vec<BigInt> = vec![beta_bar[0].clone()];
    if genus >= 1 {
        if beta_bar[1] <= beta_bar[0] {
            return Err(InvariantError::TooSmall {
                index: 1,
                bound: beta_bar[0].clone(),
            });
        }
        characteristic.push(beta_bar[1].clone());
    }
    for j in 1..genus {
        let n_j = &gcds[j - 1] / &gcds[j];
        let bound = &n_j * &beta_bar[j];
        if beta_bar[j + 1] <= bound {
            return Err(InvariantError::TooSmall {
                index: j + 1,
                bound,
            });
        }
        let next = &beta_bar[j + 1] - bound + &characteristic[j];
        characteristic.push(next);
    }

    let mut lists: Vec<Vec<usize>> = vec![vec![]];
    for j in 1..=genus {
        let (numer, denom) = if j == 1 {
            (characteristic[1].clone(), characteristic[0].clone())
        } else {
            (
                &characteristic[j] - &characteristic[j - 1],
                gcds[j - 1].clone(),
            )
        };
        append_euclidean_block(&mut lists, j == 1, &numer, &denom);
    }
    let mut cfg = Configuration::build(&lists, None)?;

    let mut expected: Vec<BigInt> = beta_bar[..=genus].to_vec();
    let closing = if beta_bar.len() == genus + 2 {
        let base = multiplicity_sequence(&cfg).sum_of_squares();
        let target = &beta_bar[genus + 1];
        if *target < base {
            return Err(InvariantError::TooSmall {
                index: genus + 1,
                bound: base - 1,
            });
        }
        let extra = (target - &base)
            .to_usize()
            .expect("free point count fits in memory");
        cfg = cfg.append_free_chain(extra);
        Some(target.clone())
    } else {
        None
    };
    cfg = cfg.append_free_chain(trailing_free);

    let got = maximal_contact_values(&cfg).beta_bar;
    let last = closing.map_or_else(
        || got.last().cloned().expect("non-empty"),
        |c| c + BigInt::from(trailing_free),
    );
    expected.push(last);
    if got != expected {
        return Err(InvariantError::Mismatch { expected, got });
    }
    Ok(cfg)
}

/// Appends the centers of one block given by the Euclidean algorithm on
/// `numer / denom`: the quotients are the lengths of the runs of equal
/// multiplicity. Run one is free, the first point of run two is free, and
/// every later point is satellite on the divisor closing the previous run
/// (or, at the start of a run, the one before that).
fn append_euclidean_block(
    lists: &mut Vec<Vec<usize>>,
    first_block: bool,
    numer: &BigInt,
    denom: &BigInt,
) {
    let quotients = euclidean_quotients(numer, denom);
    // last index of each completed run; run one of a later block starts at
    // the shared endpoint
    let mut run_ends: Vec<usize> = Vec::with_capacity(quotients.len());
    let first_run_new = if first_block {
        quotients[0] - 1
    } else {
        quotients[0]
    };
    for _ in 0..first_run_new {
        let index = lists.len() + 1;
        lists.push(vec![index - 1]);
    }
    run_ends.push(lists.len());
    for (k, &q) in quotients.iter().enumerate().skip(1) {
        for t in 0..q {
            let index = lists.len() + 1;
            let older = if t > 0 {
                Some(run_ends[k - 1])
            } else if k >= 2 {
                Some(run_ends[k - 2])
            } else {
                None
            };
            let mut prox = vec![index - 1];
            prox.extend(older);
            lists.push(prox);
        }
        run_ends.push(lists.len());
    }
}

fn euclidean_quotients(numer: &BigInt, denom: &BigInt) -> Vec<usize> {
    let mut a = numer.clone();
    let mut b = denom.clone();
    let mut quotients = Vec::new();
    while !b.is_zero() {
        let (q, r) = a.div_rem(&b);
        quotients.push(q.to_usize().expect("run length fits in memory"));
        a = b;
        b = r;
    }
    quotients
}

/// Elements of the semigroup generated by the maximal contact values, up to
/// `limit`.
pub fn semigroup_values(cfg: &Configuration, limit: usize) -> Vec<usize> {
    let beta = maximal_contact_values(cfg);
    let generators: Vec<usize> = beta
        .beta_bar
        .iter()
        .filter_map(BigInt::to_usize)
        .filter(|&g| g <= limit)
        .collect();
    let mut reachable = vec![false; limit + 1];
    reachable[0] = true;
    for x in 1..=limit {
        reachable[x] = generators.iter().any(|&g| g <= x && reachable[x - g]);
    }
    (0..=limit).filter(|&x| reachable[x]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::PointKind;

    fn big(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    fn cusp() -> Configuration {
        Configuration::build(&[vec![], vec![1], vec![2, 1]], None).unwrap()
    }

    fn tono_3_0() -> Configuration {
        from_maximal_contact(&big(&[6, 9, 34]), 0)
            .unwrap()
            .append_free_chain(6)
    }

    #[test]
    fn multiplicities() {
        assert_eq!(
            multiplicity_sequence(&Configuration::m_adic()).values(),
            big(&[1])
        );
        assert_eq!(multiplicity_sequence(&cusp()).values(), big(&[2, 1, 1]));
        let tono = tono_3_0();
        assert_eq!(
            multiplicity_sequence(&tono).values(),
            big(&[6, 3, 3, 3, 3, 3, 3, 3, 1, 1, 1, 1, 1, 1, 1, 1, 1])
        );
        assert_eq!(
            multiplicity_sequence(&tono).sum_of_squares(),
            BigInt::from(108)
        );
    }

    #[test]
    fn tono_point_structure() {
        let tono = tono_3_0();
        let satellites: Vec<usize> = tono
            .classify_points()
            .iter()
            .enumerate()
            .filter(|(_, k)| **k == PointKind::Satellite)
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(satellites, vec![3, 10, 11]);
        let blocks = tono.block_decomposition();
        assert_eq!(blocks.genus, 2);
        assert_eq!(blocks.blocks(), vec![1..=3, 3..=11, 11..=17]);
        assert_eq!(blocks.last_free, vec![2, 9]);
    }

    #[test]
    fn curvettes() {
        let cfg = cusp();
        assert_eq!(curvette_vector(&cfg, 1).unwrap(), big(&[1, 0, 0]));
        assert_eq!(curvette_vector(&cfg, 2).unwrap(), big(&[1, 1, 0]));
        assert_eq!(curvette_vector(&cfg, 3).unwrap(), big(&[2, 1, 1]));
        assert!(matches!(
            curvette_vector(&cfg, 4),
            Err(InvariantError::IndexOutOfRange { index: 4, n: 3 })
        ));
        assert!(curvette_vector(&cfg, 0).is_err());
    }

    #[test]
    fn pairings() {
        let cfg = cusp();
        let v = multiplicity_sequence(&cfg);
        let w = curvette_vector(&cfg, 2).unwrap();
        assert_eq!(
            noether_pairing(&cfg, &w, v.values()).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            noether_pairing(&cfg, &big(&[0, 0, 0]), v.values()).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            noether_pairing(&cfg, &big(&[1, 1]), v.values()),
            Err(InvariantError::LengthMismatch {
                expected: 3,
                got: 2
            })
        );
        let tono = tono_3_0();
        let tv = multiplicity_sequence(&tono);
        assert_eq!(
            noether_pairing(&tono, tv.values(), tv.values()).unwrap(),
            BigInt::from(108)
        );
    }

    #[test]
    fn maximal_contact() {
        assert_eq!(
            maximal_contact_values(&Configuration::m_adic()).beta_bar,
            big(&[1, 1])
        );
        let cusp_values = maximal_contact_values(&cusp());
        assert_eq!(cusp_values.beta_bar, big(&[2, 3, 6]));
        assert_eq!(cusp_values.gcd_chain, big(&[2, 1, 1]));
        assert_eq!(cusp_values.genus(), 1);
        assert_eq!(
            maximal_contact_values(&tono_3_0()).beta_bar,
            big(&[6, 9, 34, 108])
        );
        assert_eq!(
            last_maximal_contact_by_curvette(&tono_3_0()),
            BigInt::from(108)
        );
    }

    #[test]
    fn puiseux() {
        let p = puiseux_exponents(&cusp());
        assert_eq!(
            p.beta_prime,
            vec![
                BigRational::one(),
                BigRational::new(3.into(), 2.into()),
                BigRational::one()
            ]
        );
        assert_eq!(p.run_lengths, vec![vec![1, 2], vec![1]]);
        let two = Configuration::free_chain(2).unwrap();
        assert_eq!(
            puiseux_exponents(&two).beta_prime,
            vec![BigRational::one(), BigRational::from_integer(2.into())]
        );
        let tono = puiseux_exponents(&tono_3_0());
        assert_eq!(tono.beta_prime[1], BigRational::new(9.into(), 6.into()));
        assert_eq!(tono.run_lengths[1], vec![6, 3]);
        assert_eq!(tono.beta_prime[3], BigRational::from_integer(7.into()));
    }

    #[test]
    fn continued_fractions() {
        assert_eq!(
            continued_fraction(&[1, 2]),
            BigRational::new(3.into(), 2.into())
        );
        assert_eq!(
            continued_fraction(&[2]),
            BigRational::from_integer(2.into())
        );
        assert_eq!(
            continued_fraction(&[1, 1, 2]),
            BigRational::new(5.into(), 3.into())
        );
    }

    #[test]
    fn volumes() {
        let one = Configuration::m_adic();
        assert_eq!(volume(&one), BigRational::one());
        assert_eq!(normalized_volume(&one), BigRational::one());
        assert_eq!(volume(&cusp()), BigRational::new(1.into(), 6.into()));
        assert_eq!(
            normalized_volume(&cusp()),
            BigRational::new(2.into(), 3.into())
        );
        let tono_4_1 = from_maximal_contact(&big(&[12, 16, 73, 640]), 0).unwrap();
        assert_eq!(volume(&tono_4_1), BigRational::new(1.into(), 640.into()));
        assert_eq!(
            normalized_volume(&tono_4_1),
            BigRational::new(9.into(), 40.into())
        );
    }

    #[test]
    fn tangent_values() {
        assert_eq!(tangent_value(&Configuration::m_adic()), BigInt::one());
        assert_eq!(tangent_value(&cusp()), BigInt::from(3));
        assert_eq!(tangent_value(&tono_3_0()), BigInt::from(9));
        let three_free = Configuration::free_chain(3).unwrap();
        assert_eq!(tangent_value(&three_free), BigInt::from(2));
        assert_eq!(
            tangent_value(&three_free.with_tangent_count(3).unwrap()),
            BigInt::from(3)
        );
    }

    #[test]
    fn record_is_consistent() {
        let record = InvariantRecord::compute(&tono_3_0());
        assert_eq!(record.tangent_value, BigInt::from(9));
        assert_eq!(
            record.normalized_volume,
            BigRational::from_integer(36.into()) * &record.volume
        );
        assert!(!record.is_m_adic);
        assert!(InvariantRecord::compute(&Configuration::m_adic()).is_m_adic);
    }

    #[test]
    fn inverse_of_maximal_contact() {
        assert_eq!(
            from_maximal_contact(&big(&[1, 1]), 0).unwrap(),
            Configuration::m_adic()
        );
        assert_eq!(
            from_maximal_contact(&big(&[1]), 0).unwrap(),
            Configuration::m_adic()
        );
        assert_eq!(from_maximal_contact(&big(&[2, 3, 6]), 0).unwrap(), cusp());
        assert_eq!(from_maximal_contact(&big(&[2, 3]), 0).unwrap(), cusp());
        assert_eq!(
            from_maximal_contact(&big(&[1, 5]), 0).unwrap(),
            Configuration::free_chain(5).unwrap()
        );
        assert_eq!(
            from_maximal_contact(&big(&[2, 3, 6]), 2).unwrap(),
            cusp().append_free_chain(2)
        );
        assert_eq!(
            from_maximal_contact(&big(&[6, 9, 34, 108]), 0).unwrap(),
            tono_3_0()
        );
        let skipping = from_maximal_contact(&big(&[4, 6, 13]), 0).unwrap();
        assert_eq!(
            multiplicity_sequence(&skipping).values(),
            big(&[4, 2, 2, 1, 1])
        );
    }

    #[test]
    fn inverse_rejects_bad_sequences() {
        assert_eq!(
            from_maximal_contact(&[], 0),
            Err(InvariantError::EmptySequence)
        );
        assert_eq!(
            from_maximal_contact(&big(&[2, 0]), 0),
            Err(InvariantError::NonPositive { index: 1 })
        );
        assert_eq!(
            from_maximal_contact(&big(&[2, 4]), 0),
            Err(InvariantError::GcdNotDecreasing { index: 1 })
        );
        assert_eq!(
            from_maximal_contact(&big(&[4, 6]), 0),
            Err(InvariantError::Incomplete)
        );
        assert!(matches!(
            from_maximal_contact(&big(&[2, 3, 6, 7]), 0),
            Err(InvariantError::TooLong { last: 2 })
        ));
        assert!(matches!(
            from_maximal_contact(&big(&[3, 2]), 0),
            Err(InvariantError::TooSmall { index: 1, .. })
        ));
        assert!(matches!(
            from_maximal_contact(&big(&[2, 3, 5]), 0),
            Err(InvariantError::TooSmall { index: 2, .. })
        ));
        assert!(matches!(
            from_maximal_contact(&big(&[4, 6, 11]), 0),
            Err(InvariantError::TooSmall { index: 2, .. })
        ));
    }

    #[test]
    fn semigroup() {
        assert_eq!(
            semigroup_values(&Configuration::m_adic(), 3),
            vec![0, 1, 2, 3]
        );
        assert_eq!(semigroup_values(&cusp(), 7), vec![0, 2, 3, 4, 5, 6, 7]);
        assert_eq!(semigroup_values(&cusp(), 0), vec![0]);
        assert_eq!(semigroup_values(&tono_3_0(), 20), vec![0, 6, 9, 12, 15, 18]);
    }
}
