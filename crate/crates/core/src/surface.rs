//! Intersection theory on the blown-up plane `X_ν` and on the blown-up
//! Hirzebruch surface `Y_ν`.
//!
//! Classes are written `d·L* - Σ m_i E_i*` on `X_ν` and
//! `a·F* + b·M* - Σ m_i E_i*` on `Y_ν`, where `F·M = 1`, `F² = 0`, `M² = δ`
//! and the `E_i*` are orthogonal to everything else with `E_i*² = -1`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::config::Configuration;
use crate::invariants::{maximal_contact_values, multiplicity_sequence, tangent_value};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("classes live over {left} and {right} points")]
    SizeMismatch { left: usize, right: usize },
    #[error("classes live on F_{left} and F_{right}")]
    DeltaMismatch { left: u64, right: u64 },
    #[error("degree {0} is negative")]
    NegativeDegree(BigInt),
    #[error("multiplicity at p_{point} is below the sum over its proximate points")]
    ProximityInequality { point: usize },
    #[error("a polynomial needs at least one monomial")]
    EmptySupport,
    #[error("every monomial is divisible by {0}; divide out the common factor first")]
    CommonFactor(&'static str),
}

/// `d·L* - Σ m_i E_i*` on the blown-up plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneClass {
    pub degree: BigInt,
    pub mults: Vec<BigInt>,
}

impl PlaneClass {
    pub fn new(degree: impl Into<BigInt>, mults: Vec<BigInt>) -> Self {
        Self {
            degree: degree.into(),
            mults,
        }
    }

    /// Pull-back of a general line.
    pub fn line(n: usize) -> Self {
        Self::new(1, vec![BigInt::zero(); n])
    }

    /// `E_i*` written as `0·L* - (-1)·E_i*`.
    pub fn exceptional_total(n: usize, i: usize) -> Self {
        let mut mults = vec![BigInt::zero(); n];
        mults[i - 1] = -BigInt::one();
        Self::new(0, mults)
    }

    pub fn self_intersection(&self) -> BigInt {
        intersect_plane(self, self).expect("same size")
    }
}

pub fn intersect_plane(x: &PlaneClass, y: &PlaneClass) -> Result<BigInt, SurfaceError> {
    if x.mults.len() != y.mults.len() {
        return Err(SurfaceError::SizeMismatch {
            left: x.mults.len(),
            right: y.mults.len(),
        });
    }
    let exceptional: BigInt = x.mults.iter().zip(&y.mults).map(|(a, b)| a * b).sum();
    Ok(&x.degree * &y.degree - exceptional)
}

/// The class `d·L* - Σ m_i E_i*` of the strict transform of a plane curve of
/// degree `d` with multiplicity `m_i` at `p_i`. With `validate`, the
/// proximity inequalities `m_i >= Σ_{j -> i} m_j` are checked too.
pub fn strict_transform_plane(
    cfg: &Configuration,
    degree: impl Into<BigInt>,
    mults: Vec<BigInt>,
    validate: bool,
) -> Result<PlaneClass, SurfaceError> {
    let degree = degree.into();
    if degree.is_negative() {
        return Err(SurfaceError::NegativeDegree(degree));
    }
    if mults.len() != cfg.len() {
        return Err(SurfaceError::SizeMismatch {
            left: cfg.len(),
            right: mults.len(),
        });
    }
    if validate {
        let mut excess = mults.clone();
        for p in cfg.points().iter().skip(1) {
            for &t in p.proximate_to() {
                excess[t - 1] -= &mults[p.index() - 1];
            }
        }
        if let Some(point) = excess.iter().position(|e| e.is_negative()) {
            return Err(SurfaceError::ProximityInequality { point: point + 1 });
        }
    }
    Ok(PlaneClass::new(degree, mults))
}

/// `a·F* + b·M* - Σ m_i E_i*` on a blowup of `F_δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HirzebruchClass {
    pub a: BigInt,
    pub b: BigInt,
    pub mults: Vec<BigInt>,
    pub delta: u64,
}

impl HirzebruchClass {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, mults: Vec<BigInt>, delta: u64) -> Self {
        Self {
            a: a.into(),
            b: b.into(),
            mults,
            delta,
        }
    }

    pub fn fiber(n: usize, delta: u64) -> Self {
        Self::new(1, 0, vec![BigInt::zero(); n], delta)
    }

    pub fn section(n: usize, delta: u64) -> Self {
        Self::new(0, 1, vec![BigInt::zero(); n], delta)
    }

    pub fn self_intersection(&self) -> BigInt {
        intersect_hirzebruch(self, self).expect("same surface")
    }
}

pub fn intersect_hirzebruch(
    x: &HirzebruchClass,
    y: &HirzebruchClass,
) -> Result<BigInt, SurfaceError> {
    if x.delta != y.delta {
        return Err(SurfaceError::DeltaMismatch {
            left: x.delta,
            right: y.delta,
        });
    }
    if x.mults.len() != y.mults.len() {
        return Err(SurfaceError::SizeMismatch {
            left: x.mults.len(),
            right: y.mults.len(),
        });
    }
    let delta = BigInt::from(x.delta);
    let exceptional: BigInt = x.mults.iter().zip(&y.mults).map(|(a, b)| a * b).sum();
    Ok(&x.a * &y.b + &y.a * &x.b + delta * &x.b * &y.b - exceptional)
}

/// `Λ = β̄_0·F* + t(ν)·M* - Σ v_i E_i*` on the blowup of `F_δ` at the centers.
pub fn lambda_divisor(cfg: &Configuration, delta: u64) -> HirzebruchClass {
    let beta = maximal_contact_values(cfg);
    HirzebruchClass::new(
        beta.first().clone(),
        tangent_value(cfg),
        multiplicity_sequence(cfg).into_vec(),
        delta,
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NpiCheck {
    /// `2·β̄_0·t + t²·δ - β̄_{g+1}`, which is also `Λ²`.
    pub witness: BigInt,
    pub non_positive: bool,
}

/// Whether the valuation, moved to `F_δ`, is non-positive at infinity:
/// `2·β̄_0·t + t²·δ >= β̄_{g+1}`.
pub fn npi_check(cfg: &Configuration, delta: u64) -> NpiCheck {
    let beta = maximal_contact_values(cfg);
    let t = tangent_value(cfg);
    let witness = npi_witness(beta.first(), &t, beta.last(), delta);
    NpiCheck {
        non_positive: !witness.is_negative(),
        witness,
    }
}

pub(crate) fn npi_witness(beta0: &BigInt, t: &BigInt, last: &BigInt, delta: u64) -> BigInt {
    BigInt::from(2) * beta0 * t + t * t * BigInt::from(delta) - last
}

/// Curves generating the cone of curves of `Y_ν` in the non-positive case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    /// Strict transform of the fiber through the center, i.e. the tangent line.
    Fiber,
    /// Strict transform of the special section.
    SpecialSection,
    /// Strict transform of `E_i`.
    Exceptional(usize),
}

impl Generator {
    pub fn class(self, cfg: &Configuration, delta: u64) -> HirzebruchClass {
        let n = cfg.len();
        match self {
            Generator::Fiber => {
                let mults = cfg
                    .points()
                    .iter()
                    .map(|p| BigInt::from(u8::from(p.on_tangent())))
                    .collect();
                HirzebruchClass::new(1, 0, mults, delta)
            }
            Generator::SpecialSection => {
                let mut mults = vec![BigInt::zero(); n];
                mults[0] = BigInt::one();
                HirzebruchClass::new(-BigInt::from(delta), 1, mults, delta)
            }
            Generator::Exceptional(i) => {
                let mut mults = vec![BigInt::zero(); n];
                mults[i - 1] = -BigInt::one();
                for j in cfg.proximate_points(i) {
                    mults[j - 1] = BigInt::one();
                }
                HirzebruchClass::new(0, 0, mults, delta)
            }
        }
    }
}

impl std::fmt::Display for Generator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Generator::Fiber => write!(f, "F~1"),
            Generator::SpecialSection => write!(f, "M~0"),
            Generator::Exceptional(i) => write!(f, "E~{i}"),
        }
    }
}

/// `Λ` paired with every generator of the cone of curves.
pub fn nef_on_generators(cfg: &Configuration, delta: u64) -> Vec<(Generator, BigInt)> {
    let lambda = lambda_divisor(cfg, delta);
    let generators = [Generator::Fiber, Generator::SpecialSection]
        .into_iter()
        .chain((1..=cfg.len()).map(Generator::Exceptional));
    generators
        .map(|g| {
            let pairing =
                intersect_hirzebruch(&lambda, &g.class(cfg, delta)).expect("same surface");
            (g, pairing)
        })
        .collect()
}

/// Support of a polynomial in `u, v`: exponent pairs `(i, j)` of `u^i v^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePolynomial {
    support: BTreeSet<(u32, u32)>,
}

impl AffinePolynomial {
    pub fn new(support: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, SurfaceError> {
        let support: BTreeSet<_> = support.into_iter().collect();
        if support.is_empty() {
            return Err(SurfaceError::EmptySupport);
        }
        Ok(Self { support })
    }

    pub fn support(&self) -> &BTreeSet<(u32, u32)> {
        &self.support
    }

    pub fn degree_u(&self) -> u32 {
        self.support.iter().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn degree_v(&self) -> u32 {
        self.support.iter().map(|&(_, j)| j).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.support.iter().map(|&(i, j)| i + j).max().unwrap_or(0)
    }
}

/// Class `a·F + b·M` of the closure in `F_δ` of the affine curve `f = 0`,
/// where `u = 0` is the fiber through the center and `v = 0` the special
/// section: `b = max j` and `a = max (i - δ·j)` over the support.
///
/// The curves `u = 0` and `v = 0` themselves are accepted; any other
/// polynomial with a common monomial factor is rejected.
pub fn hirzebruch_class_of_polynomial(
    f: &AffinePolynomial,
    delta: u64,
) -> Result<(i64, i64), SurfaceError> {
    let is_fiber_or_section =
        f.support.len() == 1 && matches!(f.support.first(), Some((1, 0)) | Some((0, 1)));
    if !is_fiber_or_section {
        if f.support.iter().all(|&(i, _)| i > 0) {
            return Err(SurfaceError::CommonFactor("u"));
        }
        if f.support.iter().all(|&(_, j)| j > 0) {
            return Err(SurfaceError::CommonFactor("v"));
        }
    }
    let delta = delta as i64;
    let b = f
        .support
        .iter()
        .map(|&(_, j)| j as i64)
        .max()
        .expect("non-empty");
    let a = f
        .support
        .iter()
        .map(|&(i, j)| i as i64 - delta * j as i64)
        .max()
        .expect("non-empty");
    Ok((a, b))
}
