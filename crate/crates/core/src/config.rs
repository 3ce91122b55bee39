//! Configurations of infinitely near points.
//!
//! A configuration is the ordered chain `p_1, ..., p_n` of centers blown up
//! by a divisorial valuation. Each point `p_i` (`i >= 2`) lies on the
//! exceptional divisor of its predecessor and possibly on the strict
//! transform of one older divisor; that proximity data is the whole
//! combinatorial identity of the valuation. Whether the strict transform of
//! the tangent line passes through a point is geometric and stored as an
//! explicit flag.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("a configuration needs at least one point")]
    Empty,
    #[error("p_1 cannot be proximate to any point")]
    FirstPointProximate,
    #[error("p_{point} refers to p_{target}, which is not an earlier point")]
    InvalidTarget { point: usize, target: usize },
    #[error("p_{point} must be proximate to p_{}", point - 1)]
    MissingPredecessor { point: usize },
    #[error("p_{point} is proximate to {count} points; at most two are possible")]
    TooManyProximities { point: usize, count: usize },
    #[error("p_{point} lists p_{target} twice")]
    DuplicateTarget { point: usize, target: usize },
    #[error(
        "p_{point} cannot be proximate to p_{target}: the strict transform of E_{target} \
         does not meet E_{}",
        point - 1
    )]
    InadmissibleSatellite { point: usize, target: usize },
    #[error("tangent count {count} is out of range for a {n}-point configuration")]
    TangentCount { count: usize, n: usize },
    #[error("the tangent line cannot pass through p_{point}: {reason}")]
    TangentThroughPoint { point: usize, reason: &'static str },
    #[error(
        "a satellite tail needs a configuration of at least two points ending in a free point"
    )]
    TailBase,
    #[error(
        "tail point {position} cannot choose p_{target}; admissible targets are {admissible:?}"
    )]
    TailChoice {
        position: usize,
        target: usize,
        admissible: Vec<usize>,
    },
}

/// Free or satellite, depending on how many points a center is proximate to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointKind {
    Free,
    Satellite,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointRecord {
    index: usize,
    /// Sorted in decreasing order, so the predecessor comes first.
    proximate_to: Vec<usize>,
    on_tangent: bool,
}

impl PointRecord {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn proximate_to(&self) -> &[usize] {
        &self.proximate_to
    }

    pub fn on_tangent(&self) -> bool {
        self.on_tangent
    }

    pub fn kind(&self) -> PointKind {
        if self.proximate_to.len() == 2 {
            PointKind::Satellite
        } else {
            PointKind::Free
        }
    }

    /// The older divisor a satellite point sits on, besides its predecessor's.
    pub fn satellite_target(&self) -> Option<usize> {
        (self.proximate_to.len() == 2).then(|| self.proximate_to[1])
    }
}

/// A validated, immutable chain of infinitely near points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    points: Vec<PointRecord>,
    name: Option<String>,
}

impl Configuration {
    /// Validates proximity lists (`lists[i]` holds the 1-based targets of
    /// `p_{i+1}`) and marks `p_1..p_k` as lying on the tangent line, where
    /// `k` defaults to `min(2, n)`.
    pub fn build(
        proximity_lists: &[Vec<usize>],
        tangent_count: Option<usize>,
    ) -> Result<Self, ConfigError> {
        let n = proximity_lists.len();
        if n == 0 {
            return Err(ConfigError::Empty);
        }
        let mut points: Vec<PointRecord> = Vec::with_capacity(n);
        for (offset, list) in proximity_lists.iter().enumerate() {
            let index = offset + 1;
            let mut targets = list.clone();
            targets.sort_unstable_by(|a, b| b.cmp(a));
            if index == 1 {
                if !targets.is_empty() {
                    return Err(ConfigError::FirstPointProximate);
                }
            } else {
                validate_targets(index, &targets, &points)?;
            }
            points.push(PointRecord {
                index,
                proximate_to: targets,
                on_tangent: false,
            });
        }
        let count = tangent_count.unwrap_or_else(|| n.min(2));
        mark_tangent(&mut points, count)?;
        Ok(Self { points, name: None })
    }

    /// The single-point configuration of the `m`-adic valuation.
    pub fn m_adic() -> Self {
        Self::build(&[vec![]], None).expect("one point is always valid")
    }

    /// `n` free points, each proximate only to its predecessor.
    pub fn free_chain(n: usize) -> Result<Self, ConfigError> {
        let lists: Vec<Vec<usize>> = (1..=n)
            .map(|i| if i == 1 { vec![] } else { vec![i - 1] })
            .collect();
        Self::build(&lists, None)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_m_adic(&self) -> bool {
        self.points.len() == 1
    }

    pub fn points(&self) -> &[PointRecord] {
        &self.points
    }

    /// The point `p_index` (1-based).
    pub fn point(&self, index: usize) -> &PointRecord {
        &self.points[index - 1]
    }

    pub fn last(&self) -> &PointRecord {
        self.points.last().expect("configurations are never empty")
    }

    pub fn proximity_lists(&self) -> Vec<Vec<usize>> {
        self.points.iter().map(|p| p.proximate_to.clone()).collect()
    }

    /// Number of points on the tangent line; they are `p_1..p_k`.
    pub fn tangent_count(&self) -> usize {
        self.points.iter().take_while(|p| p.on_tangent).count()
    }

    /// Indices `j` with `p_j -> p_index`.
    pub fn proximate_points(&self, index: usize) -> Vec<usize> {
        self.points[index..]
            .iter()
            .filter(|p| p.proximate_to.contains(&index))
            .map(|p| p.index)
            .collect()
    }

    /// Targets a new satellite point appended after `p_n` could choose
    /// besides `p_n`: the divisors whose strict transforms pass through `p_n`.
    pub fn admissible_satellite_targets(&self) -> &[usize] {
        &self.last().proximate_to
    }

    pub fn classify_points(&self) -> Vec<PointKind> {
        self.points.iter().map(PointRecord::kind).collect()
    }

    pub fn block_decomposition(&self) -> BlockDecomposition {
        BlockDecomposition::scan(self)
    }

    /// Appends `k` free points, each proximate only to its predecessor.
    pub fn append_free_chain(&self, k: usize) -> Configuration {
        let mut points = self.points.clone();
        let n = points.len();
        points.extend((n + 1..=n + k).map(|index| PointRecord {
            index,
            proximate_to: vec![index - 1],
            // p_2 always shares the tangent of p_1
            on_tangent: index == 2,
        }));
        Configuration {
            points,
            name: self.name.clone(),
        }
    }

    /// Appends satellite points. `targets[t]` is the older divisor (besides
    /// the predecessor's) that the `t`-th new point lies on; the first must
    /// be `n - 1`, and each later one must be admissible for its predecessor.
    pub fn extend_with_satellite_tail(
        &self,
        targets: &[usize],
    ) -> Result<Configuration, ConfigError> {
        let n = self.len();
        if n < 2 || self.last().kind() == PointKind::Satellite {
            return Err(ConfigError::TailBase);
        }
        let mut points = self.points.clone();
        for (position, &target) in targets.iter().enumerate() {
            let pred = points.last().expect("non-empty");
            let admissible = if position == 0 {
                vec![n - 1]
            } else {
                pred.proximate_to.clone()
            };
            if !admissible.contains(&target) {
                return Err(ConfigError::TailChoice {
                    position,
                    target,
                    admissible,
                });
            }
            let index = pred.index + 1;
            points.push(PointRecord {
                index,
                proximate_to: vec![index - 1, target],
                on_tangent: false,
            });
        }
        Ok(Configuration {
            points,
            name: self.name.clone(),
        })
    }

    /// Every admissible target sequence of the given tail length.
    pub fn satellite_tail_choices(&self, length: usize) -> Vec<Vec<usize>> {
        let n = self.len();
        if length == 0 {
            return vec![vec![]];
        }
        if n < 2 || self.last().kind() == PointKind::Satellite {
            return Vec::new();
        }
        // (targets so far, proximity set of the last appended point)
        let mut frontier = vec![(vec![n - 1], [n, n - 1])];
        for _ in 1..length {
            let mut next = Vec::with_capacity(frontier.len() * 2);
            for (targets, prox) in frontier {
                let last = prox[0] + 1;
                for choice in prox {
                    let mut t = targets.clone();
                    t.push(choice);
                    next.push((t, [last, choice]));
                }
            }
            frontier = next;
        }
        frontier.into_iter().map(|(t, _)| t).collect()
    }

    /// Largest tangent count the proximity structure allows: the line may
    /// continue through `p_3, p_4, ...` only while they are free.
    pub fn max_tangent_count(&self) -> usize {
        let n = self.len();
        if n == 1 {
            return 1;
        }
        let mut k = 2;
        while k < n && self.points[k].proximate_to == [k] {
            k += 1;
        }
        k
    }

    /// Same proximity data with a different tangent segment.
    pub fn with_tangent_count(&self, count: usize) -> Result<Configuration, ConfigError> {
        let mut points = self.points.clone();
        mark_tangent(&mut points, count)?;
        Ok(Configuration {
            points,
            name: self.name.clone(),
        })
    }
}

fn validate_targets(
    index: usize,
    targets: &[usize],
    earlier: &[PointRecord],
) -> Result<(), ConfigError> {
    if !targets.contains(&(index - 1)) {
        return Err(ConfigError::MissingPredecessor { point: index });
    }
    for &t in targets {
        if t == 0 || t >= index {
            return Err(ConfigError::InvalidTarget {
                point: index,
                target: t,
            });
        }
    }
    if let Some(w) = targets.windows(2).find(|w| w[0] == w[1]) {
        return Err(ConfigError::DuplicateTarget {
            point: index,
            target: w[0],
        });
    }
    if targets.len() > 2 {
        return Err(ConfigError::TooManyProximities {
            point: index,
            count: targets.len(),
        });
    }
    if let Some(&older) = targets.get(1) {
        if !earlier[index - 2].proximate_to.contains(&older) {
            return Err(ConfigError::InadmissibleSatellite {
                point: index,
                target: older,
            });
        }
    }
    Ok(())
}

fn mark_tangent(points: &mut [PointRecord], count: usize) -> Result<(), ConfigError> {
    let n = points.len();
    if count == 0 || count > n || (n >= 2 && count < 2) {
        return Err(ConfigError::TangentCount { count, n });
    }
    for p in points.iter().take(count).skip(2) {
        if p.proximate_to != [p.index - 1] {
            return Err(ConfigError::TangentThroughPoint {
                point: p.index,
                reason: "a line only passes through free points proximate to their predecessor",
            });
        }
    }
    for (i, p) in points.iter_mut().enumerate() {
        p.on_tangent = i < count;
    }
    Ok(())
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(name) = &self.name {
            write!(f, "{name}: ")?;
        }
        write!(f, "[")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (j, t) in p.proximate_to.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{t}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "] tangent={}", self.tangent_count())
    }
}

/// Decomposition `C_1 ∪ ... ∪ C_{g+1}` into blocks sharing endpoints. Block
/// `j <= g` is a run of free points followed by a maximal run of satellite
/// points; the last block is `p_{ℓ_g}` followed by free points only.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// `ℓ_0, ..., ℓ_{g+1}` with `ℓ_0 = 1` and `ℓ_{g+1} = n`.
    pub boundaries: Vec<usize>,
    /// `r_1, ..., r_g`: the last free point of each satellite-bearing block.
    pub last_free: Vec<usize>,
    pub genus: usize,
}

impl BlockDecomposition {
    fn scan(cfg: &Configuration) -> Self {
        let mut boundaries = vec![1];
        let mut last_free = Vec::new();
        let kinds = cfg.classify_points();
        let mut i = 0;
        while i < kinds.len() {
            if kinds[i] == PointKind::Satellite {
                // 1-based index of the free point just before the run
                last_free.push(i);
                while i < kinds.len() && kinds[i] == PointKind::Satellite {
                    i += 1;
                }
                boundaries.push(i);
            } else {
                i += 1;
            }
        }
        boundaries.push(cfg.len());
        let genus = last_free.len();
        Self {
            boundaries,
            last_free,
            genus,
        }
    }

    /// Block `C_j` for `1 <= j <= g + 1`, as a closed index range.
    pub fn block(&self, j: usize) -> RangeInclusive<usize> {
        self.boundaries[j - 1]..=self.boundaries[j]
    }

    pub fn blocks(&self) -> Vec<RangeInclusive<usize>> {
        (1..=self.genus + 1).map(|j| self.block(j)).collect()
    }
}
