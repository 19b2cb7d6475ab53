//! Pareto optimization for subset selection.
//!
//! Subset selection (pick at most `k` of `n` items minimizing `f`) is
//! treated as a bi-objective problem over `(f(x), |x|)`. An archive of
//! mutually non-dominated bit vectors is evolved by single-parent bit-wise
//! mutation. Candidates with `|x| >= 2k` are infeasible: they get value
//! `+inf`, are charged one evaluation without calling the evaluator, and
//! never enter the archive.

use rand::Rng as _;

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::parameter::Parameter;
use crate::rng::{seeded, Rng};
use crate::session::Session;
use crate::solution::Solution;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitVector {
    bits: Vec<bool>,
    popcount: usize,
}

impl BitVector {
    pub fn zeros(n: usize) -> Self {
        BitVector { bits: vec![false; n], popcount: 0 }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        let popcount = bits.iter().filter(|&&b| b).count();
        BitVector { bits, popcount }
    }

    /// Coordinates are 1 when non-zero.
    pub fn from_point(x: &[f64]) -> Self {
        Self::from_bits(x.iter().map(|&v| v != 0.0).collect())
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn popcount(&self) -> usize {
        self.popcount
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn flip(&mut self, i: usize) {
        self.bits[i] = !self.bits[i];
        if self.bits[i] {
            self.popcount += 1;
        } else {
            self.popcount -= 1;
        }
    }

    pub fn to_point(&self) -> Vec<f64> {
        self.bits.iter().map(|&b| if b { 1.0 } else { 0.0 }).collect()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }
}

/// Weak dominance on `(value, popcount)`: no worse on both axes.
pub fn dominates(a: (f64, usize), b: (f64, usize)) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

/// Flip each bit independently with probability `1/n`.
pub fn mutate_bits(x: &BitVector, rng: &mut Rng) -> BitVector {
    let n = x.len();
    let p = 1.0 / n as f64;
    let mut y = x.clone();
    for i in 0..n {
        if rng.random::<f64>() < p {
            y.flip(i);
        }
    }
    y
}

#[derive(Clone, Debug, Default)]
pub struct Archive {
    entries: Vec<(BitVector, f64)>,
}

impl Archive {
    pub fn entries(&self) -> &[(BitVector, f64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Insert unless some entry weakly dominates the candidate; drop every
    /// entry the candidate weakly dominates.
    pub fn update(&mut self, bits: BitVector, value: f64) -> bool {
        let key = (value, bits.popcount());
        if self.entries.iter().any(|(b, v)| dominates((*v, b.popcount()), key)) {
            return false;
        }
        self.entries.retain(|(b, v)| !dominates(key, (*v, b.popcount())));
        self.entries.push((bits, value));
        true
    }

    /// Lowest-value entry with popcount at most `k`.
    pub fn best_within(&self, k: usize) -> Option<&(BitVector, f64)> {
        self.entries
            .iter()
            .filter(|(b, _)| b.popcount() <= k)
            .min_by(|a, b| a.1.total_cmp(&b.1))
    }

    /// True when no entry weakly dominates another.
    pub fn is_non_dominated(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, (bi, vi))| {
            self.entries
                .iter()
                .enumerate()
                .all(|(j, (bj, vj))| i == j || !dominates((*vi, bi.popcount()), (*vj, bj.popcount())))
        })
    }
}

pub fn archive_update(archive: &mut Archive, candidate: (BitVector, f64)) -> bool {
    archive.update(candidate.0, candidate.1)
}

/// Iteration count under which POSS carries its approximation guarantee.
pub fn recommended_iterations(n: usize, k: usize) -> usize {
    (2.0 * std::f64::consts::E * (k * k * n) as f64).ceil() as usize
}

/// Per-update observer, used by tests to check archive invariants.
pub type ArchiveObserver<'a> = &'a mut dyn FnMut(&Archive);

pub(crate) fn poss_search(
    n: usize,
    k: usize,
    session: &mut Session<'_>,
    rng: &mut Rng,
    mut observe: Option<ArchiveObserver<'_>>,
) -> Result<Solution> {
    let mut archive = Archive::default();
    let zero = BitVector::zeros(n);
    let first = session.evaluate(zero.to_point())?;
    archive.update(zero, first.score());
    if let Some(f) = observe.as_mut() {
        f(&archive);
    }

    while session.remaining() > 0 {
        let parent = &archive.entries()[rng.random_range(0..archive.len())].0;
        let child = mutate_bits(parent, rng);
        let value = if child.popcount() >= 2 * k {
            session.evaluate_n(child.to_point(), 1)?.score()
        } else {
            session.evaluate(child.to_point())?.score()
        };
        archive.update(child, value);
        if let Some(f) = observe.as_mut() {
            f(&archive);
        }
    }

    let (bits, value) = archive.best_within(k).expect("archive always holds a popcount-0 entry");
    Ok(Solution::evaluated(bits.to_point(), *value, 1, 0))
}

/// POSS over `objective`'s binary space with `parameter.budget` evaluations:
/// one for the all-zero start and `budget - 1` mutation iterations.
pub fn poss_optimize(objective: &mut Objective, k: usize, parameter: &Parameter) -> Result<Solution> {
    poss_optimize_observed(objective, k, parameter, None)
}

pub fn poss_optimize_observed(
    objective: &mut Objective,
    k: usize,
    parameter: &Parameter,
    observe: Option<ArchiveObserver<'_>>,
) -> Result<Solution> {
    let n = objective.dimension().size();
    if !objective.dimension().is_all_binary() {
        return Err(Error::config("POSS requires an all-binary search space"));
    }
    if k == 0 || k > n {
        return Err(Error::config(format!("cardinality bound k={k} must satisfy 1 <= k <= n={n}")));
    }
    parameter.validate()?;
    if parameter.noise.mode != crate::noise::NoiseMode::None
        && parameter.noise.mode != crate::noise::NoiseMode::Resample
    {
        return Err(Error::config("POSS supports only the resample noise mode"));
    }
    let deadline = parameter.time_limit.map(|d| std::time::Instant::now() + d);
    let infeasible_at = 2 * k;
    let mut eval = |x: &[f64]| -> Result<f64> {
        let ones = x.iter().filter(|&&v| v != 0.0).count();
        if ones >= infeasible_at {
            objective.record_unevaluated(f64::INFINITY);
            Ok(f64::INFINITY)
        } else {
            objective.evaluate_raw(x)
        }
    };
    let mut session = Session::new(&mut eval, parameter.budget)
        .with_resample(parameter.resample_count())
        .with_deadline(deadline);
    let mut rng = seeded(parameter.seed);
    poss_search(n, k, &mut session, &mut rng, observe)
}
