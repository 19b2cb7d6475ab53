//! Noise handling: resampling, value suppression and threshold selection.
//!
//! Resampling averages `m` raw evaluations of a point. Value suppression and
//! threshold selection are simplified variants:
//!
//! * suppression: every `s` accepted positive-set updates, SRacos
//!   re-evaluates each positive solution with `m` fresh samples and re-sorts
//!   the training sets on the refreshed values;
//! * threshold: a new solution only displaces the worst positive if it
//!   improves on it by more than `θ`.

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::racos::TrainingSets;
use crate::session::Session;
use crate::solution::Solution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum NoiseMode {
    #[default]
    None,
    Resample,
    Suppression,
    Threshold,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseConfig {
    pub mode: NoiseMode,
    /// Resample count `m`, also used by suppression refreshes.
    pub resample: usize,
    /// Suppression period `s`, in accepted positive-set updates.
    pub suppress_period: usize,
    /// Improvement threshold `θ`.
    pub threshold: f64,
}

impl Default for NoiseConfig {
    fn default() -> Self {
        NoiseConfig { mode: NoiseMode::None, resample: 10, suppress_period: 20, threshold: 0.0 }
    }
}

impl NoiseConfig {
    pub fn resample(m: usize) -> Self {
        NoiseConfig { mode: NoiseMode::Resample, resample: m, ..Default::default() }
    }

    pub fn suppression(s: usize, m: usize) -> Self {
        NoiseConfig { mode: NoiseMode::Suppression, resample: m, suppress_period: s, ..Default::default() }
    }

    pub fn threshold(theta: f64) -> Self {
        NoiseConfig { mode: NoiseMode::Threshold, threshold: theta, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        match self.mode {
            NoiseMode::Resample | NoiseMode::Suppression if self.resample == 0 => {
                Err(Error::config("resample count m must be at least 1"))
            }
            NoiseMode::Suppression if self.suppress_period == 0 => {
                Err(Error::config("suppression period s must be at least 1"))
            }
            NoiseMode::Threshold if self.threshold.is_nan() || self.threshold < 0.0 => {
                Err(Error::config("threshold must be non-negative"))
            }
            _ => Ok(()),
        }
    }

    /// Improvement test applied when a new solution challenges the worst
    /// positive.
    pub fn accepts(&self, old_value: f64, new_value: f64) -> bool {
        match self.mode {
            NoiseMode::Threshold => threshold_accept(old_value, new_value, self.threshold),
            _ => new_value < old_value,
        }
    }
}

/// True iff `new_value` beats `old_value` by more than `theta`.
pub fn threshold_accept(old_value: f64, new_value: f64, theta: f64) -> bool {
    old_value - new_value > theta
}

/// Evaluate `x` `m` times (at least once) and average.
pub fn resample_eval(objective: &mut Objective, x: &[f64], m: usize) -> Result<Solution> {
    let m = m.max(1);
    let mut samples = Vec::with_capacity(m);
    for _ in 0..m {
        samples.push(objective.evaluate_raw(x)?);
    }
    let seq = objective.next_seq();
    Ok(Solution::evaluated(x.to_vec(), crate::session::mean(&samples), m as u32, seq))
}

/// Re-evaluate every positive with `m` fresh samples and re-sort the sets.
///
/// Stops early, leaving the sets consistent, if the budget runs out.
pub fn suppress_refresh(sets: &mut TrainingSets, session: &mut Session<'_>, m: usize) -> Result<()> {
    for i in 0..sets.positives().len() {
        if session.remaining() == 0 {
            break;
        }
        let mut s = sets.positives()[i].clone();
        session.reevaluate(&mut s, m)?;
        sets.positives_mut()[i] = s;
    }
    sets.resort();
    Ok(())
}
