//! Budget accounting shared by every optimizer.
//!
//! A [`Session`] owns the evaluation budget of one run. Every raw evaluation,
//! including resampling repeats, is charged against it, and a resample group
//! that would overrun the budget is truncated to fit.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::solution::Solution;

/// Something that can evaluate a point once, recording the evaluation.
pub trait RawEvaluate {
    fn evaluate_raw(&mut self, x: &[f64]) -> Result<f64>;
}

impl RawEvaluate for Objective {
    fn evaluate_raw(&mut self, x: &[f64]) -> Result<f64> {
        Objective::evaluate_raw(self, x)
    }
}

impl<F> RawEvaluate for F
where
    F: FnMut(&[f64]) -> Result<f64>,
{
    fn evaluate_raw(&mut self, x: &[f64]) -> Result<f64> {
        self(x)
    }
}

/// Arithmetic mean; returns the common value exactly when all samples agree
/// (a plain sum can drift by an ulp, e.g. three 0.2s average to 0.2000…04).
pub(crate) fn mean(samples: &[f64]) -> f64 {
    let first = samples[0];
    if samples.iter().all(|&v| v == first) {
        return first;
    }
    samples.iter().sum::<f64>() / samples.len() as f64
}

pub struct Session<'a> {
    target: &'a mut dyn RawEvaluate,
    budget: usize,
    used: usize,
    resample: usize,
    deadline: Option<Instant>,
    best: Option<Solution>,
    next_seq: u64,
}

impl<'a> Session<'a> {
    pub fn new(target: &'a mut dyn RawEvaluate, budget: usize) -> Self {
        Session { target, budget, used: 0, resample: 1, deadline: None, best: None, next_seq: 0 }
    }

    /// Raw evaluations averaged into each sampled solution.
    pub fn with_resample(mut self, m: usize) -> Self {
        self.resample = m.max(1);
        self
    }

    pub fn with_deadline(mut self, deadline: Option<Instant>) -> Self {
        self.deadline = deadline;
        self
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn used(&self) -> usize {
        self.used
    }

    pub fn remaining(&self) -> usize {
        self.budget - self.used
    }

    pub fn resample(&self) -> usize {
        self.resample
    }

    pub fn best(&self) -> Option<&Solution> {
        self.best.as_ref()
    }

    pub fn into_best(self) -> Option<Solution> {
        self.best
    }

    fn raw(&mut self, x: &[f64]) -> Result<f64> {
        if self.remaining() == 0 {
            return Err(Error::BudgetExhausted);
        }
        if let Some(deadline) = self.deadline {
            if Instant::now() >= deadline {
                return Err(Error::TimeLimit {
                    best: self.best.clone().map(Box::new),
                    evaluations: self.used,
                });
            }
        }
        self.used += 1;
        self.target.evaluate_raw(x)
    }

    /// Mean of up to `m` raw evaluations, truncated to the remaining budget.
    fn mean_of(&mut self, x: &[f64], m: usize) -> Result<(f64, u32)> {
        let m = m.max(1).min(self.remaining());
        if m == 0 {
            return Err(Error::BudgetExhausted);
        }
        let mut samples = Vec::with_capacity(m);
        for _ in 0..m {
            samples.push(self.raw(x)?);
        }
        Ok((mean(&samples), m as u32))
    }

    fn track(&mut self, s: &Solution) {
        let better = match &self.best {
            None => true,
            Some(b) => s.score() < b.score(),
        };
        if better {
            self.best = Some(s.clone());
        }
    }

    /// Evaluate with the session's resample count.
    pub fn evaluate(&mut self, x: Vec<f64>) -> Result<Solution> {
        self.evaluate_n(x, self.resample)
    }

    pub fn evaluate_n(&mut self, x: Vec<f64>, m: usize) -> Result<Solution> {
        let (value, count) = self.mean_of(&x, m)?;
        self.next_seq += 1;
        let s = Solution::evaluated(x, value, count, self.next_seq);
        self.track(&s);
        Ok(s)
    }

    /// Replace `s`'s value by the mean of `m` fresh evaluations.
    pub fn reevaluate(&mut self, s: &mut Solution, m: usize) -> Result<()> {
        let (value, count) = self.mean_of(s.x(), m)?;
        s.set_value(value, count);
        if let Some(b) = &self.best {
            if b.seq_id() == s.seq_id() {
                self.best = Some(s.clone());
            }
        }
        self.track(s);
        Ok(())
    }
}
