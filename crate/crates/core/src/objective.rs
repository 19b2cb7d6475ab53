//! The function being minimized together with its search space and history.

use std::fmt;
use std::time::Instant;

use crate::dimension::Dimension;
use crate::error::{Error, Result};
use crate::history::{History, HistoryRecord};
use crate::solution::Solution;

/// Failure raised by an evaluator, e.g. a crashed external command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalError(pub String);

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for EvalError {}

/// Maps a point to its objective value.
///
/// Implementations are shared by reference; anything stateful (an RNG for
/// synthetic noise, a child process) must provide its own interior locking.
pub trait Evaluator: Send + Sync {
    fn evaluate(&self, x: &[f64]) -> Result<f64, EvalError>;
}

struct Infallible<F>(F);

impl<F> Evaluator for Infallible<F>
where
    F: Fn(&[f64]) -> f64 + Send + Sync,
{
    fn evaluate(&self, x: &[f64]) -> Result<f64, EvalError> {
        Ok((self.0)(x))
    }
}

/// Box an infallible function as an evaluator.
pub fn from_fn<F>(f: F) -> Box<dyn Evaluator>
where
    F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
{
    Box::new(Infallible(f))
}

pub struct Objective {
    evaluator: Box<dyn Evaluator>,
    dimension: Dimension,
    history: History,
    constraint: Option<usize>,
    started: Instant,
    next_seq: u64,
}

impl fmt::Debug for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Objective")
            .field("dimension", &self.dimension)
            .field("evaluations", &self.history.len())
            .field("constraint", &self.constraint)
            .finish_non_exhaustive()
    }
}

impl Objective {
    pub fn new<F>(dimension: Dimension, f: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self::with_evaluator(dimension, from_fn(f))
    }

    pub fn with_evaluator(dimension: Dimension, evaluator: Box<dyn Evaluator>) -> Self {
        Objective {
            evaluator,
            dimension,
            history: History::default(),
            constraint: None,
            started: Instant::now(),
            next_seq: 0,
        }
    }

    /// Cardinality bound for subset selection over a binary space.
    pub fn with_constraint(mut self, k: usize) -> Self {
        self.constraint = Some(k);
        self
    }

    pub fn dimension(&self) -> &Dimension {
        &self.dimension
    }

    pub fn constraint(&self) -> Option<usize> {
        self.constraint
    }

    pub fn evaluator(&self) -> &dyn Evaluator {
        self.evaluator.as_ref()
    }

    pub fn history(&self) -> &[HistoryRecord] {
        self.history.records()
    }

    pub fn history_log(&self) -> &History {
        &self.history
    }

    /// Forget previous evaluations and restart the elapsed-time clock.
    pub fn clear_history(&mut self) {
        self.history.clear();
        self.started = Instant::now();
    }

    pub fn write_history(&self, path: impl AsRef<std::path::Path>) -> Result<()> {
        self.history.write_csv(path)
    }

    /// One raw evaluation, recorded in the history.
    ///
    /// A failing evaluator still consumes the evaluation: it is recorded
    /// with value `+inf` and reported as [`Error::Evaluation`]. Non-finite
    /// NaN results count as failures.
    pub fn evaluate_raw(&mut self, x: &[f64]) -> Result<f64> {
        let outcome = match self.evaluator.evaluate(x) {
            Ok(v) if v.is_nan() => Err(EvalError("objective returned NaN".into())),
            other => other,
        };
        let value = *outcome.as_ref().unwrap_or(&f64::INFINITY);
        let elapsed = self.started.elapsed().as_millis() as u64;
        self.history.push(value, elapsed);
        outcome.map_err(|e| Error::Evaluation(e.0))
    }

    /// Charge one evaluation without calling the evaluator.
    pub(crate) fn record_unevaluated(&mut self, value: f64) {
        let elapsed = self.started.elapsed().as_millis() as u64;
        self.history.push(value, elapsed);
    }

    /// Record a value computed elsewhere (e.g. by a remote evaluation server).
    pub fn record_external(&mut self, value: f64, elapsed_ms: u64) {
        self.history.push(value, elapsed_ms);
    }

    pub fn elapsed_ms(&self) -> u64 {
        self.started.elapsed().as_millis() as u64
    }

    pub(crate) fn next_seq(&mut self) -> u64 {
        self.next_seq += 1;
        self.next_seq
    }

    /// Evaluate `x` once and wrap it into a [`Solution`].
    pub fn evaluate(&mut self, x: &[f64]) -> Result<Solution> {
        let value = self.evaluate_raw(x)?;
        let seq = self.next_seq();
        Ok(Solution::evaluated(x.to_vec(), value, 1, seq))
    }
}

pub fn evaluate(objective: &mut Objective, x: &[f64]) -> Result<Solution> {
    objective.evaluate(x)
}
