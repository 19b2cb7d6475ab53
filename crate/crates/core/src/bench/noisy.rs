use std::sync::Mutex;

use rand_distr::{Distribution, Normal};

use crate::objective::{EvalError, Evaluator};
use crate::rng::{seeded, Rng};

/// Adds independent `N(0, sigma^2)` noise to every evaluation.
pub struct GaussianNoise {
    inner: Box<dyn Evaluator>,
    normal: Normal<f64>,
    rng: Mutex<Rng>,
}

impl GaussianNoise {
    pub fn new(inner: Box<dyn Evaluator>, sigma: f64, seed: u64) -> Self {
        GaussianNoise {
            inner,
            normal: Normal::new(0.0, sigma).expect("sigma must be finite and non-negative"),
            rng: Mutex::new(seeded(seed)),
        }
    }
}

impl Evaluator for GaussianNoise {
    fn evaluate(&self, x: &[f64]) -> Result<f64, EvalError> {
        let clean = self.inner.evaluate(x)?;
        let mut rng = self.rng.lock().unwrap_or_else(|p| p.into_inner());
        Ok(clean + self.normal.sample(&mut *rng))
    }
}
