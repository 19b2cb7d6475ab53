use std::hint::black_box;

use crate::objective::{EvalError, Evaluator};

/// Spin for `loops` iterations of integer work the compiler cannot elide.
pub fn busy_loop(loops: u64) -> u64 {
    let mut acc: u64 = 0x9e37_79b9_7f4a_7c15;
    for i in 0..loops {
        acc = black_box(acc.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(i));
    }
    acc
}

/// Adds a CPU-bound busy loop to every evaluation, leaving values unchanged.
pub struct DelayEvaluator {
    inner: Box<dyn Evaluator>,
    loops: u64,
}

impl DelayEvaluator {
    pub fn new(inner: Box<dyn Evaluator>, loops: u64) -> Self {
        DelayEvaluator { inner, loops }
    }
}

impl Evaluator for DelayEvaluator {
    fn evaluate(&self, x: &[f64]) -> Result<f64, EvalError> {
        let acc = busy_loop(self.loops);
        // never true, but the comparison keeps `acc` alive
        if acc == 1 && self.loops == u64::MAX {
            return Err(EvalError("unreachable delay sentinel".into()));
        }
        self.inner.evaluate(x)
    }
}
