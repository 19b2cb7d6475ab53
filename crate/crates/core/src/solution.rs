use std::cmp::Ordering;

/// A point together with its (possibly averaged) objective value.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution {
    x: Vec<f64>,
    value: Option<f64>,
    eval_count: u32,
    seq_id: u64,
}

impl Solution {
    pub fn unevaluated(x: Vec<f64>, seq_id: u64) -> Self {
        Solution { x, value: None, eval_count: 0, seq_id }
    }

    /// `eval_count` is the number of raw evaluations averaged into `value`
    /// and must be at least one.
    pub fn evaluated(x: Vec<f64>, value: f64, eval_count: u32, seq_id: u64) -> Self {
        assert!(eval_count >= 1, "an evaluated solution needs at least one evaluation");
        Solution { x, value: Some(value), eval_count, seq_id }
    }

    pub fn x(&self) -> &[f64] {
        &self.x
    }

    pub fn into_x(self) -> Vec<f64> {
        self.x
    }

    pub fn value(&self) -> Option<f64> {
        self.value
    }

    /// Value for ordering purposes; unevaluated solutions sort last.
    pub fn score(&self) -> f64 {
        self.value.unwrap_or(f64::INFINITY)
    }

    pub fn eval_count(&self) -> u32 {
        self.eval_count
    }

    pub fn seq_id(&self) -> u64 {
        self.seq_id
    }

    pub(crate) fn set_value(&mut self, value: f64, eval_count: u32) {
        assert!(eval_count >= 1);
        self.value = Some(value);
        self.eval_count = eval_count;
    }

    /// Ascending by value, ties broken by creation order.
    pub fn cmp_by_value(&self, other: &Solution) -> Ordering {
        self.score().total_cmp(&other.score()).then(self.seq_id.cmp(&other.seq_id))
    }
}
