use rand::Rng as _;

use crate::parameter::ReplaceStrategy;
use crate::rng::Rng;
use crate::solution::Solution;

/// Positive (best `k`) and negative (remaining `r - k`) training solutions.
#[derive(Clone, Debug, PartialEq)]
pub struct TrainingSets {
    positives: Vec<Solution>,
    negatives: Vec<Solution>,
}

impl TrainingSets {
    /// Split an initial batch: the `k` lowest values become positives.
    pub fn from_initial(mut solutions: Vec<Solution>, k: usize) -> Self {
        solutions.sort_by(Solution::cmp_by_value);
        let negatives = solutions.split_off(k.min(solutions.len()));
        TrainingSets { positives: solutions, negatives }
    }

    pub fn from_parts(mut positives: Vec<Solution>, negatives: Vec<Solution>) -> Self {
        positives.sort_by(Solution::cmp_by_value);
        TrainingSets { positives, negatives }
    }

    /// Sorted ascending by value.
    pub fn positives(&self) -> &[Solution] {
        &self.positives
    }

    pub(crate) fn positives_mut(&mut self) -> &mut [Solution] {
        &mut self.positives
    }

    pub fn negatives(&self) -> &[Solution] {
        &self.negatives
    }

    pub fn worst_positive(&self) -> Option<&Solution> {
        self.positives.last()
    }

    fn evict_negative(&mut self, strategy: ReplaceStrategy, rng: &mut Rng) {
        if self.negatives.is_empty() {
            return;
        }
        let idx = match strategy {
            ReplaceStrategy::WorstNegative => self
                .negatives
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.cmp_by_value(b.1))
                .map(|(i, _)| i)
                .unwrap(),
            ReplaceStrategy::RandomNegative => rng.random_range(0..self.negatives.len()),
        };
        self.negatives.swap_remove(idx);
    }

    fn push_negative(&mut self, s: Solution, strategy: ReplaceStrategy, rng: &mut Rng) {
        self.evict_negative(strategy, rng);
        self.negatives.push(s);
    }

    /// Sequential update with a strict-improvement test.
    pub fn replace(&mut self, new: Solution, strategy: ReplaceStrategy, rng: &mut Rng) -> bool {
        self.replace_with(new, strategy, |old, new| new < old, rng)
    }

    /// Sequential update. `accepts(worst_positive, new)` decides whether
    /// `new` displaces the worst positive, which is then demoted to the
    /// negatives. Returns whether the positives changed.
    pub fn replace_with(
        &mut self,
        new: Solution,
        strategy: ReplaceStrategy,
        accepts: impl Fn(f64, f64) -> bool,
        rng: &mut Rng,
    ) -> bool {
        let worst = match self.positives.last() {
            Some(w) => w.score(),
            None => {
                self.positives.push(new);
                return true;
            }
        };
        if accepts(worst, new.score()) {
            let demoted = self.positives.pop().unwrap();
            let at = self.positives.partition_point(|p| p.cmp_by_value(&new).is_le());
            self.positives.insert(at, new);
            self.push_negative(demoted, strategy, rng);
            true
        } else {
            self.push_negative(new, strategy, rng);
            false
        }
    }

    /// Re-split after values changed: the `k` lowest values become positives.
    pub fn resort(&mut self) {
        let k = self.positives.len();
        let mut all: Vec<Solution> = self.positives.drain(..).chain(self.negatives.drain(..)).collect();
        all.sort_by(Solution::cmp_by_value);
        self.negatives = all.split_off(k);
        self.positives = all;
    }
}

pub fn replace(sets: &mut TrainingSets, new: Solution, strategy: ReplaceStrategy, rng: &mut Rng) -> bool {
    sets.replace(new, strategy, rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    fn values(v: &[Solution]) -> Vec<f64> {
        let mut out: Vec<f64> = v.iter().map(|s| s.score()).collect();
        out.sort_by(f64::total_cmp);
        out
    }

    fn sets(pos: &[f64], neg: &[f64]) -> TrainingSets {
        let mut id = 0;
        let mut mk = |v: &f64| {
            id += 1;
            Solution::evaluated(vec![*v], *v, 1, id)
        };
        let p = pos.iter().map(&mut mk).collect();
        let n = neg.iter().map(&mut mk).collect();
        TrainingSets::from_parts(p, n)
    }

    fn new(v: f64) -> Solution {
        Solution::evaluated(vec![v], v, 1, 100)
    }

    #[test]
    fn improvement_demotes_worst_positive() {
        let mut s = sets(&[1.0, 2.0], &[5.0, 9.0]);
        assert!(s.replace(new(1.5), ReplaceStrategy::WorstNegative, &mut seeded(0)));
        assert_eq!(values(s.positives()), vec![1.0, 1.5]);
        assert_eq!(values(s.negatives()), vec![2.0, 5.0]);
    }

    #[test]
    fn non_improvement_evicts_worst_negative() {
        let mut s = sets(&[1.0, 2.0], &[5.0, 9.0]);
        assert!(!s.replace(new(3.0), ReplaceStrategy::WorstNegative, &mut seeded(0)));
        assert_eq!(values(s.positives()), vec![1.0, 2.0]);
        assert_eq!(values(s.negatives()), vec![3.0, 5.0]);
    }

    #[test]
    fn tie_is_not_improvement() {
        let mut s = sets(&[1.0, 2.0], &[5.0, 9.0]);
        assert!(!s.replace(new(2.0), ReplaceStrategy::WorstNegative, &mut seeded(0)));
        assert_eq!(values(s.positives()), vec![1.0, 2.0]);
        assert_eq!(values(s.negatives()), vec![2.0, 5.0]);
    }

    #[test]
    fn random_negative_preserves_sizes() {
        let mut rng = seeded(3);
        let mut s = sets(&[1.0, 2.0], &[5.0, 6.0, 7.0, 9.0]);
        for i in 0..50 {
            s.replace(new(i as f64 * 0.37 % 10.0), ReplaceStrategy::RandomNegative, &mut rng);
            assert_eq!((s.positives().len(), s.negatives().len()), (2, 4));
        }
    }

    #[test]
    fn from_initial_splits_best_k() {
        let s = TrainingSets::from_initial(sets(&[], &[4.0, 1.0, 3.0, 2.0]).negatives().to_vec(), 2);
        assert_eq!(values(s.positives()), vec![1.0, 2.0]);
        assert_eq!(values(s.negatives()), vec![3.0, 4.0]);
        assert!(s.positives()[0].score() <= s.positives()[1].score());
    }
}
