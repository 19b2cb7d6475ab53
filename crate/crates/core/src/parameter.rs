//! Algorithm settings. Only the budget has to be chosen by the caller.

use std::time::Duration;

use crate::dimension::Dimension;
use crate::error::{Error, Result};
use crate::noise::{NoiseConfig, NoiseMode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Algorithm {
    /// SRacos for spaces with a continuous or integer coordinate, POSS for
    /// constrained all-binary spaces.
    #[default]
    Auto,
    Sracos,
    Racos,
    Poss,
}

/// Which negative is evicted when a solution enters the negative set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ReplaceStrategy {
    #[default]
    WorstNegative,
    RandomNegative,
}

/// Sequential random embedding settings.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EmbeddingConfig {
    pub d_low: usize,
    /// Number of sequential stages; 1 is plain random embedding.
    pub stages: usize,
    /// Evaluations per stage; defaults to `budget / stages`, the last stage
    /// takes whatever remains.
    pub inner_budget: Option<usize>,
}

impl EmbeddingConfig {
    pub const DEFAULT_STAGES: usize = 5;

    pub fn new(d_low: usize) -> Self {
        EmbeddingConfig { d_low, stages: Self::DEFAULT_STAGES, inner_budget: None }
    }

    pub fn with_stages(mut self, stages: usize) -> Self {
        self.stages = stages;
        self
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Parameter {
    /// Raw objective evaluations, including initialization and resampling.
    pub budget: usize,
    pub algorithm: Algorithm,
    /// `r`: training solutions kept by the Racos family.
    pub train_size: usize,
    /// `k`: positive solutions, `k < r`.
    pub positive_size: usize,
    pub model_sample_prob: f64,
    pub uncertain_dims: usize,
    pub replace_strategy: ReplaceStrategy,
    pub seed: u64,
    pub noise: NoiseConfig,
    pub embedding: Option<EmbeddingConfig>,
    pub time_limit: Option<Duration>,
}

impl Parameter {
    pub const DEFAULT_TRAIN_SIZE: usize = 20;
    pub const DEFAULT_POSITIVE_SIZE: usize = 2;
    pub const DEFAULT_MODEL_SAMPLE_PROB: f64 = 0.95;
    pub const DEFAULT_UNCERTAIN_DIMS: usize = 1;

    pub fn new(budget: usize) -> Self {
        Parameter {
            budget,
            algorithm: Algorithm::Auto,
            train_size: Self::DEFAULT_TRAIN_SIZE,
            positive_size: Self::DEFAULT_POSITIVE_SIZE,
            model_sample_prob: Self::DEFAULT_MODEL_SAMPLE_PROB,
            uncertain_dims: Self::DEFAULT_UNCERTAIN_DIMS,
            replace_strategy: ReplaceStrategy::WorstNegative,
            seed: 0,
            noise: NoiseConfig::default(),
            embedding: None,
            time_limit: None,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_algorithm(mut self, algorithm: Algorithm) -> Self {
        self.algorithm = algorithm;
        self
    }

    pub fn with_train_sizes(mut self, train_size: usize, positive_size: usize) -> Self {
        self.train_size = train_size;
        self.positive_size = positive_size;
        self
    }

    pub fn with_noise(mut self, noise: NoiseConfig) -> Self {
        self.noise = noise;
        self
    }

    pub fn with_embedding(mut self, embedding: EmbeddingConfig) -> Self {
        self.embedding = Some(embedding);
        self
    }

    pub fn with_replace_strategy(mut self, strategy: ReplaceStrategy) -> Self {
        self.replace_strategy = strategy;
        self
    }

    pub fn with_time_limit(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }

    /// Algorithm actually run for `dimension` once `Auto` is resolved.
    pub fn resolve_algorithm(&self, dimension: &Dimension, constraint: Option<usize>) -> Algorithm {
        match self.algorithm {
            Algorithm::Auto if dimension.is_all_binary() && constraint.is_some() => Algorithm::Poss,
            Algorithm::Auto => Algorithm::Sracos,
            other => other,
        }
    }

    /// Checks the settings shared by every algorithm.
    pub fn validate(&self) -> Result<()> {
        if self.budget == 0 {
            return Err(Error::config("budget must be positive"));
        }
        if self.positive_size == 0 || self.positive_size >= self.train_size {
            return Err(Error::config(format!(
                "positive size k={} must satisfy 0 < k < r={}",
                self.positive_size, self.train_size
            )));
        }
        if !(self.model_sample_prob > 0.0 && self.model_sample_prob <= 1.0) {
            return Err(Error::config(format!(
                "model sample probability {} outside (0, 1]",
                self.model_sample_prob
            )));
        }
        if self.uncertain_dims == 0 {
            return Err(Error::config("uncertain dimension count must be at least 1"));
        }
        self.noise.validate()?;
        Ok(())
    }

    /// Settings specific to the Racos family.
    pub(crate) fn validate_racos(&self) -> Result<()> {
        self.validate()?;
        if self.budget < self.train_size {
            return Err(Error::config(format!(
                "budget {} is below the training size r={}",
                self.budget, self.train_size
            )));
        }
        Ok(())
    }

    /// Raw evaluations per solution during ordinary sampling.
    pub(crate) fn resample_count(&self) -> usize {
        match self.noise.mode {
            NoiseMode::Resample => self.noise.resample,
            _ => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults() {
        let p = Parameter::new(100);
        assert_eq!((p.train_size, p.positive_size, p.uncertain_dims), (20, 2, 1));
        assert_eq!(p.model_sample_prob, 0.95);
        assert_eq!(p.replace_strategy, ReplaceStrategy::WorstNegative);
        p.validate_racos().unwrap();
    }

    #[test]
    fn invalid_sizes() {
        assert!(Parameter::new(100).with_train_sizes(5, 5).validate().is_err());
        assert!(Parameter::new(10).validate_racos().is_err());
        let mut p = Parameter::new(100);
        p.model_sample_prob = 0.0;
        assert!(p.validate().is_err());
    }

    #[test]
    fn auto_dispatch() {
        let p = Parameter::new(100);
        let cont = Dimension::continuous(2, -1.0, 1.0).unwrap();
        let bin = Dimension::binary(10).unwrap();
        assert_eq!(p.resolve_algorithm(&cont, None), Algorithm::Sracos);
        assert_eq!(p.resolve_algorithm(&bin, Some(3)), Algorithm::Poss);
        assert_eq!(p.resolve_algorithm(&bin, None), Algorithm::Sracos);
    }
}
