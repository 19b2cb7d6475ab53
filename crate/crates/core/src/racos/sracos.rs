use rand::Rng as _;

use crate::dimension::Dimension;
use crate::error::Result;
use crate::noise::{suppress_refresh, NoiseConfig, NoiseMode};
use crate::objective::Objective;
use crate::parameter::{Parameter, ReplaceStrategy};
use crate::racos::{RegionModel, TrainingSets};
use crate::rng::{seeded, Rng};
use crate::session::Session;
use crate::solution::Solution;

/// Ask/tell state of sequential Racos.
///
/// The first `r` candidates are uniform draws; once `r` results have been
/// told the training sets are formed and every further candidate is sampled
/// from a region learned around a random positive. Both the in-process loop
/// and the asynchronous distributed client drive this same state machine.
#[derive(Debug)]
pub struct Sracos {
    dimension: Dimension,
    train_size: usize,
    positive_size: usize,
    model_sample_prob: f64,
    uncertain_dims: usize,
    strategy: ReplaceStrategy,
    noise: NoiseConfig,
    initial: Vec<Solution>,
    sets: Option<TrainingSets>,
    rng: Rng,
}

impl Sracos {
    pub fn new(dimension: Dimension, parameter: &Parameter, rng: Rng) -> Self {
        Sracos {
            dimension,
            train_size: parameter.train_size,
            positive_size: parameter.positive_size,
            model_sample_prob: parameter.model_sample_prob,
            uncertain_dims: parameter.uncertain_dims,
            strategy: parameter.replace_strategy,
            noise: parameter.noise,
            initial: Vec::with_capacity(parameter.train_size),
            sets: None,
            rng,
        }
    }

    pub fn dimension(&self) -> &Dimension {
        &self.dimension
    }

    pub fn train_size(&self) -> usize {
        self.train_size
    }

    /// Training sets, once the initial batch is complete.
    pub fn sets(&self) -> Option<&TrainingSets> {
        self.sets.as_ref()
    }

    pub(crate) fn sets_mut(&mut self) -> Option<&mut TrainingSets> {
        self.sets.as_mut()
    }

    pub fn is_initialized(&self) -> bool {
        self.sets.is_some()
    }

    /// Next point to evaluate.
    pub fn ask(&mut self) -> Vec<f64> {
        match &self.sets {
            None => self.dimension.sample_uniform(&mut self.rng),
            Some(sets) => {
                let positives = sets.positives();
                let anchor = &positives[self.rng.random_range(0..positives.len())];
                let region = RegionModel::learn(
                    anchor,
                    sets.negatives(),
                    &self.dimension,
                    self.uncertain_dims,
                    &mut self.rng,
                );
                region.sample(&self.dimension, self.model_sample_prob, &mut self.rng)
            }
        }
    }

    /// Feed back an evaluated solution. Returns true when it entered the
    /// positive set.
    pub fn tell(&mut self, solution: Solution) -> bool {
        match &mut self.sets {
            None => {
                self.initial.push(solution);
                if self.initial.len() >= self.train_size {
                    let batch = std::mem::take(&mut self.initial);
                    self.sets = Some(TrainingSets::from_initial(batch, self.positive_size));
                }
                false
            }
            Some(sets) => {
                let noise = self.noise;
                sets.replace_with(solution, self.strategy, |old, new| noise.accepts(old, new), &mut self.rng)
            }
        }
    }
}

pub(crate) fn sracos_search(
    dimension: &Dimension,
    parameter: &Parameter,
    session: &mut Session<'_>,
    rng: Rng,
) -> Result<Solution> {
    let mut state = Sracos::new(dimension.clone(), parameter, rng);
    let suppress = parameter.noise.mode == NoiseMode::Suppression;
    let mut accepted = 0usize;
    while session.remaining() > 0 {
        let x = state.ask();
        let s = session.evaluate(x)?;
        if state.tell(s) && suppress {
            accepted += 1;
            if accepted.is_multiple_of(parameter.noise.suppress_period) {
                let sets = state.sets_mut().expect("accepted implies initialized");
                suppress_refresh(sets, session, parameter.noise.resample)?;
            }
        }
    }
    let best = session.best().cloned().expect("budget is positive");
    if suppress {
        if let Some(p) = state.sets().and_then(|s| s.positives().first()) {
            if p.score() < best.score() {
                return Ok(p.clone());
            }
        }
    }
    Ok(best)
}

/// Sequential Racos over `objective` with `parameter.budget` evaluations.
pub fn sracos_optimize(objective: &mut Objective, parameter: &Parameter) -> Result<Solution> {
    parameter.validate_racos()?;
    let dimension = objective.dimension().clone();
    let deadline = parameter.time_limit.map(|d| std::time::Instant::now() + d);
    let mut session = Session::new(objective, parameter.budget)
        .with_resample(parameter.resample_count())
        .with_deadline(deadline);
    sracos_search(&dimension, parameter, &mut session, seeded(parameter.seed))
}
