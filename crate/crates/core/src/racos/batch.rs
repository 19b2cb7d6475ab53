use rand::Rng as _;

use crate::dimension::Dimension;
use crate::error::{Error, Result};
use crate::noise::NoiseMode;
use crate::objective::Objective;
use crate::parameter::Parameter;
use crate::racos::{RegionModel, TrainingSets};
use crate::rng::{seeded, Rng};
use crate::session::Session;
use crate::solution::Solution;

fn racos_search(
    dimension: &Dimension,
    parameter: &Parameter,
    session: &mut Session<'_>,
    mut rng: Rng,
) -> Result<Solution> {
    let r = parameter.train_size;
    let k = parameter.positive_size;

    let mut initial = Vec::with_capacity(r);
    while initial.len() < r && session.remaining() > 0 {
        initial.push(session.evaluate(dimension.sample_uniform(&mut rng))?);
    }
    let mut sets = TrainingSets::from_initial(initial, k);

    while session.remaining() > 0 {
        let mut batch = Vec::with_capacity(r - k);
        while batch.len() < r - k && session.remaining() > 0 {
            let positives = sets.positives();
            let anchor = &positives[rng.random_range(0..positives.len())];
            let region = RegionModel::learn(anchor, sets.negatives(), dimension, parameter.uncertain_dims, &mut rng);
            let x = region.sample(dimension, parameter.model_sample_prob, &mut rng);
            batch.push(session.evaluate(x)?);
        }
        sets = merge_pool(sets, batch, k, r - k);
    }
    Ok(session.best().cloned().expect("budget is positive"))
}

/// Best `k` of the pool become positives; the `n_neg` most recently created
/// of the rest become negatives.
fn merge_pool(sets: TrainingSets, batch: Vec<Solution>, k: usize, n_neg: usize) -> TrainingSets {
    let mut pool: Vec<Solution> = sets
        .positives()
        .iter()
        .chain(sets.negatives())
        .cloned()
        .chain(batch)
        .collect();
    pool.sort_by(Solution::cmp_by_value);
    let mut rest = pool.split_off(k.min(pool.len()));
    rest.sort_by_key(|s| std::cmp::Reverse(s.seq_id()));
    rest.truncate(n_neg);
    TrainingSets::from_parts(pool, rest)
}

/// Batch Racos: each iteration samples `r - k` new solutions, then rebuilds
/// the training sets from the merged pool.
pub fn racos_optimize(objective: &mut Objective, parameter: &Parameter) -> Result<Solution> {
    parameter.validate_racos()?;
    if matches!(parameter.noise.mode, NoiseMode::Suppression | NoiseMode::Threshold) {
        return Err(Error::config("batch Racos supports only the resample noise mode"));
    }
    let dimension = objective.dimension().clone();
    let deadline = parameter.time_limit.map(|d| std::time::Instant::now() + d);
    let mut session = Session::new(objective, parameter.budget)
        .with_resample(parameter.resample_count())
        .with_deadline(deadline);
    racos_search(&dimension, parameter, &mut session, seeded(parameter.seed))
}
