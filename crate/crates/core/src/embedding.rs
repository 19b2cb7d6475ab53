//! Random embeddings for high-dimensional problems.
//!
//! A low-dimensional point `y` maps to `clip(center + A y)` where `A` has
//! i.i.d. standard-normal entries and `center` is the midpoint of the box.
//! The low-dimensional box is `[-√d_low, √d_low]` per coordinate, scaled by
//! half the mean width of the high-dimensional box.
//!
//! Sequential random embeddings run several stages. Stage `t` draws a fresh
//! matrix `A_t` and searches `(α, y)`, with `α ∈ [-1, 1]`, over
//!
//! ```text
//! h(α, y) = f(clip(α (x_{t-1} - center) + A_t y + center))
//! ```
//!
//! starting from `x_0 = center`. A single stage is plain random embedding.

use nalgebra::{DMatrix, DVector};
use rand_distr::{Distribution, StandardNormal};

use crate::dimension::{Coord, Dimension};
use crate::error::{Error, Result};
use crate::noise::NoiseMode;
use crate::objective::Objective;
use crate::parameter::{EmbeddingConfig, Parameter};
use crate::racos::sracos_search;
use crate::rng::{seeded, split, Rng};
use crate::session::Session;
use crate::solution::Solution;

#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingMatrix {
    a: DMatrix<f64>,
}

impl EmbeddingMatrix {
    pub fn from_matrix(a: DMatrix<f64>) -> Self {
        EmbeddingMatrix { a }
    }

    pub fn d_high(&self) -> usize {
        self.a.nrows()
    }

    pub fn d_low(&self) -> usize {
        self.a.ncols()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.a
    }
}

pub fn make_embedding(d_high: usize, d_low: usize, rng: &mut Rng) -> Result<EmbeddingMatrix> {
    if d_low == 0 || d_low >= d_high {
        return Err(Error::config(format!(
            "embedding needs 1 <= d_low < d_high, got d_low={d_low}, d_high={d_high}"
        )));
    }
    let a = DMatrix::from_fn(d_high, d_low, |_, _| StandardNormal.sample(rng));
    Ok(EmbeddingMatrix { a })
}

/// `clip(center + A y)` into the bounds of `dimension`.
pub fn embed_point(a: &EmbeddingMatrix, y: &[f64], dimension: &Dimension) -> Vec<f64> {
    embed_with_offset(a, y, None, dimension)
}

/// `clip(center + offset + A y)`.
fn embed_with_offset(a: &EmbeddingMatrix, y: &[f64], offset: Option<&[f64]>, dimension: &Dimension) -> Vec<f64> {
    let image = &a.a * DVector::from_column_slice(y);
    let mut x = dimension.center();
    for (i, v) in x.iter_mut().enumerate() {
        *v += image[i] + offset.map_or(0.0, |o| o[i]);
    }
    dimension.clamp(&mut x);
    x
}

/// Box searched in the low-dimensional space.
pub fn low_dim_box(d_low: usize, dimension: &Dimension) -> Dimension {
    let half_width = dimension.coords().iter().map(Coord::width).sum::<f64>() / dimension.size() as f64 / 2.0;
    let r = (d_low as f64).sqrt() * half_width;
    Dimension::continuous(d_low, -r, r).expect("radius is finite and non-negative")
}

/// Sequential random embeddings over `objective` with `parameter.budget`
/// evaluations in total. Each stage runs SRacos for `inner_budget`
/// evaluations; the last stage also absorbs any remainder.
pub fn sre_optimize(
    objective: &mut Objective,
    d_low: usize,
    stages: usize,
    inner_budget: usize,
    parameter: &Parameter,
) -> Result<Solution> {
    let budget = parameter.budget;
    if stages == 0 || inner_budget == 0 || stages * inner_budget > budget {
        return Err(Error::config(format!(
            "{stages} stages of {inner_budget} evaluations do not fit a budget of {budget}"
        )));
    }
    parameter.validate()?;
    if parameter.noise.mode != NoiseMode::None && parameter.noise.mode != NoiseMode::Resample {
        return Err(Error::config("embeddings support only the resample noise mode"));
    }
    let dimension = objective.dimension().clone();
    let d_high = dimension.size();
    if dimension.coords().iter().any(|c| c.kind.is_discrete()) {
        return Err(Error::config("embeddings require a continuous search space"));
    }

    // inner space: alpha followed by the d_low embedding coordinates
    let low = low_dim_box(d_low, &dimension);
    let mut inner_coords = vec![Coord::continuous(-1.0, 1.0)];
    inner_coords.extend_from_slice(low.coords());
    let inner_dim = Dimension::new(inner_coords)?;

    let mut rng = seeded(parameter.seed);
    let center = dimension.center();
    let mut previous = center.clone();
    let mut best: Option<Solution> = None;
    let deadline = parameter.time_limit.map(|d| std::time::Instant::now() + d);
    let mut used = 0;

    for stage in 0..stages {
        let stage_budget = if stage + 1 == stages { budget - used } else { inner_budget };
        let a = make_embedding(d_high, d_low, &mut rng)?;
        let direction: Vec<f64> = previous.iter().zip(&center).map(|(p, c)| p - c).collect();
        let map = |z: &[f64]| -> Vec<f64> {
            let alpha = z[0];
            let offset: Vec<f64> = direction.iter().map(|d| alpha * d).collect();
            embed_with_offset(&a, &z[1..], Some(&offset), &dimension)
        };
        let mut eval = |z: &[f64]| objective.evaluate_raw(&map(z));
        let mut inner_param = parameter.clone();
        inner_param.budget = stage_budget;
        let mut session = Session::new(&mut eval, stage_budget)
            .with_resample(parameter.resample_count())
            .with_deadline(deadline);
        let found = sracos_search(&inner_dim, &inner_param, &mut session, split(&mut rng));
        used += session.used();
        let found = match found {
            Ok(s) => s,
            Err(Error::TimeLimit { best: inner, .. }) => {
                let inner = inner.map(|s| lift(&s, &map));
                let overall = pick_best(best, inner);
                return Err(Error::TimeLimit { best: overall.map(Box::new), evaluations: used });
            }
            Err(e) => return Err(e),
        };
        let lifted = lift(&found, &map);
        previous = lifted.x().to_vec();
        best = pick_best(best, Some(lifted));
    }
    Ok(best.expect("at least one stage ran"))
}

fn lift(s: &Solution, map: &impl Fn(&[f64]) -> Vec<f64>) -> Solution {
    Solution::evaluated(map(s.x()), s.score(), s.eval_count().max(1), s.seq_id())
}

fn pick_best(a: Option<Solution>, b: Option<Solution>) -> Option<Solution> {
    match (a, b) {
        (Some(a), Some(b)) => Some(if b.score() < a.score() { b } else { a }),
        (a, b) => a.or(b),
    }
}

/// Run with an [`EmbeddingConfig`], defaulting the per-stage budget.
pub fn embedding_optimize(objective: &mut Objective, config: &EmbeddingConfig, parameter: &Parameter) -> Result<Solution> {
    let stages = config.stages.max(1);
    let inner = config.inner_budget.unwrap_or(parameter.budget / stages);
    sre_optimize(objective, config.d_low, stages, inner, parameter)
}
