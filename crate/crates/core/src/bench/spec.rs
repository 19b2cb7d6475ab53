use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::bench::command::CommandEvaluator;
use crate::bench::delay::DelayEvaluator;
use crate::bench::functions::{ackley, lowdim_sphere, sphere};
use crate::bench::instances::Instance;
use crate::bench::noisy::GaussianNoise;
use crate::dimension::{Dimension, Kind};
use crate::error::{Error, Result};
use crate::objective::{EvalError, Evaluator, Objective};

/// Search-space payload as carried in task messages.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DimSpec {
    pub size: usize,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    pub kinds: Vec<Kind>,
}

impl DimSpec {
    pub fn continuous(size: usize, lower: f64, upper: f64) -> Self {
        DimSpec { size, lower: vec![lower; size], upper: vec![upper; size], kinds: vec![Kind::Continuous; size] }
    }

    pub fn binary(size: usize) -> Self {
        DimSpec { size, lower: vec![0.0; size], upper: vec![1.0; size], kinds: vec![Kind::Binary; size] }
    }

    pub fn from_dimension(d: &Dimension) -> Self {
        DimSpec {
            size: d.size(),
            lower: d.coords().iter().map(|c| c.lower).collect(),
            upper: d.coords().iter().map(|c| c.upper).collect(),
            kinds: d.coords().iter().map(|c| c.kind).collect(),
        }
    }

    pub fn to_dimension(&self) -> Result<Dimension> {
        if self.lower.len() != self.size {
            return Err(Error::config(format!("dim size {} but {} bounds", self.size, self.lower.len())));
        }
        Dimension::from_parts(&self.lower, &self.upper, &self.kinds)
    }
}

/// Objective named by a builtin or an external command.
///
/// Recognized `params`:
/// * `effective_dims` (lowdim_sphere, default 2)
/// * `instance`: path or inline instance object (max_coverage, sparse_regression)
/// * `command`: shell command line (cmd)
/// * `delay_loops`: busy-loop iterations added to every evaluation
/// * `noise_sigma`, `noise_seed`: additive Gaussian noise
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ObjectiveSpec {
    pub name: String,
    pub dim: DimSpec,
    #[serde(default)]
    pub params: Map<String, Value>,
}

impl ObjectiveSpec {
    pub fn new(name: impl Into<String>, dim: DimSpec) -> Self {
        ObjectiveSpec { name: name.into(), dim, params: Map::new() }
    }

    pub fn with_param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    fn uint(&self, key: &str) -> Result<Option<u64>> {
        match self.params.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(v) => v
                .as_u64()
                .map(Some)
                .ok_or_else(|| Error::config(format!("param `{key}` must be a non-negative integer"))),
        }
    }

    fn float(&self, key: &str) -> Result<Option<f64>> {
        match self.params.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(v) => v.as_f64().map(Some).ok_or_else(|| Error::config(format!("param `{key}` must be a number"))),
        }
    }

    fn instance(&self) -> Result<Instance> {
        match self.params.get("instance") {
            Some(Value::String(path)) => Instance::load(path),
            Some(v @ Value::Object(_)) => Instance::from_json(&v.to_string()),
            _ => Err(Error::config(format!("objective `{}` needs an `instance` param", self.name))),
        }
    }
}

struct Func<F>(F);

impl<F: Fn(&[f64]) -> f64 + Send + Sync> Evaluator for Func<F> {
    fn evaluate(&self, x: &[f64]) -> Result<f64, EvalError> {
        Ok((self.0)(x))
    }
}

/// Build the evaluator described by `spec`, checked against its dimension.
pub fn make_evaluator(spec: &ObjectiveSpec) -> Result<Box<dyn Evaluator>> {
    let dim = spec.dim.to_dimension()?;
    let base: Box<dyn Evaluator> = match spec.name.as_str() {
        "sphere" => Box::new(Func(sphere)),
        "ackley" => Box::new(Func(ackley)),
        "lowdim_sphere" => {
            let eff = spec.uint("effective_dims")?.unwrap_or(2) as usize;
            if eff == 0 || eff > dim.size() {
                return Err(Error::config(format!("effective_dims {eff} outside 1..={}", dim.size())));
            }
            Box::new(Func(move |x: &[f64]| lowdim_sphere(x, eff)))
        }
        "max_coverage" | "sparse_regression" => {
            let inst = spec.instance()?;
            let kind_matches = matches!(
                (&inst, spec.name.as_str()),
                (Instance::MaxCoverage { .. }, "max_coverage") | (Instance::SparseRegression { .. }, "sparse_regression")
            );
            if !kind_matches {
                return Err(Error::config(format!("instance type does not match objective `{}`", spec.name)));
            }
            if inst.size() != dim.size() || !dim.is_all_binary() {
                return Err(Error::config(format!(
                    "instance has {} items; dimension must be {} binary coordinates",
                    inst.size(),
                    inst.size()
                )));
            }
            Box::new(Func(move |x: &[f64]| inst.value(x)))
        }
        "cmd" => match spec.params.get("command") {
            Some(Value::String(c)) => Box::new(CommandEvaluator::new(c.clone())),
            _ => return Err(Error::config("objective `cmd` needs a `command` param")),
        },
        other => return Err(Error::config(format!("unknown objective `{other}`"))),
    };
    let mut eval = base;
    if let Some(sigma) = spec.float("noise_sigma")? {
        if !(sigma >= 0.0 && sigma.is_finite()) {
            return Err(Error::config("noise_sigma must be finite and non-negative"));
        }
        let seed = spec.uint("noise_seed")?.unwrap_or(0);
        eval = Box::new(GaussianNoise::new(eval, sigma, seed));
    }
    if let Some(loops) = spec.uint("delay_loops")? {
        if loops > 0 {
            eval = Box::new(DelayEvaluator::new(eval, loops));
        }
    }
    Ok(eval)
}

pub fn builtin_objective(spec: &ObjectiveSpec) -> Result<Objective> {
    let evaluator = make_evaluator(spec)?;
    Ok(Objective::with_evaluator(spec.dim.to_dimension()?, evaluator))
}
