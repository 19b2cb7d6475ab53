//! Benchmark objectives and the plumbing to build them by name.

pub mod command;
pub mod delay;
pub mod functions;
pub mod instances;
pub mod noisy;
pub mod scaling;
mod spec;

pub use command::CommandEvaluator;
pub use delay::{busy_loop, DelayEvaluator};
pub use instances::Instance;
pub use noisy::GaussianNoise;
pub use spec::{builtin_objective, make_evaluator, DimSpec, ObjectiveSpec};
