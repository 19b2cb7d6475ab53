//! Derivative-free (zeroth-order) optimization.
//!
//! The crate minimizes black-box functions using only sampled function
//! values. It provides:
//!
//! * [`racos`]: classification-based search. Sequential SRacos is the
//!   default for any space with continuous or integer coordinates, batch
//!   Racos is available on request.
//! * [`poss`]: Pareto optimization for subset selection over binary spaces
//!   with a cardinality constraint.
//! * [`noise`]: resampling, value suppression and threshold selection
//!   wrappers for noisy objectives.
//! * [`embedding`]: random embedding and sequential random embeddings for
//!   high-dimensional problems with low effective dimension.
//! * [`dist`]: a control server, evaluation servers and an asynchronous
//!   client speaking line-delimited JSON over TCP.
//! * [`bench`]: benchmark objectives, delay injection, instance loaders and
//!   external-command objectives.
//!
//! A problem is described by an [`Objective`] (evaluator plus [`Dimension`]),
//! tuned by a [`Parameter`] whose only required field is the evaluation
//! budget, and solved by [`opt_min`]:
//!
//! ```
//! use zeroth::{opt_min, Dimension, Objective, Parameter};
//!
//! let dim = Dimension::continuous(2, -1.0, 1.0).unwrap();
//! let mut objective = Objective::new(dim, |x: &[f64]| x.iter().map(|v| v * v).sum());
//! let best = opt_min(&mut objective, &Parameter::new(200).with_seed(7)).unwrap();
//! assert_eq!(objective.history().len(), 200);
//! assert!(best.value().unwrap() < 0.1);
//! ```
//!
//! All randomness flows from a [`rng::Rng`] (ChaCha8) seeded from
//! [`Parameter::seed`], so single-process runs are reproducible.

pub mod bench;
pub mod cli;
pub mod dimension;
pub mod dist;
pub mod embedding;
mod error;
pub mod history;
pub mod noise;
pub mod objective;
pub mod opt;
pub mod parameter;
pub mod poss;
pub mod racos;
pub mod rng;
pub mod session;
pub mod solution;

pub use dimension::{Coord, Dimension, Kind};
pub use error::{Error, Result};
pub use history::HistoryRecord;
pub use objective::{EvalError, Evaluator, Objective};
pub use opt::opt_min;
pub use parameter::{Algorithm, EmbeddingConfig, Parameter, ReplaceStrategy};
pub use solution::Solution;
