//! Classification-based optimization.
//!
//! Both solvers keep `r` training solutions split into the `k` best
//! (positives) and the rest (negatives). A new candidate is drawn from an
//! axis-aligned region that contains a random positive and excludes every
//! negative, with only a few coordinates left free. [`sracos_optimize`]
//! updates the sets after every evaluation; [`racos_optimize`] works in
//! batches of `r - k`.

mod batch;
mod region;
mod sets;
mod sracos;

pub use batch::racos_optimize;
pub use region::{learn_region, sample_from_model, RegionModel};
pub use sets::{replace, TrainingSets};
pub use sracos::{sracos_optimize, Sracos};
pub(crate) use sracos::sracos_search;
