//! The random generator used by every stochastic operation.
//!
//! All draws come from [`Rng`], a ChaCha8 stream generator. It is portable
//! (identical output on every platform) and splittable: [`split`] derives an
//! independent child stream from a parent without disturbing reproducibility.

use rand::{RngCore, SeedableRng};
pub use rand_chacha::ChaCha8Rng as Rng;

pub fn seeded(seed: u64) -> Rng {
    Rng::seed_from_u64(seed)
}

/// Derive an independent child generator. The parent advances by one draw.
pub fn split(parent: &mut Rng) -> Rng {
    Rng::seed_from_u64(parent.next_u64())
}
