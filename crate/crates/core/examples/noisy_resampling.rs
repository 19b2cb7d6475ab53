//! Noisy sphere: compare no handling, resampling, threshold acceptance and
//! value suppression at the same evaluation budget.

use zeroth::bench::functions::sphere;
use zeroth::bench::GaussianNoise;
use zeroth::noise::NoiseConfig;
use zeroth::objective::from_fn;
use zeroth::{opt_min, Dimension, Objective, Parameter};

fn run(noise: NoiseConfig, seed: u64) -> zeroth::Result<f64> {
    let dim = Dimension::continuous(2, -1.0, 1.0)?;
    let noisy = GaussianNoise::new(from_fn(sphere), 0.5, seed);
    let mut objective = Objective::with_evaluator(dim, Box::new(noisy));
    let best = opt_min(&mut objective, &Parameter::new(2000).with_seed(seed).with_noise(noise))?;
    Ok(sphere(best.x()))
}

fn main() -> zeroth::Result<()> {
    let configs = [
        ("none", NoiseConfig::default()),
        ("resample m=10", NoiseConfig::resample(10)),
        ("threshold 0.1", NoiseConfig::threshold(0.1)),
        ("suppression s=1", NoiseConfig::suppression(1, 5)),
    ];
    for (name, config) in configs {
        let mut truth: Vec<f64> = (0..9).map(|s| run(config, s)).collect::<zeroth::Result<_>>()?;
        truth.sort_by(f64::total_cmp);
        println!("{name:>15}: median true value {:.4}", truth[truth.len() / 2]);
    }
    Ok(())
}
