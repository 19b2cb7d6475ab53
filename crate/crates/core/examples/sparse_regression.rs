//! Choose 2 of 6 regressors whose least-squares fit explains y.

use rand::Rng as _;
use zeroth::bench::{builtin_objective, DimSpec, Instance, ObjectiveSpec};
use zeroth::{opt_min, rng, Algorithm, Parameter};

fn main() -> zeroth::Result<()> {
    let mut r = rng::seeded(9);
    let rows = 40;
    let x: Vec<Vec<f64>> = (0..rows).map(|_| (0..6).map(|_| r.random_range(-1.0..1.0)).collect()).collect();
    let y: Vec<f64> = x.iter().map(|row| 2.0 * row[1] - 3.0 * row[4] + 0.01 * r.random_range(-1.0..1.0)).collect();
    let instance = Instance::SparseRegression { x, y };

    let spec = ObjectiveSpec::new("sparse_regression", DimSpec::binary(6))
        .with_param("instance", serde_json::from_str::<serde_json::Value>(&instance.to_json()).unwrap());
    let mut objective = builtin_objective(&spec)?.with_constraint(2);
    let best = opt_min(&mut objective, &Parameter::new(300).with_seed(2).with_algorithm(Algorithm::Poss))?;
    println!("selected bits {:?}, mse {:.2e}", best.x(), best.score());
    Ok(())
}
