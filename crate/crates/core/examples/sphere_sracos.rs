//! Minimize a 5-d sphere with sequential classification-based search.

use zeroth::{opt_min, Algorithm, Dimension, Objective, Parameter};

fn main() -> zeroth::Result<()> {
    let dim = Dimension::continuous(5, -1.0, 1.0)?;
    let mut objective = Objective::new(dim, |x: &[f64]| x.iter().map(|v| v * v).sum());
    let parameter = Parameter::new(1000).with_seed(3).with_algorithm(Algorithm::Sracos);

    let best = opt_min(&mut objective, &parameter)?;
    println!("best value {:.3e} at {:?}", best.score(), best.x());
    println!("evaluations used: {}", objective.history().len());
    Ok(())
}
