//! Mixed continuous / integer search space.

use zeroth::{opt_min, Coord, Dimension, Objective, Parameter};

fn main() -> zeroth::Result<()> {
    let dim = Dimension::new(vec![Coord::continuous(-5.0, 5.0), Coord::integer(-10, 10), Coord::binary()])?;
    // minimum at (1.5, 3, 1)
    let mut objective = Objective::new(dim, |x: &[f64]| {
        (x[0] - 1.5).powi(2) + (x[1] - 3.0).powi(2) + (1.0 - x[2])
    });
    let best = opt_min(&mut objective, &Parameter::new(600).with_seed(5))?;
    println!("best {:?} -> {:.4}", best.x(), best.score());
    Ok(())
}
