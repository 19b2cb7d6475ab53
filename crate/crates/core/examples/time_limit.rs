//! A wall-clock limit stops the run between evaluations and still hands
//! back the best point found.

use std::time::Duration;

use zeroth::bench::busy_loop;
use zeroth::{opt_min, Dimension, Error, Objective, Parameter};

fn main() -> zeroth::Result<()> {
    let dim = Dimension::continuous(4, -1.0, 1.0)?;
    let mut objective = Objective::new(dim, |x: &[f64]| {
        busy_loop(2_000_000);
        x.iter().map(|v| v * v).sum()
    });
    let parameter = Parameter::new(1_000_000).with_time_limit(Duration::from_millis(300));
    match opt_min(&mut objective, &parameter) {
        Err(e @ Error::TimeLimit { .. }) => {
            let best = e.partial_best().expect("at least one evaluation");
            println!("{e}; best so far {:.4}", best.score());
        }
        other => println!("finished: {:?}", other.map(|s| s.score())),
    }
    Ok(())
}
