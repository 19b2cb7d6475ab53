//! Batch Racos on Ackley: each iteration learns one region per positive
//! and samples a whole batch before updating the training sets.

use zeroth::bench::functions::ackley;
use zeroth::{opt_min, Algorithm, Dimension, Objective, Parameter};

fn main() -> zeroth::Result<()> {
    let dim = Dimension::continuous(4, -1.0, 1.0)?;
    for algorithm in [Algorithm::Racos, Algorithm::Sracos] {
        let mut objective = Objective::new(dim.clone(), ackley);
        let parameter = Parameter::new(2000).with_seed(11).with_algorithm(algorithm);
        let best = opt_min(&mut objective, &parameter)?;
        println!("{algorithm:?}: ackley {:.4}", best.score());
    }
    Ok(())
}
