//! Write the per-evaluation history to CSV and inspect the convergence curve.

use zeroth::bench::functions::ackley;
use zeroth::{opt_min, Dimension, Objective, Parameter};

fn main() -> zeroth::Result<()> {
    let mut objective = Objective::new(Dimension::continuous(3, -1.0, 1.0)?, ackley);
    opt_min(&mut objective, &Parameter::new(400).with_seed(8))?;

    let path = std::env::temp_dir().join("zeroth_history.csv");
    objective.write_history(&path)?;
    println!("wrote {}", path.display());
    for r in objective.history().iter().step_by(50) {
        println!("eval {:>4}  best so far {:.4}", r.eval_index, r.best_so_far);
    }
    Ok(())
}
