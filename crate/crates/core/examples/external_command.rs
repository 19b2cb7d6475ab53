//! Objective evaluated by an external process: one line of coordinates in,
//! one value out.

use zeroth::bench::CommandEvaluator;
use zeroth::{opt_min, Dimension, Objective, Parameter};

fn main() -> zeroth::Result<()> {
    let cmd = r#"while read line; do echo "$line" | awk '{ s = 0; for (i = 1; i <= NF; i++) s += ($i - 0.25) ^ 2; printf "%.17g\n", s }'; done"#;
    let dim = Dimension::continuous(3, -1.0, 1.0)?;
    let mut objective = Objective::with_evaluator(dim, Box::new(CommandEvaluator::new(cmd)));
    let best = opt_min(&mut objective, &Parameter::new(300).with_seed(1))?;
    println!("best {:?} -> {:.5}", best.x(), best.score());
    Ok(())
}
