//! Pareto subset selection on a small max-coverage instance, compared with
//! the greedy choice.

use zeroth::bench::instances::coverage;
use zeroth::bench::{builtin_objective, DimSpec, Instance, ObjectiveSpec};
use zeroth::poss::recommended_iterations;
use zeroth::{opt_min, Algorithm, Parameter};

fn greedy(sets: &[Vec<usize>], k: usize) -> Vec<usize> {
    let mut chosen = Vec::new();
    for _ in 0..k {
        let next = (0..sets.len())
            .filter(|i| !chosen.contains(i))
            .max_by_key(|&i| {
                let mut with = chosen.clone();
                with.push(i);
                coverage(sets, &with)
            })
            .unwrap();
        chosen.push(next);
    }
    chosen
}

fn main() -> zeroth::Result<()> {
    // greedy takes the big set first and ends up one element short
    let sets = vec![
        vec![0, 1, 2, 3, 8],
        vec![0, 1, 4, 5],
        vec![2, 3, 6, 7],
        vec![4, 6],
        vec![5, 7],
    ];
    let instance = Instance::MaxCoverage { n: sets.len(), sets: sets.clone(), universe: 9 };
    let k = 2;

    let spec = ObjectiveSpec::new("max_coverage", DimSpec::binary(sets.len()))
        .with_param("instance", serde_json::from_str::<serde_json::Value>(&instance.to_json()).unwrap());
    let mut objective = builtin_objective(&spec)?.with_constraint(k);
    let budget = recommended_iterations(sets.len(), k) + 1;
    let parameter = Parameter::new(budget).with_seed(1).with_algorithm(Algorithm::Poss);
    let best = opt_min(&mut objective, &parameter)?;

    let picked: Vec<usize> = best.x().iter().enumerate().filter(|(_, &b)| b == 1.0).map(|(i, _)| i).collect();
    println!("poss   picks {picked:?}, covers {}", -best.score());
    let g = greedy(&sets, k);
    println!("greedy picks {g:?}, covers {}", coverage(&sets, &g));
    Ok(())
}
