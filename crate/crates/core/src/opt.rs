use crate::embedding::embedding_optimize;
use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::parameter::{Algorithm, Parameter};
use crate::poss::poss_optimize;
use crate::racos::{racos_optimize, sracos_optimize};
use crate::solution::Solution;

/// Minimize `objective` within `parameter.budget` raw evaluations.
///
/// `Algorithm::Auto` runs POSS on all-binary spaces carrying a cardinality
/// constraint and SRacos everywhere else. An embedding config wraps SRacos
/// in sequential random embeddings. On success the objective's history
/// holds exactly `budget` records.
pub fn opt_min(objective: &mut Objective, parameter: &Parameter) -> Result<Solution> {
    let algorithm = parameter.resolve_algorithm(objective.dimension(), objective.constraint());
    if let Some(config) = &parameter.embedding {
        if algorithm != Algorithm::Sracos {
            return Err(Error::config("embeddings run on top of SRacos only"));
        }
        return embedding_optimize(objective, config, parameter);
    }
    match algorithm {
        Algorithm::Sracos | Algorithm::Auto => sracos_optimize(objective, parameter),
        Algorithm::Racos => racos_optimize(objective, parameter),
        Algorithm::Poss => {
            let k = objective
                .constraint()
                .ok_or_else(|| Error::config("POSS needs a cardinality constraint on the objective"))?;
            poss_optimize(objective, k, parameter)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bench::functions::sphere;
    use crate::dimension::Dimension;

    #[test]
    fn exact_budget_and_quality() {
        let mut obj = Objective::new(Dimension::continuous(2, -1.0, 1.0).unwrap(), sphere);
        let best = opt_min(&mut obj, &Parameter::new(200).with_seed(1)).unwrap();
        assert_eq!(obj.history().len(), 200);
        assert!(best.value().unwrap() < 0.1);
        assert_eq!(obj.history_log().best(), best.value());
    }

    #[test]
    fn budget_equal_to_train_size() {
        let mut obj = Objective::new(Dimension::continuous(2, -1.0, 1.0).unwrap(), sphere);
        let best = opt_min(&mut obj, &Parameter::new(20).with_seed(2)).unwrap();
        let min = obj.history().iter().map(|r| r.value).fold(f64::INFINITY, f64::min);
        assert_eq!(best.value(), Some(min));
    }

    #[test]
    fn poss_on_continuous_space_rejected() {
        let mut obj = Objective::new(Dimension::continuous(2, -1.0, 1.0).unwrap(), sphere).with_constraint(1);
        let p = Parameter::new(50).with_algorithm(Algorithm::Poss);
        assert!(matches!(opt_min(&mut obj, &p), Err(Error::Config(_))));
    }

    #[test]
    fn budget_below_train_size_rejected() {
        let mut obj = Objective::new(Dimension::continuous(2, -1.0, 1.0).unwrap(), sphere);
        assert!(matches!(opt_min(&mut obj, &Parameter::new(5)), Err(Error::Config(_))));
    }

    #[test]
    fn deterministic_history() {
        let run = |seed| {
            let mut obj = Objective::new(Dimension::continuous(3, -1.0, 1.0).unwrap(), sphere);
            let best = opt_min(&mut obj, &Parameter::new(150).with_seed(seed)).unwrap();
            let values: Vec<f64> = obj.history().iter().map(|r| r.value).collect();
            (best, values)
        };
        assert_eq!(run(9), run(9));
        assert_ne!(run(9).1, run(10).1);
    }
}
