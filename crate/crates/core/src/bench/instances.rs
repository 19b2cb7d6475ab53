//! Subset-selection benchmark instances and their JSON file format.
//!
//! ```json
//! {"type":"max_coverage","n":4,"sets":[[0,1],[1,2],[3],[0,3]],"universe":4}
//! {"type":"sparse_regression","X":[[1.0,0.0],[0.0,1.0]],"y":[1.0,2.0]}
//! ```
//!
//! Both are minimized over bit vectors selecting items (sets or columns):
//! max coverage returns minus the number of covered elements, sparse
//! regression the mean squared residual of the least-squares fit on the
//! selected columns.

use std::collections::HashSet;
use std::path::Path;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Instance {
    MaxCoverage {
        n: usize,
        sets: Vec<Vec<usize>>,
        universe: usize,
    },
    SparseRegression {
        #[serde(rename = "X")]
        x: Vec<Vec<f64>>,
        y: Vec<f64>,
    },
}

impl Instance {
    pub fn from_json(text: &str) -> Result<Self> {
        let inst: Instance =
            serde_json::from_str(text).map_err(|e| Error::config(format!("malformed instance: {e}")))?;
        inst.validate()?;
        Ok(inst)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::config(format!("cannot read instance {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instances always serialize")
    }

    fn validate(&self) -> Result<()> {
        match self {
            Instance::MaxCoverage { n, sets, universe } => {
                if *n == 0 || sets.len() != *n {
                    return Err(Error::config(format!("max_coverage: n={n} but {} sets", sets.len())));
                }
                if let Some(e) = sets.iter().flatten().find(|&&e| e >= *universe) {
                    return Err(Error::config(format!("max_coverage: element {e} outside universe {universe}")));
                }
            }
            Instance::SparseRegression { x, y } => {
                if x.is_empty() || x.len() != y.len() {
                    return Err(Error::config(format!(
                        "sparse_regression: {} rows in X but {} targets",
                        x.len(),
                        y.len()
                    )));
                }
                let cols = x[0].len();
                if cols == 0 || x.iter().any(|row| row.len() != cols) {
                    return Err(Error::config("sparse_regression: ragged or empty X"));
                }
            }
        }
        Ok(())
    }

    /// Number of selectable items.
    pub fn size(&self) -> usize {
        match self {
            Instance::MaxCoverage { n, .. } => *n,
            Instance::SparseRegression { x, .. } => x[0].len(),
        }
    }

    /// Objective value of the selection `x` (non-zero coordinates selected).
    pub fn value(&self, x: &[f64]) -> f64 {
        let selected: Vec<usize> = x.iter().enumerate().filter(|(_, &v)| v != 0.0).map(|(i, _)| i).collect();
        match self {
            Instance::MaxCoverage { sets, .. } => -(coverage(sets, &selected) as f64),
            Instance::SparseRegression { x, y } => regression_mse(x, y, &selected),
        }
    }
}

pub fn coverage(sets: &[Vec<usize>], selected: &[usize]) -> usize {
    selected.iter().flat_map(|&i| sets[i].iter().copied()).collect::<HashSet<_>>().len()
}

/// Mean squared residual of the least-squares fit of `y` on the selected
/// columns of `x` (no intercept). The empty selection predicts zero.
pub fn regression_mse(x: &[Vec<f64>], y: &[f64], selected: &[usize]) -> f64 {
    let m = y.len();
    let target = DVector::from_column_slice(y);
    if selected.is_empty() {
        return target.norm_squared() / m as f64;
    }
    let a = DMatrix::from_fn(m, selected.len(), |r, c| x[r][selected[c]]);
    let svd = a.clone().svd(true, true);
    let coef = svd.solve(&target, 1e-12).expect("both singular vector sets were computed");
    (a * coef - target).norm_squared() / m as f64
}
