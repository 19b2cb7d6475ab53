use rand::Rng as _;

use crate::dimension::{Dimension, Kind};
use crate::rng::Rng;
use crate::solution::Solution;

/// Axis-aligned sampling region learned around a positive solution.
#[derive(Clone, Debug, PartialEq)]
pub struct RegionModel {
    intervals: Vec<(f64, f64)>,
    collapsed: Vec<bool>,
    anchor: Vec<f64>,
    uncertain: Vec<usize>,
}

impl RegionModel {
    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn anchor(&self) -> &[f64] {
        &self.anchor
    }

    /// Coordinates left free, ascending.
    pub fn uncertain_dims(&self) -> &[usize] {
        &self.uncertain
    }

    pub fn is_collapsed(&self, i: usize) -> bool {
        self.collapsed[i]
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.intervals.len()
            && self.intervals.iter().zip(x).all(|(&(lo, hi), &v)| v >= lo && v <= hi)
    }

    fn collapse(&mut self, i: usize) {
        let a = self.anchor[i];
        self.intervals[i] = (a, a);
        self.collapsed[i] = true;
    }

    /// Learn a region containing `anchor` and excluding every negative that
    /// differs from it somewhere.
    ///
    /// While a distinguishable negative lies inside, one is picked at random
    /// together with a random coordinate on which it differs from the anchor.
    /// A continuous coordinate gets a new bound drawn strictly between the two
    /// values; a discrete one is collapsed onto the anchor. Afterwards random
    /// free coordinates are collapsed until at most `uncertain_dims` remain.
    pub fn learn(
        anchor: &Solution,
        negatives: &[Solution],
        dimension: &Dimension,
        uncertain_dims: usize,
        rng: &mut Rng,
    ) -> Self {
        let a = anchor.x();
        let n = dimension.size();
        let mut region = RegionModel {
            intervals: dimension.coords().iter().map(|c| (c.lower, c.upper)).collect(),
            collapsed: vec![false; n],
            anchor: a.to_vec(),
            uncertain: Vec::new(),
        };
        let negatives: Vec<&[f64]> = negatives.iter().map(|s| s.x()).filter(|x| *x != a).collect();

        let mut inside: Vec<&[f64]> = Vec::with_capacity(negatives.len());
        let mut differing: Vec<usize> = Vec::with_capacity(n);
        loop {
            inside.clear();
            inside.extend(negatives.iter().copied().filter(|x| region.contains(x)));
            if inside.is_empty() {
                break;
            }
            let neg = inside[rng.random_range(0..inside.len())];
            differing.clear();
            differing.extend((0..n).filter(|&i| neg[i] != a[i]));
            let i = differing[rng.random_range(0..differing.len())];
            match dimension.coord(i).kind {
                Kind::Continuous => {
                    let (lo, hi) = (a[i].min(neg[i]), a[i].max(neg[i]));
                    let b = lo + (hi - lo) * rng.random::<f64>();
                    if b <= lo || b >= hi {
                        // no representable boundary strictly between the two
                        region.collapse(i);
                    } else if neg[i] > a[i] {
                        region.intervals[i].1 = b;
                    } else {
                        region.intervals[i].0 = b;
                    }
                }
                Kind::Integer | Kind::Binary => region.collapse(i),
            }
        }

        let mut free: Vec<usize> = (0..n).filter(|&i| !region.collapsed[i]).collect();
        while free.len() > uncertain_dims {
            let j = free.swap_remove(rng.random_range(0..free.len()));
            region.collapse(j);
        }
        free.sort_unstable();
        region.uncertain = free;
        region
    }

    /// With probability `p_model` draw inside the region, otherwise uniformly
    /// from the whole box.
    pub fn sample(&self, dimension: &Dimension, p_model: f64, rng: &mut Rng) -> Vec<f64> {
        if rng.random::<f64>() < p_model {
            dimension
                .coords()
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if self.collapsed[i] {
                        self.anchor[i]
                    } else {
                        let (lo, hi) = self.intervals[i];
                        c.sample_within(lo, hi, rng)
                    }
                })
                .collect()
        } else {
            dimension.sample_uniform(rng)
        }
    }
}

pub fn learn_region(
    anchor: &Solution,
    negatives: &[Solution],
    dimension: &Dimension,
    uncertain_dims: usize,
    rng: &mut Rng,
) -> RegionModel {
    RegionModel::learn(anchor, negatives, dimension, uncertain_dims, rng)
}

pub fn sample_from_model(region: &RegionModel, dimension: &Dimension, p_model: f64, rng: &mut Rng) -> Vec<f64> {
    region.sample(dimension, p_model, rng)
}
