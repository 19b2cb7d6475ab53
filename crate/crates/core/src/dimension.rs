//! Search-space description.

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Continuous,
    Integer,
    Binary,
}

impl Kind {
    pub fn is_discrete(self) -> bool {
        !matches!(self, Kind::Continuous)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Coord {
    pub lower: f64,
    pub upper: f64,
    pub kind: Kind,
}

impl Coord {
    pub fn continuous(lower: f64, upper: f64) -> Self {
        Coord { lower, upper, kind: Kind::Continuous }
    }

    pub fn integer(lower: i64, upper: i64) -> Self {
        Coord { lower: lower as f64, upper: upper as f64, kind: Kind::Integer }
    }

    pub fn binary() -> Self {
        Coord { lower: 0.0, upper: 1.0, kind: Kind::Binary }
    }

    pub fn contains(&self, v: f64) -> bool {
        v >= self.lower && v <= self.upper && (!self.kind.is_discrete() || v.fract() == 0.0)
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn clamp(&self, v: f64) -> f64 {
        let v = v.clamp(self.lower, self.upper);
        if self.kind.is_discrete() {
            v.round().clamp(self.lower, self.upper)
        } else {
            v
        }
    }

    /// Uniform draw inside `[lo, hi]`, respecting the coordinate kind.
    /// Discrete kinds draw uniformly over the whole values in range.
    pub(crate) fn sample_within(&self, lo: f64, hi: f64, rng: &mut Rng) -> f64 {
        match self.kind {
            Kind::Continuous => {
                if lo == hi {
                    lo
                } else {
                    lo + (hi - lo) * rng.random::<f64>()
                }
            }
            Kind::Integer | Kind::Binary => {
                let a = lo.ceil() as i64;
                let b = hi.floor() as i64;
                rng.random_range(a..=b) as f64
            }
        }
    }
}

/// The box `X` being searched: one [`Coord`] per coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct Dimension {
    coords: Vec<Coord>,
}

impl Dimension {
    pub fn new(coords: Vec<Coord>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::config("dimension size must be positive"));
        }
        for (i, c) in coords.iter().enumerate() {
            if !(c.lower.is_finite() && c.upper.is_finite()) {
                return Err(Error::config(format!("coordinate {i}: bounds must be finite")));
            }
            if c.lower > c.upper {
                return Err(Error::config(format!(
                    "coordinate {i}: lower bound {} exceeds upper bound {}",
                    c.lower, c.upper
                )));
            }
            match c.kind {
                Kind::Integer if c.lower.fract() != 0.0 || c.upper.fract() != 0.0 => {
                    return Err(Error::config(format!(
                        "coordinate {i}: integer bounds must be whole numbers"
                    )));
                }
                Kind::Binary if c.lower != 0.0 || c.upper != 1.0 => {
                    return Err(Error::config(format!("coordinate {i}: binary bounds must be [0, 1]")));
                }
                _ => {}
            }
        }
        Ok(Dimension { coords })
    }

    pub fn continuous(size: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![Coord::continuous(lower, upper); size])
    }

    pub fn binary(size: usize) -> Result<Self> {
        Self::new(vec![Coord::binary(); size])
    }

    /// Build from parallel bound/kind lists, as carried on the wire.
    pub fn from_parts(lower: &[f64], upper: &[f64], kinds: &[Kind]) -> Result<Self> {
        if lower.len() != upper.len() || lower.len() != kinds.len() {
            return Err(Error::config(format!(
                "bound lists disagree in length: lower {}, upper {}, kinds {}",
                lower.len(),
                upper.len(),
                kinds.len()
            )));
        }
        Self::new(
            lower
                .iter()
                .zip(upper)
                .zip(kinds)
                .map(|((&lower, &upper), &kind)| Coord { lower, upper, kind })
                .collect(),
        )
    }

    pub fn size(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Coord {
        &self.coords[i]
    }

    pub fn is_all_binary(&self) -> bool {
        self.coords.iter().all(|c| c.kind == Kind::Binary)
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.size() && self.coords.iter().zip(x).all(|(c, &v)| c.contains(v))
    }

    /// Box midpoint.
    pub fn center(&self) -> Vec<f64> {
        self.coords.iter().map(|c| 0.5 * (c.lower + c.upper)).collect()
    }

    pub fn clamp(&self, x: &mut [f64]) {
        for (c, v) in self.coords.iter().zip(x.iter_mut()) {
            *v = c.clamp(*v);
        }
    }

    /// Independent uniform draw of every coordinate inside its bounds.
    pub fn sample_uniform(&self, rng: &mut Rng) -> Vec<f64> {
        self.coords.iter().map(|c| c.sample_within(c.lower, c.upper, rng)).collect()
    }
}

pub fn sample_uniform(dimension: &Dimension, rng: &mut Rng) -> Vec<f64> {
    dimension.sample_uniform(rng)
}
