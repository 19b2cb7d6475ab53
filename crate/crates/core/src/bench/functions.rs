use std::f64::consts::{E, PI};

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

/// Ackley with the usual constants `a = 20`, `b = 0.2`, `c = 2π`.
/// Global minimum 0 at the origin.
pub fn ackley(x: &[f64]) -> f64 {
    let d = x.len() as f64;
    let sq = x.iter().map(|v| v * v).sum::<f64>() / d;
    let cos = x.iter().map(|v| (2.0 * PI * v).cos()).sum::<f64>() / d;
    // grouped so each pair cancels exactly at the origin
    let value = (20.0 - 20.0 * (-0.2 * sq.sqrt()).exp()) + (E - cos.exp());
    value.max(0.0)
}

/// Sphere on the first `effective` coordinates only.
pub fn lowdim_sphere(x: &[f64], effective: usize) -> f64 {
    sphere(&x[..effective.min(x.len())])
}
