//! Reference implementations the library is checked against. Nothing here
//! calls into the solvers.
#![allow(dead_code)]

use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Best value of `budget` independent uniform draws from `[lo, hi]^d`.
pub fn uniform_search(f: impl Fn(&[f64]) -> f64, d: usize, lo: f64, hi: f64, budget: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x005e_ed0f_0dd5);
    let mut x = vec![0.0; d];
    let mut best = f64::INFINITY;
    for _ in 0..budget {
        for v in x.iter_mut() {
            *v = rng.random_range(lo..=hi);
        }
        best = best.min(f(&x));
    }
    best
}

/// Exact one-sided Wilcoxon signed-rank p-value for H1: `a` tends to be
/// smaller than `b`. Zero differences are dropped, ties get average ranks,
/// and the null distribution is enumerated over all 2^n sign patterns.
pub fn wilcoxon_less(a: &[f64], b: &[f64]) -> f64 {
    let diffs: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).filter(|d| *d != 0.0).collect();
    let n = diffs.len();
    assert!(n <= 20, "enumeration is only meant for small samples");
    if n == 0 {
        return 1.0;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| diffs[i].abs().total_cmp(&diffs[j].abs()));
    let mut ranks = vec![0.0; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && diffs[order[j + 1]].abs() == diffs[order[i]].abs() {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &o in &order[i..=j] {
            ranks[o] = avg;
        }
        i = j + 1;
    }
    // statistic: sum of ranks of positive differences; small means a < b
    let observed: f64 = (0..n).filter(|&i| diffs[i] > 0.0).map(|i| ranks[i]).sum();
    let mut at_most = 0u64;
    for mask in 0u64..(1 << n) {
        let w: f64 = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| ranks[i]).sum();
        if w <= observed + 1e-9 {
            at_most += 1;
        }
    }
    at_most as f64 / (1u64 << n) as f64
}

pub fn coverage(sets: &[Vec<usize>], chosen: &[usize]) -> usize {
    let mut covered = std::collections::BTreeSet::new();
    for &i in chosen {
        covered.extend(sets[i].iter().copied());
    }
    covered.len()
}

/// Largest coverage over all subsets of at most `k` sets.
pub fn brute_force_max_coverage(sets: &[Vec<usize>], k: usize) -> usize {
    let n = sets.len();
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize <= k)
        .map(|m| {
            let chosen: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
            coverage(sets, &chosen)
        })
        .max()
        .unwrap_or(0)
}

pub fn greedy_max_coverage(sets: &[Vec<usize>], k: usize) -> usize {
    let mut chosen: Vec<usize> = Vec::new();
    for _ in 0..k {
        let best = (0..sets.len()).filter(|i| !chosen.contains(i)).max_by_key(|&i| {
            let mut c = chosen.clone();
            c.push(i);
            coverage(sets, &c)
        });
        match best {
            Some(i) => chosen.push(i),
            None => break,
        }
    }
    coverage(sets, &chosen)
}

/// Random max-coverage instance: `n` sets over a universe of `universe`
/// elements, each set holding 2..=5 elements.
pub fn random_coverage_instance(n: usize, universe: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let size = rng.random_range(2..=5);
            let mut s: Vec<usize> = (0..size).map(|_| rng.random_range(0..universe)).collect();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect()
}

pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

/// Textbook Ackley with a = 20, b = 0.2, c = 2π.
pub fn ackley(x: &[f64]) -> f64 {
    let d = x.len() as f64;
    let s1 = x.iter().map(|v| v * v).sum::<f64>() / d;
    let s2 = x.iter().map(|v| (2.0 * std::f64::consts::PI * v).cos()).sum::<f64>() / d;
    -20.0 * (-0.2 * s1.sqrt()).exp() - s2.exp() + 20.0 + std::f64::consts::E
}

pub fn median(v: &mut [f64]) -> f64 {
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

#[test]
fn wilcoxon_oracle_known_values() {
    // all 5 differences negative: only the empty sign pattern is as extreme
    let p = wilcoxon_less(&[0.0; 5], &[1.0, 2.0, 3.0, 4.0, 5.0]);
    assert!((p - 1.0 / 32.0).abs() < 1e-12);
    // symmetric case
    let p = wilcoxon_less(&[1.0, 0.0], &[0.0, 1.0]);
    assert!((p - 0.75).abs() < 1e-12);
}

#[test]
fn brute_force_oracle() {
    let sets = vec![vec![0, 1, 2, 3, 8], vec![0, 1, 4, 5], vec![2, 3, 6, 7], vec![4, 6], vec![5, 7]];
    assert_eq!(brute_force_max_coverage(&sets, 2), 8);
    assert_eq!(greedy_max_coverage(&sets, 2), 7);
}
