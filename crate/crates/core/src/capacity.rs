//! Capacity of the two-row binary symmetric composite channel.
//!
//! Inputs are the letters 0, 1, 2; outputs add `'?'` for a decreasing column.
//! Both rows pass through independent BSC(p) channels.

use alloc::vec::Vec;

use crate::error::{err, Result};

/// Output alphabet order used by [`ChannelSpec::matrix`].
pub const OUTPUTS: [&str; 4] = ["0", "1", "2", "?"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelSpec {
    p: f64,
}

impl ChannelSpec {
    pub fn new(p: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&p) {
            return Err(err!(Domain, "crossover probability {p} outside [0, 1/2]"));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Rows indexed by the input letter, columns by [`OUTPUTS`].
    pub fn matrix(&self) -> [[f64; 4]; 3] {
        let p = self.p;
        let (a, b, c) = ((1.0 - p) * (1.0 - p), p * (1.0 - p), p * p);
        [[a, b, c, b], [b, a, b, c], [c, b, a, b]]
    }
}

/// Input distribution `(alpha, 1 - 2 alpha, alpha)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InputDist {
    alpha: f64,
}

impl InputDist {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&alpha) {
            return Err(err!(Domain, "alpha {alpha} outside [0, 1/2]"));
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn probs(&self) -> [f64; 3] {
        [self.alpha, 1.0 - 2.0 * self.alpha, self.alpha]
    }
}

/// Entropy in bits, with `0 log 0 = 0`.
///
/// Terms are summed in sorted order, so permuted distributions agree exactly.
pub fn entropy(dist: &[f64]) -> f64 {
    let mut terms: Vec<f64> = dist.iter().filter(|&&x| x > 0.0).map(|&x| -x * libm::log2(x)).collect();
    terms.sort_by(f64::total_cmp);
    terms.iter().sum()
}

/// `H(Y|X)`, the same for every input distribution.
pub fn cond_entropy(spec: &ChannelSpec) -> f64 {
    entropy(&spec.matrix()[0])
}

fn output_dist(spec: &ChannelSpec, px: &[f64]) -> [f64; 4] {
    let m = spec.matrix();
    let mut py = [0.0; 4];
    for (x, row) in m.iter().enumerate() {
        for (y, v) in row.iter().enumerate() {
            py[y] += px[x] * v;
        }
    }
    py
}

/// `I(X;Y) = H(Y) - H(Y|X)` in bits.
pub fn mutual_information(spec: &ChannelSpec, dist: &InputDist) -> f64 {
    (entropy(&output_dist(spec, &dist.probs())) - cond_entropy(spec)).max(0.0)
}

fn info_at(spec: &ChannelSpec, alpha: f64) -> f64 {
    mutual_information(spec, &InputDist { alpha: alpha.clamp(0.0, 0.5) })
}

pub const DEFAULT_TOL: f64 = 1e-10;

/// Maximizing `alpha` and the capacity, by golden-section search.
///
/// A coarse scan first narrows the bracket around the best grid point.
pub fn optimize_alpha(spec: &ChannelSpec, tol: f64) -> Result<(f64, f64)> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(err!(Domain, "tolerance must be positive"));
    }
    const SCAN: usize = 64;
    let step = 0.5 / SCAN as f64;
    let best = (0..=SCAN)
        .map(|i| i as f64 * step)
        .map(|a| (a, info_at(spec, a)))
        .fold((0.0, f64::NEG_INFINITY), |acc, x| if x.1 > acc.1 { x } else { acc });
    let (mut lo, mut hi) = ((best.0 - step).max(0.0), (best.0 + step).min(0.5));
    let r = (libm::sqrt(5.0) - 1.0) / 2.0;
    let mut x1 = hi - r * (hi - lo);
    let mut x2 = lo + r * (hi - lo);
    let (mut f1, mut f2) = (info_at(spec, x1), info_at(spec, x2));
    while hi - lo > tol {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = info_at(spec, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = info_at(spec, x1);
        }
    }
    let alpha = (lo + hi) / 2.0;
    Ok((alpha, info_at(spec, alpha)))
}

/// Maximizing `alpha` by repeated grid refinement; a second route to the optimum.
pub fn optimize_alpha_grid(spec: &ChannelSpec, tol: f64) -> Result<(f64, f64)> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(err!(Domain, "tolerance must be positive"));
    }
    const POINTS: usize = 20;
    let (mut lo, mut hi) = (0.0, 0.5);
    let mut best = (1.0 / 3.0, info_at(spec, 1.0 / 3.0));
    loop {
        let step = (hi - lo) / POINTS as f64;
        for i in 0..=POINTS {
            let a = lo + i as f64 * step;
            let v = info_at(spec, a);
            if v > best.1 {
                best = (a, v);
            }
        }
        if step < tol {
            return Ok(best);
        }
        lo = (best.0 - step).max(0.0);
        hi = (best.0 + step).min(0.5);
    }
}

/// `I(X; Y1 Y2)` for a uniform bit sent over two independent BSC(p) copies.
pub fn cap_c2(p: f64) -> Result<f64> {
    ChannelSpec::new(p)?;
    Ok(mutual_information_general(&c2_matrix(p), &[0.5, 0.5]))
}

/// Transition rows of the repeated binary channel, outputs `00, 01, 10, 11`.
pub fn c2_matrix(p: f64) -> Vec<Vec<f64>> {
    let q = 1.0 - p;
    alloc::vec![alloc::vec![q * q, q * p, p * q, p * p], alloc::vec![p * p, p * q, q * p, q * q]]
}

/// Mutual information in bits of an arbitrary channel matrix and input law.
pub fn mutual_information_general(matrix: &[Vec<f64>], px: &[f64]) -> f64 {
    let outputs = matrix.first().map_or(0, Vec::len);
    let py: Vec<f64> = (0..outputs).map(|y| matrix.iter().zip(px).map(|(row, p)| p * row[y]).sum()).collect();
    let hyx: f64 = matrix.iter().zip(px).map(|(row, p)| p * entropy(row)).sum();
    (entropy(&py) - hyx).max(0.0)
}

/// Capacity and optimal input law by Blahut-Arimoto iteration.
pub fn blahut_arimoto(matrix: &[Vec<f64>], tol: f64, max_iter: usize) -> (f64, Vec<f64>) {
    let n = matrix.len();
    let mut px = alloc::vec![1.0 / n as f64; n];
    for _ in 0..max_iter {
        let outputs = matrix[0].len();
        let py: Vec<f64> = (0..outputs).map(|y| matrix.iter().zip(&px).map(|(row, p)| p * row[y]).sum()).collect();
        // exp of the divergence D(W(.|x) || py) in nats
        let c: Vec<f64> = matrix
            .iter()
            .map(|row| {
                let d: f64 =
                    row.iter().zip(&py).filter(|(w, _)| **w > 0.0).map(|(w, q)| w * libm::log(w / q)).sum();
                libm::exp(d)
            })
            .collect();
        let z: f64 = px.iter().zip(&c).map(|(p, c)| p * c).sum();
        let next: Vec<f64> = px.iter().zip(&c).map(|(p, c)| p * c / z).collect();
        let change = next.iter().zip(&px).map(|(a, b)| libm::fabs(a - b)).fold(0.0, f64::max);
        px = next;
        if change <= tol {
            break;
        }
    }
    (mutual_information_general(matrix, &px), px)
}

pub const BA_TOL: f64 = 1e-12;
pub const BA_MAX_ITER: usize = 100_000;

/// Full 3x4 matrix as nested vectors, for [`blahut_arimoto`].
pub fn matrix_rows(spec: &ChannelSpec) -> Vec<Vec<f64>> {
    spec.matrix().iter().map(|r| r.to_vec()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub p: f64,
    pub alpha_opt: f64,
    pub cap_c: f64,
    pub cap_c2: f64,
}

/// One row per grid point, sorted by `p`.
pub fn sweep(grid: &[f64], tol: f64) -> Result<Vec<SweepRow>> {
    let mut ps = grid.to_vec();
    ps.sort_by(f64::total_cmp);
    ps.into_iter()
        .map(|p| {
            let spec = ChannelSpec::new(p)?;
            let (alpha_opt, cap_c) = optimize_alpha(&spec, tol)?;
            Ok(SweepRow { p, alpha_opt, cap_c, cap_c2: cap_c2(p)? })
        })
        .collect()
}

/// `0, step, 2 step, ..., 1/2`.
pub fn uniform_grid(points: usize) -> Vec<f64> {
    let points = points.max(2);
    (0..points).map(|i| 0.5 * i as f64 / (points - 1) as f64).collect()
}
