//! Reference calculations that share no code with the library solvers.
#![allow(dead_code)]

use qdgate_core::constants::HBAR2_OVER_2M0;
use qdgate_core::{NeighborOccupancy, QubitGeometry};

/// Closed-form transmission through one rectangular barrier of height `v0`
/// and width `w` with equal mass `m` everywhere.
pub fn rectangular_barrier(e: f64, v0: f64, w: f64, m: f64) -> f64 {
    let scale = m / HBAR2_OVER_2M0;
    if e < v0 {
        let kappa = (scale * (v0 - e)).sqrt();
        let s = (kappa * w).sinh();
        1.0 / (1.0 + v0 * v0 * s * s / (4.0 * e * (v0 - e)))
    } else if e > v0 {
        let k = (scale * (e - v0)).sqrt();
        let s = (k * w).sin();
        1.0 / (1.0 + v0 * v0 * s * s / (4.0 * e * (e - v0)))
    } else {
        1.0 / (1.0 + scale * v0 * w * w / 4.0)
    }
}

/// Lowest `count` eigenvalues of the hard-wall box spanning the insulating
/// stack, from a BenDaniel-Duke central-difference Hamiltonian with about
/// `points` nodes, found by Sturm-sequence bisection.
pub fn finite_difference_levels(
    geometry: &QubitGeometry,
    bias: f64,
    occupancy: NeighborOccupancy,
    points: usize,
    count: usize,
) -> Vec<f64> {
    let (lo, hi) = geometry.stack_extent();
    let h = (hi - lo) / (points + 1) as f64;
    let starts = geometry.layer_starts();
    let mass_at = |x: f64| {
        let i = starts.iter().rposition(|&s| s <= x).unwrap_or(0);
        geometry.layers[i].effective_mass
    };
    // cell average of the potential over [x - h/2, x + h/2]
    let potential = |x: f64| {
        let q = 8;
        (0..q)
            .map(|j| {
                let y = x - 0.5 * h + (j as f64 + 0.5) * h / q as f64;
                geometry.potential_at(y, bias, occupancy).unwrap()
            })
            .sum::<f64>()
            / q as f64
    };
    let hop: Vec<f64> = (0..=points)
        .map(|i| {
            let x_mid = lo + (i as f64 + 0.5) * h;
            HBAR2_OVER_2M0 / (mass_at(x_mid) * h * h)
        })
        .collect();
    let diag: Vec<f64> = (1..=points)
        .map(|i| potential(lo + i as f64 * h) + hop[i - 1] + hop[i])
        .collect();
    let off: Vec<f64> = hop[1..points].to_vec();

    let below = |lambda: f64| -> usize {
        let mut n = 0;
        let mut d = diag[0] - lambda;
        if d < 0.0 {
            n += 1;
        }
        for i in 1..diag.len() {
            let prev = if d == 0.0 { 1e-300 } else { d };
            d = diag[i] - lambda - off[i - 1] * off[i - 1] / prev;
            if d < 0.0 {
                n += 1;
            }
        }
        n
    };

    let spread = 2.0 * off.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    let floor = diag.iter().fold(f64::INFINITY, |a, &b| a.min(b)) - spread;
    let ceiling = diag.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b)) + spread;

    (0..count)
        .map(|k| {
            let (mut a, mut b) = (floor, ceiling);
            for _ in 0..200 {
                let m = 0.5 * (a + b);
                if below(m) > k {
                    b = m;
                } else {
                    a = m;
                }
                if b - a < 1e-13 {
                    break;
                }
            }
            0.5 * (a + b)
        })
        .collect()
}

/// Classical RK4 on `i d/dt (a, b) = [[wa, c], [c, wb]] (a, b)` from `a = 1`;
/// returns the largest `|b|²` seen up to `t_end` with `steps` steps.
pub fn rk4_max_transfer(wa: f64, wb: f64, c: f64, t_end: f64, steps: usize) -> f64 {
    type C = (f64, f64);
    fn mul_neg_i(z: C) -> C {
        (z.1, -z.0)
    }
    let rhs = |a: C, b: C| -> (C, C) {
        let da = (wa * a.0 + c * b.0, wa * a.1 + c * b.1);
        let db = (c * a.0 + wb * b.0, c * a.1 + wb * b.1);
        (mul_neg_i(da), mul_neg_i(db))
    };
    let add = |z: C, w: C, s: f64| (z.0 + s * w.0, z.1 + s * w.1);
    let dt = t_end / steps as f64;
    let (mut a, mut b): (C, C) = ((1.0, 0.0), (0.0, 0.0));
    let mut best = 0.0f64;
    for _ in 0..steps {
        let (ka1, kb1) = rhs(a, b);
        let (ka2, kb2) = rhs(add(a, ka1, 0.5 * dt), add(b, kb1, 0.5 * dt));
        let (ka3, kb3) = rhs(add(a, ka2, 0.5 * dt), add(b, kb2, 0.5 * dt));
        let (ka4, kb4) = rhs(add(a, ka3, dt), add(b, kb3, dt));
        let step = |z: C, k1: C, k2: C, k3: C, k4: C| {
            (
                z.0 + dt / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0),
                z.1 + dt / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1),
            )
        };
        a = step(a, ka1, ka2, ka3, ka4);
        b = step(b, kb1, kb2, kb3, kb4);
        best = best.max(b.0 * b.0 + b.1 * b.1);
    }
    best
}
