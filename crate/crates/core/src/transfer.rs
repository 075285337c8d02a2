//! Plane-wave transfer-matrix solution of the 1D effective-mass
//! Schrödinger equation on a [`PotentialMesh`].
//!
//! Each cell carries `ψ(y) = A e^{iky} + B e^{-iky}` in local coordinates.
//! Matching ψ and ψ'/m at every interface gives the cell-to-cell transfer
//! relations; the forward pass composes them as scattering matrices
//! (Redheffer star products) so that thick evanescent barriers never
//! overflow. Wavefunctions are recovered by back-substitution from the gate
//! lead, where only the transmitted wave is present.

use std::ops::Range;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constants::HBAR2_OVER_2M0;
use crate::device::{LayerLabel, PotentialMesh};
use crate::error::{Error, Result};
use crate::search;

/// Slack allowed on `T ≤ 1` from rounding.
pub const TRANSMISSION_SLACK: f64 = 1e-6;

/// Localization threshold on `max(f_a, f_b)` for a computational basis state.
pub const LOCALIZATION_THRESHOLD: f64 = 0.98;

/// Wavevectors closer to zero than this are nudged off the turning point.
const MIN_WAVEVECTOR: f64 = 1e-9;

/// Refinement subdivisions when a grid maximum hides unresolved structure.
const SUBSCAN_POINTS: usize = 24;
const SUBSCAN_DEPTH: usize = 3;

/// Complex wavevector (nm⁻¹) in a region of potential `v` for energy `e`,
/// both in eV, and effective mass `m` in units of m0. Real and non-negative
/// above the band edge, positive imaginary below it.
pub fn local_wavevector(e: f64, v: f64, m: f64) -> Complex64 {
    let k2 = m * (e - v) / HBAR2_OVER_2M0;
    if k2 >= 0.0 {
        Complex64::new(k2.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-k2).sqrt())
    }
}

/// Amplitudes of the plane-wave pair in one mesh segment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SegmentAmplitudes {
    /// Right-moving coefficient.
    pub a: Complex64,
    /// Left-moving coefficient.
    pub b: Complex64,
    /// Wavevector, nm⁻¹.
    pub k: Complex64,
}

/// Result of one forward pass at fixed energy, for unit incidence from the
/// channel lead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Propagation {
    /// Amplitudes in the channel lead: `a = 1`, `b` is the reflected wave.
    pub incident: SegmentAmplitudes,
    /// Amplitudes in the gate lead: `a` is the transmitted wave, `b = 0`.
    pub terminal: SegmentAmplitudes,
    /// Effective masses of the channel and gate leads.
    pub lead_masses: (f64, f64),
}

impl Propagation {
    fn flux_factor(k: Complex64, m: f64) -> Option<f64> {
        (k.im == 0.0 && k.re > 0.0).then(|| k.re / m)
    }

    /// Transmitted probability flux, zero when either lead is closed.
    pub fn transmission(&self) -> f64 {
        let (m0, mn) = self.lead_masses;
        match (
            Self::flux_factor(self.incident.k, m0),
            Self::flux_factor(self.terminal.k, mn),
        ) {
            (Some(q0), Some(qn)) => qn / q0 * self.terminal.a.norm_sqr(),
            _ => 0.0,
        }
    }

    /// Reflected probability flux, zero when the channel lead is closed.
    pub fn reflection(&self) -> f64 {
        match Self::flux_factor(self.incident.k, self.lead_masses.0) {
            Some(_) => self.incident.b.norm_sqr(),
            None => 0.0,
        }
    }
}

/// Scattering matrix of a two-port section: `r_left`/`t_right` for waves
/// arriving from the left, `r_right`/`t_left` for waves arriving from the
/// right.
#[derive(Debug, Clone, Copy)]
struct Scattering {
    r_left: Complex64,
    t_right: Complex64,
    t_left: Complex64,
    r_right: Complex64,
}

impl Scattering {
    fn identity() -> Self {
        Scattering {
            r_left: Complex64::new(0.0, 0.0),
            t_right: Complex64::new(1.0, 0.0),
            t_left: Complex64::new(1.0, 0.0),
            r_right: Complex64::new(0.0, 0.0),
        }
    }

    /// Append free propagation with phase factor `p = e^{ikh}`.
    fn propagate(&mut self, p: Complex64) {
        self.t_right *= p;
        self.t_left *= p;
        self.r_right *= p * p;
    }

    /// Append an interface between regions with flux factors `q1 = k1/m1`
    /// (left) and `q2 = k2/m2` (right).
    fn interface(&mut self, q1: Complex64, q2: Complex64) {
        let sum = q1 + q2;
        let r12 = (q1 - q2) / sum;
        let t12 = 2.0 * q1 / sum;
        let t21 = 2.0 * q2 / sum;
        let r21 = -r12;
        let denom = Complex64::new(1.0, 0.0) - self.r_right * r12;
        let t_right = t12 * self.t_right / denom;
        self.r_left += self.t_left * r12 * self.t_right / denom;
        self.r_right = r21 + t12 * self.r_right * t21 / denom;
        self.t_left = self.t_left * t21 / denom;
        self.t_right = t_right;
    }

    fn is_finite(&self) -> bool {
        [self.r_left, self.t_right, self.t_left, self.r_right]
            .iter()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

fn wavevector(mesh: &PotentialMesh, cell: usize, e: f64) -> Complex64 {
    let k = local_wavevector(e, mesh.potential()[cell], mesh.mass()[cell]);
    if k.norm() < MIN_WAVEVECTOR {
        Complex64::new(MIN_WAVEVECTOR, 0.0)
    } else {
        k
    }
}

/// Forward pass at energy `e` (eV) with unit incidence from the channel lead
/// and no wave incident from the gate lead.
pub fn propagate(mesh: &PotentialMesh, e: f64) -> Result<Propagation> {
    let n = mesh.len();
    let mass = mesh.mass();
    let mut s = Scattering::identity();
    let k_first = wavevector(mesh, 0, e);
    let mut k_prev = k_first;
    let mut q_prev = k_prev / mass[0];
    for cell in 1..n {
        let k = if mesh.potential()[cell] == mesh.potential()[cell - 1]
            && mass[cell] == mass[cell - 1]
        {
            k_prev
        } else {
            wavevector(mesh, cell, e)
        };
        let q = k / mass[cell];
        if q != q_prev {
            s.interface(q_prev, q);
        }
        if cell + 1 < n {
            s.propagate((Complex64::i() * k * mesh.width(cell)).exp());
        }
        if !s.is_finite() {
            return Err(Error::Overflow {
                segment: cell,
                energy: e,
            });
        }
        k_prev = k;
        q_prev = q;
    }
    Ok(Propagation {
        incident: SegmentAmplitudes {
            a: Complex64::new(1.0, 0.0),
            b: s.r_left,
            k: k_first,
        },
        terminal: SegmentAmplitudes {
            a: s.t_right,
            b: Complex64::new(0.0, 0.0),
            k: k_prev,
        },
        lead_masses: (mass[0], mass[n - 1]),
    })
}

/// Transmission probability `T(E)` through the mesh.
pub fn transmission(mesh: &PotentialMesh, e: f64) -> Result<f64> {
    propagate(mesh, e).map(|p| p.transmission())
}

/// Sampled transmission spectrum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TransmissionSpectrum {
    pub energies: Vec<f64>,
    pub transmission: Vec<f64>,
}

/// Evaluate `T(E)` on a uniform grid from `e_min` to `e_max` inclusive.
pub fn transmission_spectrum(
    mesh: &PotentialMesh,
    e_min: f64,
    e_max: f64,
    points: usize,
) -> Result<TransmissionSpectrum> {
    if points < 2 || !(e_max > e_min) {
        return Err(Error::Domain(
            "spectrum needs e_max > e_min and ≥ 2 points".into(),
        ));
    }
    let energies: Vec<f64> = (0..points)
        .map(|i| e_min + (e_max - e_min) * i as f64 / (points - 1) as f64)
        .collect();
    let transmission = energies
        .par_iter()
        .map(|&e| transmission(mesh, e))
        .collect::<Result<Vec<_>>>()?;
    Ok(TransmissionSpectrum {
        energies,
        transmission,
    })
}

/// A transmission resonance together with its reconstructed wavefunction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResonanceLevel {
    /// Peak energy, eV.
    pub energy: f64,
    /// Full width at half maximum of the `T(E)` peak, eV (Lorentzian estimate).
    pub peak_width: f64,
    /// Transmission at the peak.
    pub peak_transmission: f64,
    /// `|ψ|²` at each cell center, normalized over the dot window.
    pub density: Vec<f64>,
    /// Weight inside dot a.
    pub f_a: f64,
    /// Weight inside dot b.
    pub f_b: f64,
}

impl ResonanceLevel {
    /// Largest single-dot weight.
    pub fn localization(&self) -> f64 {
        self.f_a.max(self.f_b)
    }

    pub fn is_localized(&self) -> bool {
        self.localization() >= LOCALIZATION_THRESHOLD
    }
}

/// Options for [`find_resonances`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResonanceSearch {
    pub e_min: f64,
    pub e_max: f64,
    /// Grid step of the initial scan, eV.
    pub scan_step: f64,
    /// Energy tolerance of the peak refinement, eV.
    pub refine_tol: f64,
}

impl ResonanceSearch {
    pub fn new(e_min: f64, e_max: f64, scan_step: f64, refine_tol: f64) -> Self {
        ResonanceSearch {
            e_min,
            e_max,
            scan_step,
            refine_tol,
        }
    }
}

/// Inverse transmission amplitude `1/t` at one energy. Near an isolated
/// resonance it behaves as `s·(E − E_r) + iΓ/2` with a slowly varying `s`,
/// so a narrow peak between two grid points shows up as a phase reversal.
#[derive(Debug, Clone, Copy)]
struct Sample {
    energy: f64,
    transmission: f64,
    inverse: Option<Complex64>,
}

fn sample(mesh: &PotentialMesh, e: f64) -> Result<Sample> {
    let p = propagate(mesh, e)?;
    let t = p.terminal.a;
    let inverse = (t.norm() > 0.0)
        .then(|| t.inv())
        .filter(|w| w.re.is_finite() && w.im.is_finite());
    Ok(Sample {
        energy: e,
        transmission: p.transmission(),
        inverse,
    })
}

fn grid(lo: f64, hi: f64, step: f64) -> Vec<f64> {
    let n = ((hi - lo) / step).ceil().max(1.0) as usize;
    (0..=n)
        .map(|i| lo + (hi - lo) * i as f64 / n as f64)
        .collect()
}

fn scan(mesh: &PotentialMesh, energies: &[f64]) -> Result<Vec<Sample>> {
    energies.par_iter().map(|&e| sample(mesh, e)).collect()
}

/// True when `1/t` reverses direction between two neighbouring samples.
fn phase_reversal(left: &Sample, right: &Sample) -> bool {
    match (left.inverse, right.inverse) {
        (Some(w0), Some(w1)) => (w0 * w1.conj()).re < 0.0,
        _ => false,
    }
}

/// Root of the projection of `1/t` onto the direction `w1 − w0`, which
/// changes sign across the resonance.
fn refine_reversal(mesh: &PotentialMesh, left: &Sample, right: &Sample, tol: f64) -> Result<f64> {
    let (w0, w1) = (left.inverse.unwrap(), right.inverse.unwrap());
    let dir = (w1 - w0).conj();
    let projected = |e: f64| -> Result<f64> {
        let s = sample(mesh, e)?;
        match s.inverse {
            Some(w) => Ok((w * dir).re),
            None => Ok(0.0),
        }
    };
    search::bisect(projected, left.energy, right.energy, tol)
}

/// Candidate peak energies in `samples`, refined to `tol`.
fn peaks_in(mesh: &PotentialMesh, samples: &[Sample], tol: f64, depth: usize) -> Result<Vec<f64>> {
    let mut found = Vec::new();
    let mut used_cells = vec![false; samples.len().saturating_sub(1)];
    for (i, cell) in samples.windows(2).enumerate() {
        if phase_reversal(&cell[0], &cell[1]) {
            found.push(refine_reversal(mesh, &cell[0], &cell[1], tol)?);
            used_cells[i] = true;
        }
    }
    for i in 1..samples.len().saturating_sub(1) {
        let t = samples[i].transmission;
        if !(t > 0.0 && t > samples[i - 1].transmission && t >= samples[i + 1].transmission) {
            continue;
        }
        if used_cells[i - 1] || used_cells[i] {
            continue;
        }
        let (lo, hi) = (samples[i - 1].energy, samples[i + 1].energy);
        if depth < SUBSCAN_DEPTH {
            let sub = scan(mesh, &grid(lo, hi, (hi - lo) / SUBSCAN_POINTS as f64))?;
            let inner = peaks_in(mesh, &sub, tol, depth + 1)?;
            if !inner.is_empty() {
                found.extend(inner);
                continue;
            }
        }
        let (e, t_peak) = search::golden_max(|e| transmission(mesh, e), lo, hi, tol)?;
        let edge = samples[i - 1].transmission.max(samples[i + 1].transmission);
        if t_peak > edge {
            found.push(e);
        }
    }
    found.sort_by(|a, b| a.total_cmp(b));
    found.dedup_by(|a, b| (*a - *b).abs() <= 2.0 * tol);
    Ok(found)
}

/// Local Lorentzian width `2|w|/|w'|` of the peak at `e`, from `w = 1/t`.
fn peak_width(mesh: &PotentialMesh, e: f64, tol: f64) -> Result<f64> {
    let h = tol.max(e.abs() * 1e-12).max(1e-15);
    let w = sample(mesh, e)?.inverse;
    let lo = sample(mesh, e - h)?.inverse;
    let hi = sample(mesh, e + h)?.inverse;
    Ok(match (w, lo, hi) {
        (Some(w), Some(lo), Some(hi)) => {
            let slope = (hi - lo).norm() / (2.0 * h);
            if slope > 0.0 {
                2.0 * w.norm() / slope
            } else {
                f64::INFINITY
            }
        }
        _ => f64::NAN,
    })
}

/// Locate the transmission maxima in `[e_min, e_max]` and reconstruct each
/// level's wavefunction.
///
/// The grid is scanned at `scan_step`. A reversal of `1/t` between two grid
/// points marks a peak narrower than the grid and is refined by bisection on
/// the projected amplitude; a grid maximum without a reversal is sub-scanned
/// for hidden narrow pairs and otherwise refined by golden-section search on
/// `T(E)`.
pub fn find_resonances(
    mesh: &PotentialMesh,
    opts: &ResonanceSearch,
) -> Result<Vec<ResonanceLevel>> {
    if !(opts.e_max > opts.e_min) {
        return Err(Error::Domain(format!(
            "empty energy window [{}, {}]",
            opts.e_min, opts.e_max
        )));
    }
    if !(opts.scan_step > 0.0) || !(opts.refine_tol > 0.0) {
        return Err(Error::Domain(
            "scan step and refine tolerance must be > 0".into(),
        ));
    }
    let samples = scan(mesh, &grid(opts.e_min, opts.e_max, opts.scan_step))?;
    let peaks = peaks_in(mesh, &samples, opts.refine_tol, 0)?;
    peaks
        .into_iter()
        .map(|e| resonance_level(mesh, e, opts.refine_tol))
        .collect()
}

fn resonance_level(mesh: &PotentialMesh, e: f64, tol: f64) -> Result<ResonanceLevel> {
    let density = normalized_density(mesh, e)?;
    let weight = |span: Option<Range<usize>>| -> f64 {
        span.map(|cells| cells.map(|i| density[i] * mesh.width(i)).sum())
            .unwrap_or(0.0)
    };
    let f_a = weight(mesh.span(LayerLabel::DotA)).min(1.0);
    let f_b = weight(mesh.span(LayerLabel::DotB)).min(1.0);
    Ok(ResonanceLevel {
        energy: e,
        peak_width: peak_width(mesh, e, tol)?,
        peak_transmission: transmission(mesh, e)?,
        density,
        f_a,
        f_b,
    })
}

/// Amplitudes in every cell, by back-substitution from the gate lead with a
/// unit outgoing wave. Amplitudes are periodically rescaled, so only their
/// ratios are meaningful.
pub fn segment_amplitudes(mesh: &PotentialMesh, e: f64) -> Result<Vec<SegmentAmplitudes>> {
    const RESCALE_ABOVE: f64 = 1e150;
    let n = mesh.len();
    let mass = mesh.mass();
    let mut out = vec![
        SegmentAmplitudes {
            a: Complex64::new(0.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            k: Complex64::new(0.0, 0.0),
        };
        n
    ];
    let k_last = wavevector(mesh, n - 1, e);
    out[n - 1] = SegmentAmplitudes {
        a: Complex64::new(1.0, 0.0),
        b: Complex64::new(0.0, 0.0),
        k: k_last,
    };
    for cell in (0..n - 1).rev() {
        let next = out[cell + 1];
        let k = wavevector(mesh, cell, e);
        // q_{j+1}/q_j: flux-continuity ratio across the interface
        let ratio = (next.k / mass[cell + 1]) / (k / mass[cell]);
        let one = Complex64::new(1.0, 0.0);
        let right_a = 0.5 * ((one + ratio) * next.a + (one - ratio) * next.b);
        let right_b = 0.5 * ((one - ratio) * next.a + (one + ratio) * next.b);
        let (a, b) = if cell == 0 {
            (right_a, right_b)
        } else {
            let phase = (Complex64::i() * k * mesh.width(cell)).exp();
            (right_a / phase, right_b * phase)
        };
        if !(a.norm().is_finite() && b.norm().is_finite()) {
            return Err(Error::Overflow {
                segment: cell,
                energy: e,
            });
        }
        out[cell] = SegmentAmplitudes { a, b, k };
        if a.norm().max(b.norm()) > RESCALE_ABOVE {
            for s in out[cell..].iter_mut() {
                s.a /= RESCALE_ABOVE;
                s.b /= RESCALE_ABOVE;
            }
        }
    }
    Ok(out)
}

/// `|ψ|²` at the cell centers, normalized to unit weight over the dot window
/// (or over the interior cells when the mesh has no dot labels).
pub fn normalized_density(mesh: &PotentialMesh, e: f64) -> Result<Vec<f64>> {
    let amps = segment_amplitudes(mesh, e)?;
    let n = mesh.len();
    let mut density: Vec<f64> = amps
        .iter()
        .enumerate()
        .map(|(i, s)| {
            // the channel lead is referenced at its right edge
            let y = if i == 0 {
                -0.5 * mesh.width(0)
            } else {
                0.5 * mesh.width(i)
            };
            let phase = (Complex64::i() * s.k * y).exp();
            (s.a * phase + s.b / phase).norm_sqr()
        })
        .collect();
    let window = mesh.dot_window().unwrap_or(1..n - 1);
    let norm: f64 = window.map(|i| density[i] * mesh.width(i)).sum();
    if !(norm > 0.0) || !norm.is_finite() {
        return Err(Error::Domain(format!(
            "wavefunction at E = {e} eV cannot be normalized"
        )));
    }
    for d in density.iter_mut() {
        *d /= norm;
    }
    Ok(density)
}

/// Energy difference of the two lowest levels.
pub fn level_splitting(levels: &[ResonanceLevel]) -> Result<f64> {
    if levels.len() < 2 {
        return Err(Error::TooFewLevels {
            needed: 2,
            found: levels.len(),
        });
    }
    let mut energies: Vec<f64> = levels.iter().map(|l| l.energy).collect();
    energies.sort_by(|a, b| a.total_cmp(b));
    Ok(energies[1] - energies[0])
}
