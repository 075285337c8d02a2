//! Gate-bias maps of the two lowest target-qubit levels and calibration of
//! the resonant bias for a given control-qubit charge state.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::device::{build_potential, NeighborOccupancy, QubitGeometry};
use crate::error::{Error, Result};
use crate::search;
use crate::transfer::{find_resonances, ResonanceLevel, ResonanceSearch, LOCALIZATION_THRESHOLD};

/// Bias bracket for the stock stack. Above about 0.19 V the dot-b level
/// sinks below the channel band edge.
pub const DEFAULT_BRACKET: Interval = Interval {
    lo: 0.10,
    hi: 0.185,
};
/// Coarse scan step, V.
pub const DEFAULT_BIAS_STEP: f64 = 1e-3;
/// Refinement tolerance of the calibrated biases, V.
pub const DEFAULT_BIAS_TOL: f64 = 1e-7;

/// Solver settings shared by every bias point of a scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanSettings {
    pub n_mesh: usize,
    pub energy: ResonanceSearch,
}

impl Default for ScanSettings {
    fn default() -> Self {
        ScanSettings {
            n_mesh: 1000,
            energy: ResonanceSearch::new(5e-4, 0.15, 5e-4, 1e-12),
        }
    }
}

/// Closed bias interval, volts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Resonance levels of the target qubit over a range of gate biases.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BiasScan {
    pub occupancy: NeighborOccupancy,
    pub bias: Vec<f64>,
    /// Levels per bias, sorted by energy.
    pub levels: Vec<Vec<ResonanceLevel>>,
}

impl BiasScan {
    /// `E1 − E0` per bias, `None` where fewer than two levels were found.
    pub fn splittings(&self) -> Vec<Option<f64>> {
        self.levels
            .iter()
            .map(|l| (l.len() >= 2).then(|| l[1].energy - l[0].energy))
            .collect()
    }
}

/// Levels of the target at one bias.
pub fn levels_at(
    geometry: &QubitGeometry,
    occupancy: NeighborOccupancy,
    bias: f64,
    settings: &ScanSettings,
) -> Result<Vec<ResonanceLevel>> {
    let mesh =
        build_potential(geometry, bias, occupancy, settings.n_mesh).map_err(|e| e.at_bias(bias))?;
    let mut levels = find_resonances(&mesh, &settings.energy).map_err(|e| e.at_bias(bias))?;
    levels.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    Ok(levels)
}

fn lowest_two(
    geometry: &QubitGeometry,
    occupancy: NeighborOccupancy,
    bias: f64,
    settings: &ScanSettings,
) -> Result<(ResonanceLevel, ResonanceLevel)> {
    let mut levels = levels_at(geometry, occupancy, bias, settings)?;
    if levels.len() < 2 {
        return Err(Error::TooFewLevels {
            needed: 2,
            found: levels.len(),
        }
        .at_bias(bias));
    }
    levels.truncate(2);
    let excited = levels.pop().unwrap();
    let ground = levels.pop().unwrap();
    Ok((ground, excited))
}

/// Bias grid from `range.lo` to `range.hi` inclusive with spacing ≤ `step`.
pub fn bias_grid(range: Interval, step: f64) -> Result<Vec<f64>> {
    if !(range.hi > range.lo) {
        return Err(Error::Domain(format!(
            "empty bias range [{}, {}]",
            range.lo, range.hi
        )));
    }
    if !(step > 0.0) {
        return Err(Error::Domain("bias step must be > 0".into()));
    }
    let n = ((range.hi - range.lo) / step - 1e-9).ceil().max(1.0) as usize;
    Ok((0..=n)
        .map(|i| range.lo + range.width() * i as f64 / n as f64)
        .collect())
}

/// Solve every bias point of `range` (spacing ≤ `bias_step`).
pub fn scan_bias(
    geometry: &QubitGeometry,
    occupancy: NeighborOccupancy,
    range: Interval,
    bias_step: f64,
    settings: &ScanSettings,
) -> Result<BiasScan> {
    let bias = bias_grid(range, bias_step)?;
    let levels = bias
        .par_iter()
        .map(|&v| levels_at(geometry, occupancy, v, settings))
        .collect::<Result<Vec<_>>>()?;
    Ok(BiasScan {
        occupancy,
        bias,
        levels,
    })
}

/// Which dot holds the ground state at one bias.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GroundState {
    DotA,
    DotB,
    Delocalized,
}

fn ground_state(levels: &[ResonanceLevel]) -> GroundState {
    match levels.first() {
        Some(g) if g.is_localized() && g.f_a > g.f_b => GroundState::DotA,
        Some(g) if g.is_localized() => GroundState::DotB,
        _ => GroundState::Delocalized,
    }
}

/// Bias intervals of the scan, bounded by localized points, inside which the
/// ground state delocalizes or changes dot.
pub fn delocalization_windows(scan: &BiasScan) -> Result<Vec<Interval>> {
    let states: Vec<GroundState> = scan.levels.iter().map(|l| ground_state(l)).collect();
    let localized: Vec<usize> = (0..states.len())
        .filter(|&i| states[i] != GroundState::Delocalized)
        .collect();
    let (first, last) = match (localized.first(), localized.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => {
            return Err(Error::Calibration(
                "ground state is never localized inside the scanned range".into(),
            ))
        }
    };
    if first != 0 || last != states.len() - 1 {
        return Err(Error::Calibration(format!(
            "delocalization window is not bracketed by localized endpoints in [{}, {}]",
            scan.bias[0],
            scan.bias[scan.bias.len() - 1]
        )));
    }
    Ok(localized
        .windows(2)
        .filter(|w| w[1] > w[0] + 1 || states[w[0]] != states[w[1]])
        .map(|w| Interval::new(scan.bias[w[0]], scan.bias[w[1]]))
        .collect())
}

/// Calibrated resonant operating point for one control state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CalibrationResult {
    pub occupancy: NeighborOccupancy,
    /// Bias of minimum splitting (avoided crossing), V.
    pub v_res: f64,
    /// Bias where the ground state has equal weight in both dots, V.
    pub v_equal_weight: f64,
    /// Splitting of the two lowest levels at `v_res`, eV.
    pub delta_e_at_res: f64,
    /// Ground and first excited energies at `v_res`, eV.
    pub levels_at_res: (f64, f64),
    /// Ground-state weights `(f_a, f_b)` at `v_res`.
    pub ground_weights: (f64, f64),
    /// Ground-state energy at `v_res` above the mean of the two dot bottoms, eV.
    pub ground_above_dot_bottoms: f64,
    /// Bias range with the ground state localized in dot a.
    pub region_a: Interval,
    /// Bias range with the ground state localized in dot b.
    pub region_b: Interval,
    /// Delocalized window between the two localized regions.
    pub hatched: Interval,
}

/// Locate the single delocalization window inside `scan` and refine the
/// resonant bias, the equal-weight bias and the localization boundaries to
/// `tol` volts.
pub fn calibrate_scan(
    geometry: &QubitGeometry,
    scan: &BiasScan,
    tol: f64,
    settings: &ScanSettings,
) -> Result<CalibrationResult> {
    let occupancy = scan.occupancy;
    let windows = delocalization_windows(scan)?;
    let window = match windows.as_slice() {
        [] => {
            return Err(Error::Calibration(format!(
                "no delocalization window in [{}, {}]",
                scan.bias[0],
                scan.bias[scan.bias.len() - 1]
            )))
        }
        [w] => *w,
        many => {
            let list: Vec<String> = many
                .iter()
                .map(|w| format!("[{}, {}]", w.lo, w.hi))
                .collect();
            return Err(Error::Calibration(format!(
                "multiple delocalization windows: {}",
                list.join(", ")
            )));
        }
    };

    let splitting = |v: f64| -> Result<f64> {
        let (g, e) = lowest_two(geometry, occupancy, v, settings)?;
        Ok(e.energy - g.energy)
    };
    let (v_res, _) = search::golden_min(splitting, window.lo, window.hi, tol)?;
    let (ground, excited) = lowest_two(geometry, occupancy, v_res, settings)?;

    let imbalance = |v: f64| -> Result<f64> {
        let (g, _) = lowest_two(geometry, occupancy, v, settings)?;
        Ok(g.f_a - g.f_b)
    };
    let v_equal_weight = search::bisect(imbalance, window.lo, window.hi, tol)?;

    let excess_localization = |v: f64| -> Result<f64> {
        let (g, _) = lowest_two(geometry, occupancy, v, settings)?;
        Ok(g.localization() - LOCALIZATION_THRESHOLD)
    };
    let lower = search::bisect(excess_localization, window.lo, v_res, tol)?;
    let upper = search::bisect(excess_localization, v_res, window.hi, tol)?;

    let start = scan.bias[0];
    let end = scan.bias[scan.bias.len() - 1];
    let a_first = ground_state(&scan.levels[0]) == GroundState::DotA;
    let (region_a, region_b) = if a_first {
        (Interval::new(start, lower), Interval::new(upper, end))
    } else {
        (Interval::new(upper, end), Interval::new(start, lower))
    };

    let mesh = build_potential(geometry, v_res, occupancy, settings.n_mesh)?;
    let bottoms = match (
        mesh.mean_potential(crate::LayerLabel::DotA),
        mesh.mean_potential(crate::LayerLabel::DotB),
    ) {
        (Some(a), Some(b)) => 0.5 * (a + b),
        _ => f64::NAN,
    };

    Ok(CalibrationResult {
        occupancy,
        v_res,
        v_equal_weight,
        delta_e_at_res: excited.energy - ground.energy,
        levels_at_res: (ground.energy, excited.energy),
        ground_weights: (ground.f_a, ground.f_b),
        ground_above_dot_bottoms: ground.energy - bottoms,
        region_a,
        region_b,
        hatched: Interval::new(lower, upper),
    })
}

/// Coarse-scan `bracket` at `bias_step`, then calibrate its single
/// delocalization window to `tol` volts.
pub fn find_resonant_bias(
    geometry: &QubitGeometry,
    occupancy: NeighborOccupancy,
    bracket: Interval,
    bias_step: f64,
    tol: f64,
    settings: &ScanSettings,
) -> Result<CalibrationResult> {
    let scan = scan_bias(geometry, occupancy, bracket, bias_step, settings)?;
    calibrate_scan(geometry, &scan, tol, settings)
}

/// Target-qubit level pair at a fixed bias for a given control state, as
/// needed for off-resonant (idle) evolution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevelPair {
    pub bias: f64,
    pub ground: f64,
    pub excited: f64,
    /// Ground-state weights `(f_a, f_b)`.
    pub ground_weights: (f64, f64),
}

pub fn level_pair(
    geometry: &QubitGeometry,
    occupancy: NeighborOccupancy,
    bias: f64,
    settings: &ScanSettings,
) -> Result<LevelPair> {
    let (g, e) = lowest_two(geometry, occupancy, bias, settings)?;
    Ok(LevelPair {
        bias,
        ground: g.energy,
        excited: e.energy,
        ground_weights: (g.f_a, g.f_b),
    })
}
