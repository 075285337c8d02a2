//! Calibrations stored on disk, keyed by a hash of everything that feeds
//! them.

use std::fs;
use std::path::{Path, PathBuf};

use qdgate_core::calibration::{calibrate_scan, scan_bias, BiasScan, CalibrationResult};
use qdgate_core::{Interval, NeighborOccupancy, QubitGeometry, ScanSettings};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

/// Bump when the cached layout or the solver output changes.
const CACHE_FORMAT: u32 = 1;

/// One coarse-scan bias point: the two lowest levels and their dot weights.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub bias: f64,
    pub ground: Option<f64>,
    pub excited: Option<f64>,
    pub ground_f_a: Option<f64>,
    pub ground_f_b: Option<f64>,
    pub excited_f_a: Option<f64>,
    pub excited_f_b: Option<f64>,
}

impl ScanRow {
    pub const HEADER: [&'static str; 8] = [
        "bias_v",
        "e0_ev",
        "e1_ev",
        "splitting_ev",
        "e0_f_a",
        "e0_f_b",
        "e1_f_a",
        "e1_f_b",
    ];

    /// Missing levels become NaN.
    pub fn values(&self) -> Vec<f64> {
        let v = |x: Option<f64>| x.unwrap_or(f64::NAN);
        let split = match (self.ground, self.excited) {
            (Some(g), Some(e)) => e - g,
            _ => f64::NAN,
        };
        vec![
            self.bias,
            v(self.ground),
            v(self.excited),
            split,
            v(self.ground_f_a),
            v(self.ground_f_b),
            v(self.excited_f_a),
            v(self.excited_f_b),
        ]
    }
}

fn rows(scan: &BiasScan) -> Vec<ScanRow> {
    scan.bias
        .iter()
        .zip(&scan.levels)
        .map(|(&bias, levels)| ScanRow {
            bias,
            ground: levels.first().map(|l| l.energy),
            excited: levels.get(1).map(|l| l.energy),
            ground_f_a: levels.first().map(|l| l.f_a),
            ground_f_b: levels.first().map(|l| l.f_b),
            excited_f_a: levels.get(1).map(|l| l.f_a),
            excited_f_b: levels.get(1).map(|l| l.f_b),
        })
        .collect()
}

/// Coarse scan and calibrated operating point for one control state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ControlCalibration {
    pub rows: Vec<ScanRow>,
    pub result: CalibrationResult,
}

#[derive(Serialize)]
struct KeyMaterial<'a> {
    format: u32,
    version: &'a str,
    geometry: &'a QubitGeometry,
    occupancy: NeighborOccupancy,
    bracket: Interval,
    bias_step: f64,
    bias_tol: f64,
    settings: &'a ScanSettings,
}

pub struct CalibrationRequest<'a> {
    pub geometry: &'a QubitGeometry,
    pub occupancy: NeighborOccupancy,
    pub bracket: Interval,
    pub bias_step: f64,
    pub bias_tol: f64,
    pub settings: &'a ScanSettings,
}

impl CalibrationRequest<'_> {
    pub fn key(&self) -> String {
        let material = KeyMaterial {
            format: CACHE_FORMAT,
            version: env!("CARGO_PKG_VERSION"),
            geometry: self.geometry,
            occupancy: self.occupancy,
            bracket: self.bracket,
            bias_step: self.bias_step,
            bias_tol: self.bias_tol,
            settings: self.settings,
        };
        let bytes = serde_json::to_vec(&material).expect("key material serializes");
        hex::encode(Sha256::digest(bytes))
    }

    pub fn run(&self) -> CliResult<ControlCalibration> {
        let scan = scan_bias(
            self.geometry,
            self.occupancy,
            self.bracket,
            self.bias_step,
            self.settings,
        )?;
        let result = calibrate_scan(self.geometry, &scan, self.bias_tol, self.settings)?;
        Ok(ControlCalibration {
            rows: rows(&scan),
            result,
        })
    }
}

pub struct CalibrationCache {
    dir: Option<PathBuf>,
}

impl CalibrationCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        CalibrationCache { dir }
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("calibration-{key}.json")))
    }

    /// Stored result for `req`, computing and storing it on a miss. An
    /// unreadable entry is recomputed.
    pub fn get(&self, req: &CalibrationRequest) -> CliResult<ControlCalibration> {
        let key = req.key();
        let path = self.path(&key);
        if let Some(p) = &path {
            if let Some(hit) = read(p) {
                log::info!("calibration cache hit {}", p.display());
                return Ok(hit);
            }
        }
        let fresh = req.run()?;
        if let Some(p) = &path {
            write(p, &fresh)?;
        }
        Ok(fresh)
    }
}

fn read(path: &Path) -> Option<ControlCalibration> {
    let text = fs::read_to_string(path).ok()?;
    match serde_json::from_str(&text) {
        Ok(c) => Some(c),
        Err(e) => {
            log::warn!("ignoring unreadable cache entry {}: {e}", path.display());
            None
        }
    }
}

fn write(path: &Path, value: &ControlCalibration) -> CliResult<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    let text = serde_json::to_string(value).map_err(|e| CliError::Serialize(e.to_string()))?;
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, text).map_err(|e| CliError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qdgate_core::calibration::DEFAULT_BRACKET;

    fn request<'a>(g: &'a QubitGeometry, s: &'a ScanSettings) -> CalibrationRequest<'a> {
        CalibrationRequest {
            geometry: g,
            occupancy: NeighborOccupancy::CONTROL_ONE,
            bracket: DEFAULT_BRACKET,
            bias_step: 1e-3,
            bias_tol: 1e-7,
            settings: s,
        }
    }

    #[test]
    fn key_tracks_inputs() {
        let g = QubitGeometry::si_nanocrystal_stack();
        let s = ScanSettings::default();
        let base = request(&g, &s).key();
        assert_eq!(base, request(&g, &s).key());
        assert_eq!(base.len(), 64);

        let thick = g.clone().with_inner_barrier(1.6);
        assert_ne!(base, request(&thick, &s).key());
        let mut other = request(&g, &s);
        other.occupancy = NeighborOccupancy::CONTROL_ZERO;
        assert_ne!(base, other.key());
        let mut looser = request(&g, &s);
        looser.bias_tol = 1e-6;
        assert_ne!(base, looser.key());
    }

    #[test]
    fn corrupt_entries_are_ignored() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("calibration-x.json");
        fs::write(&p, "{ not json").unwrap();
        assert!(read(&p).is_none());
    }

    #[test]
    fn rows_report_missing_levels_as_nan() {
        let row = ScanRow {
            bias: 0.1,
            ground: Some(0.02),
            excited: None,
            ground_f_a: Some(1.0),
            ground_f_b: Some(0.0),
            excited_f_a: None,
            excited_f_b: None,
        };
        let v = row.values();
        assert_eq!(v.len(), ScanRow::HEADER.len());
        assert!(v[2].is_nan() && v[3].is_nan());
    }
}
