//! Readout of a qubit through the channel current of an underlying FET:
//! threshold and current shifts, shot-noise measurement time, and the
//! weak/strong damping classification.

use serde::{Deserialize, Serialize};

use crate::constants::{ELEMENTARY_CHARGE, VACUUM_PERMITTIVITY};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DetectorParameters {
    /// g_m, A/V.
    pub transconductance: f64,
    /// I_d, A.
    pub operating_current: f64,
    /// d_ab, nm.
    pub inter_dot_distance: f64,
    pub dielectric_constant: f64,
    /// nm².
    pub area_per_dot: f64,
    /// Measured threshold shift in V, used instead of the parallel-plate
    /// estimate when present.
    #[serde(default)]
    pub measured_threshold_shift: Option<f64>,
}

impl DetectorParameters {
    /// Nanocrystal-memory transistor: measured 30 mV threshold shift and
    /// g_m = 1.8 nA/V. The operating current of 7.7 nA is back-solved from a
    /// measurement time of about 1.7 µs; it was not reported with the device.
    pub fn guo() -> Self {
        DetectorParameters {
            transconductance: 1.8e-9,
            operating_current: 7.7e-9,
            inter_dot_distance: 6.5,
            dielectric_constant: 4.0,
            area_per_dot: 400.0,
            measured_threshold_shift: Some(0.030),
        }
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "guo" => Some(Self::guo()),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("transconductance", self.transconductance),
            ("inter_dot_distance", self.inter_dot_distance),
            ("dielectric_constant", self.dielectric_constant),
            ("area_per_dot", self.area_per_dot),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain(format!(
                    "detector {name} must be positive, got {v}"
                )));
            }
        }
        if !(self.operating_current >= 0.0 && self.operating_current.is_finite()) {
            return Err(Error::Domain(format!(
                "operating current must be non-negative, got {}",
                self.operating_current
            )));
        }
        if let Some(v) = self.measured_threshold_shift {
            if !v.is_finite() {
                return Err(Error::Domain(
                    "measured threshold shift must be finite".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Parallel-plate shift `e·d_ab/(ε0·ε·A)` for one electron moving between the
/// dots, V.
pub fn threshold_shift(det: &DetectorParameters) -> f64 {
    ELEMENTARY_CHARGE * det.inter_dot_distance * 1e-9
        / (VACUUM_PERMITTIVITY * det.dielectric_constant * det.area_per_dot * 1e-18)
}

/// `ΔI_d = −g_m ΔV_th`, A.
pub fn current_shift(det: &DetectorParameters, delta_vth: f64) -> f64 {
    -det.transconductance * delta_vth
}

/// Shot-noise measurement time from
/// `1/τ_ms = (sqrt((I_d + |ΔI_d|)/e) − sqrt(I_d/e))²`, s.
/// `None` when the current does not change.
pub fn measurement_time(current: f64, delta_current: f64) -> Result<Option<f64>> {
    if !(current >= 0.0) || !(current + delta_current >= 0.0) {
        return Err(Error::Domain(format!(
            "negative channel current: I_d = {current}, I_d + ΔI_d = {}",
            current + delta_current
        )));
    }
    if delta_current == 0.0 {
        return Ok(None);
    }
    let n0 = current / ELEMENTARY_CHARGE;
    let n1 = (current + delta_current.abs()) / ELEMENTARY_CHARGE;
    // sqrt(n1) − sqrt(n0) without cancellation
    let diff = (n1 - n0) / (n1.sqrt() + n0.sqrt());
    Ok(Some(1.0 / (diff * diff)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DampingRegime {
    WeakDamping,
    StrongDamping,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DampingVerdict {
    pub regime: DampingRegime,
    /// `(1/τ_ms)/(8Δ²)`, only in strong damping.
    pub zeno_time_s: Option<f64>,
    /// Measurement rate equal to Δ.
    pub boundary: bool,
}

/// Weak damping when the measurement rate `1/τ_ms` is below the oscillation
/// frequency `Δ` (s⁻¹), strong above it. A tie counts as weak.
pub fn damping_regime(tau_ms: f64, delta: f64) -> Result<DampingVerdict> {
    if !(tau_ms > 0.0) || !(delta > 0.0) {
        return Err(Error::Domain(format!(
            "need τ_ms > 0 and Δ > 0, got {tau_ms} and {delta}"
        )));
    }
    let rate = 1.0 / tau_ms;
    let boundary = rate == delta;
    if boundary {
        log::warn!("measurement rate equals the oscillation frequency; reporting weak damping");
    }
    if rate > delta {
        Ok(DampingVerdict {
            regime: DampingRegime::StrongDamping,
            zeno_time_s: Some(rate / (8.0 * delta * delta)),
            boundary,
        })
    } else {
        Ok(DampingVerdict {
            regime: DampingRegime::WeakDamping,
            zeno_time_s: None,
            boundary,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReadoutReport {
    /// Shift used for the current change, V.
    pub threshold_shift_v: f64,
    /// Parallel-plate estimate, V.
    pub estimated_threshold_shift_v: f64,
    pub current_shift_a: f64,
    pub operating_current_a: f64,
    /// `None` when the current does not change.
    pub measurement_time_s: Option<f64>,
    pub delta_per_s: f64,
    pub regime: DampingRegime,
    pub zeno_time_s: Option<f64>,
    pub boundary: bool,
}

/// Readout budget against a qubit oscillating at `delta` (s⁻¹).
pub fn readout_report(det: &DetectorParameters, delta: f64) -> Result<ReadoutReport> {
    det.validate()?;
    let estimated = threshold_shift(det);
    let used = det.measured_threshold_shift.unwrap_or(estimated);
    let di = current_shift(det, used);
    let tau = measurement_time(det.operating_current, di)?;
    let verdict = match tau {
        Some(t) => damping_regime(t, delta)?,
        None if delta > 0.0 => DampingVerdict {
            regime: DampingRegime::WeakDamping,
            zeno_time_s: None,
            boundary: false,
        },
        None => return Err(Error::Domain(format!("need Δ > 0, got {delta}"))),
    };
    Ok(ReadoutReport {
        threshold_shift_v: used,
        estimated_threshold_shift_v: estimated,
        current_shift_a: di,
        operating_current_a: det.operating_current,
        measurement_time_s: tau,
        delta_per_s: delta,
        regime: verdict.regime,
        zeno_time_s: verdict.zeno_time_s,
        boundary: verdict.boundary,
    })
}
