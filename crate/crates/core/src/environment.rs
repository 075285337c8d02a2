//! Zero-temperature spin-boson estimates for an acoustic-phonon bath:
//! spectral function, renormalized tunneling, superohmic damping rate and
//! the ohmic coupling strength.
//!
//! Everything here is SI: frequencies in s⁻¹, lengths in m, energies of the
//! deformation potential in eV (converted internally).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::constants::{BOLTZMANN, ELEMENTARY_CHARGE, HBAR_SI};
use crate::error::{Error, Result};

/// Above this coupling ratio the ohmic term is no longer a small correction.
pub const COUPLING_RATIO_WARN: f64 = 0.1;
/// Largest ohmic coupling for which coherent oscillations survive.
pub const COHERENT_ALPHA_LIMIT: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BathParameters {
    /// γ, eV.
    pub deformation_potential: f64,
    /// c, m/s.
    pub sound_velocity: f64,
    /// ρ, kg/m³.
    pub mass_density: f64,
    /// d, m.
    pub lattice_constant: f64,
    /// ν, dimensionless.
    pub coupling_ratio: f64,
    /// Θ_D, K.
    pub debye_temperature: f64,
}

impl BathParameters {
    /// Amorphous SiO₂ surrounding the dots.
    pub fn amorphous_sio2() -> Self {
        BathParameters {
            deformation_potential: 10.0,
            sound_velocity: 4300.0,
            mass_density: 2200.0,
            lattice_constant: 0.5e-9,
            coupling_ratio: 1e-4,
            debye_temperature: 450.0,
        }
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "amorphous_sio2" | "a-sio2" => Some(Self::amorphous_sio2()),
            _ => None,
        }
    }

    /// γ and ν may vanish (uncoupled bath); the material constants may not.
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("sound_velocity", self.sound_velocity),
            ("mass_density", self.mass_density),
            ("lattice_constant", self.lattice_constant),
            ("debye_temperature", self.debye_temperature),
        ];
        for (name, v) in positive {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Domain(format!(
                    "bath {name} must be positive, got {v}"
                )));
            }
        }
        for (name, v) in [
            ("deformation_potential", self.deformation_potential),
            ("coupling_ratio", self.coupling_ratio),
        ] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::Domain(format!(
                    "bath {name} must be non-negative, got {v}"
                )));
            }
        }
        if self.coupling_ratio > COUPLING_RATIO_WARN {
            log::warn!(
                "coupling ratio {} is not small; the ohmic term may dominate",
                self.coupling_ratio
            );
        }
        Ok(())
    }

    fn gamma_j2(&self) -> f64 {
        (self.deformation_potential * ELEMENTARY_CHARGE).powi(2)
    }

    /// Coefficient of ω³ in the spectral function, s².
    pub fn superohmic_coefficient(&self) -> f64 {
        self.gamma_j2()
            / (2.0 * PI * PI * HBAR_SI * self.mass_density * self.sound_velocity.powi(5))
    }

    /// Debye cutoff `k_B Θ_D / ħ`, s⁻¹.
    pub fn debye_cutoff(&self) -> f64 {
        BOLTZMANN * self.debye_temperature / HBAR_SI
    }
}

/// The two terms of the spectral function at one frequency, s⁻¹.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralValue {
    pub superohmic: f64,
    pub ohmic: f64,
}

impl SpectralValue {
    pub fn total(&self) -> f64 {
        self.superohmic + self.ohmic
    }
}

/// `γ²ω³/(2π²ħρc⁵) + γ²ν²ω/(2π²ħρc³d²)`.
pub fn spectral_function(omega: f64, bath: &BathParameters) -> Result<SpectralValue> {
    if !(omega >= 0.0) {
        return Err(Error::Domain(format!(
            "frequency must be non-negative, got {omega}"
        )));
    }
    Ok(SpectralValue {
        superohmic: bath.superohmic_coefficient() * omega.powi(3),
        ohmic: ohmic_alpha(bath) * omega,
    })
}

/// Frequency where the cubic and linear terms are equal, `ν c / d`.
pub fn crossover_frequency(bath: &BathParameters) -> f64 {
    bath.coupling_ratio * bath.sound_velocity / bath.lattice_constant
}

/// `γ²ω_c²/(2π²ħρc⁵)`, the magnitude of the suppression exponent.
pub fn renormalization_exponent(bath: &BathParameters, cutoff: f64) -> f64 {
    bath.superohmic_coefficient() * cutoff * cutoff
}

/// `Δ̃ = Δ exp(−γ²ω_c²/(2π²ħρc⁵))`.
pub fn renormalized_tunneling(delta: f64, bath: &BathParameters, cutoff: f64) -> f64 {
    delta * (-renormalization_exponent(bath, cutoff)).exp()
}

/// `Γ_so = γ²Δ³/(4πħρc⁵)`, s⁻¹.
pub fn superohmic_damping_rate(delta_eff: f64, bath: &BathParameters) -> f64 {
    bath.gamma_j2() * delta_eff.powi(3)
        / (4.0 * PI * HBAR_SI * bath.mass_density * bath.sound_velocity.powi(5))
}

/// `α = γ²ν²/(2π²ħρc³d²)`.
pub fn ohmic_alpha(bath: &BathParameters) -> f64 {
    bath.gamma_j2() * bath.coupling_ratio.powi(2)
        / (2.0
            * PI
            * PI
            * HBAR_SI
            * bath.mass_density
            * bath.sound_velocity.powi(3)
            * bath.lattice_constant.powi(2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BathRegime {
    CoherentUnderdamped,
    Incoherent,
}

/// Decoherence budget of one qubit. Rates that vanish leave the matching
/// times as `None`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecoherenceReport {
    pub temperature_k: f64,
    pub delta_bare_per_ps: f64,
    pub delta_renormalized_per_ps: f64,
    /// `log10(Δ̃/Δ)`, finite even when `Δ̃` underflows.
    pub log10_renormalization: f64,
    pub renormalization_exponent: f64,
    pub cutoff_per_s: f64,
    pub crossover_per_s: f64,
    pub gamma_so_bare_per_s: f64,
    pub gamma_so_renormalized_per_s: f64,
    pub tau_so_bare_s: Option<f64>,
    pub tau_so_renormalized_s: Option<f64>,
    pub alpha_ohmic: f64,
    pub regime: BathRegime,
    pub gate_time_s: f64,
    pub ops_per_coherence: Option<f64>,
}

/// Assemble the budget for tunneling frequency `delta` (s⁻¹) and a gate
/// lasting `gate_time` seconds, with the Debye cutoff of the bath.
pub fn decoherence_report(
    delta: f64,
    bath: &BathParameters,
    gate_time: f64,
) -> Result<DecoherenceReport> {
    bath.validate()?;
    if !(delta > 0.0) || !(gate_time > 0.0) {
        return Err(Error::Domain(format!(
            "need Δ > 0 and gate time > 0, got {delta} and {gate_time}"
        )));
    }
    let cutoff = bath.debye_cutoff();
    let exponent = renormalization_exponent(bath, cutoff);
    let delta_tilde = renormalized_tunneling(delta, bath, cutoff);
    let gamma_bare = superohmic_damping_rate(delta, bath);
    let gamma_tilde = superohmic_damping_rate(delta_tilde, bath);
    let inverse = |g: f64| if g > 0.0 { Some(1.0 / g) } else { None };
    let tau_bare = inverse(gamma_bare);
    let alpha = ohmic_alpha(bath);
    Ok(DecoherenceReport {
        temperature_k: 0.0,
        delta_bare_per_ps: delta * 1e-12,
        delta_renormalized_per_ps: delta_tilde * 1e-12,
        log10_renormalization: -exponent / std::f64::consts::LN_10,
        renormalization_exponent: exponent,
        cutoff_per_s: cutoff,
        crossover_per_s: crossover_frequency(bath),
        gamma_so_bare_per_s: gamma_bare,
        gamma_so_renormalized_per_s: gamma_tilde,
        tau_so_bare_s: tau_bare,
        tau_so_renormalized_s: inverse(gamma_tilde),
        alpha_ohmic: alpha,
        regime: if alpha < COHERENT_ALPHA_LIMIT {
            BathRegime::CoherentUnderdamped
        } else {
            BathRegime::Incoherent
        },
        gate_time_s: gate_time,
        ops_per_coherence: tau_bare.map(|t| t / gate_time),
    })
}
