//! Physical constants (CODATA 2018) and the derived values used by the
//! solver's working unit system: energies in eV, lengths in nm, times in ps,
//! masses in units of the free-electron mass.

/// Elementary charge, C.
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
/// Reduced Planck constant, J·s.
pub const HBAR_SI: f64 = 1.054_571_817e-34;
/// Boltzmann constant, J/K.
pub const BOLTZMANN: f64 = 1.380_649e-23;
/// Vacuum permittivity, F/m.
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;
/// Free-electron mass, kg.
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;

/// Reduced Planck constant, eV·ps.
pub const HBAR_EV_PS: f64 = HBAR_SI / ELEMENTARY_CHARGE * 1e12;
/// Reduced Planck constant, eV·s.
pub const HBAR_EV_S: f64 = HBAR_SI / ELEMENTARY_CHARGE;

/// ħ²/(2 m0) in eV·nm².
pub const HBAR2_OVER_2M0: f64 =
    HBAR_SI * HBAR_SI / (2.0 * ELECTRON_MASS) / ELEMENTARY_CHARGE * 1e18;

/// e²/(4π ε0) in eV·nm.
pub const COULOMB_EV_NM: f64 =
    ELEMENTARY_CHARGE / (4.0 * std::f64::consts::PI * VACUUM_PERMITTIVITY) * 1e9;

/// Convert an energy in eV to an angular frequency in ps⁻¹.
pub fn ev_to_angular_ps(energy: f64) -> f64 {
    energy / HBAR_EV_PS
}

/// Convert an angular frequency in ps⁻¹ to an energy in eV.
pub fn angular_ps_to_ev(omega: f64) -> f64 {
    omega * HBAR_EV_PS
}

/// Convert an energy in eV to an angular frequency in s⁻¹.
pub fn ev_to_angular_s(energy: f64) -> f64 {
    energy / HBAR_EV_S
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_constants_match_reference_values() {
        assert!((HBAR_EV_PS / 6.582_119_569e-4 - 1.0).abs() < 1e-9);
        assert!((HBAR2_OVER_2M0 - 0.038_099_8).abs() < 1e-7);
        assert!((COULOMB_EV_NM - 1.439_964_5).abs() < 1e-6);
    }

    #[test]
    fn frequency_conversions_invert() {
        let e = 3.14e-5;
        assert!((angular_ps_to_ev(ev_to_angular_ps(e)) - e).abs() < 1e-20);
    }
}
