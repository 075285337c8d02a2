//! Two-state dynamics of one qubit: the closed-form propagator, gate pulses,
//! the barrier-penetration estimate of the tunneling frequency, and the
//! controlled-NOT truth table for a basis-state control.
//!
//! Time is in ps and angular frequencies in ps⁻¹. The amplitude `a` belongs
//! to the larger dot (|1⟩) and `b` to the smaller dot (|0⟩).

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::calibration::{level_pair, CalibrationResult, LevelPair, ScanSettings};
use crate::constants::{ev_to_angular_ps, HBAR2_OVER_2M0, HBAR_EV_PS};
use crate::device::{NeighborOccupancy, QubitGeometry};
use crate::error::{Error, Result};

/// Tolerance on `|a|² + |b|² = 1`.
pub const NORM_TOL: f64 = 1e-12;
/// Population threshold for treating a control qubit as a basis state.
pub const BASIS_TOL: f64 = 1e-6;
/// Maximum `|ωa − ωb| / ω0` accepted as on resonance.
pub const RESONANCE_TOL: f64 = 1e-3;

/// `i d/dt (a, b) = [[ωa, ca], [cb, ωb]] (a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoStateHamiltonian {
    pub omega_a: f64,
    pub omega_b: f64,
    pub c_a: f64,
    pub c_b: f64,
}

impl TwoStateHamiltonian {
    pub fn new(omega_a: f64, omega_b: f64, c_a: f64, c_b: f64) -> Result<Self> {
        let h = TwoStateHamiltonian {
            omega_a,
            omega_b,
            c_a,
            c_b,
        };
        if ![omega_a, omega_b, c_a, c_b].iter().all(|x| x.is_finite()) {
            return Err(Error::Domain("hamiltonian entries must be finite".into()));
        }
        if c_a * c_b < 0.0 {
            return Err(Error::Domain(format!(
                "couplings must share a sign (ca·cb ≥ 0), got {c_a} and {c_b}"
            )));
        }
        Ok(h)
    }

    /// Degenerate dots with symmetric coupling `c`.
    pub fn symmetric(omega: f64, c: f64) -> Self {
        TwoStateHamiltonian {
            omega_a: omega,
            omega_b: omega,
            c_a: c,
            c_b: c,
        }
    }

    /// From dot energies and the coupling energy `ħc`, all in eV.
    pub fn from_energies(e_a: f64, e_b: f64, coupling: f64) -> Self {
        let c = ev_to_angular_ps(coupling);
        TwoStateHamiltonian {
            omega_a: ev_to_angular_ps(e_a),
            omega_b: ev_to_angular_ps(e_b),
            c_a: c,
            c_b: c,
        }
    }

    /// Half detuning `δ = (ωa − ωb)/2`.
    pub fn detuning(&self) -> f64 {
        0.5 * (self.omega_a - self.omega_b)
    }

    /// Effective real coupling `sqrt(ca·cb)`, carrying the sign of `ca`.
    pub fn coupling(&self) -> f64 {
        (self.c_a * self.c_b).sqrt().copysign(self.c_a)
    }

    /// `ω0 = sqrt(δ² + ca·cb)`.
    pub fn omega0(&self) -> f64 {
        (self.detuning().powi(2) + self.c_a * self.c_b).sqrt()
    }

    pub fn is_on_resonance(&self) -> bool {
        (self.omega_a - self.omega_b).abs() < RESONANCE_TOL * self.omega0()
    }

    fn require_resonance(&self) -> Result<()> {
        if self.is_on_resonance() {
            Ok(())
        } else {
            Err(Error::OffResonance {
                detuning: (self.omega_a - self.omega_b).abs(),
                omega0: self.omega0(),
            })
        }
    }
}

/// `(ω+, ω−) = (ωa + ωb)/2 ± ω0`.
pub fn eigenfrequencies(h: &TwoStateHamiltonian) -> (f64, f64) {
    let mean = 0.5 * (h.omega_a + h.omega_b);
    let w0 = h.omega0();
    (mean + w0, mean - w0)
}

/// Qubit amplitudes on dot a (|1⟩) and dot b (|0⟩).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QubitState {
    pub a: Complex64,
    pub b: Complex64,
}

impl QubitState {
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        let s = QubitState { a, b };
        if (s.norm_sqr() - 1.0).abs() > NORM_TOL {
            return Err(Error::Domain(format!(
                "state is not normalized: |a|² + |b|² = {}",
                s.norm_sqr()
            )));
        }
        Ok(s)
    }

    /// Electron in the larger dot.
    pub fn one() -> Self {
        QubitState {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    /// Electron in the smaller dot.
    pub fn zero() -> Self {
        QubitState {
            a: Complex64::new(0.0, 0.0),
            b: Complex64::new(1.0, 0.0),
        }
    }

    pub fn basis(bit: bool) -> Self {
        if bit {
            Self::one()
        } else {
            Self::zero()
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.a.norm_sqr() + self.b.norm_sqr()
    }

    pub fn pop_a(&self) -> f64 {
        self.a.norm_sqr()
    }

    pub fn pop_b(&self) -> f64 {
        self.b.norm_sqr()
    }

    /// `Some(bit)` when the state is a computational basis state.
    pub fn basis_bit(&self) -> Option<bool> {
        if self.pop_a() >= 1.0 - BASIS_TOL {
            Some(true)
        } else if self.pop_b() >= 1.0 - BASIS_TOL {
            Some(false)
        } else {
            None
        }
    }

    /// Bit of the dot holding the larger population.
    pub fn majority_bit(&self) -> bool {
        self.pop_a() >= self.pop_b()
    }
}

/// Closed-form evolution under a constant two-state Hamiltonian for `t` ps.
///
/// With `M = [[δ, c], [c, −δ]]`, `M² = ω0²` and
/// `U(t) = e^{−i ω̄ t} (cos ω0t − i sin ω0t · M/ω0)`, where `c` is the
/// effective coupling `sqrt(ca·cb)`.
pub fn evolve(state: &QubitState, h: &TwoStateHamiltonian, t: f64) -> QubitState {
    let [[u00, u01], [u10, u11]] = propagator(h, t);
    QubitState {
        a: u00 * state.a + u01 * state.b,
        b: u10 * state.a + u11 * state.b,
    }
}

/// Matrix of [`evolve`] in the (a, b) basis.
pub fn propagator(h: &TwoStateHamiltonian, t: f64) -> [[Complex64; 2]; 2] {
    let mean = 0.5 * (h.omega_a + h.omega_b);
    let delta = h.detuning();
    let c = h.coupling();
    let w0 = h.omega0();
    let (sin, cos) = (w0 * t).sin_cos();
    // sin(ω0 t)/ω0 → t as ω0 → 0
    let sinc = if w0 == 0.0 { t } else { sin / w0 };
    let phase = Complex64::from_polar(1.0, -mean * t);
    let i = Complex64::i();
    [
        [phase * (cos - i * sinc * delta), phase * (-i * sinc * c)],
        [phase * (-i * sinc * c), phase * (cos + i * sinc * delta)],
    ]
}

/// Sampled populations `(t, |a|², |b|²)` from `t = 0` to `t_end`.
pub fn population_trace(
    state: &QubitState,
    h: &TwoStateHamiltonian,
    t_end: f64,
    samples: usize,
) -> Vec<(f64, f64, f64)> {
    let n = samples.max(2);
    (0..n)
        .map(|i| {
            let t = t_end * i as f64 / (n - 1) as f64;
            let s = evolve(state, h, t);
            (t, s.pop_a(), s.pop_b())
        })
        .collect()
}

/// Full population swap: evolve for `π/(2ω0)` on resonance.
pub fn not_pulse(state: &QubitState, h: &TwoStateHamiltonian) -> Result<QubitState> {
    h.require_resonance()?;
    Ok(evolve(state, h, not_pulse_duration(h)))
}

/// Equal-weight superposition from a basis state: evolve for `π/(4ω0)`.
pub fn half_pulse(state: &QubitState, h: &TwoStateHamiltonian) -> Result<QubitState> {
    h.require_resonance()?;
    Ok(evolve(state, h, 0.5 * not_pulse_duration(h)))
}

/// `π/(2ω0)`, ps.
pub fn not_pulse_duration(h: &TwoStateHamiltonian) -> f64 {
    transfer_time(h.omega0())
}

/// `π/(2ω0)` for an angular frequency in ps⁻¹, in ps.
pub fn transfer_time(omega0: f64) -> f64 {
    PI / (2.0 * omega0)
}

/// Half-period estimate `ħ/(2ΔE)` from a level splitting in eV, in ps.
pub fn splitting_time(delta_e: f64) -> f64 {
    HBAR_EV_PS / (2.0 * delta_e)
}

/// Barrier-penetration estimate of the inter-dot tunneling frequency (ps⁻¹):
/// `ω0 = (4/ħ)·((V0 − E)/V0)·(E/(1 + K·l_w))·e^{−K·l_d}`, with
/// `K = sqrt(2m(V0 − E))/ħ`. Energies in eV, lengths in nm, `m` in m0.
pub fn tunneling_frequency_estimate(v0: f64, e: f64, l_w: f64, l_d: f64, m: f64) -> Result<f64> {
    if !(e > 0.0 && e < v0) {
        return Err(Error::Domain(format!(
            "incident energy must lie in (0, V0 = {v0}) eV, got {e}"
        )));
    }
    if !(m > 0.0) || !(l_w >= 0.0) || !(l_d >= 0.0) {
        return Err(Error::Domain("need m > 0 and non-negative widths".into()));
    }
    let kappa = (m * (v0 - e) / HBAR2_OVER_2M0).sqrt();
    let energy = 4.0 * ((v0 - e) / v0) * (e / (1.0 + kappa * l_w)) * (-kappa * l_d).exp();
    Ok(ev_to_angular_ps(energy))
}

/// Control and target amplitudes of a two-qubit product state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegisterState {
    pub control: QubitState,
    pub target: QubitState,
}

impl RegisterState {
    pub fn basis(control: bool, target: bool) -> Self {
        RegisterState {
            control: QubitState::basis(control),
            target: QubitState::basis(target),
        }
    }

    /// Parse a two-character bit string, control first (`"10"` = control |1⟩,
    /// target |0⟩).
    pub fn from_bits(bits: &str) -> Result<Self> {
        let parsed: Vec<bool> = bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Domain(format!(
                    "invalid bit '{other}' in \"{bits}\""
                ))),
            })
            .collect::<Result<_>>()?;
        match parsed.as_slice() {
            [c, t] => Ok(Self::basis(*c, *t)),
            _ => Err(Error::Domain(format!(
                "register needs exactly two bits, got \"{bits}\""
            ))),
        }
    }

    /// Majority-population bit string, control first.
    pub fn bits(&self) -> String {
        let bit = |b: bool| if b { '1' } else { '0' };
        [
            bit(self.control.majority_bit()),
            bit(self.target.majority_bit()),
        ]
        .iter()
        .collect()
    }
}

/// Target Hamiltonians for both control states at the gate bias.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CnotCalibration {
    /// Gate bias of the pulse, V.
    pub bias: f64,
    /// Target Hamiltonian with control |1⟩ (on resonance).
    pub resonant: TwoStateHamiltonian,
    /// Target Hamiltonian with control |0⟩ at the same bias.
    pub idle: TwoStateHamiltonian,
}

impl CnotCalibration {
    /// The coupling is `ΔE/(2ħ)` at the control-|1⟩ resonant bias; the idle
    /// detuning comes from the control-|0⟩ level pair at that bias, after
    /// removing the coupling from its splitting.
    pub fn from_levels(resonant: &CalibrationResult, idle: &LevelPair) -> Result<Self> {
        if (idle.bias - resonant.v_res).abs() > 1e-12 {
            return Err(Error::Calibration(format!(
                "idle levels taken at {} V, resonance at {} V",
                idle.bias, resonant.v_res
            )));
        }
        let coupling = 0.5 * resonant.delta_e_at_res;
        let center = 0.5 * (resonant.levels_at_res.0 + resonant.levels_at_res.1);
        let on = TwoStateHamiltonian::from_energies(center, center, coupling);

        let half_split = 0.5 * (idle.excited - idle.ground);
        let detuning = (half_split.powi(2) - coupling.powi(2)).max(0.0).sqrt();
        let idle_center = 0.5 * (idle.ground + idle.excited);
        // ground state in dot a means dot a lies lower
        let (e_a, e_b) = if idle.ground_weights.0 >= idle.ground_weights.1 {
            (idle_center - detuning, idle_center + detuning)
        } else {
            (idle_center + detuning, idle_center - detuning)
        };
        let off = TwoStateHamiltonian::from_energies(e_a, e_b, coupling);
        Ok(CnotCalibration {
            bias: resonant.v_res,
            resonant: on,
            idle: off,
        })
    }

    /// Solve the control-|0⟩ levels at the control-|1⟩ resonant bias and
    /// combine them with that calibration.
    pub fn from_geometry(
        geometry: &QubitGeometry,
        resonant: &CalibrationResult,
        settings: &ScanSettings,
    ) -> Result<Self> {
        let idle = level_pair(
            geometry,
            NeighborOccupancy::CONTROL_ZERO,
            resonant.v_res,
            settings,
        )?;
        Self::from_levels(resonant, &idle)
    }

    /// Idle detuning over coupling, `|δ|/c`.
    pub fn detuning_ratio(&self) -> f64 {
        self.idle.detuning().abs() / self.idle.coupling().abs()
    }

    /// Upper bound `c²/(c² + δ²)` on the idle target flip.
    pub fn idle_leakage(&self) -> f64 {
        let c2 = self.idle.c_a * self.idle.c_b;
        c2 / (c2 + self.idle.detuning().powi(2))
    }

    /// Pulse length `π/(2c)` at the resonant bias, ps.
    pub fn pulse_duration(&self) -> f64 {
        not_pulse_duration(&self.resonant)
    }
}

/// Result of one controlled-NOT pulse.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CnotOutcome {
    pub initial: RegisterState,
    pub final_state: RegisterState,
    pub pulse_duration_ps: f64,
    pub bias: f64,
    /// Probability that a target basis state flipped during the pulse.
    pub flip_probability: f64,
    /// `1 − P_flip` for control |1⟩, the idle bound `c²/(c² + δ²)` for |0⟩.
    pub infidelity: f64,
    pub detuning_ratio: f64,
}

/// Apply the resonant-bias pulse for `π/(2c)`. Only the target evolves; the
/// control must be a basis state.
pub fn cnot(register: &RegisterState, cal: &CnotCalibration) -> Result<CnotOutcome> {
    cnot_with_pulse(register, cal, cal.pulse_duration())
}

/// [`cnot`] with an explicit pulse length in ps.
pub fn cnot_with_pulse(
    register: &RegisterState,
    cal: &CnotCalibration,
    t: f64,
) -> Result<CnotOutcome> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("pulse length must be ≥ 0, got {t}")));
    }
    let control = register.control.basis_bit().ok_or_else(|| {
        Error::UnsupportedState(format!(
            "control must be a basis state, populations ({:.3e}, {:.3e})",
            register.control.pop_a(),
            register.control.pop_b()
        ))
    })?;
    let h = if control { &cal.resonant } else { &cal.idle };
    let u = propagator(h, t);
    let flip_probability = u[1][0].norm_sqr();
    let target = evolve(&register.target, h, t);
    let infidelity = if control {
        1.0 - flip_probability
    } else {
        cal.idle_leakage()
    };
    Ok(CnotOutcome {
        initial: *register,
        final_state: RegisterState {
            control: register.control,
            target,
        },
        pulse_duration_ps: t,
        bias: cal.bias,
        flip_probability,
        infidelity,
        detuning_ratio: cal.detuning_ratio(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn eigenfrequency_examples() {
        let (p, m) = eigenfrequencies(&TwoStateHamiltonian::symmetric(2.0, 0.3));
        assert!(close(p, 2.3, 1e-15) && close(m, 1.7, 1e-15));
        let (p, m) = eigenfrequencies(&TwoStateHamiltonian::new(1.0, 3.0, 0.0, 0.0).unwrap());
        assert_eq!((p, m), (3.0, 1.0));
        let h = TwoStateHamiltonian::from_energies(0.02, 0.02, 3.14e-5);
        let (p, m) = eigenfrequencies(&h);
        assert!(close((p - m) * HBAR_EV_PS, 6.28e-5, 1e-15));
    }

    #[test]
    fn couplings_of_opposite_sign_are_rejected() {
        assert!(TwoStateHamiltonian::new(0.0, 0.0, 1.0, -1.0).is_err());
    }

    #[test]
    fn zero_time_is_identity() {
        let h = TwoStateHamiltonian::new(1.0, 0.4, 0.2, 0.2).unwrap();
        let s = QubitState::new(Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)).unwrap();
        assert_eq!(evolve(&s, &h, 0.0), s);
    }

    #[test]
    fn symmetric_evolution_matches_closed_form_amplitudes() {
        let (wa, w0) = (30.0, 0.05);
        let h = TwoStateHamiltonian::symmetric(wa, w0);
        for &t in &[0.3, 7.0, 41.0] {
            let s = evolve(&QubitState::one(), &h, t);
            let phase = Complex64::from_polar(1.0, -wa * t);
            let a = phase * (w0 * t).cos();
            let b = -Complex64::i() * phase * (w0 * t).sin();
            assert!((s.a - a).norm() < 1e-12 && (s.b - b).norm() < 1e-12);
        }
    }

    #[test]
    fn pulses_on_basis_and_superposition_states() {
        let h = TwoStateHamiltonian::symmetric(5.0, 0.1);
        let flipped = not_pulse(&QubitState::one(), &h).unwrap();
        assert!(close(flipped.pop_b(), 1.0, 1e-14));

        let r = std::f64::consts::FRAC_1_SQRT_2;
        let plus = QubitState::new(Complex64::new(r, 0.0), Complex64::new(r, 0.0)).unwrap();
        let out = not_pulse(&plus, &h).unwrap();
        assert!(close(out.pop_a(), 0.5, 1e-14) && close(out.pop_b(), 0.5, 1e-14));

        let twice = not_pulse(&flipped, &h).unwrap();
        assert!(close(twice.pop_a(), 1.0, 1e-14));

        let half = half_pulse(&QubitState::one(), &h).unwrap();
        let global = Complex64::from_polar(1.0, -5.0 * PI / (4.0 * 0.1));
        assert!((half.a - global * (PI / 4.0).cos()).norm() < 1e-12);
        assert!((half.b + Complex64::i() * global * (PI / 4.0).sin()).norm() < 1e-12);
        let half0 = half_pulse(&QubitState::zero(), &h).unwrap();
        assert!(close(half0.pop_a(), 0.5, 1e-14));
        let two_halves = half_pulse(&half, &h).unwrap();
        assert!((two_halves.a - flipped.a).norm() < 1e-12);
        assert!((two_halves.b - flipped.b).norm() < 1e-12);
    }

    #[test]
    fn pulses_refuse_detuned_hamiltonians() {
        let h = TwoStateHamiltonian::new(5.0, 4.0, 0.1, 0.1).unwrap();
        assert!(matches!(
            not_pulse(&QubitState::one(), &h),
            Err(Error::OffResonance { .. })
        ));
        assert!(half_pulse(&QubitState::one(), &h).is_err());
    }

    #[test]
    fn tunneling_estimate_examples() {
        let w = tunneling_frequency_estimate(3.1, 0.052, 5.0, 1.5, 0.2).unwrap();
        let tau = transfer_time(w);
        assert!(tau > 3.0 && tau < 48.0, "tau = {tau}");
        let tiny = tunneling_frequency_estimate(3.1, 1e-12, 5.0, 1.5, 0.2).unwrap();
        assert!(tiny < 1e-9);
        let thicker = tunneling_frequency_estimate(3.1, 0.052, 5.0, 2.0, 0.2).unwrap();
        assert!(thicker < w);
        assert!(tunneling_frequency_estimate(3.1, 0.0, 5.0, 1.5, 0.2).is_err());
        assert!(tunneling_frequency_estimate(3.1, 3.2, 5.0, 1.5, 0.2).is_err());
    }

    #[test]
    fn splitting_time_of_published_splitting() {
        assert!(close(splitting_time(6.28e-5), 5.24, 0.01));
    }

    #[test]
    fn register_parsing() {
        assert_eq!(RegisterState::from_bits("10").unwrap().bits(), "10");
        assert!(RegisterState::from_bits("abc").is_err());
        assert!(RegisterState::from_bits("1").is_err());
        assert!(RegisterState::from_bits("102").is_err());
    }

    fn test_calibration(delta_over_c: f64) -> CnotCalibration {
        let c = 3e-5;
        CnotCalibration {
            bias: 0.15,
            resonant: TwoStateHamiltonian::from_energies(0.02, 0.02, c),
            idle: TwoStateHamiltonian::from_energies(
                0.02 - delta_over_c * c,
                0.02 + delta_over_c * c,
                c,
            ),
        }
    }

    #[test]
    fn cnot_truth_table() {
        let cal = test_calibration(40.0);
        for (input, expected) in [("00", "00"), ("01", "01"), ("10", "11"), ("11", "10")] {
            let out = cnot(&RegisterState::from_bits(input).unwrap(), &cal).unwrap();
            assert_eq!(out.final_state.bits(), expected, "input {input}");
            assert!(out.infidelity < 1e-3);
            assert_eq!(out.final_state.control, out.initial.control);
        }
        let flip = cnot(&RegisterState::from_bits("10").unwrap(), &cal).unwrap();
        assert!(flip.flip_probability > 0.999);
        let idle = cnot(&RegisterState::from_bits("00").unwrap(), &cal).unwrap();
        assert!(idle.flip_probability < 1e-3);
        assert!(close(idle.infidelity, 1.0 / (1.0 + 1600.0), 1e-15));
    }

    #[test]
    fn cnot_rejects_superposed_control() {
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let register = RegisterState {
            control: QubitState::new(Complex64::new(r, 0.0), Complex64::new(r, 0.0)).unwrap(),
            target: QubitState::zero(),
        };
        assert!(matches!(
            cnot(&register, &test_calibration(40.0)),
            Err(Error::UnsupportedState(_))
        ));
    }

    prop_compose! {
        fn hamiltonian()(wa in -50.0f64..50.0, wb in -50.0f64..50.0, c in 0.0f64..5.0)
            -> TwoStateHamiltonian {
            TwoStateHamiltonian::new(wa, wb, c, c).unwrap()
        }
    }

    prop_compose! {
        fn state()(theta in 0.0f64..PI, phi in -PI..PI) -> QubitState {
            QubitState::new(
                Complex64::new((theta / 2.0).cos(), 0.0),
                Complex64::from_polar((theta / 2.0).sin(), phi),
            ).unwrap()
        }
    }

    proptest! {
        #[test]
        fn evolution_is_unitary(h in hamiltonian(), s in state(), t in 0.0f64..1e3) {
            prop_assert!((evolve(&s, &h, t).norm_sqr() - 1.0).abs() < NORM_TOL);
        }

        #[test]
        fn evolution_composes(h in hamiltonian(), s in state(), t1 in 0.0f64..50.0, t2 in 0.0f64..50.0) {
            let direct = evolve(&s, &h, t1 + t2);
            let stepped = evolve(&evolve(&s, &h, t1), &h, t2);
            prop_assert!((direct.a - stepped.a).norm() < 1e-10);
            prop_assert!((direct.b - stepped.b).norm() < 1e-10);
        }

        #[test]
        fn resonant_population_is_sin_squared(w in -50.0f64..50.0, c in 1e-3f64..5.0, t in 0.0f64..100.0) {
            let h = TwoStateHamiltonian::symmetric(w, c);
            let s = evolve(&QubitState::one(), &h, t);
            prop_assert!((s.pop_b() - (c * t).sin().powi(2)).abs() < 1e-10);
        }
    }
}
