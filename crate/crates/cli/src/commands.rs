//! The `scan`, `cnot`, `dynamics`, `budget` and `report` commands. Each
//! writes its files through a [`Sink`] and returns the report it wrote.

use std::path::PathBuf;

use qdgate_core::constants::ev_to_angular_s;
use qdgate_core::dynamics::{
    cnot_with_pulse, population_trace, splitting_time, transfer_time, tunneling_frequency_estimate,
    CnotCalibration, CnotOutcome, QubitState, RegisterState,
};
use qdgate_core::{
    decoherence_report, readout_report, CalibrationResult, DampingRegime, DecoherenceReport,
    NeighborOccupancy, QubitGeometry, ReadoutReport, ScanSettings,
};
use serde::{Deserialize, Serialize};

use crate::cache::{CalibrationCache, CalibrationRequest, ControlCalibration, ScanRow};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::Sink;

pub const BASIS_INPUTS: [&str; 4] = ["00", "01", "10", "11"];

/// Everything a command needs, resolved from the configuration.
pub struct Context {
    pub config: RunConfig,
    pub geometry: QubitGeometry,
    pub settings: ScanSettings,
    pub sink: Sink,
    cache: CalibrationCache,
}

impl Context {
    pub fn new(config: RunConfig) -> CliResult<Self> {
        let geometry = config.geometry()?;
        let settings = config.scan_settings();
        let out = PathBuf::from(&config.output.directory);
        let sink = Sink::new(&out, config.output.csv, config.output.json)?;
        let cache = CalibrationCache::new(config.output.cache.then(|| out.join("cache")));
        Ok(Context {
            config,
            geometry,
            settings,
            sink,
            cache,
        })
    }

    pub fn calibration(&self, occupancy: NeighborOccupancy) -> CliResult<ControlCalibration> {
        self.cache.get(&CalibrationRequest {
            geometry: &self.geometry,
            occupancy,
            bracket: self.config.bias_bracket(),
            bias_step: self.config.scan.bias_step,
            bias_tol: self.config.scan.bias_tol,
            settings: &self.settings,
        })
    }

    fn cnot_calibration(&self, one: &CalibrationResult) -> CliResult<CnotCalibration> {
        Ok(CnotCalibration::from_geometry(
            &self.geometry,
            one,
            &self.settings,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub control_one: CalibrationResult,
    pub control_zero: CalibrationResult,
    /// `v_res(control |0⟩) − v_res(control |1⟩)`, V.
    pub resonance_shift: f64,
    pub windows_overlap: bool,
    /// `ħ/(2ΔE)` at the control-|1⟩ resonance, ps.
    pub splitting_time_ps: f64,
}

pub fn scan(ctx: &mut Context) -> CliResult<ScanSummary> {
    let one = ctx.calibration(NeighborOccupancy::CONTROL_ONE)?;
    let zero = ctx.calibration(NeighborOccupancy::CONTROL_ZERO)?;
    for (name, cal) in [("scan_control1.csv", &one), ("scan_control0.csv", &zero)] {
        let rows: Vec<Vec<f64>> = cal.rows.iter().map(ScanRow::values).collect();
        ctx.sink.csv(name, &ScanRow::HEADER, &rows)?;
    }
    let (a, b) = (one.result.hatched, zero.result.hatched);
    let summary = ScanSummary {
        resonance_shift: zero.result.v_res - one.result.v_res,
        windows_overlap: a.lo <= b.hi && b.lo <= a.hi,
        splitting_time_ps: splitting_time(one.result.delta_e_at_res),
        control_one: one.result,
        control_zero: zero.result,
    };
    ctx.sink.json("scan_summary.json", &summary)?;
    Ok(summary)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GateReport {
    pub input: String,
    pub output: String,
    pub outcome: CnotOutcome,
    pub calibration: CnotCalibration,
    pub idle_leakage: f64,
    pub infidelity_threshold: f64,
    pub within_threshold: bool,
}

/// Reject anything but a two-character bit string before any solving.
pub fn parse_register(bits: &str) -> CliResult<RegisterState> {
    if bits.len() != 2 || !bits.chars().all(|c| c == '0' || c == '1') {
        return Err(CliError::Usage(format!(
            "--input must be two bits such as \"10\" (control first), got \"{bits}\""
        )));
    }
    Ok(RegisterState::from_bits(bits)?)
}

fn gate(ctx: &mut Context, cal: &CnotCalibration, input: &str) -> CliResult<GateReport> {
    let register = parse_register(input)?;
    let pulse = ctx
        .config
        .dynamics
        .pulse_duration_ps
        .unwrap_or_else(|| cal.pulse_duration());
    let outcome = cnot_with_pulse(&register, cal, pulse)?;
    let h = if outcome.initial.control.majority_bit() {
        &cal.resonant
    } else {
        &cal.idle
    };
    let trace: Vec<Vec<f64>> = population_trace(
        &register.target,
        h,
        pulse,
        ctx.config.dynamics.trace_samples,
    )
    .into_iter()
    .map(|(t, a, b)| vec![t, a, b])
    .collect();
    ctx.sink.csv(
        &format!("cnot_{input}_trace.csv"),
        &["t_ps", "pop_a", "pop_b"],
        &trace,
    )?;
    let threshold = ctx.config.dynamics.infidelity_threshold;
    let report = GateReport {
        input: input.to_string(),
        output: outcome.final_state.bits(),
        outcome,
        calibration: *cal,
        idle_leakage: cal.idle_leakage(),
        infidelity_threshold: threshold,
        within_threshold: outcome.infidelity < threshold,
    };
    ctx.sink.json(&format!("cnot_{input}.json"), &report)?;
    Ok(report)
}

pub fn cnot(ctx: &mut Context, input: &str) -> CliResult<GateReport> {
    parse_register(input)?;
    let one = ctx.calibration(NeighborOccupancy::CONTROL_ONE)?;
    let cal = ctx.cnot_calibration(&one.result)?;
    gate(ctx, &cal, input)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DynamicsReport {
    pub bias: f64,
    pub delta_e_ev: f64,
    /// Resonant coupling `ΔE/(2ħ)`, ps⁻¹.
    pub coupling_per_ps: f64,
    /// `ħ/(2ΔE)`, ps.
    pub splitting_time_ps: f64,
    pub not_pulse_ps: f64,
    pub half_pulse_ps: f64,
    pub incident_energy_ev: f64,
    pub incident_energy_from_solver: bool,
    pub estimate_omega0_per_ps: f64,
    pub estimate_transfer_time_ps: f64,
    /// Estimated over solver tunneling frequency.
    pub estimate_ratio: f64,
}

pub fn dynamics(ctx: &mut Context) -> CliResult<DynamicsReport> {
    let one = ctx.calibration(NeighborOccupancy::CONTROL_ONE)?;
    let cal = ctx.cnot_calibration(&one.result)?;
    let h = cal.resonant;
    let d = &ctx.config.dynamics;
    let incident = d
        .incident_energy
        .unwrap_or(one.result.ground_above_dot_bottoms);
    let estimate = tunneling_frequency_estimate(
        d.barrier_height,
        incident,
        d.well_width,
        d.barrier_width,
        d.effective_mass,
    )?;
    let not_pulse = cal.pulse_duration();
    let report = DynamicsReport {
        bias: cal.bias,
        delta_e_ev: one.result.delta_e_at_res,
        coupling_per_ps: h.coupling(),
        splitting_time_ps: splitting_time(one.result.delta_e_at_res),
        not_pulse_ps: not_pulse,
        half_pulse_ps: 0.5 * not_pulse,
        incident_energy_ev: incident,
        incident_energy_from_solver: d.incident_energy.is_none(),
        estimate_omega0_per_ps: estimate,
        estimate_transfer_time_ps: transfer_time(estimate),
        estimate_ratio: estimate / h.omega0(),
    };
    let trace: Vec<Vec<f64>> = population_trace(
        &QubitState::one(),
        &h,
        d.trace_pulses * not_pulse,
        d.trace_samples,
    )
    .into_iter()
    .map(|(t, a, b)| vec![t, a, b])
    .collect();
    ctx.sink
        .csv("dynamics_trace.csv", &["t_ps", "pop_a", "pop_b"], &trace)?;
    ctx.sink.json("dynamics.json", &report)?;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BudgetReport {
    pub tunneling_energy_ev: f64,
    pub gate_time_ps: f64,
    pub decoherence: DecoherenceReport,
    pub readout: ReadoutReport,
    /// `τ_ms` in gate times.
    pub measurement_over_gate: Option<f64>,
    pub verdict: String,
}

pub fn budget(ctx: &mut Context) -> CliResult<BudgetReport> {
    let bath = ctx.config.bath()?;
    let det = ctx.config.detector()?;
    let energy = ctx.config.bath.tunneling_energy;
    let gate_ps = ctx.config.bath.gate_time_ps;
    let delta = ev_to_angular_s(energy);
    let decoherence = decoherence_report(delta, &bath, gate_ps * 1e-12)?;
    let readout = readout_report(&det, delta)?;
    let verdict = match (readout.regime, readout.measurement_time_s) {
        (_, None) => "no readout: the channel current does not change".to_string(),
        (DampingRegime::WeakDamping, Some(t)) => format!(
            "weak damping: 1/tau_ms = {:.3e} s^-1 is below Delta = {delta:.3e} s^-1; \
             the electron oscillates faster than the detector resolves it",
            1.0 / t
        ),
        (DampingRegime::StrongDamping, Some(t)) => format!(
            "strong damping: observe between tau_ms = {t:.3e} s and tau_Z = {:.3e} s",
            readout.zeno_time_s.unwrap_or(f64::NAN)
        ),
    };
    let report = BudgetReport {
        tunneling_energy_ev: energy,
        gate_time_ps: gate_ps,
        measurement_over_gate: readout.measurement_time_s.map(|t| t / (gate_ps * 1e-12)),
        decoherence,
        readout,
        verdict,
    };
    ctx.sink.json("budget.json", &report)?;
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FullReport {
    pub scan: ScanSummary,
    pub dynamics: DynamicsReport,
    pub gates: Vec<GateReport>,
    pub budget: BudgetReport,
}

pub fn report(ctx: &mut Context) -> CliResult<FullReport> {
    let scan = scan(ctx)?;
    let dynamics = dynamics(ctx)?;
    let cal = ctx.cnot_calibration(&scan.control_one)?;
    let gates = BASIS_INPUTS
        .iter()
        .map(|input| gate(ctx, &cal, input))
        .collect::<CliResult<Vec<_>>>()?;
    let budget = budget(ctx)?;
    let full = FullReport {
        scan,
        dynamics,
        gates,
        budget,
    };
    ctx.sink.json("report.json", &full)?;
    Ok(full)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn register_input_validation() {
        for bad in ["abc", "1", "102", "", "2 "] {
            assert_eq!(parse_register(bad).unwrap_err().exit_code(), 2, "{bad}");
        }
        assert_eq!(parse_register("10").unwrap().bits(), "10");
    }

    #[test]
    fn budget_defaults() {
        let dir = tempfile::tempdir().unwrap();
        let mut config = RunConfig::seed("default").unwrap();
        config.output.directory = dir.path().display().to_string();
        let mut ctx = Context::new(config).unwrap();
        let r = budget(&mut ctx).unwrap();
        assert!(r.decoherence.ops_per_coherence.unwrap() >= 1e3);
        assert_eq!(r.readout.regime, DampingRegime::WeakDamping);
        assert!(r.verdict.starts_with("weak damping"));
        let back: BudgetReport = crate::output::read_json(&dir.path().join("budget.json")).unwrap();
        assert_eq!(back, r);
    }
}
