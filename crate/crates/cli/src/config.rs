//! Run configuration: a TOML file layered over a seed preset, with
//! environment overrides of the form `QDGATE_<SECTION>__<KEY>=<value>`.
//!
//! ```toml
//! config_version = 1
//!
//! [geometry]
//! inner_barrier = 1.6
//!
//! [scan]
//! bias_step = 0.002
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use qdgate_core::calibration::{DEFAULT_BIAS_STEP, DEFAULT_BIAS_TOL, DEFAULT_BRACKET};
use qdgate_core::{
    BathParameters, DetectorParameters, Interval, Layer, LayerLabel, NeighborDistances,
    QubitGeometry, ResonanceSearch, ScanSettings,
};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

pub const CONFIG_VERSION: u32 = 1;
pub const ENV_PREFIX: &str = "QDGATE_";
pub const SEED_PRESETS: &[&str] = &["default", "thick-inner-barrier"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub config_version: u32,
    #[serde(default)]
    pub geometry: GeometryConfig,
    #[serde(default)]
    pub scan: ScanConfig,
    #[serde(default)]
    pub dynamics: DynamicsConfig,
    #[serde(default)]
    pub bath: BathConfig,
    #[serde(default)]
    pub detector: DetectorConfig,
    #[serde(default)]
    pub output: OutputConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GeometryConfig {
    /// Stack used when `layers` is absent.
    pub preset: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub layers: Option<Vec<Layer>>,
    /// Replaces the thickness of the barrier between the dots, nm.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inner_barrier: Option<f64>,
    pub dielectric_constant: f64,
    /// Spacing between same-size dots of neighboring qubits, nm.
    pub lateral_spacing: f64,
}

impl Default for GeometryConfig {
    fn default() -> Self {
        GeometryConfig {
            preset: "si_nanocrystal".into(),
            layers: None,
            inner_barrier: None,
            dielectric_constant: 4.0,
            lateral_spacing: 20.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScanConfig {
    pub bias_min: f64,
    pub bias_max: f64,
    pub bias_step: f64,
    pub bias_tol: f64,
    pub n_mesh: usize,
    pub energy_min: f64,
    pub energy_max: f64,
    pub energy_step: f64,
    pub energy_tol: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        let s = ScanSettings::default();
        ScanConfig {
            bias_min: DEFAULT_BRACKET.lo,
            bias_max: DEFAULT_BRACKET.hi,
            bias_step: DEFAULT_BIAS_STEP,
            bias_tol: DEFAULT_BIAS_TOL,
            n_mesh: s.n_mesh,
            energy_min: s.energy.e_min,
            energy_max: s.energy.e_max,
            energy_step: s.energy.scan_step,
            energy_tol: s.energy.refine_tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DynamicsConfig {
    /// Incident energy for the barrier-penetration estimate, eV. Defaults to
    /// the calibrated ground level above the dot bottoms.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub incident_energy: Option<f64>,
    pub barrier_height: f64,
    pub well_width: f64,
    pub barrier_width: f64,
    pub effective_mass: f64,
    /// Replaces the calibrated CNOT pulse length, ps.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pulse_duration_ps: Option<f64>,
    pub trace_samples: usize,
    /// Trace length in NOT-pulse durations.
    pub trace_pulses: f64,
    pub infidelity_threshold: f64,
}

impl Default for DynamicsConfig {
    fn default() -> Self {
        DynamicsConfig {
            incident_energy: None,
            barrier_height: 3.1,
            well_width: 5.0,
            barrier_width: 1.5,
            effective_mass: 0.2,
            pulse_duration_ps: None,
            trace_samples: 401,
            trace_pulses: 4.0,
            infidelity_threshold: 1e-3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BathConfig {
    /// Named bath; explicit fields below override it.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub deformation_potential: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sound_velocity: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mass_density: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lattice_constant: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coupling_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub debye_temperature: Option<f64>,
    /// ħΔ of the qubit oscillation, eV.
    pub tunneling_energy: f64,
    /// One gate operation, ps.
    pub gate_time_ps: f64,
}

impl Default for BathConfig {
    fn default() -> Self {
        BathConfig {
            preset: Some("amorphous_sio2".into()),
            deformation_potential: None,
            sound_velocity: None,
            mass_density: None,
            lattice_constant: None,
            coupling_ratio: None,
            debye_temperature: None,
            tunneling_energy: 1e-5,
            gate_time_ps: 5.2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DetectorConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub transconductance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operating_current: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inter_dot_distance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dielectric_constant: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub area_per_dot: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured_threshold_shift: Option<f64>,
    /// Use the parallel-plate estimate even if a measured shift is known.
    pub estimate_threshold_shift: bool,
}

impl Default for DetectorConfig {
    fn default() -> Self {
        DetectorConfig {
            preset: Some("guo".into()),
            transconductance: None,
            operating_current: None,
            inter_dot_distance: None,
            dielectric_constant: None,
            area_per_dot: None,
            measured_threshold_shift: None,
            estimate_threshold_shift: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputConfig {
    pub directory: String,
    pub csv: bool,
    pub json: bool,
    /// Reuse calibrations stored under `<directory>/cache`.
    pub cache: bool,
}

impl Default for OutputConfig {
    fn default() -> Self {
        OutputConfig {
            directory: "qdgate-out".into(),
            csv: true,
            json: true,
            cache: true,
        }
    }
}

impl RunConfig {
    /// Starting point named by `--seed-preset`.
    pub fn seed(name: &str) -> CliResult<Self> {
        let mut config = RunConfig {
            config_version: CONFIG_VERSION,
            geometry: GeometryConfig::default(),
            scan: ScanConfig::default(),
            dynamics: DynamicsConfig::default(),
            bath: BathConfig::default(),
            detector: DetectorConfig::default(),
            output: OutputConfig::default(),
        };
        match name {
            "default" => {}
            // weaker inter-dot coupling, so the idle target stays further
            // detuned relative to its coupling
            "thick-inner-barrier" => {
                config.geometry.inner_barrier = Some(1.6);
                config.scan.bias_max = 0.175;
            }
            other => {
                return Err(CliError::Usage(format!(
                    "unknown seed preset \"{other}\" (known: {})",
                    SEED_PRESETS.join(", ")
                )))
            }
        }
        Ok(config)
    }

    pub fn to_toml_string(&self) -> CliResult<String> {
        toml::to_string_pretty(self).map_err(|e| CliError::Serialize(e.to_string()))
    }

    pub fn geometry(&self) -> CliResult<QubitGeometry> {
        let g = &self.geometry;
        let mut geometry = match (&g.layers, g.preset.as_str()) {
            (Some(layers), _) => QubitGeometry {
                layers: layers.clone(),
                dielectric_constant: g.dielectric_constant,
                distances: NeighborDistances::side_by_side(g.lateral_spacing, 0.0),
            },
            (None, "si_nanocrystal") => QubitGeometry::si_nanocrystal_stack(),
            (None, other) => {
                return Err(CliError::Config(format!(
                    "unknown geometry preset \"{other}\""
                )))
            }
        };
        if let Some(t) = g.inner_barrier {
            geometry = geometry.with_inner_barrier(t);
        }
        geometry.dielectric_constant = g.dielectric_constant;
        geometry
            .validate()
            .map_err(|e| CliError::Config(format!("geometry: {e}")))?;
        let vertical =
            geometry.dot_center(LayerLabel::DotB) - geometry.dot_center(LayerLabel::DotA);
        geometry.distances = NeighborDistances::side_by_side(g.lateral_spacing, vertical);
        geometry
            .validate()
            .map_err(|e| CliError::Config(format!("geometry: {e}")))?;
        Ok(geometry)
    }

    pub fn scan_settings(&self) -> ScanSettings {
        let s = &self.scan;
        ScanSettings {
            n_mesh: s.n_mesh,
            energy: ResonanceSearch::new(s.energy_min, s.energy_max, s.energy_step, s.energy_tol),
        }
    }

    pub fn bias_bracket(&self) -> Interval {
        Interval::new(self.scan.bias_min, self.scan.bias_max)
    }

    pub fn bath(&self) -> CliResult<BathParameters> {
        let b = &self.bath;
        let base = match &b.preset {
            Some(name) => Some(
                BathParameters::preset(name)
                    .ok_or_else(|| CliError::Config(format!("unknown bath preset \"{name}\"")))?,
            ),
            None => None,
        };
        let field = |v: Option<f64>, preset: Option<f64>, name: &str| {
            v.or(preset).ok_or_else(|| {
                CliError::Config(format!("bath.{name} is required without a preset"))
            })
        };
        let bath = BathParameters {
            deformation_potential: field(
                b.deformation_potential,
                base.map(|p| p.deformation_potential),
                "deformation_potential",
            )?,
            sound_velocity: field(
                b.sound_velocity,
                base.map(|p| p.sound_velocity),
                "sound_velocity",
            )?,
            mass_density: field(b.mass_density, base.map(|p| p.mass_density), "mass_density")?,
            lattice_constant: field(
                b.lattice_constant,
                base.map(|p| p.lattice_constant),
                "lattice_constant",
            )?,
            coupling_ratio: field(
                b.coupling_ratio,
                base.map(|p| p.coupling_ratio),
                "coupling_ratio",
            )?,
            debye_temperature: field(
                b.debye_temperature,
                base.map(|p| p.debye_temperature),
                "debye_temperature",
            )?,
        };
        bath.validate()
            .map_err(|e| CliError::Config(format!("bath: {e}")))?;
        Ok(bath)
    }

    pub fn detector(&self) -> CliResult<DetectorParameters> {
        let d = &self.detector;
        let base =
            match &d.preset {
                Some(name) => Some(DetectorParameters::preset(name).ok_or_else(|| {
                    CliError::Config(format!("unknown detector preset \"{name}\""))
                })?),
                None => None,
            };
        let field = |v: Option<f64>, preset: Option<f64>, name: &str| {
            v.or(preset).ok_or_else(|| {
                CliError::Config(format!("detector.{name} is required without a preset"))
            })
        };
        let measured = if d.estimate_threshold_shift {
            None
        } else {
            d.measured_threshold_shift
                .or(base.and_then(|p| p.measured_threshold_shift))
        };
        let det = DetectorParameters {
            transconductance: field(
                d.transconductance,
                base.map(|p| p.transconductance),
                "transconductance",
            )?,
            operating_current: field(
                d.operating_current,
                base.map(|p| p.operating_current),
                "operating_current",
            )?,
            inter_dot_distance: field(
                d.inter_dot_distance,
                base.map(|p| p.inter_dot_distance),
                "inter_dot_distance",
            )?,
            dielectric_constant: field(
                d.dielectric_constant,
                base.map(|p| p.dielectric_constant),
                "dielectric_constant",
            )?,
            area_per_dot: field(d.area_per_dot, base.map(|p| p.area_per_dot), "area_per_dot")?,
            measured_threshold_shift: measured,
        };
        det.validate()
            .map_err(|e| CliError::Config(format!("detector: {e}")))?;
        Ok(det)
    }
}

/// Where a configuration value came from, for error messages.
#[derive(Debug, Clone, Default)]
pub struct Provenance {
    file: Option<(String, String)>,
    env: BTreeMap<String, String>,
}

impl Provenance {
    /// `path:line` of `section.key` in the config file, or the environment
    /// variable that set it.
    pub fn locate(&self, section: &str, key: &str) -> String {
        let dotted = format!("{section}.{key}");
        if let Some(var) = self.env.get(&dotted) {
            return format!("environment variable {var}");
        }
        if let Some((path, text)) = &self.file {
            if let Some(line) = key_line(text, section, key) {
                return format!("{path}:{line}");
            }
        }
        "seed preset".into()
    }
}

/// 1-based line of `key = ...` inside `[section]`.
fn key_line(text: &str, section: &str, key: &str) -> Option<usize> {
    let mut current = String::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.starts_with('[') && !line.starts_with("[[") {
            current = line
                .trim_matches(|c| c == '[' || c == ']')
                .trim()
                .to_string();
            continue;
        }
        if current == section {
            if let Some(rest) = line.strip_prefix(key) {
                if rest.trim_start().starts_with('=') {
                    return Some(i + 1);
                }
            }
        }
    }
    None
}

/// Inputs for [`load`].
#[derive(Debug, Clone, Default)]
pub struct LoadOptions<'a> {
    pub path: Option<&'a Path>,
    pub seed_preset: Option<&'a str>,
    /// `(name, value)` pairs; only names starting with [`ENV_PREFIX`] and
    /// containing `__` are used.
    pub env: Vec<(String, String)>,
}

#[derive(Debug, Clone)]
pub struct LoadedConfig {
    pub config: RunConfig,
    pub provenance: Provenance,
}

/// Seed preset, then file, then environment.
pub fn load(opts: &LoadOptions) -> CliResult<LoadedConfig> {
    let seed = RunConfig::seed(opts.seed_preset.unwrap_or("default"))?;
    let mut table = toml::Table::try_from(&seed).map_err(|e| CliError::Serialize(e.to_string()))?;
    let mut provenance = Provenance::default();

    if let Some(path) = opts.path {
        let shown = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let file: toml::Table = text
            .parse()
            .map_err(|e: toml::de::Error| CliError::Config(format!("{shown}: {e}")))?;
        match file.get("config_version") {
            Some(toml::Value::Integer(v)) if *v == CONFIG_VERSION as i64 => {}
            Some(other) => {
                return Err(CliError::Config(format!(
                    "{shown}:{}: unsupported config_version {other} (expected {CONFIG_VERSION})",
                    top_level_line(&text, "config_version").unwrap_or(1)
                )))
            }
            None => {
                return Err(CliError::Config(format!(
                    "{shown}: missing config_version (expected {CONFIG_VERSION})"
                )))
            }
        }
        // type and unknown-key errors, reported with the file's line numbers
        toml::from_str::<RunConfig>(&text)
            .map_err(|e| CliError::Config(format!("{shown}: {e}")))?;
        merge(&mut table, file);
        provenance.file = Some((shown, text));
    }

    for (name, value) in &opts.env {
        let Some(rest) = name.strip_prefix(ENV_PREFIX) else {
            continue;
        };
        let Some((section, key)) = rest.split_once("__") else {
            continue;
        };
        let (section, key) = (section.to_lowercase(), key.to_lowercase());
        let parsed = parse_env_value(value);
        let entry = table
            .entry(section.clone())
            .or_insert_with(|| toml::Value::Table(toml::Table::new()));
        match entry {
            toml::Value::Table(t) => {
                t.insert(key.clone(), parsed);
            }
            _ => {
                return Err(CliError::Config(format!(
                    "environment variable {name}: \"{section}\" is not a section"
                )))
            }
        }
        provenance
            .env
            .insert(format!("{section}.{key}"), name.clone());
    }

    let config: RunConfig = toml::Value::Table(table).try_into().map_err(|e| {
        let vars: Vec<&str> = provenance.env.values().map(String::as_str).collect();
        CliError::Config(format!(
            "invalid configuration after environment overrides ({}): {e}",
            vars.join(", ")
        ))
    })?;
    validate(&config, &provenance)?;
    Ok(LoadedConfig { config, provenance })
}

fn top_level_line(text: &str, key: &str) -> Option<usize> {
    text.lines()
        .position(|l| {
            l.trim_start()
                .strip_prefix(key)
                .is_some_and(|r| r.trim_start().starts_with('='))
        })
        .map(|i| i + 1)
}

fn parse_env_value(value: &str) -> toml::Value {
    format!("v = {value}")
        .parse::<toml::Table>()
        .ok()
        .and_then(|mut t| t.remove("v"))
        .unwrap_or_else(|| toml::Value::String(value.to_string()))
}

fn merge(base: &mut toml::Table, over: toml::Table) {
    for (k, v) in over {
        match (base.get_mut(&k), v) {
            (Some(toml::Value::Table(b)), toml::Value::Table(o)) => merge(b, o),
            (_, v) => {
                base.insert(k, v);
            }
        }
    }
}

fn validate(c: &RunConfig, p: &Provenance) -> CliResult<()> {
    let fail = |section: &str, key: &str, msg: String| {
        Err(CliError::Config(format!(
            "{}: {section}.{key}: {msg}",
            p.locate(section, key)
        )))
    };
    let s = &c.scan;
    if !(s.bias_max > s.bias_min) {
        return fail(
            "scan",
            "bias_max",
            format!("empty bias range [{}, {}]", s.bias_min, s.bias_max),
        );
    }
    for (key, v) in [
        ("bias_step", s.bias_step),
        ("bias_tol", s.bias_tol),
        ("energy_step", s.energy_step),
        ("energy_tol", s.energy_tol),
    ] {
        if !(v > 0.0) {
            return fail("scan", key, format!("must be positive, got {v}"));
        }
    }
    if !(s.energy_max > s.energy_min) {
        return fail(
            "scan",
            "energy_max",
            format!("empty energy window [{}, {}]", s.energy_min, s.energy_max),
        );
    }
    if s.n_mesh < 100 {
        return fail(
            "scan",
            "n_mesh",
            format!("need at least 100 cells, got {}", s.n_mesh),
        );
    }
    if let Err(e) = c.geometry() {
        let key = if c.geometry.layers.is_some() {
            "layers"
        } else {
            "preset"
        };
        return fail("geometry", key, e.to_string());
    }
    let d = &c.dynamics;
    if d.trace_samples < 2 {
        return fail(
            "dynamics",
            "trace_samples",
            "need at least 2 samples".into(),
        );
    }
    if !(d.trace_pulses > 0.0) {
        return fail("dynamics", "trace_pulses", "must be positive".into());
    }
    if !(d.infidelity_threshold > 0.0 && d.infidelity_threshold < 1.0) {
        return fail(
            "dynamics",
            "infidelity_threshold",
            "must lie in (0, 1)".into(),
        );
    }
    if let Some(t) = d.pulse_duration_ps {
        if !(t > 0.0) {
            return fail("dynamics", "pulse_duration_ps", "must be positive".into());
        }
    }
    if let Err(e) = c.bath() {
        return fail("bath", "preset", e.to_string());
    }
    if !(c.bath.tunneling_energy > 0.0) {
        return fail("bath", "tunneling_energy", "must be positive".into());
    }
    if !(c.bath.gate_time_ps > 0.0) {
        return fail("bath", "gate_time_ps", "must be positive".into());
    }
    if let Err(e) = c.detector() {
        return fail("detector", "preset", e.to_string());
    }
    if c.output.directory.is_empty() {
        return fail("output", "directory", "must not be empty".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn file(text: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(text.as_bytes()).unwrap();
        f
    }

    fn load_text(text: &str) -> CliResult<RunConfig> {
        let f = file(text);
        load(&LoadOptions {
            path: Some(f.path()),
            ..Default::default()
        })
        .map(|l| l.config)
    }

    #[test]
    fn defaults_round_trip_through_toml() {
        let seed = RunConfig::seed("default").unwrap();
        let text = seed.to_toml_string().unwrap();
        assert_eq!(load_text(&text).unwrap(), seed);
    }

    #[test]
    fn file_values_override_the_seed() {
        let c = load_text("config_version = 1\n[scan]\nbias_step = 0.002\n").unwrap();
        assert_eq!(c.scan.bias_step, 0.002);
        assert_eq!(c.scan.bias_min, DEFAULT_BRACKET.lo);
    }

    #[test]
    fn semantic_errors_name_the_line() {
        let err = load_text("config_version = 1\n\n[scan]\nbias_min = 0.2\nbias_max = 0.1\n")
            .unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains(":5: scan.bias_max"), "{err}");
    }

    #[test]
    fn syntax_and_type_errors_name_the_line() {
        let err = load_text("config_version = 1\n[scan]\nbias_step = \"x\"\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        let err = load_text("config_version = 1\n[scan]\nbias_stp = 0.1\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        let err = load_text("config_version = 1\n[scan\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn version_is_required() {
        assert!(load_text("[scan]\nbias_step = 0.002\n").is_err());
        let err = load_text("config_version = 7\n").unwrap_err();
        assert!(err.to_string().contains(":1:"), "{err}");
    }

    #[test]
    fn unknown_presets_are_config_errors() {
        let err = load_text("config_version = 1\n[bath]\npreset = \"vacuum\"\n").unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("vacuum"));
        assert!(RunConfig::seed("nope").is_err());
    }

    #[test]
    fn environment_overrides_win() {
        let loaded = load(&LoadOptions {
            env: vec![
                ("QDGATE_SCAN__BIAS_STEP".into(), "0.005".into()),
                ("QDGATE_OUTPUT__DIRECTORY".into(), "elsewhere".into()),
                ("QDGATE_LOG".into(), "debug".into()),
                ("HOME".into(), "/root".into()),
            ],
            ..Default::default()
        })
        .unwrap();
        assert_eq!(loaded.config.scan.bias_step, 0.005);
        assert_eq!(loaded.config.output.directory, "elsewhere");

        let err = load(&LoadOptions {
            env: vec![("QDGATE_SCAN__BIAS_MAX".into(), "0.0".into())],
            ..Default::default()
        })
        .unwrap_err();
        assert!(err.to_string().contains("QDGATE_SCAN__BIAS_MAX"), "{err}");
    }

    #[test]
    fn explicit_bath_needs_every_field() {
        let c = load_text("config_version = 1\n[bath]\ndeformation_potential = 9.0\n").unwrap();
        assert_eq!(c.bath().unwrap().deformation_potential, 9.0);
        let mut bare = c.clone();
        bare.bath.preset = None;
        assert!(bare.bath().is_err());
    }

    #[test]
    fn thick_seed_changes_the_inner_barrier() {
        let c = RunConfig::seed("thick-inner-barrier").unwrap();
        let g = c.geometry().unwrap();
        assert_eq!(g.layers[3].thickness, 1.6);
    }
}
