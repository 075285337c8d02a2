use thiserror::Error;

/// Errors raised by the device model, solvers, and estimators.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A layer stack or mesh violates its structural invariants.
    #[error("invalid geometry: {0}")]
    Geometry(String),

    /// The scattering composition produced a non-finite value.
    #[error("propagation overflow at segment {segment} (E = {energy} eV)")]
    Overflow { segment: usize, energy: f64 },

    /// A one-dimensional refinement failed to converge inside its bracket.
    #[error("refinement did not converge in [{lo}, {hi}]")]
    Refinement { lo: f64, hi: f64 },

    /// Fewer resonance levels than the operation needs.
    #[error("need at least {needed} resonance levels, found {found}")]
    TooFewLevels { needed: usize, found: usize },

    /// Calibration could not isolate a single delocalization window.
    #[error("calibration failed: {0}")]
    Calibration(String),

    /// A solver step failed at a particular gate bias.
    #[error("at gate bias {bias} V: {source}")]
    AtBias {
        bias: f64,
        #[source]
        source: Box<Error>,
    },

    /// A register or pulse request outside what the simulator represents.
    #[error("unsupported state: {0}")]
    UnsupportedState(String),

    /// A two-state pulse was requested away from resonance.
    #[error("hamiltonian is off resonance: |ωa - ωb| = {detuning} ps⁻¹, ω0 = {omega0} ps⁻¹")]
    OffResonance { detuning: f64, omega0: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn at_bias(self, bias: f64) -> Self {
        Error::AtBias {
            bias,
            source: Box::new(self),
        }
    }
}
