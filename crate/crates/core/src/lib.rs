//! Device-physics simulation of a controlled-NOT gate built from two coupled
//! asymmetric quantum-dot qubits.
//!
//! * [`device`]: layer stack and discretized potential under bias and
//!   neighbor Coulomb shifts.
//! * [`transfer`]: transfer-matrix transmission, resonance levels and
//!   wavefunctions.
//! * [`calibration`]: bias scans and resonant-bias calibration.
//! * [`dynamics`]: two-state evolution, pulses and the CNOT truth table.
//! * [`environment`]: phonon-bath decoherence estimates.
//! * [`measurement`]: FET readout times and damping regimes.

pub mod calibration;
pub mod constants;
pub mod device;
pub mod dynamics;
pub mod environment;
pub mod error;
pub mod measurement;
pub mod search;
pub mod transfer;

pub use calibration::{
    find_resonant_bias, level_pair, scan_bias, BiasScan, CalibrationResult, Interval, LevelPair,
    ScanSettings,
};
pub use device::{
    build_potential, coulomb_shift, Layer, LayerLabel, NeighborDistances, NeighborOccupancy,
    PotentialMesh, QubitGeometry,
};
pub use dynamics::{
    cnot, cnot_with_pulse, evolve, half_pulse, not_pulse, tunneling_frequency_estimate,
    CnotCalibration, CnotOutcome, QubitState, RegisterState, TwoStateHamiltonian,
};
pub use environment::{decoherence_report, BathParameters, BathRegime, DecoherenceReport};
pub use error::{Error, Result};
pub use measurement::{readout_report, DampingRegime, DetectorParameters, ReadoutReport};
pub use num_complex::Complex64;
pub use transfer::{
    find_resonances, level_splitting, local_wavevector, propagate, transmission, ResonanceLevel,
    ResonanceSearch, SegmentAmplitudes, TransmissionSpectrum,
};
