//! Inputs shared by the benchmarks.

use qdgate_core::{build_potential, NeighborOccupancy, PotentialMesh, QubitGeometry};

/// Stock stack at a bias close to the control-|1⟩ resonance.
pub fn resonant_mesh(n_mesh: usize) -> PotentialMesh {
    build_potential(
        &QubitGeometry::si_nanocrystal_stack(),
        0.1547,
        NeighborOccupancy::CONTROL_ONE,
        n_mesh,
    )
    .expect("stock geometry is valid")
}
