//! Layer-stack description of one qubit and the discretized potential it
//! presents to an electron under gate bias and neighbor Coulomb shifts.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::constants::COULOMB_EV_NM;
use crate::error::{Error, Result};

/// Role of a layer in the channel → gate stack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LayerLabel {
    ChannelContact,
    Barrier,
    DotA,
    DotB,
    GateContact,
}

/// One homogeneous layer of the stack.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Layer {
    pub label: LayerLabel,
    /// Thickness in nm.
    pub thickness: f64,
    /// Conduction-band offset in eV relative to the channel.
    pub band_offset: f64,
    /// Effective mass in units of m0.
    pub effective_mass: f64,
}

impl Layer {
    pub fn new(label: LayerLabel, thickness: f64, band_offset: f64, effective_mass: f64) -> Self {
        Layer {
            label,
            thickness,
            band_offset,
            effective_mass,
        }
    }
}

/// Center-to-center distances (nm) from this qubit's dots to the neighbor's
/// dots. `a_b` is the distance from own dot a to the neighbor's dot b.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NeighborDistances {
    pub a_a: f64,
    pub a_b: f64,
    pub b_a: f64,
    pub b_b: f64,
}

impl NeighborDistances {
    /// Side-by-side qubits with equal dot heights: same-size dots sit
    /// `lateral` apart, cross pairs also pick up the vertical offset.
    pub fn side_by_side(lateral: f64, vertical: f64) -> Self {
        let cross = lateral.hypot(vertical);
        NeighborDistances {
            a_a: lateral,
            a_b: cross,
            b_a: cross,
            b_b: lateral,
        }
    }
}

/// Layer stack of a qubit together with its electrostatic environment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QubitGeometry {
    pub layers: Vec<Layer>,
    pub dielectric_constant: f64,
    pub distances: NeighborDistances,
}

impl QubitGeometry {
    /// channel / SiO2 2.5 nm / Si dot 6 nm / SiO2 1.5 nm / Si dot 4 nm /
    /// SiO2 7 nm / gate, with 3.1 eV barriers, m* = 0.2, ε = 4 and 20 nm
    /// spacing between same-size dots of neighboring qubits.
    pub fn si_nanocrystal_stack() -> Self {
        let m = 0.2;
        let v0 = 3.1;
        let layers = vec![
            Layer::new(LayerLabel::ChannelContact, 2.0, 0.0, m),
            Layer::new(LayerLabel::Barrier, 2.5, v0, m),
            Layer::new(LayerLabel::DotA, 6.0, 0.0, m),
            Layer::new(LayerLabel::Barrier, 1.5, v0, m),
            Layer::new(LayerLabel::DotB, 4.0, 0.0, m),
            Layer::new(LayerLabel::Barrier, 7.0, v0, m),
            Layer::new(LayerLabel::GateContact, 2.0, 0.0, m),
        ];
        let mut geometry = QubitGeometry {
            layers,
            dielectric_constant: 4.0,
            distances: NeighborDistances::side_by_side(20.0, 0.0),
        };
        let vertical =
            geometry.dot_center(LayerLabel::DotB) - geometry.dot_center(LayerLabel::DotA);
        geometry.distances = NeighborDistances::side_by_side(20.0, vertical);
        geometry
    }

    /// Same stack with a different inter-dot barrier thickness.
    pub fn with_inner_barrier(mut self, thickness: f64) -> Self {
        if let Some(i) = self.dot_index(LayerLabel::DotA) {
            if let Some(layer) = self.layers.get_mut(i + 1) {
                layer.thickness = thickness;
            }
        }
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.layers.len() < 3 {
            return Err(Error::Geometry("stack needs at least three layers".into()));
        }
        for (i, layer) in self.layers.iter().enumerate() {
            if !(layer.thickness > 0.0) || !layer.thickness.is_finite() {
                return Err(Error::Geometry(format!("layer {i}: thickness must be > 0")));
            }
            if !(layer.effective_mass > 0.0) || !layer.effective_mass.is_finite() {
                return Err(Error::Geometry(format!(
                    "layer {i}: effective mass must be > 0"
                )));
            }
            if !layer.band_offset.is_finite() {
                return Err(Error::Geometry(format!(
                    "layer {i}: band offset is not finite"
                )));
            }
            let is_end = i == 0 || i == self.layers.len() - 1;
            let is_contact = matches!(
                layer.label,
                LayerLabel::ChannelContact | LayerLabel::GateContact
            );
            if is_contact != is_end {
                return Err(Error::Geometry(format!(
                    "layer {i}: contacts must be exactly the first and last layers"
                )));
            }
        }
        if self.layers[0].label != LayerLabel::ChannelContact {
            return Err(Error::Geometry(
                "first layer must be the channel contact".into(),
            ));
        }
        if self.layers[self.layers.len() - 1].label != LayerLabel::GateContact {
            return Err(Error::Geometry(
                "last layer must be the gate contact".into(),
            ));
        }
        let count = |label| self.layers.iter().filter(|l| l.label == label).count();
        if count(LayerLabel::DotA) != 1 || count(LayerLabel::DotB) != 1 {
            return Err(Error::Geometry(
                "need exactly one dot_a and one dot_b layer".into(),
            ));
        }
        if self.dot_index(LayerLabel::DotA) > self.dot_index(LayerLabel::DotB) {
            return Err(Error::Geometry("dot_a must precede dot_b".into()));
        }
        if !(self.dielectric_constant > 0.0) {
            return Err(Error::Geometry("dielectric constant must be > 0".into()));
        }
        let d = &self.distances;
        for (name, r) in [
            ("a_a", d.a_a),
            ("a_b", d.a_b),
            ("b_a", d.b_a),
            ("b_b", d.b_b),
        ] {
            if !(r > 0.0) || !r.is_finite() {
                return Err(Error::Geometry(format!("distance {name} must be > 0")));
            }
        }
        Ok(())
    }

    fn dot_index(&self, label: LayerLabel) -> Option<usize> {
        self.layers.iter().position(|l| l.label == label)
    }

    /// Start position (nm) of each layer, measured from the channel side.
    pub fn layer_starts(&self) -> Vec<f64> {
        let mut x = 0.0;
        self.layers
            .iter()
            .map(|l| {
                let start = x;
                x += l.thickness;
                start
            })
            .collect()
    }

    /// Center (nm) of the first layer carrying `label`.
    pub fn dot_center(&self, label: LayerLabel) -> f64 {
        let starts = self.layer_starts();
        self.dot_index(label)
            .map(|i| starts[i] + 0.5 * self.layers[i].thickness)
            .unwrap_or(f64::NAN)
    }

    /// Extent of the insulating stack between the two contacts.
    pub fn stack_extent(&self) -> (f64, f64) {
        let starts = self.layer_starts();
        let last = self.layers.len() - 1;
        (starts[1], starts[last])
    }

    /// Continuous potential energy (eV) at position `x` for the given bias and
    /// neighbor occupancy.
    pub fn potential_at(
        &self,
        x: f64,
        gate_bias: f64,
        occupancy: NeighborOccupancy,
    ) -> Result<f64> {
        let starts = self.layer_starts();
        let idx = match starts.iter().rposition(|&s| s <= x) {
            Some(i) => i,
            None => 0,
        };
        let layer = &self.layers[idx];
        let shifts = self.dot_shifts(occupancy)?;
        let coulomb = match layer.label {
            LayerLabel::DotA => shifts.0,
            LayerLabel::DotB => shifts.1,
            _ => 0.0,
        };
        Ok(layer.band_offset + self.ramp(x, gate_bias) + coulomb)
    }

    fn ramp(&self, x: f64, gate_bias: f64) -> f64 {
        let (lo, hi) = self.stack_extent();
        let frac = ((x - lo) / (hi - lo)).clamp(0.0, 1.0);
        -gate_bias * frac
    }

    /// Coulomb shifts (eV) of the bottoms of dot a and dot b.
    pub fn dot_shifts(&self, occupancy: NeighborOccupancy) -> Result<(f64, f64)> {
        let eps = self.dielectric_constant;
        let d = &self.distances;
        let a = coulomb_shift(eps, d.a_a, occupancy.a)? + coulomb_shift(eps, d.a_b, occupancy.b)?;
        let b = coulomb_shift(eps, d.b_a, occupancy.a)? + coulomb_shift(eps, d.b_b, occupancy.b)?;
        Ok((a, b))
    }
}

/// Expected charge of the neighboring qubit on its dot a and dot b.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NeighborOccupancy {
    pub a: f64,
    pub b: f64,
}

impl NeighborOccupancy {
    /// Neighbor electron localized in its larger dot: control in |1⟩.
    pub const CONTROL_ONE: NeighborOccupancy = NeighborOccupancy { a: 1.0, b: 0.0 };
    /// Neighbor electron localized in its smaller dot: control in |0⟩.
    pub const CONTROL_ZERO: NeighborOccupancy = NeighborOccupancy { a: 0.0, b: 1.0 };
    pub const EMPTY: NeighborOccupancy = NeighborOccupancy { a: 0.0, b: 0.0 };

    pub fn new(a: f64, b: f64) -> Result<Self> {
        let occ = NeighborOccupancy { a, b };
        occ.validate()?;
        Ok(occ)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = |r: f64| (0.0..=1.0).contains(&r);
        if !ok(self.a) || !ok(self.b) {
            return Err(Error::Domain(format!(
                "occupancies must lie in [0, 1], got ({}, {})",
                self.a, self.b
            )));
        }
        if self.a + self.b > 1.0 + 1e-12 {
            return Err(Error::Domain(format!(
                "one electron per qubit: occupancies sum to {}",
                self.a + self.b
            )));
        }
        Ok(())
    }
}

/// Potential energy shift (eV) from a neighbor charge `rho` at distance `r` nm
/// in a medium of relative permittivity `eps`.
pub fn coulomb_shift(eps: f64, r: f64, rho: f64) -> Result<f64> {
    if !(r > 0.0) || !(eps > 0.0) {
        return Err(Error::Domain(format!(
            "coulomb shift needs r > 0 and eps > 0, got r = {r}, eps = {eps}"
        )));
    }
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::Domain(format!("occupancy {rho} outside [0, 1]")));
    }
    Ok(rho * COULOMB_EV_NM / (eps * r))
}

/// Cell range of one layer inside a mesh.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LayerSpan {
    pub label: LayerLabel,
    pub cells: Range<usize>,
}

/// Piecewise-constant potential and mass on a 1D mesh. The first and last
/// cells act as semi-infinite leads.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PotentialMesh {
    edges: Vec<f64>,
    positions: Vec<f64>,
    potential: Vec<f64>,
    mass: Vec<f64>,
    spans: Vec<LayerSpan>,
}

impl PotentialMesh {
    /// Build a mesh from explicit cell edges (one more than the cell count).
    pub fn new(edges: Vec<f64>, potential: Vec<f64>, mass: Vec<f64>) -> Result<Self> {
        Self::with_spans(edges, potential, mass, Vec::new())
    }

    fn with_spans(
        edges: Vec<f64>,
        potential: Vec<f64>,
        mass: Vec<f64>,
        spans: Vec<LayerSpan>,
    ) -> Result<Self> {
        let n = potential.len();
        if n < 3 {
            return Err(Error::Geometry(format!(
                "mesh needs at least 3 cells, got {n}"
            )));
        }
        if mass.len() != n || edges.len() != n + 1 {
            return Err(Error::Geometry(format!(
                "mesh arrays disagree: {} edges, {} potentials, {} masses",
                edges.len(),
                n,
                mass.len()
            )));
        }
        if edges.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Geometry(
                "mesh edges must be strictly increasing".into(),
            ));
        }
        if mass.iter().any(|&m| !(m > 0.0)) {
            return Err(Error::Geometry("mesh masses must be > 0".into()));
        }
        if potential.iter().any(|v| !v.is_finite()) {
            return Err(Error::Geometry("mesh potential must be finite".into()));
        }
        let positions = edges.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
        Ok(PotentialMesh {
            edges,
            positions,
            potential,
            mass,
            spans,
        })
    }

    /// Uniform-mass mesh from `(thickness, potential)` segments, `cells_per_nm`
    /// resolution, with one-cell leads added at both ends.
    pub fn from_segments(
        lead_left: f64,
        segments: &[(f64, f64)],
        lead_right: f64,
        mass: f64,
        cells_per_nm: f64,
    ) -> Result<Self> {
        let mut edges = vec![-1.0, 0.0];
        let mut potential = vec![lead_left];
        let mut x = 0.0;
        for &(thickness, v) in segments {
            let n = ((thickness * cells_per_nm).round() as usize).max(1);
            let h = thickness / n as f64;
            for i in 1..=n {
                potential.push(v);
                edges.push(if i == n {
                    x + thickness
                } else {
                    x + i as f64 * h
                });
            }
            x += thickness;
        }
        potential.push(lead_right);
        edges.push(x + 1.0);
        let masses = vec![mass; potential.len()];
        Self::new(edges, potential, masses)
    }

    pub fn len(&self) -> usize {
        self.potential.len()
    }

    pub fn is_empty(&self) -> bool {
        self.potential.is_empty()
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    /// Cell centers (nm).
    pub fn positions(&self) -> &[f64] {
        &self.positions
    }

    pub fn potential(&self) -> &[f64] {
        &self.potential
    }

    pub fn mass(&self) -> &[f64] {
        &self.mass
    }

    pub fn width(&self, cell: usize) -> f64 {
        self.edges[cell + 1] - self.edges[cell]
    }

    pub fn spans(&self) -> &[LayerSpan] {
        &self.spans
    }

    pub fn span(&self, label: LayerLabel) -> Option<Range<usize>> {
        self.spans
            .iter()
            .find(|s| s.label == label)
            .map(|s| s.cells.clone())
    }

    /// Cells from the channel-side edge of dot a to the gate-side edge of
    /// dot b, when the mesh carries dot labels.
    pub fn dot_window(&self) -> Option<Range<usize>> {
        let a = self.span(LayerLabel::DotA)?;
        let b = self.span(LayerLabel::DotB)?;
        Some(a.start..b.end)
    }

    /// Mean potential over the cells of a labeled layer.
    pub fn mean_potential(&self, label: LayerLabel) -> Option<f64> {
        let cells = self.span(label)?;
        let (mut sum, mut width) = (0.0, 0.0);
        for i in cells {
            sum += self.potential[i] * self.width(i);
            width += self.width(i);
        }
        Some(sum / width)
    }

    /// Mirror image of the mesh (channel and gate swapped).
    pub fn mirrored(&self) -> Self {
        let end = *self.edges.last().unwrap_or(&0.0);
        let start = self.edges[0];
        let edges = self.edges.iter().rev().map(|x| start + end - x).collect();
        let mut potential = self.potential.clone();
        potential.reverse();
        let mut mass = self.mass.clone();
        mass.reverse();
        let n = self.len();
        let spans = self
            .spans
            .iter()
            .map(|s| LayerSpan {
                label: s.label,
                cells: n - s.cells.end..n - s.cells.start,
            })
            .collect();
        PotentialMesh::with_spans(edges, potential, mass, spans)
            .expect("mirroring preserves mesh invariants")
    }
}

/// Distribute `n_mesh` cells over the layers, proportionally to thickness and
/// with at least three cells per layer (largest-remainder rounding).
fn allocate_cells(layers: &[Layer], n_mesh: usize) -> Vec<usize> {
    const MIN_CELLS: usize = 3;
    let total: f64 = layers.iter().map(|l| l.thickness).sum();
    let free = n_mesh - MIN_CELLS * layers.len();
    let shares: Vec<f64> = layers
        .iter()
        .map(|l| free as f64 * l.thickness / total)
        .collect();
    let mut counts: Vec<usize> = shares.iter().map(|s| s.floor() as usize).collect();
    let mut left = free - counts.iter().sum::<usize>();
    let mut order: Vec<usize> = (0..layers.len()).collect();
    order.sort_by(|&i, &j| {
        let ri = shares[i] - shares[i].floor();
        let rj = shares[j] - shares[j].floor();
        rj.total_cmp(&ri).then(i.cmp(&j))
    });
    for &i in &order {
        if left == 0 {
            break;
        }
        counts[i] += 1;
        left -= 1;
    }
    counts.iter().map(|c| c + MIN_CELLS).collect()
}

/// Discretize the stack at the given gate bias (V) and neighbor occupancy.
///
/// Band offsets are piecewise constant, the gate field drops linearly across
/// the insulating stack (channel contact at 0, gate contact at −e·bias) and
/// each dot bottom is raised by its Coulomb shift. Layer boundaries coincide
/// with cell edges.
pub fn build_potential(
    geometry: &QubitGeometry,
    gate_bias: f64,
    occupancy: NeighborOccupancy,
    n_mesh: usize,
) -> Result<PotentialMesh> {
    geometry.validate()?;
    occupancy.validate()?;
    if !gate_bias.is_finite() {
        return Err(Error::Domain("gate bias must be finite".into()));
    }
    if n_mesh < 3 * geometry.layers.len() {
        return Err(Error::Geometry(format!(
            "n_mesh = {n_mesh} is below 3 cells per layer ({} layers)",
            geometry.layers.len()
        )));
    }
    let (shift_a, shift_b) = geometry.dot_shifts(occupancy)?;
    let counts = allocate_cells(&geometry.layers, n_mesh);
    let starts = geometry.layer_starts();

    let mut edges = Vec::with_capacity(n_mesh + 1);
    let mut potential = Vec::with_capacity(n_mesh);
    let mut mass = Vec::with_capacity(n_mesh);
    let mut spans = Vec::with_capacity(geometry.layers.len());
    edges.push(0.0);
    for (i, layer) in geometry.layers.iter().enumerate() {
        let n = counts[i];
        let h = layer.thickness / n as f64;
        let first = potential.len();
        let end = starts[i] + layer.thickness;
        let coulomb = match layer.label {
            LayerLabel::DotA => shift_a,
            LayerLabel::DotB => shift_b,
            _ => 0.0,
        };
        for j in 0..n {
            let center = starts[i] + (j as f64 + 0.5) * h;
            potential.push(layer.band_offset + geometry.ramp(center, gate_bias) + coulomb);
            mass.push(layer.effective_mass);
            edges.push(if j + 1 == n {
                end
            } else {
                starts[i] + (j + 1) as f64 * h
            });
        }
        spans.push(LayerSpan {
            label: layer.label,
            cells: first..potential.len(),
        });
    }
    PotentialMesh::with_spans(edges, potential, mass, spans)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn coulomb_shift_examples() {
        assert_eq!(coulomb_shift(4.0, 20.0, 0.0).unwrap(), 0.0);
        assert!((coulomb_shift(4.0, 20.0, 1.0).unwrap() - 0.0180).abs() < 1e-6);
        assert!((coulomb_shift(4.0, 40.0, 1.0).unwrap() - 0.0090).abs() < 1e-6);
        assert!(coulomb_shift(4.0, 0.0, 1.0).is_err());
        assert!(coulomb_shift(-1.0, 20.0, 1.0).is_err());
    }

    #[test]
    fn unbiased_empty_mesh_is_raw_band_offsets() {
        let g = QubitGeometry::si_nanocrystal_stack();
        let mesh = build_potential(&g, 0.0, NeighborOccupancy::EMPTY, 1000).unwrap();
        assert_eq!(mesh.len(), 1000);
        for span in mesh.spans() {
            let layer = g.layers.iter().find(|l| l.label == span.label).unwrap();
            if span.label == LayerLabel::Barrier {
                continue;
            }
            for i in span.cells.clone() {
                assert_eq!(mesh.potential()[i], layer.band_offset);
            }
        }
        let max = mesh.potential().iter().cloned().fold(f64::MIN, f64::max);
        let min = mesh.potential().iter().cloned().fold(f64::MAX, f64::min);
        assert_eq!(max, 3.1);
        assert_eq!(min, 0.0);
    }

    #[test]
    fn layer_boundaries_fall_on_cell_edges() {
        let g = QubitGeometry::si_nanocrystal_stack();
        let mesh = build_potential(&g, 0.15, NeighborOccupancy::CONTROL_ONE, 777).unwrap();
        let starts = g.layer_starts();
        for (span, start) in mesh.spans().iter().zip(&starts) {
            assert!((mesh.edges()[span.cells.start] - start).abs() < 1e-12);
        }
        assert_eq!(*mesh.edges().last().unwrap(), starts[6] + 2.0);
    }

    #[test]
    fn control_state_raises_the_nearer_dot_more() {
        let g = QubitGeometry::si_nanocrystal_stack();
        let one = build_potential(&g, 0.0, NeighborOccupancy::CONTROL_ONE, 1000).unwrap();
        let zero = build_potential(&g, 0.0, NeighborOccupancy::CONTROL_ZERO, 1000).unwrap();
        let a1 = one.mean_potential(LayerLabel::DotA).unwrap();
        let a0 = zero.mean_potential(LayerLabel::DotA).unwrap();
        assert!(a1 > a0);
        let b1 = one.mean_potential(LayerLabel::DotB).unwrap();
        let b0 = zero.mean_potential(LayerLabel::DotB).unwrap();
        assert!(b0 > b1);
    }

    #[test]
    fn ramp_drop_is_exactly_the_bias() {
        let g = QubitGeometry::si_nanocrystal_stack();
        for bias in [0.05, 0.1, 0.2] {
            let mesh = build_potential(&g, bias, NeighborOccupancy::EMPTY, 600).unwrap();
            let drop = mesh.potential()[0] - mesh.potential()[mesh.len() - 1];
            assert_eq!(drop, bias);
        }
    }

    #[test]
    fn invalid_geometries_are_rejected() {
        let mut g = QubitGeometry::si_nanocrystal_stack();
        g.layers.swap(2, 4);
        assert!(g.validate().is_err());
        let mut g = QubitGeometry::si_nanocrystal_stack();
        g.layers[3].thickness = 0.0;
        assert!(build_potential(&g, 0.0, NeighborOccupancy::EMPTY, 100).is_err());
        let g = QubitGeometry::si_nanocrystal_stack();
        assert!(build_potential(&g, 0.0, NeighborOccupancy::EMPTY, 20).is_err());
        assert!(NeighborOccupancy::new(0.7, 0.7).is_err());
        assert!(NeighborOccupancy::new(0.5, 0.5).is_ok());
    }

    #[test]
    fn mirrored_mesh_round_trips() {
        let g = QubitGeometry::si_nanocrystal_stack();
        let mesh = build_potential(&g, 0.1, NeighborOccupancy::CONTROL_ONE, 300).unwrap();
        let back = mesh.mirrored().mirrored();
        assert_eq!(back.potential(), mesh.potential());
        assert_eq!(back.span(LayerLabel::DotA), mesh.span(LayerLabel::DotA));
        for (x, y) in back.edges().iter().zip(mesh.edges()) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn doubling_bias_doubles_contact_drop(bias in 0.001f64..0.5) {
            let g = QubitGeometry::si_nanocrystal_stack();
            let m1 = build_potential(&g, bias, NeighborOccupancy::EMPTY, 300).unwrap();
            let m2 = build_potential(&g, 2.0 * bias, NeighborOccupancy::EMPTY, 300).unwrap();
            let n = m1.len() - 1;
            let d1 = m1.potential()[0] - m1.potential()[n];
            let d2 = m2.potential()[0] - m2.potential()[n];
            prop_assert!((d2 - 2.0 * d1).abs() < 1e-15);
        }

        #[test]
        fn coulomb_shift_is_linear_in_rho_and_decreasing_in_r(
            rho in 0.0f64..=1.0, r in 1.0f64..100.0, dr in 0.1f64..50.0
        ) {
            let full = coulomb_shift(4.0, r, 1.0).unwrap();
            prop_assert!((coulomb_shift(4.0, r, rho).unwrap() - rho * full).abs() < 1e-15);
            prop_assert!(coulomb_shift(4.0, r + dr, 1.0).unwrap() < full);
        }

        #[test]
        fn build_potential_is_pure(bias in -0.3f64..0.3, a in 0.0f64..0.5, b in 0.0f64..0.5) {
            let g = QubitGeometry::si_nanocrystal_stack();
            let occ = NeighborOccupancy::new(a, b).unwrap();
            let m1 = build_potential(&g, bias, occ, 400).unwrap();
            let m2 = build_potential(&g, bias, occ, 400).unwrap();
            prop_assert_eq!(m1, m2);
        }
    }
}
