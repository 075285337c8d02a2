mod oracle;

use proptest::prelude::*;
use qdgate_core::calibration::{levels_at, ScanSettings};
use qdgate_core::transfer::propagate;
use qdgate_core::*;

fn barrier_mesh(v0: f64, w: f64, m: f64) -> PotentialMesh {
    PotentialMesh::from_segments(0.0, &[(w, v0)], 0.0, m, 200.0).unwrap()
}

#[test]
fn single_barrier_matches_closed_form_on_dense_grid() {
    for &w in &[1.0, 2.0, 3.0] {
        let mesh = barrier_mesh(3.1, w, 0.2);
        let mut worst = 0.0f64;
        for i in 0..1000 {
            let e = 0.01 + (3.0 - 0.01) * (i as f64 + 0.5) / 1000.0;
            let t = transmission(&mesh, e).unwrap();
            let exact = oracle::rectangular_barrier(e, 3.1, w, 0.2);
            worst = worst.max(((t - exact) / exact).abs());
        }
        assert!(worst < 1e-8, "w = {w}: worst relative error {worst:e}");
    }
}

#[test]
fn resonances_match_finite_difference_levels() {
    let g = QubitGeometry::si_nanocrystal_stack();
    let settings = ScanSettings::default();
    let occ = NeighborOccupancy::CONTROL_ONE;
    for &bias in &[0.14, 0.1547, 0.17] {
        let levels = levels_at(&g, occ, bias, &settings).unwrap();
        let fd = oracle::finite_difference_levels(&g, bias, occ, 8000, 2);
        for (lvl, reference) in levels.iter().zip(&fd) {
            let tol = (1e-4f64).max(0.01 * reference.abs());
            assert!(
                (lvl.energy - reference).abs() < tol,
                "bias {bias}: solver {} vs oracle {reference}",
                lvl.energy
            );
        }
    }
}

#[test]
fn localization_deep_in_regions_and_balance_at_resonance() {
    let g = QubitGeometry::si_nanocrystal_stack();
    let settings = ScanSettings::default();
    let occ = NeighborOccupancy::CONTROL_ONE;
    let deep_a = &levels_at(&g, occ, 0.12, &settings).unwrap()[0];
    let deep_b = &levels_at(&g, occ, 0.18, &settings).unwrap()[0];
    assert!(deep_a.f_a + deep_a.f_b > 0.99 && deep_a.f_a > 0.98);
    assert!(deep_b.f_a + deep_b.f_b > 0.99 && deep_b.f_b > 0.98);
}

#[test]
fn scan_is_deterministic_and_matches_serial_loop() {
    let g = QubitGeometry::si_nanocrystal_stack();
    let settings = ScanSettings::default();
    let occ = NeighborOccupancy::CONTROL_ZERO;
    let range = Interval::new(0.15, 0.16);
    let scan = scan_bias(&g, occ, range, 2e-3, &settings).unwrap();
    let again = scan_bias(&g, occ, range, 2e-3, &settings).unwrap();
    assert_eq!(scan.levels, again.levels);
    for (v, levels) in scan.bias.iter().zip(&scan.levels) {
        assert_eq!(&levels_at(&g, occ, *v, &settings).unwrap(), levels);
    }
}

prop_compose! {
    fn random_mesh()(
        cells in prop::collection::vec((0.05f64..1.5, -0.2f64..3.5, 0.1f64..1.0), 1..12),
        left in -0.3f64..0.0,
        right in -0.3f64..0.0,
    ) -> PotentialMesh {
        let mut edges = vec![0.0, 1.0];
        let mut potential = vec![left];
        let mut mass = vec![0.2];
        for (w, v, m) in cells {
            edges.push(edges[edges.len() - 1] + w);
            potential.push(v);
            mass.push(m);
        }
        edges.push(edges[edges.len() - 1] + 1.0);
        potential.push(right);
        mass.push(0.2);
        PotentialMesh::new(edges, potential, mass).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn flux_is_conserved(mesh in random_mesh(), e in 0.001f64..4.0) {
        let p = propagate(&mesh, e).unwrap();
        prop_assert!((p.transmission() + p.reflection() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn transmission_is_reciprocal(mesh in random_mesh(), e in 0.001f64..4.0) {
        let forward = transmission(&mesh, e).unwrap();
        let backward = transmission(&mesh.mirrored(), e).unwrap();
        prop_assert!((forward - backward).abs() < 1e-8, "{forward} vs {backward}");
    }

    #[test]
    fn device_meshes_are_reciprocal(bias in 0.0f64..0.3, e in 0.001f64..0.5) {
        let g = QubitGeometry::si_nanocrystal_stack();
        let mesh = build_potential(&g, bias, NeighborOccupancy::CONTROL_ONE, 600).unwrap();
        let forward = transmission(&mesh, e).unwrap();
        let backward = transmission(&mesh.mirrored(), e).unwrap();
        prop_assert!((forward - backward).abs() < 1e-8);
    }
}
