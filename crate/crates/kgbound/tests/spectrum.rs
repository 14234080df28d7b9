use kgbound::error::KgError;
use kgbound::potentials::{couplings, PotentialModel, SignBranch};
use kgbound::spectrum::{
    classify_branch, dn, energy_residual, find_bound_states, nonrelativistic_energy,
    NonRelMode, ParticleLabel, Residual, ScanConfig,
};

const BOTH: [SignBranch; 2] = [SignBranch::Plus, SignBranch::Minus];

fn res_value(r: Residual) -> f64 {
    match r {
        Residual::Value(v) => v,
        Residual::ComplexWindow => panic!("unexpected complex window"),
    }
}

#[test]
fn scan_config_defaults() {
    let c = ScanConfig::for_mass(4.0);
    assert_eq!(c.grid, 2048);
    assert_eq!(c.tol_root, 4e-10);
    assert_eq!(c.eta, 1e-9);
}

#[test]
fn hyperbolic_well_known_root_satisfies_residual() {
    // V1 = 1, V2 = -1, q = 1, alpha = 1, M = 4, n = 1: the first excited
    // energy equation has a root at E = 1.81374751811.
    let m = PotentialModel::RosenMorseWell { v1: 1.0, v2: -1.0, q: 1.0, alpha: 1.0 };
    let d = dn(3, 0);
    let r = res_value(
        energy_residual(&m, 1, &d, SignBranch::Plus, 4.0, 1.81374751811).unwrap(),
    );
    assert!(r.abs() < 1e-6, "residual {r}");
    let r4 = res_value(energy_residual(&m, 1, &d, SignBranch::Plus, 4.0, 1.8137).unwrap());
    assert!(r4.abs() < 1e-2, "residual at 4-digit energy {r4}");
}

#[test]
fn hyperbolic_well_first_excited_roots() {
    let m = PotentialModel::RosenMorseWell { v1: 1.0, v2: -1.0, q: 1.0, alpha: 1.0 };
    let d = dn(3, 0);
    let scan = ScanConfig::for_mass(4.0);
    let states = find_bound_states(&m, 1, &d, &BOTH, 4.0, &scan).unwrap();
    let expected = [1.81374751811, -1.91401693692, -3.39226885027, -3.90878775263];
    assert_eq!(states.len(), expected.len());
    for (s, &e) in states.iter().zip(expected.iter()) {
        assert!((s.energy - e).abs() < 1e-8, "{} vs {}", s.energy, e);
    }
    // Sorted descending in energy.
    for w in states.windows(2) {
        assert!(w[0].energy >= w[1].energy);
    }
}

#[test]
fn free_limit_of_screened_well_residual() {
    // With V0 = 0 the residual vanishes at E = sqrt(M^2 - alpha^2 (n+nu)^2/4),
    // nu = (D + 2l - 1)/2.
    let m = PotentialModel::Hulthen { v0: 0.0, alpha: 0.5 };
    let d = dn(5, 1);
    let nu = (5.0 + 2.0 - 1.0) / 2.0; // 3
    let n = 0usize;
    let e = (1.0 - 0.5_f64.powi(2) * (n as f64 + nu).powi(2) / 4.0).sqrt();
    let r = res_value(energy_residual(&m, n, &d, SignBranch::Plus, 1.0, e).unwrap());
    assert!(r.abs() < 1e-12, "residual {r}");
}

#[test]
fn free_potential_has_no_bound_states() {
    let m = PotentialModel::Hulthen { v0: 0.0, alpha: 0.5 };
    let scan = ScanConfig::for_mass(1.0);
    let states = find_bound_states(&m, 0, &dn(3, 0), &BOTH, 1.0, &scan).unwrap();
    assert!(states.is_empty());
}

#[test]
fn woods_saxon_quadratic_roots() {
    // For the flat-bottomed well (V0 = 0.1, alpha = 1, M = 1, n = 1) the
    // energy equation is the quadratic 1.01 E^2 + 0.12 E - 0.64 = 0 on the
    // plus branch, roots {0.738838, -0.857649}.
    let m = PotentialModel::WoodsSaxon { v0: 0.1, alpha: 1.0 };
    let scan = ScanConfig::for_mass(1.0);
    let states = find_bound_states(&m, 1, &dn(3, 0), &[SignBranch::Plus], 1.0, &scan).unwrap();
    let disc = (0.12_f64 * 0.12 + 4.0 * 1.01 * 0.64).sqrt();
    let roots = [(-0.12 + disc) / 2.02, (-0.12 - disc) / 2.02];
    assert_eq!(states.len(), 2);
    assert!((states[0].energy - roots[0]).abs() < 1e-10);
    assert!((states[1].energy - roots[1]).abs() < 1e-10);
    assert!((roots[0] - 0.738838).abs() < 1e-6);
    assert!((roots[1] - (-0.857649)).abs() < 1e-6);
}

#[test]
fn roots_have_small_residuals() {
    let m = PotentialModel::Hulthen { v0: 0.25, alpha: 0.25 };
    let d = dn(3, 0);
    let scan = ScanConfig::for_mass(1.0);
    let states = find_bound_states(&m, 0, &d, &BOTH, 1.0, &scan).unwrap();
    assert!(!states.is_empty());
    for s in &states {
        let r = res_value(
            energy_residual(&m, 0, &d, s.sign_branch, 1.0, s.energy).unwrap(),
        );
        assert!(r.abs() < 10.0 * scan.tol_root, "E = {}: residual {r}", s.energy);
    }
}

#[test]
fn grid_refinement_stability() {
    let m = PotentialModel::Hulthen { v0: 0.25, alpha: 0.25 };
    let d = dn(3, 0);
    let coarse = ScanConfig::for_mass(1.0);
    let fine = ScanConfig { grid: 4096, ..coarse };
    let a = find_bound_states(&m, 0, &d, &BOTH, 1.0, &coarse).unwrap();
    let b = find_bound_states(&m, 0, &d, &BOTH, 1.0, &fine).unwrap();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b.iter()) {
        assert!((x.energy - y.energy).abs() < 1e-9);
    }
}

#[test]
fn screened_well_ground_state() {
    // Hulthen(V0 = 0.25, alpha = 0.25), M = 1, n = 0 on the plus branch: the
    // residual factors as (M^2-E^2) - [t(n+1) - (E+M) V0 / (2 t (n+1))]^2
    // with t = alpha/2, and the particle root is fully admissible.
    let m = PotentialModel::Hulthen { v0: 0.25, alpha: 0.25 };
    let d = dn(3, 0);
    let scan = ScanConfig::for_mass(1.0);
    let states = find_bound_states(&m, 0, &d, &[SignBranch::Plus], 1.0, &scan).unwrap();
    assert_eq!(states.len(), 2);
    assert!((states[0].energy - 1.18012151082e-1).abs() < 1e-9);
    assert!((states[1].energy - (-9.93012151082e-1)).abs() < 1e-9);
    assert_eq!(states[0].flags.bits(), "11110");
    assert_eq!(states[1].flags.bits(), "01110");
    let t = 0.125;
    for s in &states {
        let bracket = t - (s.energy + 1.0) * 0.25 / (2.0 * t);
        let check = (1.0 - s.energy * s.energy) - bracket * bracket;
        assert!(check.abs() < 1e-9, "factored residual {check} at E = {}", s.energy);
    }
    assert_eq!(classify_branch(&states[0]), ParticleLabel::Particle);
    assert_eq!(classify_branch(&states[1]), ParticleLabel::Antiparticle);
}

#[test]
fn exponent_magnitude_consistency() {
    // At every located root, |p| = sqrt(eps^2 - gamma) to 1e-8.
    let m = PotentialModel::Hulthen { v0: 0.25, alpha: 0.25 };
    let d = dn(3, 0);
    let scan = ScanConfig::for_mass(1.0);
    for n in 0..2usize {
        for s in find_bound_states(&m, n, &d, &BOTH, 1.0, &scan).unwrap() {
            let cs = couplings(&m, s.energy, s.sign_branch, 1.0, &d, 1.0).unwrap();
            let arg = cs.epsilon * cs.epsilon - cs.gamma;
            assert!(arg >= -1e-12);
            let magnitude = arg.max(0.0).sqrt();
            assert!(
                (s.exponents.p.abs() - magnitude).abs() < 1e-8,
                "n = {n}, E = {}: |p| = {} vs {}",
                s.energy,
                s.exponents.p.abs(),
                magnitude
            );
            assert_eq!(s.exponents.jacobi_alpha, 2.0 * s.exponents.p);
            assert_eq!(s.exponents.jacobi_beta, 2.0 * s.exponents.w - 1.0);
        }
    }
}

#[test]
fn energy_window_and_s_wave_guards() {
    let m = PotentialModel::Hulthen { v0: 0.25, alpha: 0.25 };
    assert!(matches!(
        energy_residual(&m, 0, &dn(3, 0), SignBranch::Plus, 1.0, 1.0),
        Err(KgError::EnergyWindow { .. })
    ));
    let rm = PotentialModel::RosenMorseWell { v1: 1.0, v2: -1.0, q: 1.0, alpha: 1.0 };
    assert!(matches!(
        energy_residual(&rm, 0, &dn(3, 1), SignBranch::Plus, 4.0, 0.5),
        Err(KgError::SWaveOnly { l: 1, d: 3 })
    ));
}

#[test]
fn nonrelativistic_eckart_closed_form() {
    // V1 = 0 makes w1 = 1 for s-waves:
    // E = -[a^2 (n+1)^2 + M^2 V2^2 / (a^2 (n+1)^2)] / (2M).
    let m = PotentialModel::EckartType { v1: 0.0, v2: 0.3, v3: 0.3, q: 1.0, alpha: 0.5 };
    let d = dn(3, 0);
    for n in 0..3usize {
        let e = nonrelativistic_energy(&m, n, &d, 1.0, NonRelMode::SchrodingerV).unwrap();
        let nw = n as f64 + 1.0;
        let expected = -(0.25 * nw * nw + 0.09 / (0.25 * nw * nw)) / 2.0;
        assert!((e - expected).abs() < 1e-13);
    }
    // V2 != V3 has no single closed form in this mode.
    let bad = PotentialModel::EckartType { v1: 0.0, v2: 0.3, v3: 0.4, q: 1.0, alpha: 0.5 };
    assert!(nonrelativistic_energy(&bad, 0, &d, 1.0, NonRelMode::SchrodingerV).is_err());
}

#[test]
fn nonrelativistic_hyperbolic_well_closed_form() {
    // V1 = 0 makes delta2 = 0: E = -[a^2 n^2 + 4 M^2 V2^2/(a^2 n^2)]/(2M).
    let m = PotentialModel::RosenMorseWell { v1: 0.0, v2: 0.3, q: 1.0, alpha: 0.5 };
    let d = dn(3, 0);
    let e = nonrelativistic_energy(&m, 1, &d, 1.0, NonRelMode::KgLimit2V).unwrap();
    let expected = -(0.25 + 4.0 * 0.09 / 0.25) / 2.0;
    assert!((e - expected).abs() < 1e-13);
    assert!(matches!(
        nonrelativistic_energy(&m, 1, &dn(3, 1), 1.0, NonRelMode::KgLimit2V),
        Err(KgError::SWaveOnly { .. })
    ));
}

#[test]
fn nonrelativistic_flat_well_closed_form() {
    // V0 = 0.05, alpha = 1, M = 1, n = 1: bracket = 0.5 + 0.1 = 0.6,
    // E = -0.36/2 = -0.18.
    let m = PotentialModel::WoodsSaxon { v0: 0.05, alpha: 1.0 };
    let d = dn(3, 0);
    let e = nonrelativistic_energy(&m, 1, &d, 1.0, NonRelMode::KgLimit2V).unwrap();
    assert!((e - (-0.18)).abs() < 1e-13);
    assert!(matches!(
        nonrelativistic_energy(&m, 0, &d, 1.0, NonRelMode::KgLimit2V),
        Err(KgError::WoodsSaxonNZero)
    ));
}

#[test]
fn nonrelativistic_doubling_consistency() {
    // The 2V convention of the standard hyperbolic potential equals the V
    // convention with V1 -> 2 V1, V2 -> 2 V2.
    let d = dn(3, 0);
    for n in 0..3usize {
        let a = nonrelativistic_energy(
            &PotentialModel::StandardEckart { v1: 0.2, v2: 0.15, alpha: 0.5 },
            n,
            &d,
            1.0,
            NonRelMode::KgLimit2V,
        )
        .unwrap();
        let b = nonrelativistic_energy(
            &PotentialModel::StandardEckart { v1: 0.4, v2: 0.3, alpha: 0.5 },
            n,
            &d,
            1.0,
            NonRelMode::SchrodingerV,
        )
        .unwrap();
        assert!((a - b).abs() < 1e-13, "n = {n}: {a} vs {b}");
    }
}
