use kgbound::error::KgError;
use kgbound::potentials::{PotentialModel, SignBranch};
use kgbound::spectrum::{dn, find_bound_states, BoundState, ScanConfig};
use kgbound::wavefn::{
    count_nodes, normalize, ode_residual, radial_r, radial_u, radial_u_hypergeometric,
    GridConfig, OdeGrid,
};

/// Deeply screened well with three fully admissible plus-branch levels.
fn deep_well() -> PotentialModel {
    PotentialModel::Hulthen { v0: 0.5, alpha: 0.1 }
}

fn genuine_state(m: &PotentialModel, n: usize) -> BoundState {
    let scan = ScanConfig::for_mass(1.0);
    let states = find_bound_states(m, n, &dn(3, 0), &[SignBranch::Plus], 1.0, &scan).unwrap();
    states
        .into_iter()
        .find(|s| s.flags.p_positive && s.flags.w_positive)
        .expect("admissible root")
}

#[test]
fn ground_state_closed_form() {
    // n = 0: the Jacobi factor is 1, so u = z^p (1 - z)^w exactly.
    let m = deep_well();
    let b = genuine_state(&m, 0);
    let s = m.canonical();
    for i in 1..=50 {
        let r = 0.4 * i as f64;
        let z = (-2.0 * s.alpha * r).exp();
        let expected = z.powf(b.exponents.p) * (1.0 - z).powf(b.exponents.w);
        let u = radial_u(&b, &m, r).unwrap();
        assert!((u - expected).abs() <= 1e-13 * expected.abs().max(1e-300), "r = {r}");
    }
}

#[test]
fn decay_and_boundary() {
    let m = deep_well();
    let b = genuine_state(&m, 0);
    let a = m.canonical().alpha;
    assert!(b.exponents.p >= 1.0);
    let far = radial_u(&b, &m, 20.0 / a).unwrap().abs();
    let mid = radial_u(&b, &m, 1.0 / a).unwrap().abs();
    assert!(far < 1e-6 * mid, "far = {far}, mid = {mid}");
    // w > 0 forces u -> 0 at the origin.
    assert!(b.exponents.w > 0.0);
    let near = radial_u(&b, &m, 1e-12).unwrap().abs();
    assert!(near < 1e-6 * mid, "near = {near}");
}

#[test]
fn half_line_domain_enforced() {
    let m = deep_well();
    let b = genuine_state(&m, 0);
    assert!(matches!(
        radial_u(&b, &m, -1.0),
        Err(KgError::Domain { .. })
    ));
    assert!(matches!(radial_u(&b, &m, 0.0), Err(KgError::Domain { .. })));
}

#[test]
fn hypergeometric_cross_check() {
    let m = deep_well();
    for n in 0..3usize {
        let b = genuine_state(&m, n);
        for i in 1..=60 {
            let r = 0.35 * i as f64;
            let u = radial_u(&b, &m, r).unwrap();
            let v = radial_u_hypergeometric(&b, &m, r).unwrap();
            let scale = u.abs().max(v.abs()).max(1e-280);
            assert!((u - v).abs() / scale < 1e-10, "n = {n}, r = {r}: {u} vs {v}");
        }
    }
}

#[test]
fn dimension_prefactor() {
    let m = deep_well();
    let b = genuine_state(&m, 0);
    let r = 3.7;
    let u = radial_u(&b, &m, r).unwrap();
    assert_eq!(radial_r(&b, &m, r, 1).unwrap(), u);
    assert!((radial_r(&b, &m, r, 3).unwrap() - u / r).abs() < 1e-15 * u.abs());
}

#[test]
fn normalization_is_stable_and_positive() {
    let m = deep_well();
    let b = genuine_state(&m, 1);
    let coarse = normalize(&b, &m, &GridConfig::default()).unwrap();
    let fine = normalize(
        &b,
        &m,
        &GridConfig { panels: 1024, ..GridConfig::default() },
    )
    .unwrap();
    assert!(coarse.normalization_constant > 0.0);
    let rel = (coarse.normalization_constant - fine.normalization_constant).abs()
        / fine.normalization_constant;
    assert!(rel < 1e-8, "panel doubling moved the constant by {rel}");
    // The sample really is normalized: midpoint-rule cross-estimate of the
    // u^2 integral over the sampled grid is close to 1.
    let dr = coarse.grid[1] - coarse.grid[0];
    let total: f64 = coarse.u_values.iter().map(|u| u * u * dr).sum();
    assert!((total - 1.0).abs() < 1e-3, "sampled norm {total}");
}

#[test]
fn growing_solution_is_rejected() {
    // An inadmissible root (p < 0) cannot be normalized.
    let m = PotentialModel::RosenMorseWell { v1: 1.0, v2: -1.0, q: 1.0, alpha: 1.0 };
    let scan = ScanConfig::for_mass(4.0);
    let states = find_bound_states(
        &m,
        1,
        &dn(3, 0),
        &[SignBranch::Plus, SignBranch::Minus],
        4.0,
        &scan,
    )
    .unwrap();
    let bad = states.iter().find(|s| !s.flags.p_positive).expect("p < 0 root");
    assert!(matches!(
        normalize(bad, &m, &GridConfig::default()),
        Err(KgError::NonNormalizable(_))
    ));
}

#[test]
fn node_counts_match_quantum_number() {
    let m = deep_well();
    for n in [0usize, 1, 2] {
        let b = genuine_state(&m, n);
        let sample = normalize(&b, &m, &GridConfig::default()).unwrap();
        assert_eq!(count_nodes(&sample), n, "n = {n}");
        assert_eq!(sample.node_count, n);
    }
}

#[test]
fn closed_forms_satisfy_the_radial_equation() {
    // Scale-free ODE residual below 1e-6 for genuine and inadmissible roots
    // alike: the closed form solves the approximated equation regardless of
    // normalizability.
    let m = deep_well();
    for n in 0..3usize {
        let b = genuine_state(&m, n);
        let res = ode_residual(&b, &m, &OdeGrid::default_for(&m));
        assert!(res < 1e-6, "n = {n}: residual {res}");
    }
    let rm = PotentialModel::RosenMorseWell { v1: 1.0, v2: -1.0, q: 1.0, alpha: 1.0 };
    let scan = ScanConfig::for_mass(4.0);
    let states = find_bound_states(
        &rm,
        1,
        &dn(3, 0),
        &[SignBranch::Plus, SignBranch::Minus],
        4.0,
        &scan,
    )
    .unwrap();
    assert!(!states.is_empty());
    for s in &states {
        let res = ode_residual(s, &rm, &OdeGrid::default_for(&rm));
        assert!(res < 1e-6, "E = {}: residual {res}", s.energy);
    }
}

#[test]
fn trigonometric_states_are_not_sampled() {
    let m = deep_well();
    let b = genuine_state(&m, 0);
    let t = PotentialModel::TrigRosenMorse { a: 0.5, b: 17.0, alpha: 1.0 };
    assert!(matches!(radial_u(&b, &t, 1.0), Err(KgError::Unsupported(_))));
    assert!(matches!(
        radial_u_hypergeometric(&b, &t, 1.0),
        Err(KgError::Unsupported(_))
    ));
}
