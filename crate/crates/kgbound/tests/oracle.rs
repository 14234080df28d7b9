use kgbound::error::KgError;
use kgbound::oracle::{
    approximation_error, build_effective, shoot_eigenvalue, shoot_scan, IntegratorConfig,
    OracleDomain, OracleMode,
};
use kgbound::potentials::{PotentialModel, SignBranch};
use kgbound::spectrum::dn;

#[test]
fn free_equation_is_constant() {
    let m = PotentialModel::Hulthen { v0: 0.0, alpha: 0.5 };
    let eq = build_effective(&m, SignBranch::Plus, &dn(3, 0), 1.0, OracleMode::RelativisticApprox)
        .unwrap();
    let e = 0.3;
    let expected = e * e - 1.0;
    for i in 1..50 {
        let r = 0.2 * i as f64;
        assert!((eq.q(r, e) - expected).abs() < 1e-14, "r = {r}");
    }
}

#[test]
fn domains_follow_the_family() {
    let d = dn(3, 0);
    let half = build_effective(
        &PotentialModel::Hulthen { v0: 0.25, alpha: 0.25 },
        SignBranch::Plus,
        &d,
        1.0,
        OracleMode::RelativisticApprox,
    )
    .unwrap();
    assert_eq!(half.domain, OracleDomain::HalfLine);
    let full = build_effective(
        &PotentialModel::WoodsSaxon { v0: 0.1, alpha: 1.0 },
        SignBranch::Plus,
        &d,
        1.0,
        OracleMode::RelativisticApprox,
    )
    .unwrap();
    assert_eq!(full.domain, OracleDomain::FullLine);
    assert!(matches!(
        build_effective(
            &PotentialModel::TrigRosenMorse { a: 0.5, b: 1.0, alpha: 1.0 },
            SignBranch::Plus,
            &d,
            1.0,
            OracleMode::NonRelV,
        ),
        Err(KgError::Unsupported(_))
    ));
}

#[test]
fn doubled_convention_matches_doubled_couplings() {
    // Q of the 2V convention for V0 equals Q of the V convention for 2 V0,
    // pointwise in (r, E).
    let d = dn(3, 0);
    let a = build_effective(
        &PotentialModel::Hulthen { v0: 0.3, alpha: 0.4 },
        SignBranch::Plus,
        &d,
        1.0,
        OracleMode::NonRel2V,
    )
    .unwrap();
    let b = build_effective(
        &PotentialModel::Hulthen { v0: 0.6, alpha: 0.4 },
        SignBranch::Plus,
        &d,
        1.0,
        OracleMode::NonRelV,
    )
    .unwrap();
    for i in 1..100 {
        let r = 0.1 * i as f64;
        for e in [-0.2, -0.05] {
            let (qa, qb) = (a.q(r, e), b.q(r, e));
            assert!((qa - qb).abs() <= 1e-13 * qa.abs().max(1.0), "r = {r}, e = {e}");
        }
    }
}

#[test]
fn screened_well_closed_root_is_reproduced() {
    // The fully admissible closed-form ground state of the screened well is a
    // true eigenvalue of the approximated effective equation.
    let m = PotentialModel::Hulthen { v0: 0.25, alpha: 0.25 };
    let eq = build_effective(&m, SignBranch::Plus, &dn(3, 0), 1.0, OracleMode::RelativisticApprox)
        .unwrap();
    let cfg = IntegratorConfig::default();
    let closed = 1.18012151082e-1;
    let shot = shoot_eigenvalue(&eq, (0.10, 0.13), &cfg).unwrap();
    let rel = (shot - closed).abs() / closed.abs();
    assert!(rel < 1e-6, "shooting {shot} vs closed {closed} (rel {rel})");
}

#[test]
fn step_halving_convergence() {
    let m = PotentialModel::Hulthen { v0: 0.25, alpha: 0.25 };
    let eq = build_effective(&m, SignBranch::Plus, &dn(3, 0), 1.0, OracleMode::RelativisticApprox)
        .unwrap();
    let alpha_eff = m.canonical().alpha;
    let coarse = IntegratorConfig { h: Some(1e-3 / alpha_eff), ..IntegratorConfig::default() };
    let fine = IntegratorConfig { h: Some(5e-4 / alpha_eff), ..IntegratorConfig::default() };
    let a = shoot_eigenvalue(&eq, (0.10, 0.13), &coarse).unwrap();
    let b = shoot_eigenvalue(&eq, (0.10, 0.13), &fine).unwrap();
    assert!((a - b).abs() < 1e-8, "h: {a}, h/2: {b}");
}

#[test]
fn free_equation_has_no_eigenvalue() {
    let m = PotentialModel::Hulthen { v0: 0.0, alpha: 0.5 };
    let eq = build_effective(&m, SignBranch::Plus, &dn(3, 0), 1.0, OracleMode::RelativisticApprox)
        .unwrap();
    assert!(matches!(
        shoot_eigenvalue(&eq, (-0.5, 0.5), &IntegratorConfig::default()),
        Err(KgError::NoSignChange { .. })
    ));
}

#[test]
fn nonrelativistic_closed_form_is_reproduced() {
    // Weakly coupled hyperbolic potential: the Schrodinger closed form for V
    // agrees with shooting on the non-relativistic effective equation.
    use kgbound::spectrum::{nonrelativistic_energy, NonRelMode};
    let m = PotentialModel::StandardEckart { v1: 0.05, v2: 0.25, alpha: 0.25 };
    let d = dn(3, 0);
    let closed = nonrelativistic_energy(&m, 0, &d, 1.0, NonRelMode::SchrodingerV).unwrap();
    let eq = build_effective(&m, SignBranch::Plus, &d, 1.0, OracleMode::NonRelV).unwrap();
    let cfg = IntegratorConfig::default();
    let eigs = shoot_scan(&eq, (1.5 * closed, 0.5 * closed), 60, &cfg);
    let nearest = eigs
        .iter()
        .copied()
        .min_by(|a, b| (a - closed).abs().partial_cmp(&(b - closed).abs()).unwrap())
        .expect("an eigenvalue near the closed form");
    assert!(
        (nearest - closed).abs() < 1e-6,
        "shooting {nearest} vs closed {closed}"
    );
}

#[test]
fn approximation_error_vanishes_for_s_waves() {
    // With l = 0 the centrifugal replacement is identically zero, so the
    // exact-centrifugal eigenvalue coincides with the closed form.
    let m = PotentialModel::Hulthen { v0: 0.25, alpha: 1.0 };
    let rows = approximation_error(
        &m,
        0,
        &dn(3, 0),
        SignBranch::Plus,
        1.0,
        &[0.25],
        &IntegratorConfig::default(),
    )
    .unwrap();
    assert_eq!(rows.len(), 1);
    assert!(rows[0].abs_error < 1e-6, "abs_error = {}", rows[0].abs_error);
    assert_eq!(rows[0].alpha, 0.25);
}
