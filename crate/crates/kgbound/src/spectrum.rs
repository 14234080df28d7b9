//! Bound-state energy location: the transcendental energy residuals of the
//! potential families, a scan-and-bisect root finder over the physical window
//! |E| < M, per-root exponents and admissibility flags, and the closed-form
//! non-relativistic spectra.

use crate::error::{KgError, Result};
use crate::nu;
use crate::potentials::{
    couplings, dimensional_numbers, to_hypergeometric, DimensionalNumbers, Family,
    PotentialModel, SignBranch,
};

/// Residual value of the energy equation at a trial E. The square roots inside
/// the energy-dependent exponent w(E) can turn complex; such energies are
/// tagged rather than silently evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Residual {
    Value(f64),
    ComplexWindow,
}

/// Root-scan parameters. The window is E in (-M(1-eta), M(1-eta)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanConfig {
    pub grid: usize,
    pub tol_root: f64,
    pub eta: f64,
}

impl ScanConfig {
    /// Defaults from the artifact contract: 2048-point grid, bisection to
    /// 1e-10 * M, window shrink 1e-9.
    pub fn for_mass(mass: f64) -> Self {
        Self {
            grid: 2048,
            tol_root: 1e-10 * mass,
            eta: 1e-9,
        }
    }
}

/// Exponents of the factored closed-form solution
/// u = z^p (1 -/+ q z)^w P_n^{(2p, 2w-1)}.
///
/// `p` is stored *signed*: it is the z-exponent actually carried by the exact
/// solution of the approximated radial equation at this root,
/// p = [(gamma + lambda)/(n + w) - (n + w)] / 2, whose magnitude equals
/// sqrt(eps^2 - gamma) whenever the residual vanishes. At roots where p < 0
/// the closed form grows as r -> infinity and the state is not normalizable;
/// the admissibility flags record this instead of filtering the root.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveExponents {
    pub p: f64,
    pub w: f64,
    pub jacobi_alpha: f64,
    pub jacobi_beta: f64,
}

/// Per-root diagnostics, reported and never filtered.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdmissibilityFlags {
    /// Decay exponent at r -> infinity is positive (see [`WaveExponents::p`]).
    pub p_positive: bool,
    /// (1 -/+ q z)-exponent positive (half-line boundary u(0) = 0 holds).
    pub w_positive: bool,
    /// tau'(z) < 0 at this energy (NU requirement).
    pub tau_prime_negative: bool,
    /// Jacobi parameters inside the classical range (-1, inf).
    pub classical_jacobi_range: bool,
    /// u -> 0 as x -> -infinity (full-line families): p + w + n < 0.
    pub full_line_decay: bool,
}

impl AdmissibilityFlags {
    /// Compact 5-digit form in field order, for CSV cells.
    pub fn bits(&self) -> String {
        format!(
            "{}{}{}{}{}",
            self.p_positive as u8,
            self.w_positive as u8,
            self.tau_prime_negative as u8,
            self.classical_jacobi_range as u8,
            self.full_line_decay as u8
        )
    }
}

/// A located eigenvalue of the transcendental energy equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub n: usize,
    pub l: usize,
    pub d: usize,
    pub sign_branch: SignBranch,
    pub energy: f64,
    pub mass: f64,
    pub exponents: WaveExponents,
    pub flags: AdmissibilityFlags,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParticleLabel {
    Particle,
    Antiparticle,
}

/// Labels a root by the sign of its energy; E = 0 counts as particle by
/// convention. Purely a reporting label.
pub fn classify_branch(b: &BoundState) -> ParticleLabel {
    if b.energy >= 0.0 {
        ParticleLabel::Particle
    } else {
        ParticleLabel::Antiparticle
    }
}

/// Non-relativistic convention: Schrodinger equation for the potential V
/// itself, or for the equally-mixed sum Sigma = V + S = 2V.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonRelMode {
    SchrodingerV,
    KgLimit2V,
}

/// The energy-dependent exponent w(E) of the family energy equations.
/// Returns None when the square root argument is negative (complex window).
fn family_w(
    m: &PotentialModel,
    dn: &DimensionalNumbers,
    sign: SignBranch,
    mass: f64,
    e: f64,
) -> Option<f64> {
    let s = m.canonical();
    let t2 = s.alpha * s.alpha;
    let shifted = e + sign.value() * mass;
    let arg = match s.family {
        Family::EckartLike => {
            1.0 + 4.0 * dn.centrifugal_strength() / s.q + 8.0 * shifted * s.v1 / (s.q * t2)
        }
        Family::RosenMorseLike => 1.0 - 8.0 * shifted * s.v1 / (s.q * t2),
        Family::Trigonometric => {
            let lp = dn.l_prime();
            (1.0 + 2.0 * lp).powi(2) + 8.0 * shifted * s.v1 / t2
        }
    };
    if arg < 0.0 {
        return None;
    }
    Some(match s.family {
        Family::RosenMorseLike => 0.5 * (1.0 - arg.sqrt()),
        _ => 0.5 * (1.0 + arg.sqrt()),
    })
}

/// LHS - RHS of the model's energy equation at trial energy `e`, with every
/// energy-dependent exponent evaluated per the family closed form.
///
/// Rosen-Morse-family models are exact only for s-waves (l = 0, D = 3).
pub fn energy_residual(
    m: &PotentialModel,
    n: usize,
    dn: &DimensionalNumbers,
    sign: SignBranch,
    mass: f64,
    e: f64,
) -> Result<Residual> {
    if e.abs() >= mass {
        return Err(KgError::EnergyWindow { e, m: mass });
    }
    let s = m.canonical();
    if matches!(s.family, Family::RosenMorseLike) && (dn.l != 0 || dn.d != 3) {
        return Err(KgError::SWaveOnly { l: dn.l, d: dn.d });
    }
    let w = match family_w(m, dn, sign, mass, e) {
        Some(w) => w,
        None => return Ok(Residual::ComplexWindow),
    };
    let nw = n as f64 + w;
    let t2 = s.alpha * s.alpha;
    let shifted = e + sign.value() * mass;
    let m2e2 = mass * mass - e * e;
    let rhs = match s.family {
        Family::Trigonometric => {
            shifted * shifted * s.v2 * s.v2 / (t2 * nw * nw) - t2 * nw * nw
        }
        _ => {
            t2 * nw * nw
                + shifted * shifted * (s.v2 + s.v3) * (s.v2 + s.v3) / (4.0 * t2 * nw * nw)
                + shifted * (s.v2 - s.v3)
        }
    };
    Ok(Residual::Value(m2e2 - rhs))
}

/// Exponents and admissibility flags for a root at energy `e`.
///
/// For the trigonometric well the z-exponent is complex and `p` (with the
/// Jacobi parameters) is reported as NaN; its wavefunctions are out of scope.
pub fn exponents_at(
    m: &PotentialModel,
    n: usize,
    dn: &DimensionalNumbers,
    sign: SignBranch,
    mass: f64,
    e: f64,
) -> (WaveExponents, AdmissibilityFlags) {
    let s = m.canonical();
    let w = family_w(m, dn, sign, mass, e).unwrap_or(f64::NAN);
    let nw = n as f64 + w;
    let p = match s.family {
        Family::Trigonometric => f64::NAN,
        _ => {
            let shifted = e + sign.value() * mass;
            let t2 = s.alpha * s.alpha;
            0.5 * (shifted * (s.v2 + s.v3) / (2.0 * t2 * nw) - nw)
        }
    };
    let exps = WaveExponents {
        p,
        w,
        jacobi_alpha: 2.0 * p,
        jacobi_beta: 2.0 * w - 1.0,
    };
    let tau_prime_negative = match couplings(m, e, sign, mass, dn, 1.0) {
        Ok(cs) => {
            let h = to_hypergeometric(m, &cs, s.family);
            match nu::derive_parameters(&h) {
                Ok(d) => nu::tau_prime(&d, h.c3) < 0.0,
                Err(_) => false,
            }
        }
        Err(_) => false,
    };
    let flags = AdmissibilityFlags {
        p_positive: p > 0.0,
        w_positive: w > 0.0,
        tau_prime_negative,
        classical_jacobi_range: exps.jacobi_alpha > -1.0 && exps.jacobi_beta > -1.0,
        full_line_decay: p + w + (n as f64) < 0.0,
    };
    (exps, flags)
}

/// Scan the physical window on each requested branch, bisect every sign
/// change of the residual, and return all real roots (admissibility reported,
/// never filtered), sorted descending in energy.
///
/// Sign changes produced by poles of the residual (n + w passing through
/// zero) are rejected by re-evaluating the residual at the refined root.
/// An identically-zero potential returns an empty list outright: the squared
/// energy equation retains spurious sign changes there, but a free particle
/// has no bound states.
pub fn find_bound_states(
    m: &PotentialModel,
    n: usize,
    dn: &DimensionalNumbers,
    branches: &[SignBranch],
    mass: f64,
    scan: &ScanConfig,
) -> Result<Vec<BoundState>> {
    if m.is_free() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let lo = -mass * (1.0 - scan.eta);
    let hi = mass * (1.0 - scan.eta);
    let grid = scan.grid.max(64);
    for &sign in branches {
        let mut prev: Option<(f64, f64)> = None;
        for i in 0..grid {
            let e = lo + (hi - lo) * i as f64 / (grid - 1) as f64;
            let res = energy_residual(m, n, dn, sign, mass, e)?;
            match res {
                Residual::ComplexWindow => prev = None,
                Residual::Value(f) => {
                    if let Some((pe, pf)) = prev {
                        if pf * f < 0.0 {
                            if let Some(root) =
                                bisect(m, n, dn, sign, mass, pe, e, scan.tol_root)
                            {
                                let (exps, flags) = exponents_at(m, n, dn, sign, mass, root);
                                out.push(BoundState {
                                    n,
                                    l: dn.l,
                                    d: dn.d,
                                    sign_branch: sign,
                                    energy: root,
                                    mass,
                                    exponents: exps,
                                    flags,
                                });
                            }
                        }
                    }
                    prev = Some((e, f));
                }
            }
        }
    }
    out.sort_by(|a, b| b.energy.partial_cmp(&a.energy).unwrap());
    Ok(out)
}

/// Bisect one bracket; returns None when the refined point is not a genuine
/// zero of the residual (pole rejection, |f| >= tol_root).
fn bisect(
    m: &PotentialModel,
    n: usize,
    dn: &DimensionalNumbers,
    sign: SignBranch,
    mass: f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> Option<f64> {
    let value = |e: f64| -> Option<f64> {
        match energy_residual(m, n, dn, sign, mass, e) {
            Ok(Residual::Value(f)) => Some(f),
            _ => None,
        }
    };
    let mut flo = value(lo)?;
    for _ in 0..200 {
        if hi - lo < tol * 1e-2 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fmid = value(mid)?;
        if flo * fmid <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    let root = 0.5 * (lo + hi);
    let f = value(root)?;
    if f.abs() < tol {
        Some(root)
    } else {
        None
    }
}

/// Closed-form non-relativistic eigenvalues.
///
/// * Eckart type with V2 = V3, `SchrodingerV`: E = -(1/2M)[a^2 (n+w1)^2 +
///   M^2 V2^2 / (a^2 (n+w1)^2)], w1 = (1 + sqrt((1+2l')^2 + 8 M V1/a^2))/2.
/// * Standard Eckart, `KgLimit2V`: same shape with the couplings doubled
///   (16 M V1 inside w2 and 4 M^2 V2^2 in the numerator). The printed source
///   formula carries 2 M^2 V2^2, which is inconsistent with its own
///   V -> 2V substitution; the doubled coefficient is used here.
/// * Rosen-Morse well, `KgLimit2V` (s-wave): same shape with
///   delta2 = (1 - sqrt(1 + 16 M V1/a^2))/2.
/// * Woods-Saxon, `KgLimit2V`: E = -(1/2M)[n a/2 + 2 M V0/(a n)]^2 for
///   n >= 1; the bracket is squared (the unsquared printed form is
///   dimensionally inconsistent with the relativistic equation it limits).
pub fn nonrelativistic_energy(
    m: &PotentialModel,
    n: usize,
    dn: &DimensionalNumbers,
    mass: f64,
    mode: NonRelMode,
) -> Result<f64> {
    let nf = n as f64;
    let lp = dn.l_prime();
    match (*m, mode) {
        (PotentialModel::EckartType { v1, v2, v3, alpha, .. }, NonRelMode::SchrodingerV) => {
            if v2 != v3 {
                return Err(KgError::Unsupported(
                    "non-relativistic Eckart closed form needs V2 = V3".into(),
                ));
            }
            let a2 = alpha * alpha;
            let w1 = 0.5 * (1.0 + ((1.0 + 2.0 * lp).powi(2) + 8.0 * mass * v1 / a2).sqrt());
            let nw = nf + w1;
            Ok(-(a2 * nw * nw + mass * mass * v2 * v2 / (a2 * nw * nw)) / (2.0 * mass))
        }
        (PotentialModel::StandardEckart { v1, v2, alpha }, NonRelMode::SchrodingerV) => {
            let a2 = alpha * alpha;
            let w1 = 0.5 * (1.0 + ((1.0 + 2.0 * lp).powi(2) + 8.0 * mass * v1 / a2).sqrt());
            let nw = nf + w1;
            Ok(-(a2 * nw * nw + mass * mass * v2 * v2 / (a2 * nw * nw)) / (2.0 * mass))
        }
        (PotentialModel::StandardEckart { v1, v2, alpha }, NonRelMode::KgLimit2V) => {
            let a2 = alpha * alpha;
            let w2 = 0.5 * (1.0 + ((1.0 + 2.0 * lp).powi(2) + 16.0 * mass * v1 / a2).sqrt());
            let nw = nf + w2;
            Ok(-(a2 * nw * nw + 4.0 * mass * mass * v2 * v2 / (a2 * nw * nw)) / (2.0 * mass))
        }
        (PotentialModel::RosenMorseWell { v1, v2, alpha, .. }, NonRelMode::KgLimit2V) => {
            if dn.l != 0 || dn.d != 3 {
                return Err(KgError::SWaveOnly { l: dn.l, d: dn.d });
            }
            let a2 = alpha * alpha;
            let d2 = 0.5 * (1.0 - (1.0 + 16.0 * mass * v1 / a2).sqrt());
            let nw = nf + d2;
            Ok(-(a2 * nw * nw + 4.0 * mass * mass * v2 * v2 / (a2 * nw * nw)) / (2.0 * mass))
        }
        (PotentialModel::WoodsSaxon { v0, alpha }, NonRelMode::KgLimit2V) => {
            if n == 0 {
                return Err(KgError::WoodsSaxonNZero);
            }
            let bracket = nf * alpha / 2.0 + 2.0 * mass * v0 / (alpha * nf);
            Ok(-bracket * bracket / (2.0 * mass))
        }
        _ => Err(KgError::Unsupported(format!(
            "no non-relativistic closed form for {m:?} in mode {mode:?}"
        ))),
    }
}

/// Convenience wrapper: dimensional numbers for the common (D, l) call sites.
pub fn dn(d: usize, l: usize) -> DimensionalNumbers {
    dimensional_numbers(d, l)
}
