//! Potential-model catalog, D-dimensional bookkeeping, the centrifugal
//! approximation, and the mapping from (model, trial energy, sign branch) to
//! the canonical hypergeometric coefficients.

use crate::error::{KgError, Result};
use crate::nu::HypergeometricCoefficients;

/// The equally mixed branch S(r) = sign * V(r).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignBranch {
    Plus,
    Minus,
}

impl SignBranch {
    pub fn value(self) -> f64 {
        match self {
            SignBranch::Plus => 1.0,
            SignBranch::Minus => -1.0,
        }
    }
}

impl std::fmt::Display for SignBranch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SignBranch::Plus => write!(f, "+1"),
            SignBranch::Minus => write!(f, "-1"),
        }
    }
}

/// The seven potential models. Couplings are energies, `alpha` an inverse
/// length, `q` a dimensionless deformation (restricted to q > 0; the q < 0
/// branch moves the 1 - q e^{-2 alpha r} singularity off the bound-state
/// domain and is excluded).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PotentialModel {
    /// V = 4 V1 z/(1-qz)^2 - V2/(1-qz) - V3 qz/(1-qz), z = e^{-2 alpha r}.
    EckartType { v1: f64, v2: f64, v3: f64, q: f64, alpha: f64 },
    /// V = 4 V1 z/(1+qz)^2 - V2/(1+qz) + V3 qz/(1+qz), z = e^{-2 alpha r}.
    RosenMorseType { v1: f64, v2: f64, v3: f64, q: f64, alpha: f64 },
    /// Eckart type with q = 1, 2 alpha -> alpha, V1 = V2 = 0, V3 = V0:
    /// V = -V0 e^{-alpha r}/(1 - e^{-alpha r}).
    Hulthen { v0: f64, alpha: f64 },
    /// Rosen-Morse type with q = 1, 2 alpha -> alpha, V1 = V2 = 0, V3 = -V0:
    /// V = -V0/(1 + e^{alpha r}) ... the usual Woods-Saxon well.
    WoodsSaxon { v0: f64, alpha: f64 },
    /// V = V1 csch^2(alpha r) - V2 coth(alpha r)  (q = 1).
    StandardEckart { v1: f64, v2: f64, alpha: f64 },
    /// V = -V1 sech_q^2(alpha r) + V2 tanh_q(alpha r): the Rosen-Morse type
    /// under V1 -> -V1, V2 -> -V2 (and the Woods-Saxon slot following V2),
    /// generalized to arbitrary q > 0.
    RosenMorseWell { v1: f64, v2: f64, q: f64, alpha: f64 },
    /// PT-symmetric trigonometric Rosen-Morse well on x in (0, pi/alpha):
    /// V = V1 csc^2(alpha x) - V2 cot(alpha x) with V1 = a(a+1), V2 = 2b.
    TrigRosenMorse { a: f64, b: f64, alpha: f64 },
}

/// Which canonical family a model maps onto.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// z-equation in (1 - q z); half-line boundary u(0) = 0.
    EckartLike,
    /// z-equation in (1 + q z); conventionally a full-line problem.
    RosenMorseLike,
    /// Trigonometric well; own energy equation, complex exponents.
    Trigonometric,
}

/// A model reduced to the family slot variables used by every closed form:
/// the effective (V1, V2, V3, q, alpha) of the family-defining potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalSlots {
    pub family: Family,
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
    pub q: f64,
    pub alpha: f64,
}

impl PotentialModel {
    /// Reduce the model to family slot variables. The special-case models are
    /// parameter substitutions into the two family-defining potentials; the
    /// trigonometric well keeps its own couplings.
    pub fn canonical(&self) -> CanonicalSlots {
        match *self {
            PotentialModel::EckartType { v1, v2, v3, q, alpha } => CanonicalSlots {
                family: Family::EckartLike,
                v1,
                v2,
                v3,
                q,
                alpha,
            },
            PotentialModel::Hulthen { v0, alpha } => CanonicalSlots {
                family: Family::EckartLike,
                v1: 0.0,
                v2: 0.0,
                v3: v0,
                q: 1.0,
                alpha: 0.5 * alpha,
            },
            PotentialModel::StandardEckart { v1, v2, alpha } => CanonicalSlots {
                family: Family::EckartLike,
                v1,
                v2,
                v3: v2,
                q: 1.0,
                alpha,
            },
            PotentialModel::RosenMorseType { v1, v2, v3, q, alpha } => CanonicalSlots {
                family: Family::RosenMorseLike,
                v1,
                v2,
                v3,
                q,
                alpha,
            },
            PotentialModel::WoodsSaxon { v0, alpha } => CanonicalSlots {
                family: Family::RosenMorseLike,
                v1: 0.0,
                v2: 0.0,
                v3: -v0,
                q: 1.0,
                alpha: 0.5 * alpha,
            },
            PotentialModel::RosenMorseWell { v1, v2, q, alpha } => CanonicalSlots {
                family: Family::RosenMorseLike,
                v1: -v1,
                v2: -v2,
                v3: -v2,
                q,
                alpha,
            },
            PotentialModel::TrigRosenMorse { a, b, alpha } => CanonicalSlots {
                family: Family::Trigonometric,
                v1: a * (a + 1.0),
                v2: 2.0 * b,
                v3: 0.0,
                q: 1.0,
                alpha,
            },
        }
    }

    /// True when every coupling vanishes (free particle).
    pub fn is_free(&self) -> bool {
        let s = self.canonical();
        s.v1 == 0.0 && s.v2 == 0.0 && s.v3 == 0.0
    }
}

/// Dimensional bookkeeping: script M = D + 2l, l' = (script M - 3)/2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DimensionalNumbers {
    pub d: usize,
    pub l: usize,
    pub script_m: usize,
}

impl DimensionalNumbers {
    pub fn l_prime(&self) -> f64 {
        (self.script_m as f64 - 3.0) / 2.0
    }

    /// l'(l'+1) = [(script M - 2)^2 - 1]/4.
    pub fn centrifugal_strength(&self) -> f64 {
        let m = self.script_m as f64;
        ((m - 2.0) * (m - 2.0) - 1.0) / 4.0
    }
}

pub fn dimensional_numbers(d: usize, l: usize) -> DimensionalNumbers {
    DimensionalNumbers {
        d,
        l,
        script_m: d + 2 * l,
    }
}

/// The energy-dependent dimensionless couplings of the canonical reduction.
/// `q_scale` is Q = 2 hbar c alpha (the family's effective alpha).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CouplingSet {
    pub epsilon: f64,
    pub beta: f64,
    pub gamma: f64,
    pub lambda: f64,
    pub q_scale: f64,
}

/// V(r) for the given model.
pub fn evaluate_potential(m: &PotentialModel, r: f64) -> Result<f64> {
    if r <= 0.0 {
        return Err(KgError::Domain {
            r,
            reason: "potential defined for r > 0".into(),
        });
    }
    let s = m.canonical();
    match s.family {
        Family::EckartLike => {
            let z = (-2.0 * s.alpha * r).exp();
            let d = 1.0 - s.q * z;
            Ok(4.0 * s.v1 * z / (d * d) - s.v2 / d - s.v3 * s.q * z / d)
        }
        Family::RosenMorseLike => {
            let z = (-2.0 * s.alpha * r).exp();
            let d = 1.0 + s.q * z;
            Ok(4.0 * s.v1 * z / (d * d) - s.v2 / d + s.v3 * s.q * z / d)
        }
        Family::Trigonometric => {
            let ax = s.alpha * r;
            if ax >= std::f64::consts::PI {
                return Err(KgError::Domain {
                    r,
                    reason: "trigonometric well defined on 0 < alpha x < pi".into(),
                });
            }
            let sn = ax.sin();
            Ok(s.v1 / (sn * sn) - s.v2 * ax.cos() / sn)
        }
    }
}

/// The exponential replacement for l'(l'+1)/r^2:
/// 4 alpha^2 l'(l'+1) e^{-2 alpha r} / (1 - q e^{-2 alpha r})^2.
pub fn centrifugal_approximation(
    dn: &DimensionalNumbers,
    q: f64,
    alpha: f64,
    r: f64,
) -> Result<f64> {
    if r <= 0.0 {
        return Err(KgError::Domain {
            r,
            reason: "centrifugal term defined for r > 0".into(),
        });
    }
    let z = (-2.0 * alpha * r).exp();
    let d = 1.0 - q * z;
    if d == 0.0 {
        return Err(KgError::Domain {
            r,
            reason: "singular point q e^{-2 alpha r} = 1".into(),
        });
    }
    Ok(4.0 * alpha * alpha * dn.centrifugal_strength() * z / (d * d))
}

/// Build the dimensionless couplings for a trial energy on branch
/// S = sign * V. Rosen-Morse-family models get the tilded (s-wave) set: the
/// l' term is dropped from beta.
pub fn couplings(
    m: &PotentialModel,
    e: f64,
    sign: SignBranch,
    mass: f64,
    dn: &DimensionalNumbers,
    hbar_c: f64,
) -> Result<CouplingSet> {
    let s = m.canonical();
    if matches!(s.family, Family::Trigonometric) {
        return Err(KgError::Unsupported(
            "couplings of the trigonometric well are complex; use its energy equation directly"
                .into(),
        ));
    }
    if e.abs() > mass {
        return Err(KgError::EnergyWindow { e, m: mass });
    }
    let q_scale = 2.0 * hbar_c * s.alpha;
    let q2 = q_scale * q_scale;
    let shifted = e + sign.value() * mass;
    let l_term = match s.family {
        Family::EckartLike => dn.centrifugal_strength(),
        _ => 0.0,
    };
    Ok(CouplingSet {
        epsilon: (mass * mass - e * e).max(0.0).sqrt() / q_scale,
        beta: 8.0 * shifted * s.v1 / q2 + l_term,
        gamma: 2.0 * shifted * s.v2 / q2,
        lambda: 2.0 * shifted * s.v3 / q2,
        q_scale,
    })
}

/// Map the couplings onto the canonical hypergeometric coefficients.
pub fn to_hypergeometric(
    m: &PotentialModel,
    cs: &CouplingSet,
    family: Family,
) -> HypergeometricCoefficients {
    let q = m.canonical().q;
    let e2 = cs.epsilon * cs.epsilon;
    match family {
        Family::EckartLike | Family::Trigonometric => HypergeometricCoefficients {
            c1: 1.0,
            c2: q,
            c3: q,
            a: q * q * (e2 + cs.lambda),
            b: q * (2.0 * e2 + cs.lambda - cs.gamma - cs.beta / q),
            c: e2 - cs.gamma,
        },
        Family::RosenMorseLike => HypergeometricCoefficients {
            c1: 1.0,
            c2: -q,
            c3: -q,
            a: q * q * (e2 + cs.lambda),
            b: -q * (2.0 * e2 + cs.beta / q + cs.lambda - cs.gamma),
            c: e2 - cs.gamma,
        },
    }
}

/// Small-x expansion of the trigonometric well:
/// -V2/(alpha x) + V1/(alpha x)^2, optionally plus the linear correction
/// V1/3 + V2 x / 3.
pub fn trm_small_x_expansion(a: f64, b: f64, alpha: f64, x: f64, correction: bool) -> Result<f64> {
    if x <= 0.0 {
        return Err(KgError::Domain {
            r: x,
            reason: "expansion defined for x > 0".into(),
        });
    }
    let v1 = a * (a + 1.0);
    let v2 = 2.0 * b;
    let ax = alpha * x;
    let mut v = -v2 / ax + v1 / (ax * ax);
    if correction {
        v += v1 / 3.0 + v2 * x / 3.0;
    }
    Ok(v)
}
