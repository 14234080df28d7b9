//! Parametric Nikiforov-Uvarov engine.
//!
//! The canonical hypergeometric-type equation is
//!
//! ```text
//! [z(1 - c3 z)]^2 u'' + z(1 - c3 z)(c1 - c2 z) u' + (-A z^2 + B z - C) u = 0
//! ```
//!
//! From (c1, c2, c3, A, B, C) the recipe produces the derived constants
//! c4..c13 and k_minus, the quantization condition, and the exponents of the
//! factored solution u(z) = N z^{c12} (1 - c3 z)^{c13} P_n^{(c10,c11)}(1 - 2 c3 z).

use crate::error::{KgError, Result};

/// The six inputs of the canonical equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricCoefficients {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// The derived NU parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NUDerived {
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
    pub c7: f64,
    pub c8: f64,
    pub c9: f64,
    pub c10: f64,
    pub c11: f64,
    pub c12: f64,
    pub c13: f64,
    pub k_minus: f64,
}

/// Derive c4..c13 and k_minus. Fails with a complex-branch error when c8 < 0
/// or c9 < 0 (real square roots required); the spectrum scanner treats that as
/// an "outside the physical window" marker rather than complexifying.
pub fn derive_parameters(h: &HypergeometricCoefficients) -> Result<NUDerived> {
    if h.c3 == 0.0 {
        return Err(KgError::ZeroC3);
    }
    let c4 = 0.5 * (1.0 - h.c1);
    let c5 = 0.5 * (h.c2 - 2.0 * h.c3);
    let c6 = c5 * c5 + h.a;
    let c7 = 2.0 * c4 * c5 - h.b;
    let c8 = c4 * c4 + h.c;
    let c9 = h.c3 * (c7 + h.c3 * c8) + c6;
    if c8 < 0.0 || c9 < 0.0 {
        return Err(KgError::ComplexBranch { c8, c9 });
    }
    let sqrt_c8 = c8.sqrt();
    let sqrt_c9 = c9.sqrt();
    let k_minus = -(c7 + 2.0 * h.c3 * c8) - 2.0 * (c8 * c9).sqrt();
    let c10 = h.c1 + 2.0 * c4 + 2.0 * sqrt_c8 - 1.0;
    let c11 = 1.0 - h.c1 - 2.0 * c4 + 2.0 / h.c3 * sqrt_c9;
    let c12 = c4 + sqrt_c8;
    let c13 = -c4 + (sqrt_c9 - c5) / h.c3;
    Ok(NUDerived {
        c4,
        c5,
        c6,
        c7,
        c8,
        c9,
        c10,
        c11,
        c12,
        c13,
        k_minus,
    })
}

/// The discarded k_plus branch, exposed for documentation only: the paper
/// commits to k_minus and every mapping in this crate uses it.
pub fn k_plus(h: &HypergeometricCoefficients) -> Result<f64> {
    let d = derive_parameters(h)?;
    Ok(-(d.c7 + 2.0 * h.c3 * d.c8) + 2.0 * (d.c8 * d.c9).sqrt())
}

/// Left-hand side of the quantization condition; zero iff the energy buried in
/// the coefficients satisfies the bound-state condition for level n.
pub fn quantization_residual(h: &HypergeometricCoefficients, n: usize) -> Result<f64> {
    let d = derive_parameters(h)?;
    let nf = n as f64;
    Ok((h.c2 - h.c3) * nf + h.c3 * nf * nf - (2.0 * nf + 1.0) * d.c5
        + (2.0 * nf + 1.0) * (d.c9.sqrt() + h.c3 * d.c8.sqrt())
        + d.c7
        + 2.0 * h.c3 * d.c8
        + 2.0 * (d.c8 * d.c9).sqrt())
}

/// tau'(z) = -2 c3 - 2 (sqrt(c9) + c3 sqrt(c8)); a negative value is required
/// for a genuine NU bound state and is reported as an admissibility
/// diagnostic.
pub fn tau_prime(d: &NUDerived, c3: f64) -> f64 {
    -2.0 * c3 - 2.0 * (d.c9.sqrt() + c3 * d.c8.sqrt())
}

/// Exponent packaging: `rho` carries the weight-function exponents (c10, c11),
/// which double as the Jacobi parameters of y_n, and `phi` the prefactor
/// exponents (c12, c13) of u(z) = N z^{c12} (1 - c3 z)^{c13} P_n^{(c10,c11)}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolutionExponents {
    pub rho: (f64, f64),
    pub phi: (f64, f64),
}

pub fn solution_exponents(d: &NUDerived) -> SolutionExponents {
    SolutionExponents {
        rho: (d.c10, d.c11),
        phi: (d.c12, d.c13),
    }
}
