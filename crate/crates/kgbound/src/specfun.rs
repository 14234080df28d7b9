//! Real-argument special functions needed by the closed-form wavefunctions:
//! the gamma function, Jacobi polynomials with arbitrary real parameters, and
//! the terminating Gauss hypergeometric series.

use crate::error::{KgError, Result};

/// Jacobi polynomial parameters. `alpha`/`beta` may fall outside the classical
/// range (-1, inf); the recurrence is still well defined there and
/// [`classical_range`](JacobiParams::classical_range) flags the violation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub degree: usize,
    pub alpha: f64,
    pub beta: f64,
}

impl JacobiParams {
    pub fn new(degree: usize, alpha: f64, beta: f64) -> Self {
        Self { degree, alpha, beta }
    }

    /// True when both parameters satisfy the classical convergence condition
    /// alpha > -1, beta > -1.
    pub fn classical_range(&self) -> bool {
        self.alpha > -1.0 && self.beta > -1.0
    }
}

// Lanczos coefficients, g = 7, 9 terms.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 1e-14 && (x - x.round()).abs() < 1e-14
}

/// Gamma function for real argument, via a fixed Lanczos approximation with the
/// reflection formula for x < 0.5. Relative error below 1e-12 on [-30, 30]
/// away from the poles.
pub fn gamma_real(x: f64) -> Result<f64> {
    if is_nonpositive_integer(x) {
        return Err(KgError::GammaPole(x));
    }
    if x < 0.5 {
        // Gamma(x) Gamma(1-x) = pi / sin(pi x)
        let s = (std::f64::consts::PI * x).sin();
        return Ok(std::f64::consts::PI / (s * gamma_real(1.0 - x)?));
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok((2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc)
}

/// Jacobi polynomial P_n^{(alpha,beta)}(x) by the standard three-term
/// recurrence; degrees 0 and 1 use the explicit formulas.
pub fn jacobi_poly(p: JacobiParams, x: f64) -> f64 {
    let (a, b) = (p.alpha, p.beta);
    if p.degree == 0 {
        return 1.0;
    }
    let p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    if p.degree == 1 {
        return p1;
    }
    let mut pm2 = 1.0;
    let mut pm1 = p1;
    for n in 2..=p.degree {
        let nf = n as f64;
        let c0 = 2.0 * nf * (nf + a + b) * (2.0 * nf + a + b - 2.0);
        let c1 = (2.0 * nf + a + b - 1.0)
            * ((2.0 * nf + a + b) * (2.0 * nf + a + b - 2.0) * x + a * a - b * b);
        let c2 = 2.0 * (nf + a - 1.0) * (nf + b - 1.0) * (2.0 * nf + a + b);
        let pn = (c1 * pm1 - c2 * pm2) / c0;
        pm2 = pm1;
        pm1 = pn;
    }
    pm1
}

/// Terminating Gauss hypergeometric series 2F1(-n, b; c; x) as the exact
/// finite sum over n + 1 terms, with compensated summation (the terms
/// alternate in sign for x near 1).
pub fn hyp2f1_terminating(n: usize, b: f64, c: f64, x: f64) -> Result<f64> {
    // Reject c that makes a retained denominator Pochhammer vanish:
    // (c)_k for k = 0..n-1 touches c, c+1, ..., c+n-1.
    if n > 0 {
        let r = c.round();
        if (c - r).abs() < 1e-12 && r <= 0.0 && r > -(n as f64) {
            return Err(KgError::PochhammerPole { c, n });
        }
    }
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    let mut comp = 0.0_f64; // Kahan compensation
    for k in 0..n {
        let kf = k as f64;
        term *= (-(n as f64) + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    Ok(sum)
}

/// Generalized binomial coefficient binom(n + alpha, n) =
/// Gamma(n + alpha + 1) / (Gamma(n + 1) Gamma(alpha + 1)).
pub fn binom_real(n: usize, alpha: f64) -> Result<f64> {
    let num = gamma_real(n as f64 + alpha + 1.0)?;
    let den = gamma_real(n as f64 + 1.0)? * gamma_real(alpha + 1.0)?;
    Ok(num / den)
}
