//! Shared error taxonomy for the solver library.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KgError {
    /// Gamma function evaluated at a non-positive integer.
    #[error("gamma function pole at x = {0}")]
    GammaPole(f64),

    /// A retained-term denominator Pochhammer of the terminating 2F1 vanishes.
    #[error("hypergeometric parameter c = {c} hits a vanishing Pochhammer within the first {n} terms")]
    PochhammerPole { c: f64, n: usize },

    /// c8 or c9 of the NU recipe is negative: the candidate energy lies outside
    /// the real-parameter region of the quantization condition.
    #[error("complex NU branch: c8 = {c8}, c9 = {c9}")]
    ComplexBranch { c8: f64, c9: f64 },

    /// The NU recipe divides by c3.
    #[error("c3 must be nonzero in the canonical equation")]
    ZeroC3,

    /// Potential evaluated outside its domain.
    #[error("argument r = {r} outside the potential domain: {reason}")]
    Domain { r: f64, reason: String },

    /// Trial energy outside the bound-state window |E| < M.
    #[error("energy {e} outside the window |E| < {m}")]
    EnergyWindow { e: f64, m: f64 },

    /// Rosen-Morse-family energy equations are exact only for s-waves.
    #[error("model solved only for s-waves (l = 0, D = 3); got l = {l}, D = {d}")]
    SWaveOnly { l: usize, d: usize },

    /// Model/mode combination without a closed form or effective equation.
    #[error("unsupported model/mode combination: {0}")]
    Unsupported(String),

    /// Woods-Saxon non-relativistic spectrum excludes n = 0.
    #[error("Woods-Saxon non-relativistic level requires n >= 1")]
    WoodsSaxonNZero,

    /// A state whose decay flags fail cannot be normalized.
    #[error("non-normalizable state: {0}")]
    NonNormalizable(String),

    /// Shooting mismatch has no sign change on the supplied bracket.
    #[error("no sign change of the shooting mismatch on ({lo}, {hi})")]
    NoSignChange { lo: f64, hi: f64 },

    /// Invalid root index into a spectrum list.
    #[error("root index {index} out of range ({count} roots found)")]
    RootIndex { index: usize, count: usize },
}

pub type Result<T> = std::result::Result<T, KgError>;
