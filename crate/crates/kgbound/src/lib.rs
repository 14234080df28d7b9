//! Bound-state spectral solver for the D-dimensional Klein-Gordon equation with
//! equally mixed scalar/vector exponential-type potentials (Eckart, Rosen-Morse,
//! Hulthén, Woods-Saxon families and the PT-symmetric trigonometric Rosen-Morse
//! well).
//!
//! The closed forms come from the parametric Nikiforov-Uvarov reduction of the
//! radial equation: [`nu`] holds the parametric engine, [`potentials`] the model
//! catalog and its mapping onto the canonical hypergeometric-type equation,
//! [`spectrum`] the transcendental energy equations and root scanner, [`wavefn`]
//! the Jacobi-polynomial wavefunction assembly, and [`oracle`] an independent
//! shooting-method eigenvalue solver used for verification.
//!
//! Natural units `hbar = c = 1` are used throughout unless an explicit
//! `hbar_c` scale is passed.

pub mod error;
pub mod nu;
pub mod oracle;
pub mod potentials;
pub mod specfun;
pub mod spectrum;
pub mod wavefn;
