//! Bound states of the hyperbolical potential
//! `V(r) = D [1 - σ₀ coth(αr)]²`.
//!
//! The crate pairs a closed-form treatment with an independent numerical one:
//!
//! - [`potential`]: the potential, the shifted centrifugal approximation
//!   `1/r² ≈ 4α² [c₀ + v + v²]` and the constants `(γ, c₀)` behind it.
//! - [`spectrum`]: closed-form energies for arbitrary `(n, l)`, plus the
//!   `l = 0` and `σ₀ = 1` special cases.
//! - [`jacobi`] and [`wavefunction`]: normalized radial wavefunctions built
//!   from Jacobi polynomials.
//! - [`oracle`]: a Numerov shooting solver for the unapproximated radial
//!   equation, used as the reference.
//! - [`bench`]: state labels, the embedded literature table, report
//!   generation and wavefunction dumps.

pub mod bench;
pub mod error;
pub mod jacobi;
pub mod oracle;
pub mod potential;
pub mod quadrature;
pub mod spectrum;
pub mod wavefunction;

pub use error::{Error, Result};
pub use potential::{ApproxConstants, PotentialParams};
pub use spectrum::{EnergyLevel, QuantumState, SpectralParams};
