//! Numerical operator calculus on the representation side of SU(2) and the
//! Heisenberg group H₁.
//!
//! Left-invariant differential operators on a compact (or graded) Lie group
//! act on Fourier coefficients through matrix-valued symbols. This crate
//! builds those symbol matrices explicitly:
//!
//! * [`su2`] — ladder symbols, sub-Laplacian and Laplace–Beltrami symbols at
//!   spin index `l ∈ ½ℕ₀`;
//! * [`heisenberg`] — truncated Hermite-basis matrices of the infinitesimal
//!   Schrödinger representation at parameter `λ ≠ 0`;
//! * [`riesz`] — higher-order Riesz-transform symbols `∂^α L^{-|α|/2}`,
//!   operator-norm sweeps over the unitary dual, and the three-factor
//!   decomposition of their norm estimates;
//! * [`multiplier`] — the closed family of scalar spectral functions applied
//!   through the diagonal functional calculus;
//! * [`gevrey`] — Fourier-side coefficient profiles, Plancherel seminorms,
//!   and least-squares estimation of Gevrey regularity orders.
//!
//! All values are immutable after construction and all operations are pure
//! functions, so everything here may be called concurrently.

pub mod algebra;
pub mod error;
pub mod gevrey;
pub mod heisenberg;
pub mod invariants;
pub mod multiplier;
pub mod riesz;
pub mod su2;

pub use error::{Error, Result};
