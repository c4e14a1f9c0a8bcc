//! Quaternion and split-quaternion (coquaternion) numerics.
//!
//! The crate has four computational layers:
//!
//! * [`algebra`] — exact arithmetic in the two four-dimensional algebras,
//!   polar decomposition, closed-form exponentials, and faithful matrix
//!   representations used as cross-checks.
//! * [`hamiltonian`] — polynomial Hamiltonians over a four-real-dimensional
//!   phase space `(x0, p0, x1, p1)`, analytic (complex-polynomial) sources,
//!   and Cauchy–Riemann diagnostics.
//! * [`dynamics`] — the family of first-order flows generated by those
//!   Hamiltonians, fixed-step RK4 and symplectic leapfrog integrators, and
//!   fixed-point classification.
//! * [`spectral`] — two-level systems with (co)quaternionic couplings:
//!   generalized Pauli matrices, eigenvalue and phase analysis, Heisenberg
//!   evolution, and the Hopf map onto the four-sphere.
//!
//! [`selfcheck`] bundles a deterministic subset of the invariants for use by
//! command-line tooling.

pub mod algebra;
pub mod dynamics;
pub mod hamiltonian;
pub mod selfcheck;
pub mod spectral;
