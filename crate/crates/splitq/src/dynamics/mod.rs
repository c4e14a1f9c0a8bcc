//! First-order flows generated by polynomial Hamiltonians.
//!
//! Each [`FlowKind`] is a component-form equation of motion on
//! `(x0, p0, x1, p1)`. The canonical two-dimensional flow and its
//! complexified extension use only `H0`; the non-Hermitian and
//! coquaternionic families add gradient-like contributions from `H1` (and,
//! for the full coquaternionic flow, from `H2` and `H3`). Fixed points of
//! the linear mode equation `ż = b z` are classified by the real and
//! imaginary parts of `b`.

use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::{HyperComplex, Signature};
use crate::hamiltonian::{HamiltonianSpec, PhasePoint};

mod integrate;

pub use integrate::{integrate, integrate_observed, Method};

/// Errors from flow evaluation and integration.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DynamicsError {
    /// The Hamiltonian's components or signature do not fit the flow kind.
    #[error("Hamiltonian incompatible with {kind:?}: {reason}")]
    IncompatibleHamiltonian { kind: FlowKind, reason: &'static str },
    /// Step size and horizon must be positive and finite.
    #[error("invalid step size or horizon: dt = {dt}, t_end = {t_end}")]
    StepSizeInvalid { dt: f64, t_end: f64 },
    /// Leapfrog needs `H = T(p) + V(x)`.
    #[error("Hamiltonian is not separable into p-only and x-only terms")]
    NonSeparable,
    /// Leapfrog is only defined for the canonical-pair flow kinds.
    #[error("symplectic leapfrog does not apply to {kind:?}")]
    UnsupportedMethod { kind: FlowKind },
    /// The state left the finite range during integration.
    #[error("state became non-finite at t = {t}")]
    NonFinite { t: f64 },
    /// Drift statistics need at least one sample.
    #[error("trajectory holds no samples")]
    EmptyTrajectory,
}

/// The flow families on the doubled phase space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FlowKind {
    /// Canonical mechanics of one real pair `(x0, p0)`; `H` real, no
    /// `(x1, p1)` dependence.
    ComplexCanonical,
    /// Complex-analytic Hamiltonian on the doubled space; evolves under
    /// `H0` alone with the second pair's roles reflected.
    ComplexifiedClassical,
    /// Real state, complex-valued `H = H0 + i H1`; `H1` drives a gradient
    /// flow on both pairs.
    NonHermitianReal,
    /// Quaternionic Hamiltonian flow: two ordinary canonical pairs.
    Quaternionic,
    /// Coquaternionic flow of a real Hamiltonian; identical component form
    /// to [`FlowKind::ComplexifiedClassical`].
    CoquaternionicReal,
    /// Coquaternionic flow of a complex-valued Hamiltonian.
    CoquaternionicComplex,
    /// Coquaternionic flow with all four components active.
    CoquaternionicFull,
}

impl FlowKind {
    pub const ALL: [FlowKind; 7] = [
        FlowKind::ComplexCanonical,
        FlowKind::ComplexifiedClassical,
        FlowKind::NonHermitianReal,
        FlowKind::Quaternionic,
        FlowKind::CoquaternionicReal,
        FlowKind::CoquaternionicComplex,
        FlowKind::CoquaternionicFull,
    ];

    /// Check a Hamiltonian against this flow's admissible components and
    /// signature.
    pub fn check_compatible(self, h: &HamiltonianSpec) -> Result<(), DynamicsError> {
        let complex_only = || {
            if h.component_is_zero(2) && h.component_is_zero(3) {
                Ok(())
            } else {
                Err(self.incompatible("H2 and H3 must vanish"))
            }
        };
        let real_only = || {
            if h.component_is_zero(1) && h.component_is_zero(2) && h.component_is_zero(3) {
                Ok(())
            } else {
                Err(self.incompatible("H1, H2 and H3 must vanish"))
            }
        };
        match self {
            FlowKind::ComplexCanonical => {
                real_only()?;
                if h.terms().iter().any(|t| t.powers[2] != 0 || t.powers[3] != 0) {
                    return Err(self.incompatible("H must not depend on x1 or p1"));
                }
                Ok(())
            }
            FlowKind::ComplexifiedClassical | FlowKind::NonHermitianReal => complex_only(),
            FlowKind::Quaternionic => {
                if h.sig() != Signature::Quaternion {
                    return Err(self.incompatible("requires the quaternion signature"));
                }
                real_only()
            }
            FlowKind::CoquaternionicReal => {
                if h.sig() != Signature::Coquaternion {
                    return Err(self.incompatible("requires the coquaternion signature"));
                }
                real_only()
            }
            FlowKind::CoquaternionicComplex => {
                if h.sig() != Signature::Coquaternion {
                    return Err(self.incompatible("requires the coquaternion signature"));
                }
                complex_only()
            }
            FlowKind::CoquaternionicFull => {
                if h.sig() != Signature::Coquaternion {
                    return Err(self.incompatible("requires the coquaternion signature"));
                }
                Ok(())
            }
        }
    }

    fn incompatible(self, reason: &'static str) -> DynamicsError {
        DynamicsError::IncompatibleHamiltonian { kind: self, reason }
    }
}

/// Phase velocity `(ẋ0, ṗ0, ẋ1, ṗ1)` of the flow at `s`.
pub fn rhs(
    kind: FlowKind,
    h: &HamiltonianSpec,
    s: &PhasePoint,
) -> Result<PhasePoint, DynamicsError> {
    kind.check_compatible(h)?;
    let v = rhs_unchecked(kind, h, &s.coords());
    if v.iter().all(|c| c.is_finite()) {
        Ok(PhasePoint::from_coords(v))
    } else {
        Err(DynamicsError::NonFinite { t: 0.0 })
    }
}

/// Velocity components without the compatibility check; used by integrators
/// after a single up-front validation. Partial-table indices follow the
/// variable order `(x0, p0, x1, p1)`.
pub(crate) fn rhs_unchecked(kind: FlowKind, h: &HamiltonianSpec, c: &[f64; 4]) -> [f64; 4] {
    let p = h.partials_coords(c);
    let (h0, h1, h2, h3) = (p[0], p[1], p[2], p[3]);
    match kind {
        FlowKind::ComplexCanonical => [h0[1], -h0[0], 0.0, 0.0],
        // ẋ0 = ∂H0/∂p0, ṗ0 = −∂H0/∂x0, ẋ1 = −∂H0/∂p1, ṗ1 = ∂H0/∂x1.
        FlowKind::ComplexifiedClassical | FlowKind::CoquaternionicReal => {
            [h0[1], -h0[0], -h0[3], h0[2]]
        }
        FlowKind::NonHermitianReal => [
            h0[1] + h1[0],
            -h0[0] + h1[1],
            h0[3] + h1[2],
            -h0[2] + h1[3],
        ],
        FlowKind::Quaternionic => [h0[1], -h0[0], h0[3], -h0[2]],
        FlowKind::CoquaternionicComplex => [
            h0[1] + h1[0],
            -h0[0] + h1[1],
            -h0[3] + h1[2],
            h0[2] + h1[3],
        ],
        FlowKind::CoquaternionicFull => [
            h0[1] + h1[0] - h2[3] + h3[2],
            -h0[0] + h1[1] + h2[2] + h3[3],
            -h0[3] + h1[2] + h2[1] + h3[0],
            h0[2] + h1[3] - h2[0] + h3[1],
        ],
    }
}

/// Classification of the linear mode `ż = b z` at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixedPointClass {
    /// Purely rotational: `Re b = 0`, `Im b ≠ 0`.
    Centre,
    /// Purely radial: `Im b = 0`, `Re b ≠ 0`.
    Focus,
    /// Spiralling source or sink: both parts nonzero.
    Vortex,
    /// `b = 0`.
    Degenerate,
}

/// Classify `ż = b z` by which parts of `b` vanish (scale-relative
/// threshold `1e−12 · (1 + |b|)`).
pub fn classify_fixed_point(b: Complex64) -> FixedPointClass {
    let tol = 1e-12 * (1.0 + b.norm());
    let radial = b.re.abs() > tol;
    let rotational = b.im.abs() > tol;
    match (radial, rotational) {
        (false, true) => FixedPointClass::Centre,
        (true, false) => FixedPointClass::Focus,
        (true, true) => FixedPointClass::Vortex,
        (false, false) => FixedPointClass::Degenerate,
    }
}

/// A fixed-step integration record: times, states, and the full
/// hypercomplex energy at every step.
#[derive(Clone, Debug)]
pub struct Trajectory {
    times: Vec<f64>,
    states: Vec<PhasePoint>,
    energies: Vec<HyperComplex>,
}

impl Trajectory {
    pub(crate) fn with_capacity(n: usize) -> Self {
        Self {
            times: Vec::with_capacity(n),
            states: Vec::with_capacity(n),
            energies: Vec::with_capacity(n),
        }
    }

    pub(crate) fn push(&mut self, t: f64, s: PhasePoint, e: HyperComplex) {
        debug_assert!(self.times.last().is_none_or(|&last| t > last));
        self.times.push(t);
        self.states.push(s);
        self.energies.push(e);
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn states(&self) -> &[PhasePoint] {
        &self.states
    }

    pub fn energies(&self) -> &[HyperComplex] {
        &self.energies
    }

    pub fn final_state(&self) -> Option<PhasePoint> {
        self.states.last().copied()
    }
}

/// Worst deviation of each energy component from its initial value:
/// `(max_abs_drift, relative_drift)`. The relative figure normalizes each
/// component by its initial magnitude, falling back to the absolute value
/// when the component starts below `1e−12`.
pub fn energy_drift(traj: &Trajectory) -> Result<(f64, f64), DynamicsError> {
    let first = traj.energies.first().ok_or(DynamicsError::EmptyTrajectory)?;
    let initial = first.components();
    let mut max_abs: f64 = 0.0;
    let mut max_rel: f64 = 0.0;
    for e in &traj.energies {
        for (c, c0) in e.components().iter().zip(initial) {
            let d = (c - c0).abs();
            max_abs = max_abs.max(d);
            max_rel = max_rel.max(if c0.abs() > 1e-12 { d / c0.abs() } else { d });
        }
    }
    Ok((max_abs, max_rel))
}
