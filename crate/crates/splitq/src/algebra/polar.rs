//! Polar decomposition of quaternions and coquaternions.
//!
//! A quaternion always factors as `|q| (cos θ + î sin θ)` with a unit
//! imaginary axis `î² = −1`. For coquaternions the sign of the imaginary
//! squared modulus `v̄v` selects the regime: positive gives the same circular
//! form, negative gives hyperbolic forms built on an axis with `ĵ² = +1`,
//! and zero gives a nilpotent axis. Hyperbolic elements split further by the
//! sign of `q̄q`: scalar-dominant elements read `m (cosh θ + ĵ sinh θ)`
//! (signed `m`, `cosh θ ≥ 1`), while axis-dominant elements (`q̄q < 0`) need
//! the axial form `m (sinh θ + ĵ cosh θ)`, which the plain hyperbolic
//! branch cannot reach.

use super::{AlgebraError, HyperComplex, Signature};

/// Which reconstruction formula a [`PolarForm`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolarBranch {
    /// `axis² = −1`, `q = m (cos θ + axis sin θ)`.
    Circular,
    /// `axis² = +1`, `q = m (cosh θ + axis sinh θ)`; `m` carries the sign of
    /// the real part and `q̄q = m² > 0`.
    Hyperbolic,
    /// `axis² = +1`, `q = m (sinh θ + axis cosh θ)`; the axis term dominates
    /// and `q̄q = −m² < 0`.
    HyperbolicAxial,
    /// Nilpotent axis (`axis² = 0`), `q = m (1 + axis θ)`.
    Null,
}

/// Polar decomposition of a [`HyperComplex`] value.
#[derive(Clone, Copy, Debug)]
pub struct PolarForm {
    pub magnitude: f64,
    /// Pure-imaginary axis: unit circular, unit hyperbolic, or nilpotent.
    pub axis: HyperComplex,
    pub angle: f64,
    pub branch: PolarBranch,
}

impl PolarForm {
    /// Rebuild the original value from the branch formula.
    pub fn reconstruct(&self) -> HyperComplex {
        let sig = self.axis.sig();
        let (re, ax) = match self.branch {
            PolarBranch::Circular => (self.angle.cos(), self.angle.sin()),
            PolarBranch::Hyperbolic => (self.angle.cosh(), self.angle.sinh()),
            PolarBranch::HyperbolicAxial => (self.angle.sinh(), self.angle.cosh()),
            PolarBranch::Null => (1.0, self.angle),
        };
        (HyperComplex::real(sig, re) + self.axis * ax) * self.magnitude
    }
}

pub(super) fn polar(q: &HyperComplex) -> Result<PolarForm, AlgebraError> {
    let sig = q.sig();
    let v = q.imaginary();
    let w = q.imaginary_norm2();
    let tol = q.null_tolerance();

    // Real axis: represent q0 as a rotation by 0 or π about a default axis.
    if v.euclid2() == 0.0 {
        return Ok(PolarForm {
            magnitude: q.q0.abs(),
            axis: HyperComplex::i(sig),
            angle: if q.q0 < 0.0 { std::f64::consts::PI } else { 0.0 },
            branch: PolarBranch::Circular,
        });
    }

    let circular = match sig {
        // Quaternion imaginary parts always square to −v̄v ≤ 0.
        Signature::Quaternion => w > 0.0,
        Signature::Coquaternion => w > tol,
    };
    if circular {
        let om = w.sqrt();
        let qq = q.q0 * q.q0 + w;
        return Ok(PolarForm {
            magnitude: qq.sqrt(),
            axis: v / om,
            angle: om.atan2(q.q0),
            branch: PolarBranch::Circular,
        });
    }

    if w < -tol {
        let om = (-w).sqrt();
        let axis = v / om;
        let qq = q.q0 * q.q0 + w;
        if qq > tol {
            // Scalar-dominant: m (cosh θ + ĵ sinh θ) with signed m.
            let m = q.q0.signum() * qq.sqrt();
            return Ok(PolarForm {
                magnitude: m,
                axis,
                angle: (om / m).asinh(),
                branch: PolarBranch::Hyperbolic,
            });
        }
        if qq < -tol {
            // Axis-dominant: m (sinh θ + ĵ cosh θ).
            let m = (-qq).sqrt();
            return Ok(PolarForm {
                magnitude: m,
                axis,
                angle: (q.q0 / m).asinh(),
                branch: PolarBranch::HyperbolicAxial,
            });
        }
        // On the null cone with a non-nilpotent imaginary part; fall through
        // to the exact nilpotent-style form m (1 + v θ / m).
    }

    // Nilpotent or near-nilpotent imaginary part (or a null-cone element):
    // q = q0 (1 + v/q0) is exact whenever the real part is usable.
    if q.q0 * q.q0 > tol {
        return Ok(PolarForm {
            magnitude: q.q0,
            axis: v / q.q0,
            angle: 1.0,
            branch: PolarBranch::Null,
        });
    }
    Err(AlgebraError::Unrepresentable)
}
