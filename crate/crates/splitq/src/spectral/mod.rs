//! Two-level quantum systems over the quaternions and coquaternions.
//!
//! A Hermitian 2×2 matrix over either algebra has the block form
//! `[[s + t, q], [q̄, s − t]]` with `s`, `t` real and `q` hypercomplex — six
//! real parameters in all. Its eigenvalues are `E± = s ± √(t² + q̄q)`. Over
//! the quaternions the radicand is nonnegative and the spectrum is real;
//! over the coquaternions the indefinite conjugation norm lets the radicand
//! turn negative, producing a complex-conjugate eigenvalue pair — the broken
//! phase of the spectral problem, reached through an exceptional point where
//! the pair collides.
//!
//! The module provides the five hypercomplex Pauli matrices, Hamiltonian
//! construction and spectra, phase classification, Heisenberg-picture
//! evolution (including the zero-gap Rabi oscillation driven purely by
//! noncommutativity), and the Hopf maps sending normalized two-component
//! states onto spheres.

mod evolve;
mod hopf;

pub use evolve::{heisenberg_evolve, rabi};
pub use hopf::{hopf_map, hopf_map_s2, state_from_angles, SpinorQ};

use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::{HyperComplex, Signature};
use crate::dynamics::{classify_fixed_point, FixedPointClass};

/// Errors reported by the spectral layer.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    /// Pauli index outside `1..=5`.
    #[error("Pauli index {index} is out of range 1..=5")]
    IndexOutOfRange { index: usize },
    /// Direction vector of the `(ω, n)` form is not unit length.
    #[error("direction vector has squared norm {norm2}, expected 1")]
    NonUnitDirection { norm2: f64 },
    /// Operation defined only for the coquaternionic signature.
    #[error("operation requires the coquaternionic signature, found {found:?}")]
    WrongSignature { found: Signature },
    /// Mixed signatures between operands.
    #[error("signature mismatch: {0:?} vs {1:?}")]
    SignatureMismatch(Signature, Signature),
    /// Supplied entries do not form a Hermitian matrix.
    #[error("entries deviate from the Hermitian shape by {deviation}")]
    NotHermitian { deviation: f64 },
    /// State vector is not normalized.
    #[error("state has norm {norm}, expected 1")]
    NotNormalized { norm: f64 },
    /// Nonpositive or non-finite evolution step.
    #[error("step size {dt} must be positive and finite")]
    StepSizeInvalid { dt: f64 },
    /// State has components outside the complex `(1, i)` span.
    #[error("operation requires complex state components (no j or k part)")]
    NonComplexState,
}

/// Hermitian 2×2 matrix over a hypercomplex algebra: real diagonal,
/// off-diagonal entries mutual conjugates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HMatrix2 {
    entries: [[HyperComplex; 2]; 2],
    sig: Signature,
}

impl HMatrix2 {
    /// Build from explicit entries, validating a uniform signature and the
    /// Hermitian shape (scale-relative 1e−12).
    pub fn from_entries(entries: [[HyperComplex; 2]; 2]) -> Result<Self, SpectralError> {
        let sig = entries[0][0].sig();
        for row in &entries {
            for e in row {
                if e.sig() != sig {
                    return Err(SpectralError::SignatureMismatch(sig, e.sig()));
                }
            }
        }
        let m = Self { entries, sig };
        let deviation = m.hermitian_deviation();
        let scale = entries
            .iter()
            .flatten()
            .fold(1.0, |acc: f64, e| acc.max(e.euclid2()));
        if deviation > 1e-12 * scale {
            return Err(SpectralError::NotHermitian { deviation });
        }
        Ok(m)
    }

    /// Internal constructor for entries that are Hermitian by construction.
    pub(crate) fn from_entries_unchecked(
        entries: [[HyperComplex; 2]; 2],
        sig: Signature,
    ) -> Self {
        Self { entries, sig }
    }

    /// The identity matrix.
    pub fn identity(sig: Signature) -> Self {
        let one = HyperComplex::one(sig);
        let zero = HyperComplex::zero(sig);
        Self {
            entries: [[one, zero], [zero, one]],
            sig,
        }
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn entries(&self) -> [[HyperComplex; 2]; 2] {
        self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> HyperComplex {
        self.entries[row][col]
    }

    /// Largest Euclidean deviation from the Hermitian shape: imaginary parts
    /// of the diagonal and the gap between the off-diagonal conjugate pair.
    pub fn hermitian_deviation(&self) -> f64 {
        let diag0 = self.entries[0][0].imaginary().euclid2().sqrt();
        let diag1 = self.entries[1][1].imaginary().euclid2().sqrt();
        let off = (self.entries[0][1] - self.entries[1][0].conj())
            .euclid2()
            .sqrt();
        diag0.max(diag1).max(off)
    }

    /// Matrix product, returned as raw entries: the product of two Hermitian
    /// matrices need not be Hermitian.
    pub fn mul_entries(
        &self,
        rhs: &Self,
    ) -> Result<[[HyperComplex; 2]; 2], SpectralError> {
        if self.sig != rhs.sig {
            return Err(SpectralError::SignatureMismatch(self.sig, rhs.sig));
        }
        Ok(mat_mul(&self.entries, &rhs.entries))
    }

    /// Apply to a column spinor: `σ|z⟩`.
    pub fn apply(&self, z: &SpinorQ) -> Result<[HyperComplex; 2], SpectralError> {
        if self.sig != z.sig() {
            return Err(SpectralError::SignatureMismatch(self.sig, z.sig()));
        }
        let e = &self.entries;
        Ok([
            e[0][0] * z.z1() + e[0][1] * z.z2(),
            e[1][0] * z.z1() + e[1][1] * z.z2(),
        ])
    }

    /// Largest componentwise entry difference (infinite across signatures).
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        if self.sig != rhs.sig {
            return f64::INFINITY;
        }
        let mut worst = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                let a = self.entries[r][c].components();
                let b = rhs.entries[r][c].components();
                for m in 0..4 {
                    worst = worst.max((a[m] - b[m]).abs());
                }
            }
        }
        worst
    }
}

/// Plain 2×2 matrix product over hypercomplex entries. Callers guarantee a
/// uniform signature.
pub(crate) fn mat_mul(
    a: &[[HyperComplex; 2]; 2],
    b: &[[HyperComplex; 2]; 2],
) -> [[HyperComplex; 2]; 2] {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

/// The five hypercomplex Pauli matrices:
///
/// ```text
/// σ1 = [[0, 1], [1, 0]]    σ2 = [[0, −i], [i, 0]]    σ3 = [[1, 0], [0, −1]]
/// σ4 = [[0, −j], [j, 0]]   σ5 = [[0, −k], [k, 0]]
/// ```
///
/// All five are Hermitian. σ1–σ3 square to the identity in both signatures;
/// σ4 and σ5 square to the identity over the quaternions but to minus the
/// identity over the coquaternions, where `j² = k² = +1` flips the sign of
/// the off-diagonal product.
pub fn pauli(l: usize, sig: Signature) -> Result<HMatrix2, SpectralError> {
    let zero = HyperComplex::zero(sig);
    let one = HyperComplex::one(sig);
    let i = HyperComplex::i(sig);
    let j = HyperComplex::j(sig);
    let k = HyperComplex::k(sig);
    let entries = match l {
        1 => [[zero, one], [one, zero]],
        2 => [[zero, -i], [i, zero]],
        3 => [[one, zero], [zero, -one]],
        4 => [[zero, -j], [j, zero]],
        5 => [[zero, -k], [k, zero]],
        _ => return Err(SpectralError::IndexOutOfRange { index: l }),
    };
    Ok(HMatrix2::from_entries_unchecked(entries, sig))
}

/// Parameters of the Hermitian block form `[[s + t, q], [q̄, s − t]]`: six
/// real degrees of freedom (`s`, `t`, and the four components of `q`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TwoLevelParams {
    s: f64,
    t: f64,
    q: HyperComplex,
}

impl TwoLevelParams {
    pub const fn new(s: f64, t: f64, q: HyperComplex) -> Self {
        Self { s, t, q }
    }

    /// The `(ω, n)` form `Ĥ = ½ω·1 + Σ n_l σ_l` with `n` a unit 5-vector
    /// (tolerance 1e−12 on the squared norm). The parametrizations are
    /// linked by `s = ω/2`, `t = n3`, `q = n1 − i n2 − j n4 − k n5`.
    pub fn from_direction(
        sig: Signature,
        omega: f64,
        n: [f64; 5],
    ) -> Result<Self, SpectralError> {
        let norm2: f64 = n.iter().map(|c| c * c).sum();
        if (norm2 - 1.0).abs() > 1e-12 {
            return Err(SpectralError::NonUnitDirection { norm2 });
        }
        Ok(Self::new(
            omega / 2.0,
            n[2],
            HyperComplex::new(sig, n[0], -n[1], -n[3], -n[4]),
        ))
    }

    pub const fn s(&self) -> f64 {
        self.s
    }

    pub const fn t(&self) -> f64 {
        self.t
    }

    pub const fn q(&self) -> HyperComplex {
        self.q
    }

    pub const fn sig(&self) -> Signature {
        self.q.sig()
    }

    /// Gap radicand `t² + q̄q`; its sign decides the spectral phase.
    pub fn discriminant(&self) -> f64 {
        self.t * self.t + self.q.norm2()
    }
}

/// Assemble the Hermitian matrix `[[s + t, q], [q̄, s − t]]`.
pub fn build_h(p: &TwoLevelParams) -> HMatrix2 {
    let sig = p.sig();
    HMatrix2::from_entries_unchecked(
        [
            [HyperComplex::real(sig, p.s() + p.t()), p.q()],
            [p.q().conj(), HyperComplex::real(sig, p.s() - p.t())],
        ],
        sig,
    )
}

/// Eigenvalues `E± = s ± √(t² + q̄q)`: a real pair when the radicand is
/// nonnegative, a complex-conjugate pair otherwise.
pub fn eigenvalues(p: &TwoLevelParams) -> (Complex64, Complex64) {
    let d = p.discriminant();
    let s = p.s();
    if d >= 0.0 {
        let r = d.sqrt();
        (Complex64::new(s + r, 0.0), Complex64::new(s - r, 0.0))
    } else {
        let r = (-d).sqrt();
        (Complex64::new(s, r), Complex64::new(s, -r))
    }
}

/// Spectral phase of a coquaternionic two-level Hamiltonian.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PTPhase {
    /// `t² + q̄q > 0`: real, nondegenerate spectrum.
    Unbroken,
    /// `t² + q̄q < 0`: complex-conjugate eigenvalue pair.
    Broken,
    /// On the phase boundary (scale-relative 1e−12): the pair collides.
    Exceptional,
}

/// Classify the spectral phase by the sign of `t² + q0² + q1² − q2² − q3²`.
///
/// Quaternionic input is rejected: there the conjugation norm is definite,
/// the spectrum always real, and no transition exists.
pub fn pt_phase(p: &TwoLevelParams) -> Result<PTPhase, SpectralError> {
    if p.sig() != Signature::Coquaternion {
        return Err(SpectralError::WrongSignature { found: p.sig() });
    }
    let d = p.discriminant();
    let tol = 1e-12 * (1.0 + p.t() * p.t() + p.q().euclid2());
    Ok(if d > tol {
        PTPhase::Unbroken
    } else if d < -tol {
        PTPhase::Broken
    } else {
        PTPhase::Exceptional
    })
}

/// Classify the two eigenmode flows `ż = iE± z` at the origin.
///
/// A real nondegenerate spectrum yields a pair of centres. A broken
/// spectrum yields the source–sink pair of the phase transition: vortices
/// in general, degenerating to pure foci when the eigenvalues are purely
/// imaginary.
pub fn mode_fixed_points(p: &TwoLevelParams) -> (FixedPointClass, FixedPointClass) {
    let (e_plus, e_minus) = eigenvalues(p);
    (
        classify_fixed_point(Complex64::i() * e_plus),
        classify_fixed_point(Complex64::i() * e_minus),
    )
}
