//! Quaternion and coquaternion (split-quaternion) arithmetic.
//!
//! Both algebras are spanned by `{1, i, j, k}` and are handled by one value
//! type tagged with its [`Signature`]. Quaternions satisfy
//! `i² = j² = k² = −1` with `ij = k`, `jk = i`, `ki = j`; coquaternions
//! satisfy `i² = −1`, `j² = k² = +1` with `ij = k`, `jk = −i`, `ki = j`
//! (each anticommuting pair flips sign on reversal). The coquaternion
//! squared modulus `q̄q = q0² + q1² − q2² − q3²` is indefinite, so nonzero
//! null elements exist and are not invertible.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

mod polar;
mod rep;

pub use polar::{PolarBranch, PolarForm};
pub use rep::MatrixRep;

/// Which four-dimensional algebra a value lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Signature {
    /// Division algebra: `i² = j² = k² = −1`.
    Quaternion,
    /// Split signature: `i² = −1`, `j² = k² = +1`.
    Coquaternion,
}

impl Signature {
    /// Common sign of `j²` and `k²`: −1 for quaternions, +1 for coquaternions.
    #[inline]
    fn split_sign(self) -> f64 {
        match self {
            Signature::Quaternion => -1.0,
            Signature::Coquaternion => 1.0,
        }
    }
}

/// Errors from algebra operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    /// Mixed-signature arithmetic is undefined.
    #[error("signature mismatch: {0:?} vs {1:?}")]
    SignatureMismatch(Signature, Signature),
    /// Null element (`q̄q = 0` within tolerance); it has no inverse.
    #[error("null element has no inverse (q̄q = {norm2:e})")]
    NullElement { norm2: f64 },
    /// No polar decomposition exists: the imaginary part is nilpotent and
    /// there is no real part to attach it to.
    #[error("no polar form: null imaginary part and vanishing real part")]
    Unrepresentable,
}

/// A quaternion or coquaternion `q0 + i q1 + j q2 + k q3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HyperComplex {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
    sig: Signature,
}

impl HyperComplex {
    #[inline]
    pub const fn new(sig: Signature, q0: f64, q1: f64, q2: f64, q3: f64) -> Self {
        Self { q0, q1, q2, q3, sig }
    }

    #[inline]
    pub const fn from_components(sig: Signature, c: [f64; 4]) -> Self {
        Self::new(sig, c[0], c[1], c[2], c[3])
    }

    #[inline]
    pub const fn real(sig: Signature, value: f64) -> Self {
        Self::new(sig, value, 0.0, 0.0, 0.0)
    }

    #[inline]
    pub const fn zero(sig: Signature) -> Self {
        Self::real(sig, 0.0)
    }

    #[inline]
    pub const fn one(sig: Signature) -> Self {
        Self::real(sig, 1.0)
    }

    #[inline]
    pub const fn i(sig: Signature) -> Self {
        Self::new(sig, 0.0, 1.0, 0.0, 0.0)
    }

    #[inline]
    pub const fn j(sig: Signature) -> Self {
        Self::new(sig, 0.0, 0.0, 1.0, 0.0)
    }

    #[inline]
    pub const fn k(sig: Signature) -> Self {
        Self::new(sig, 0.0, 0.0, 0.0, 1.0)
    }

    #[inline]
    pub const fn sig(&self) -> Signature {
        self.sig
    }

    #[inline]
    pub const fn components(&self) -> [f64; 4] {
        [self.q0, self.q1, self.q2, self.q3]
    }

    /// The imaginary (vector) part `i q1 + j q2 + k q3`.
    #[inline]
    pub fn imaginary(&self) -> Self {
        Self::new(self.sig, 0.0, self.q1, self.q2, self.q3)
    }

    /// Conjugate `q̄ = q0 − i q1 − j q2 − k q3`.
    #[inline]
    pub fn conj(&self) -> Self {
        Self::new(self.sig, self.q0, -self.q1, -self.q2, -self.q3)
    }

    /// Squared modulus `q̄q`: positive definite for quaternions
    /// (`q0² + q1² + q2² + q3²`), indefinite for coquaternions
    /// (`q0² + q1² − q2² − q3²`).
    #[inline]
    pub fn norm2(&self) -> f64 {
        let e = self.sig.split_sign();
        self.q0 * self.q0 + self.q1 * self.q1 - e * (self.q2 * self.q2 + self.q3 * self.q3)
    }

    /// Signed squared modulus of the imaginary part, `v̄v` for `v = Im q`.
    /// Its sign selects the circular / hyperbolic / null regime of a
    /// coquaternion; it is nonnegative for quaternions.
    #[inline]
    pub fn imaginary_norm2(&self) -> f64 {
        let e = self.sig.split_sign();
        self.q1 * self.q1 - e * (self.q2 * self.q2 + self.q3 * self.q3)
    }

    /// Sum of squared components; the definite scale used for tolerances.
    #[inline]
    pub fn euclid2(&self) -> f64 {
        self.q0 * self.q0 + self.q1 * self.q1 + self.q2 * self.q2 + self.q3 * self.q3
    }

    /// Scale-relative tolerance below which `q̄q` is treated as null.
    #[inline]
    pub fn null_tolerance(&self) -> f64 {
        1e-12 * (1.0 + self.euclid2())
    }

    /// Whether `q̄q` vanishes within [`Self::null_tolerance`].
    #[inline]
    pub fn is_null(&self) -> bool {
        self.norm2().abs() <= self.null_tolerance()
    }

    /// Checked product; fails on mixed signatures.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.sig != rhs.sig {
            return Err(AlgebraError::SignatureMismatch(self.sig, rhs.sig));
        }
        Ok(mul_raw(self, rhs))
    }

    /// Multiplicative inverse `q̄ / q̄q`; fails on null elements.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let n = self.norm2();
        if n.abs() <= self.null_tolerance() {
            return Err(AlgebraError::NullElement { norm2: n });
        }
        Ok(self.conj() / n)
    }

    /// Exponential via the closed form `e^{q0} (C(v̄v) + v S(v̄v))`.
    ///
    /// With `w = v̄v` of the imaginary part `v`: for `w > 0` the factor pair
    /// is `(cos √w, sin √w / √w)`; for `w < 0` it is
    /// `(cosh √−w, sinh √−w / √−w)`; at `w = 0` both limits are 1 and the
    /// series is used so the nilpotent case `e^v = 1 + v` comes out exact.
    pub fn exp(&self) -> Self {
        let w = self.imaginary_norm2();
        let (c, s) = circ_factors(w);
        let scale = self.q0.exp();
        Self::new(
            self.sig,
            scale * c,
            scale * s * self.q1,
            scale * s * self.q2,
            scale * s * self.q3,
        )
    }

    /// Polar decomposition; see [`PolarForm`] for the branch taxonomy.
    pub fn polar(&self) -> Result<PolarForm, AlgebraError> {
        polar::polar(self)
    }

    /// Faithful matrix representation: 2×2 real for coquaternions, 2×2
    /// complex (stored as real blocks) for quaternions. Multiplicative, with
    /// determinant equal to `q̄q`.
    pub fn to_matrix(&self) -> MatrixRep {
        rep::to_matrix(self)
    }
}

/// `(C, S)` with `e^v = C + v·S` for a pure-imaginary `v` with `v̄v = w`.
fn circ_factors(w: f64) -> (f64, f64) {
    // v² = −w; the two series are Σ (−w)ⁿ/(2n)! and Σ (−w)ⁿ/(2n+1)!.
    if w > 1e-30 {
        let om = w.sqrt();
        (om.cos(), om.sin() / om)
    } else if w < -1e-30 {
        let om = (-w).sqrt();
        (om.cosh(), om.sinh() / om)
    } else {
        (1.0 - w / 2.0, 1.0 - w / 6.0)
    }
}

#[inline]
fn mul_raw(a: &HyperComplex, b: &HyperComplex) -> HyperComplex {
    // Component form of the product; `e` is the sign of j² = k². The j and k
    // rows are signature-independent because ki = −ik = j and ij = −ji = k
    // hold in both algebras.
    let e = a.sig.split_sign();
    HyperComplex::new(
        a.sig,
        a.q0 * b.q0 - a.q1 * b.q1 + e * (a.q2 * b.q2 + a.q3 * b.q3),
        a.q0 * b.q1 + a.q1 * b.q0 - e * (a.q2 * b.q3 - a.q3 * b.q2),
        a.q0 * b.q2 - a.q1 * b.q3 + a.q2 * b.q0 + a.q3 * b.q1,
        a.q0 * b.q3 + a.q1 * b.q2 - a.q2 * b.q1 + a.q3 * b.q0,
    )
}

#[inline]
fn assert_same_sig(a: &HyperComplex, b: &HyperComplex) {
    assert_eq!(
        a.sig, b.sig,
        "mixed-signature arithmetic; use try_mul for a checked product"
    );
}

impl Add for HyperComplex {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        assert_same_sig(&self, &rhs);
        Self::new(
            self.sig,
            self.q0 + rhs.q0,
            self.q1 + rhs.q1,
            self.q2 + rhs.q2,
            self.q3 + rhs.q3,
        )
    }
}

impl Sub for HyperComplex {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        assert_same_sig(&self, &rhs);
        Self::new(
            self.sig,
            self.q0 - rhs.q0,
            self.q1 - rhs.q1,
            self.q2 - rhs.q2,
            self.q3 - rhs.q3,
        )
    }
}

impl Neg for HyperComplex {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(self.sig, -self.q0, -self.q1, -self.q2, -self.q3)
    }
}

impl Mul for HyperComplex {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        assert_same_sig(&self, &rhs);
        mul_raw(&self, &rhs)
    }
}

impl Mul<f64> for HyperComplex {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: f64) -> Self {
        Self::new(
            self.sig,
            self.q0 * rhs,
            self.q1 * rhs,
            self.q2 * rhs,
            self.q3 * rhs,
        )
    }
}

impl Mul<HyperComplex> for f64 {
    type Output = HyperComplex;
    #[inline]
    fn mul(self, rhs: HyperComplex) -> HyperComplex {
        rhs * self
    }
}

impl Div<f64> for HyperComplex {
    type Output = Self;
    #[inline]
    fn div(self, rhs: f64) -> Self {
        Self::new(
            self.sig,
            self.q0 / rhs,
            self.q1 / rhs,
            self.q2 / rhs,
            self.q3 / rhs,
        )
    }
}

impl fmt::Display for HyperComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}i {} {}j {} {}k",
            self.q0,
            if self.q1 < 0.0 { "-" } else { "+" },
            self.q1.abs(),
            if self.q2 < 0.0 { "-" } else { "+" },
            self.q2.abs(),
            if self.q3 < 0.0 { "-" } else { "+" },
            self.q3.abs(),
        )
    }
}
