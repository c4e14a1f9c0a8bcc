//! Faithful matrix representations used as independent cross-checks.
//!
//! Coquaternions are isomorphic to the real 2×2 matrices via
//! `1 ↦ I`, `i ↦ [[0, 1], [−1, 0]]`, `j ↦ [[0, 1], [1, 0]]`,
//! `k ↦ [[1, 0], [0, −1]]`, with `det = q̄q`. Quaternions embed in the
//! complex 2×2 matrices (`q ↦ [[q0 + i q1, q2 + i q3], [−q2 + i q3,
//! q0 − i q1]]`), stored here with each complex entry flattened to a real
//! 2×2 block; the complex determinant again equals `q̄q`.

use nalgebra::{Matrix2, Matrix4};

use super::{HyperComplex, Signature};

/// Matrix image of a [`HyperComplex`] value.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixRep {
    /// Coquaternion image in the real 2×2 matrices.
    Split(Matrix2<f64>),
    /// Quaternion image: complex 2×2 flattened to real 4×4 blocks
    /// (`a + bi ↦ [[a, −b], [b, a]]`).
    Pauli(Matrix4<f64>),
}

pub(super) fn to_matrix(q: &HyperComplex) -> MatrixRep {
    match q.sig() {
        Signature::Coquaternion => MatrixRep::Split(Matrix2::new(
            q.q0 + q.q3,
            q.q1 + q.q2,
            -q.q1 + q.q2,
            q.q0 - q.q3,
        )),
        Signature::Quaternion => MatrixRep::Pauli(Matrix4::new(
            q.q0, -q.q1, q.q2, -q.q3,
            q.q1, q.q0, q.q3, q.q2,
            -q.q2, -q.q3, q.q0, q.q1,
            q.q3, -q.q2, -q.q1, q.q0,
        )),
    }
}

impl MatrixRep {
    /// Determinant in the representing algebra: the plain determinant for
    /// the split form, the complex determinant (a real number here) for the
    /// flattened quaternion form. Equals `q̄q` in both cases.
    pub fn det(&self) -> f64 {
        match self {
            MatrixRep::Split(m) => m.determinant(),
            MatrixRep::Pauli(m) => {
                // Reassemble the four complex entries from their blocks.
                let (a, b) = (m[(0, 0)], m[(1, 0)]);
                let (c, d) = (m[(0, 2)], m[(1, 2)]);
                let (e, f) = (m[(2, 0)], m[(3, 0)]);
                let (g, h) = (m[(2, 2)], m[(3, 2)]);
                // Re[(a+bi)(g+hi) − (c+di)(e+fi)]
                a * g - b * h - (c * e - d * f)
            }
        }
    }

    /// Matrix product; panics on mixed representation kinds.
    pub fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (MatrixRep::Split(a), MatrixRep::Split(b)) => MatrixRep::Split(a * b),
            (MatrixRep::Pauli(a), MatrixRep::Pauli(b)) => MatrixRep::Pauli(a * b),
            _ => panic!("cannot multiply representations of different signatures"),
        }
    }

    /// Matrix exponential (scaling and squaring), for cross-checking the
    /// closed-form [`HyperComplex::exp`].
    pub fn exp(&self) -> Self {
        match self {
            MatrixRep::Split(m) => MatrixRep::Split(m.exp()),
            MatrixRep::Pauli(m) => MatrixRep::Pauli(m.exp()),
        }
    }

    /// Largest absolute entry difference between two representations.
    pub fn max_abs_diff(&self, rhs: &Self) -> f64 {
        match (self, rhs) {
            (MatrixRep::Split(a), MatrixRep::Split(b)) => {
                (a - b).iter().fold(0.0, |acc: f64, x| acc.max(x.abs()))
            }
            (MatrixRep::Pauli(a), MatrixRep::Pauli(b)) => {
                (a - b).iter().fold(0.0, |acc: f64, x| acc.max(x.abs()))
            }
            _ => f64::INFINITY,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature::{Coquaternion, Quaternion};

    #[test]
    fn unit_images_match_the_defining_assignment() {
        let one = HyperComplex::one(Coquaternion).to_matrix();
        assert_eq!(one, MatrixRep::Split(Matrix2::identity()));

        let i = HyperComplex::i(Coquaternion).to_matrix();
        assert_eq!(i, MatrixRep::Split(Matrix2::new(0.0, 1.0, -1.0, 0.0)));
        let j = HyperComplex::j(Coquaternion).to_matrix();
        assert_eq!(j, MatrixRep::Split(Matrix2::new(0.0, 1.0, 1.0, 0.0)));
        let k = HyperComplex::k(Coquaternion).to_matrix();
        assert_eq!(k, MatrixRep::Split(Matrix2::new(1.0, 0.0, 0.0, -1.0)));
        assert_eq!(k.det(), -1.0);

        assert_eq!(
            HyperComplex::one(Quaternion).to_matrix(),
            MatrixRep::Pauli(Matrix4::identity())
        );
    }

    #[test]
    fn representation_is_multiplicative() {
        for sig in [Quaternion, Coquaternion] {
            let a = HyperComplex::new(sig, 0.4, -1.1, 0.8, 0.3);
            let b = HyperComplex::new(sig, -0.7, 0.2, 1.9, -0.5);
            let lhs = (a * b).to_matrix();
            let rhs = a.to_matrix().mul(&b.to_matrix());
            assert!(lhs.max_abs_diff(&rhs) < 1e-13);
        }
    }

    #[test]
    fn determinant_equals_norm2() {
        for sig in [Quaternion, Coquaternion] {
            let q = HyperComplex::new(sig, 1.3, -0.4, 2.2, 0.9);
            assert!((q.to_matrix().det() - q.norm2()).abs() < 1e-12);
        }
    }

    #[test]
    fn matrix_exponential_matches_closed_form() {
        for sig in [Quaternion, Coquaternion] {
            for q in [
                HyperComplex::new(sig, 0.0, 0.9, 0.0, 0.0),
                HyperComplex::new(sig, 0.5, 0.1, -0.7, 0.3),
                HyperComplex::new(sig, -0.2, 0.0, 1.1, 1.1),
            ] {
                let direct = q.exp().to_matrix();
                let via_matrix = q.to_matrix().exp();
                assert!(
                    direct.max_abs_diff(&via_matrix) < 1e-12,
                    "{sig:?} {q}"
                );
            }
        }
    }
}
