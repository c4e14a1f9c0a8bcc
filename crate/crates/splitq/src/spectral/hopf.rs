//! Normalized two-component states and the Hopf maps onto spheres.
//!
//! A normalized quaternionic pair `(z1, z2)` lies on S⁷. The five real
//! expectations `n_l = Re⟨z|σ_l|z⟩` are unchanged when the state is
//! multiplied on the right by any unit scalar — the scalar part of a product
//! is cyclic — so they descend to the orbit space: the Hopf map S⁷ → S⁴.
//! States whose components stay in the complex `(1, i)` span reduce to the
//! classic S³ → S² fibration with image `(n1, n2, n3)`.
//!
//! For coquaternionic states the same expectations are still defined (the
//! real part keeps the map total) but land on the level set of an indefinite
//! form rather than a sphere; that case is exposed for exploration only.

use crate::algebra::{HyperComplex, Signature};

use super::{pauli, SpectralError};

/// Two-component hypercomplex state vector.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinorQ {
    z1: HyperComplex,
    z2: HyperComplex,
}

impl SpinorQ {
    /// Pair two components of the same signature.
    pub fn new(z1: HyperComplex, z2: HyperComplex) -> Result<Self, SpectralError> {
        if z1.sig() != z2.sig() {
            return Err(SpectralError::SignatureMismatch(z1.sig(), z2.sig()));
        }
        Ok(Self { z1, z2 })
    }

    pub fn sig(&self) -> Signature {
        self.z1.sig()
    }

    pub fn z1(&self) -> HyperComplex {
        self.z1
    }

    pub fn z2(&self) -> HyperComplex {
        self.z2
    }

    /// Conjugation norm `z̄1z1 + z̄2z2` — a real number, definite for
    /// quaternions and indefinite for coquaternions.
    pub fn norm(&self) -> f64 {
        self.z1.norm2() + self.z2.norm2()
    }

    /// Right scalar multiplication `(z1·u, z2·u)`: the fiber action of the
    /// Hopf map when `u` is a unit.
    pub fn right_mul(&self, u: HyperComplex) -> Result<Self, SpectralError> {
        if u.sig() != self.sig() {
            return Err(SpectralError::SignatureMismatch(self.sig(), u.sig()));
        }
        Ok(Self {
            z1: self.z1 * u,
            z2: self.z2 * u,
        })
    }
}

/// Spherical-coordinate parametrization of the normalized quaternionic
/// states:
///
/// ```text
/// (z1, z2) = (cos ½θ, sin ½θ · e^{î_φ φ1}),
/// î_φ = i cos φ2 + j sin φ2 cos φ3 + k sin φ2 sin φ3.
/// ```
///
/// The result is exactly normalized: `î_φ` is a unit imaginary, so the
/// exponential is a cosine–sine pair on the unit circle it generates.
pub fn state_from_angles(theta: f64, phi1: f64, phi2: f64, phi3: f64) -> SpinorQ {
    let sig = Signature::Quaternion;
    let axis = HyperComplex::new(
        sig,
        0.0,
        phi2.cos(),
        phi2.sin() * phi3.cos(),
        phi2.sin() * phi3.sin(),
    );
    let phase = (axis * phi1).exp();
    SpinorQ {
        z1: HyperComplex::real(sig, (theta / 2.0).cos()),
        z2: HyperComplex::real(sig, (theta / 2.0).sin()) * phase,
    }
}

/// Bloch 5-vector `n_l = Re⟨z|σ_l|z⟩`, `l = 1..=5`, of a normalized state
/// (tolerance 1e−9 on the conjugation norm).
///
/// For quaternionic states the image has unit Euclidean norm — a point of
/// S⁴. For coquaternionic states the Euclidean norm is not conserved; the
/// conserved combination is indefinite, and the map is exploratory there.
pub fn hopf_map(state: &SpinorQ) -> Result<[f64; 5], SpectralError> {
    let norm = state.norm();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(SpectralError::NotNormalized { norm });
    }
    let sig = state.sig();
    let mut n = [0.0; 5];
    for (slot, l) in n.iter_mut().zip(1..=5usize) {
        let sigma = pauli(l, sig).expect("index in range");
        let applied = sigma.apply(state).expect("signatures agree");
        // ⟨z|w⟩ = z̄1w1 + z̄2w2; the expectation is its scalar part.
        *slot = (state.z1.conj() * applied[0] + state.z2.conj() * applied[1]).q0;
    }
    Ok(n)
}

/// Classic Bloch vector `(n1, n2, n3)` of a state with complex components
/// (`j` and `k` parts exactly zero): the S³ → S² Hopf map.
pub fn hopf_map_s2(state: &SpinorQ) -> Result<[f64; 3], SpectralError> {
    let complex_only = |z: &HyperComplex| z.q2 == 0.0 && z.q3 == 0.0;
    if !(complex_only(&state.z1) && complex_only(&state.z2)) {
        return Err(SpectralError::NonComplexState);
    }
    let n = hopf_map(state)?;
    Ok([n[0], n[1], n[2]])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature::Quaternion;

    fn euclid_norm(v: &[f64]) -> f64 {
        v.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    const ANGLES: [[f64; 4]; 5] = [
        [0.7, 1.1, 0.4, 2.0],
        [2.3, -0.6, 1.9, 0.3],
        [1.2, 3.0, -1.4, -2.2],
        [0.1, 0.0, 0.0, 0.0],
        [2.9, 5.1, 2.6, 1.7],
    ];

    #[test]
    fn angle_parametrization_hits_the_poles() {
        let north = state_from_angles(0.0, 0.0, 0.0, 0.0);
        assert_eq!(north.z1(), HyperComplex::one(Quaternion));
        assert_eq!(north.z2(), HyperComplex::zero(Quaternion));

        let south = state_from_angles(std::f64::consts::PI, 0.0, 0.3, 1.8);
        assert!(south.z1().euclid2() < 1e-30);
        assert!((south.z2() - HyperComplex::one(Quaternion)).euclid2() < 1e-30);
    }

    #[test]
    fn angle_parametrization_is_normalized() {
        for [theta, p1, p2, p3] in ANGLES {
            let z = state_from_angles(theta, p1, p2, p3);
            assert!((z.norm() - 1.0).abs() < 1e-12, "{theta} {p1} {p2} {p3}");
        }
    }

    #[test]
    fn hopf_map_examples() {
        let north = SpinorQ::new(
            HyperComplex::one(Quaternion),
            HyperComplex::zero(Quaternion),
        )
        .unwrap();
        assert_eq!(hopf_map(&north).unwrap(), [0.0, 0.0, 1.0, 0.0, 0.0]);
        assert_eq!(hopf_map_s2(&north).unwrap(), [0.0, 0.0, 1.0]);

        let x = 1.0 / 2.0_f64.sqrt();
        let equator = SpinorQ::new(
            HyperComplex::real(Quaternion, x),
            HyperComplex::real(Quaternion, x),
        )
        .unwrap();
        let n = hopf_map(&equator).unwrap();
        assert!((n[0] - 1.0).abs() < 1e-15);
        for c in &n[1..] {
            assert!(c.abs() < 1e-15);
        }
    }

    #[test]
    fn image_lies_on_the_four_sphere_with_polar_angle_theta() {
        for [theta, p1, p2, p3] in ANGLES {
            let z = state_from_angles(theta, p1, p2, p3);
            let n = hopf_map(&z).unwrap();
            assert!((euclid_norm(&n) - 1.0).abs() < 1e-12);
            // Spherical-coordinate reading of the image point.
            let expected = [
                theta.sin() * p1.cos(),
                theta.sin() * p1.sin() * p2.cos(),
                theta.cos(),
                theta.sin() * p1.sin() * p2.sin() * p3.cos(),
                theta.sin() * p1.sin() * p2.sin() * p3.sin(),
            ];
            for (got, want) in n.iter().zip(expected) {
                assert!((got - want).abs() < 1e-12, "{n:?} vs θ={theta}");
            }
        }
    }

    #[test]
    fn image_is_invariant_on_fibers() {
        for [theta, p1, p2, p3] in ANGLES {
            let z = state_from_angles(theta, p1, p2, p3);
            let n = hopf_map(&z).unwrap();

            // Right phase in the preferred complex direction...
            let phase = (HyperComplex::i(Quaternion) * 0.83).exp();
            let rotated = z.right_mul(phase).unwrap();
            let m = hopf_map(&rotated).unwrap();
            for (a, b) in n.iter().zip(m) {
                assert!((a - b).abs() < 1e-12);
            }

            // ...and a general right unit scalar leave the image unchanged.
            let unit = HyperComplex::new(Quaternion, 0.0, 0.6, -1.1, 0.9).exp();
            let moved = z.right_mul(unit).unwrap();
            assert!((moved.norm() - 1.0).abs() < 1e-12);
            let m = hopf_map(&moved).unwrap();
            for (a, b) in n.iter().zip(m) {
                assert!((a - b).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn unnormalized_states_are_rejected() {
        let z = SpinorQ::new(
            HyperComplex::one(Quaternion),
            HyperComplex::one(Quaternion),
        )
        .unwrap();
        assert!(matches!(
            hopf_map(&z),
            Err(SpectralError::NotNormalized { norm }) if (norm - 2.0).abs() < 1e-15
        ));
    }

    #[test]
    fn s2_reduction_requires_complex_components() {
        let x = 1.0 / 2.0_f64.sqrt();
        let with_j = SpinorQ::new(
            HyperComplex::real(Quaternion, x),
            HyperComplex::j(Quaternion) * x,
        )
        .unwrap();
        // The full map is defined...
        let n = hopf_map(&with_j).unwrap();
        assert!((euclid_norm(&n) - 1.0).abs() < 1e-12);
        // ...but the complex reduction refuses.
        assert!(matches!(
            hopf_map_s2(&with_j),
            Err(SpectralError::NonComplexState)
        ));

        let complex_state = SpinorQ::new(
            HyperComplex::real(Quaternion, x),
            HyperComplex::i(Quaternion) * x,
        )
        .unwrap();
        // (1, i)/√2 is the +1 eigenstate of σ2.
        let b = hopf_map_s2(&complex_state).unwrap();
        assert!((b[1] - 1.0).abs() < 1e-15, "{b:?}");
        assert!(b[0].abs() < 1e-15 && b[2].abs() < 1e-15);
    }

    #[test]
    fn mixed_signature_states_are_rejected() {
        assert!(matches!(
            SpinorQ::new(
                HyperComplex::one(Quaternion),
                HyperComplex::zero(crate::algebra::Signature::Coquaternion),
            ),
            Err(SpectralError::SignatureMismatch(..))
        ));
    }
}
