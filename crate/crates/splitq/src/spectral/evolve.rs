//! Heisenberg-picture dynamics of two-level observables.
//!
//! With `i` fixed as the preferred complex unit, an observable evolves as
//! `σ(t) = U† σ U`, `U = exp(−i Ĥ t)`. Because the imaginary units do not
//! commute, even a Hamiltonian proportional to the identity drives motion:
//! `Ĥ = ½ω·1` rotates σ4 into σ5 at frequency ω — a Rabi oscillation with
//! vanishing energy gap.
//!
//! The propagator is evaluated in the faithful real matrix representation
//! (2×2 blocks per coquaternion entry, 4×4 per quaternion entry), where the
//! exponential is computed by scaling and squaring. `dt` caps the generator
//! norm handed to a single exponential: the interval splits into `⌈|t|/dt⌉`
//! equal sub-propagators, whose product is the exact propagator because a
//! generator commutes with itself. The result is mapped back to hypercomplex
//! entries and the conjugation `U† σ U` is carried out with hypercomplex
//! products — the real transpose is *not* the representation of the
//! hypercomplex adjoint, so the adjoint is taken entrywise instead.

use nalgebra::DMatrix;

use crate::algebra::{HyperComplex, MatrixRep, Signature};

use super::{mat_mul, HMatrix2, SpectralError};

/// Coefficients `(cos ωt, sin ωt)` of the zero-gap Rabi oscillation
/// `σ4(t) = cos(ωt) σ4 + sin(ωt) σ5` generated by `Ĥ = ½ω·1`.
pub fn rabi(omega: f64, t: f64) -> (f64, f64) {
    let angle = omega * t;
    (angle.cos(), angle.sin())
}

/// Evolve `obs` to time `t` in the Heisenberg picture generated by `h`.
///
/// `dt` must be positive and finite; it bounds the sub-interval handed to
/// each matrix exponential. `t` may be any real number (negative values
/// evolve backwards; zero returns the observable unchanged).
pub fn heisenberg_evolve(
    h: &HMatrix2,
    obs: &HMatrix2,
    t: f64,
    dt: f64,
) -> Result<HMatrix2, SpectralError> {
    if !(dt.is_finite() && dt > 0.0) {
        return Err(SpectralError::StepSizeInvalid { dt });
    }
    if h.sig() != obs.sig() {
        return Err(SpectralError::SignatureMismatch(h.sig(), obs.sig()));
    }
    if t == 0.0 {
        return Ok(*obs);
    }
    let sig = h.sig();

    // Generator −iĤ, assembled entrywise with the algebra's own product.
    let minus_i = -HyperComplex::i(sig);
    let generator = h.entries().map(|row| row.map(|e| minus_i * e));

    let steps = (t.abs() / dt).ceil().max(1.0) as usize;
    let step_matrix = to_real(&generator, sig) * (t / steps as f64);
    let u_step = step_matrix.exp();
    let dim = u_step.nrows();
    let mut u = DMatrix::<f64>::identity(dim, dim);
    for _ in 0..steps {
        u = &u * &u_step;
    }

    let u_entries = from_real(&u, sig);
    let u_dagger = adjoint(&u_entries);
    let evolved = mat_mul(&u_dagger, &mat_mul(&obs.entries(), &u_entries));
    Ok(HMatrix2::from_entries_unchecked(evolved, sig))
}

fn block_size(sig: Signature) -> usize {
    match sig {
        Signature::Coquaternion => 2,
        Signature::Quaternion => 4,
    }
}

/// Flatten a 2×2 hypercomplex matrix into its real block representation.
/// Blockwise flattening is an algebra homomorphism because the per-entry
/// representation is one and matrix products only add and multiply entries.
pub(crate) fn to_real(entries: &[[HyperComplex; 2]; 2], sig: Signature) -> DMatrix<f64> {
    let b = block_size(sig);
    let mut m = DMatrix::zeros(2 * b, 2 * b);
    for r in 0..2 {
        for c in 0..2 {
            match entries[r][c].to_matrix() {
                MatrixRep::Split(blk) => m.view_mut((r * b, c * b), (b, b)).copy_from(&blk),
                MatrixRep::Pauli(blk) => m.view_mut((r * b, c * b), (b, b)).copy_from(&blk),
            }
        }
    }
    m
}

/// Recover hypercomplex entries from real blocks. Each component is read as
/// the average over all of its block positions, which projects rounding
/// noise back onto the represented subalgebra.
fn from_real(m: &DMatrix<f64>, sig: Signature) -> [[HyperComplex; 2]; 2] {
    let b = block_size(sig);
    let entry = |r: usize, c: usize| -> HyperComplex {
        let blk = m.view((r * b, c * b), (b, b));
        match sig {
            Signature::Coquaternion => HyperComplex::new(
                sig,
                (blk[(0, 0)] + blk[(1, 1)]) / 2.0,
                (blk[(0, 1)] - blk[(1, 0)]) / 2.0,
                (blk[(0, 1)] + blk[(1, 0)]) / 2.0,
                (blk[(0, 0)] - blk[(1, 1)]) / 2.0,
            ),
            Signature::Quaternion => HyperComplex::new(
                sig,
                (blk[(0, 0)] + blk[(1, 1)] + blk[(2, 2)] + blk[(3, 3)]) / 4.0,
                (-blk[(0, 1)] + blk[(1, 0)] + blk[(2, 3)] - blk[(3, 2)]) / 4.0,
                (blk[(0, 2)] + blk[(1, 3)] - blk[(2, 0)] - blk[(3, 1)]) / 4.0,
                (-blk[(0, 3)] + blk[(1, 2)] - blk[(2, 1)] + blk[(3, 0)]) / 4.0,
            ),
        }
    };
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

/// Conjugate transpose with the hypercomplex conjugation.
fn adjoint(entries: &[[HyperComplex; 2]; 2]) -> [[HyperComplex; 2]; 2] {
    [
        [entries[0][0].conj(), entries[1][0].conj()],
        [entries[0][1].conj(), entries[1][1].conj()],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature::{Coquaternion, Quaternion};
    use crate::spectral::{build_h, pauli, TwoLevelParams};

    fn scaled_identity(sig: Signature, value: f64) -> HMatrix2 {
        let half = HyperComplex::real(sig, value);
        let zero = HyperComplex::zero(sig);
        HMatrix2::from_entries([[half, zero], [zero, half]]).unwrap()
    }

    #[test]
    fn rabi_coefficients() {
        assert_eq!(rabi(1.4, 0.0), (1.0, 0.0));
        let (c4, c5) = rabi(2.0, std::f64::consts::FRAC_PI_4);
        assert!(c4.abs() < 1e-15);
        assert!((c5 - 1.0).abs() < 1e-15);
        let (c4, c5) = rabi(1.0, std::f64::consts::PI);
        assert!((c4 + 1.0).abs() < 1e-15);
        assert!(c5.abs() < 1e-15);
        for t in [0.3, 1.9, -4.4] {
            let (c4, c5) = rabi(0.8, t);
            assert!((c4 * c4 + c5 * c5 - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn round_trip_through_the_real_representation() {
        for sig in [Quaternion, Coquaternion] {
            let entries = [
                [
                    HyperComplex::new(sig, 0.3, -1.1, 0.7, 0.2),
                    HyperComplex::new(sig, 1.4, 0.5, -0.9, 0.8),
                ],
                [
                    HyperComplex::new(sig, -0.6, 0.1, 0.4, -1.3),
                    HyperComplex::new(sig, 0.9, 2.0, 0.0, -0.5),
                ],
            ];
            let back = from_real(&to_real(&entries, sig), sig);
            for (a, b) in entries.iter().flatten().zip(back.iter().flatten()) {
                for (x, y) in a.components().iter().zip(b.components()) {
                    assert!((x - y).abs() < 1e-14, "{sig:?}: {a} vs {b}");
                }
            }

            // And the flattening is multiplicative.
            let product = mat_mul(&entries, &entries);
            let real_product = to_real(&entries, sig) * to_real(&entries, sig);
            let diff = (to_real(&product, sig) - real_product)
                .iter()
                .fold(0.0f64, |acc, x| acc.max(x.abs()));
            assert!(diff < 1e-12, "{sig:?}: {diff}");
        }
    }

    #[test]
    fn identity_hamiltonian_generates_the_rabi_rotation() {
        // Ĥ = ½ω·1 turns σ4 into cos(ωt)σ4 + sin(ωt)σ5 in both signatures.
        let omega = 1.3;
        for sig in [Quaternion, Coquaternion] {
            let h = scaled_identity(sig, omega / 2.0);
            let s4 = pauli(4, sig).unwrap();
            let s5 = pauli(5, sig).unwrap();
            for t in [0.0, 0.4, std::f64::consts::FRAC_PI_2 / omega, 3.7] {
                let evolved = heisenberg_evolve(&h, &s4, t, 1e-2).unwrap();
                let (c4, c5) = rabi(omega, t);
                let mut expected = [[HyperComplex::zero(sig); 2]; 2];
                for r in 0..2 {
                    for c in 0..2 {
                        expected[r][c] = s4.entry(r, c) * c4 + s5.entry(r, c) * c5;
                    }
                }
                let diff = HMatrix2::from_entries_unchecked(expected, sig)
                    .max_abs_diff(&evolved);
                assert!(diff < 1e-9, "{sig:?} t={t}: {diff}");
            }
        }
    }

    #[test]
    fn larmor_precession_about_sigma3() {
        // Ĥ = σ3 gives U = diag(e^{−it}, e^{it}) and rotates σ1 into
        // cos(2t)σ1 − sin(2t)σ2.
        for sig in [Quaternion, Coquaternion] {
            let h = build_h(&TwoLevelParams::new(0.0, 1.0, HyperComplex::zero(sig)));
            let s1 = pauli(1, sig).unwrap();
            let s2 = pauli(2, sig).unwrap();
            for t in [0.37, 1.1] {
                let evolved = heisenberg_evolve(&h, &s1, t, 1e-2).unwrap();
                let mut expected = [[HyperComplex::zero(sig); 2]; 2];
                for r in 0..2 {
                    for c in 0..2 {
                        expected[r][c] = s1.entry(r, c) * (2.0 * t).cos()
                            - s2.entry(r, c) * (2.0 * t).sin();
                    }
                }
                let diff = HMatrix2::from_entries_unchecked(expected, sig)
                    .max_abs_diff(&evolved);
                assert!(diff < 1e-9, "{sig:?} t={t}: {diff}");
            }
        }
    }

    #[test]
    fn identity_observable_is_frozen() {
        // With entries in the preferred complex span, U is unitary and the
        // identity commutes with it. (Entries with j or k parts make the
        // generator's adjoint fail to be anti-Hermitian, and the conjugated
        // identity picks up the defect U†U — frozen-ness is specific to the
        // complex-commutant sector.)
        let h = build_h(&TwoLevelParams::new(
            0.3,
            -0.8,
            HyperComplex::new(Coquaternion, 0.2, 1.0, 0.0, 0.0),
        ));
        let id = HMatrix2::identity(Coquaternion);
        let evolved = heisenberg_evolve(&h, &id, 2.1, 1e-2).unwrap();
        assert!(evolved.max_abs_diff(&id) < 1e-10);
    }

    #[test]
    fn zero_time_returns_the_observable_unchanged() {
        let h = scaled_identity(Quaternion, 1.0);
        let s4 = pauli(4, Quaternion).unwrap();
        let evolved = heisenberg_evolve(&h, &s4, 0.0, 0.1).unwrap();
        assert_eq!(evolved.max_abs_diff(&s4), 0.0);
    }

    #[test]
    fn invalid_steps_and_mixed_signatures_are_rejected() {
        let h = scaled_identity(Quaternion, 1.0);
        let s4 = pauli(4, Quaternion).unwrap();
        for dt in [0.0, -0.5, f64::NAN, f64::INFINITY] {
            assert!(matches!(
                heisenberg_evolve(&h, &s4, 1.0, dt),
                Err(SpectralError::StepSizeInvalid { .. })
            ));
        }
        let other = pauli(4, Coquaternion).unwrap();
        assert!(matches!(
            heisenberg_evolve(&h, &other, 1.0, 0.1),
            Err(SpectralError::SignatureMismatch(..))
        ));
    }
}
