//! Deterministic runtime verification of the algebra and flow laws.
//!
//! The suite re-derives the load-bearing identities — basis product tables,
//! associativity, the conjugation anti-homomorphism, norm multiplicativity,
//! the faithful matrix representation and its determinant oracle, polar
//! reconstruction, the exponential cross-check, and the flow equivalences —
//! against fixed pseudo-random samples. Seeds are pinned, so repeated runs
//! are bit-identical. Checks run in order and the first failure is reported
//! by name.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{HyperComplex, Signature};
use crate::dynamics::{rhs, FlowKind};
use crate::hamiltonian::{parse_analytic, HamiltonianSpec, PhasePoint, Term};

/// Fault injection for exercising the failure path end to end.
#[derive(Clone, Copy, Debug, Default)]
pub struct FaultInjection {
    /// Corrupt one basis product before the table comparison, forcing the
    /// "mul-table" check to fail.
    pub corrupt_mul_table: bool,
}

/// First failing check, by name, with a detail line.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("self-check \"{name}\" failed: {detail}")]
pub struct CheckFailure {
    pub name: &'static str,
    pub detail: String,
}

type Check = fn(&FaultInjection) -> Result<(), String>;

const CHECKS: [(&str, Check); 10] = [
    ("mul-table", check_mul_table),
    ("assoc", check_assoc),
    ("conj-anti-hom", check_conj_anti_hom),
    ("norm2-mult", check_norm2_mult),
    ("matrix-hom", check_matrix_hom),
    ("det-oracle", check_det_oracle),
    ("polar-reconstruct", check_polar_reconstruct),
    ("exp-matrix", check_exp_matrix),
    ("flow-equivalence", check_flow_equivalence),
    ("flow-reduction", check_flow_reduction),
];

/// Run every check in order, stopping at the first failure. Returns the
/// names of the checks that passed.
pub fn run(faults: &FaultInjection) -> Result<Vec<&'static str>, CheckFailure> {
    let mut passed = Vec::with_capacity(CHECKS.len());
    for (name, check) in CHECKS {
        check(faults).map_err(|detail| CheckFailure { name, detail })?;
        passed.push(name);
    }
    Ok(passed)
}

fn basis(sig: Signature, idx: usize) -> HyperComplex {
    match idx {
        0 => HyperComplex::one(sig),
        1 => HyperComplex::i(sig),
        2 => HyperComplex::j(sig),
        3 => HyperComplex::k(sig),
        _ => unreachable!(),
    }
}

fn sample(rng: &mut ChaCha8Rng, sig: Signature, range: f64) -> HyperComplex {
    HyperComplex::new(
        sig,
        rng.gen_range(-range..range),
        rng.gen_range(-range..range),
        rng.gen_range(-range..range),
        rng.gen_range(-range..range),
    )
}

fn check_mul_table(faults: &FaultInjection) -> Result<(), String> {
    // Independent copies of both product tables as (basis index, sign).
    const QUATERNION: [[(usize, f64); 4]; 4] = [
        [(0, 1.0), (1, 1.0), (2, 1.0), (3, 1.0)],
        [(1, 1.0), (0, -1.0), (3, 1.0), (2, -1.0)],
        [(2, 1.0), (3, -1.0), (0, -1.0), (1, 1.0)],
        [(3, 1.0), (2, 1.0), (1, -1.0), (0, -1.0)],
    ];
    const COQUATERNION: [[(usize, f64); 4]; 4] = [
        [(0, 1.0), (1, 1.0), (2, 1.0), (3, 1.0)],
        [(1, 1.0), (0, -1.0), (3, 1.0), (2, -1.0)],
        [(2, 1.0), (3, -1.0), (0, 1.0), (1, -1.0)],
        [(3, 1.0), (2, 1.0), (1, 1.0), (0, 1.0)],
    ];
    for (sig, table) in [
        (Signature::Quaternion, QUATERNION),
        (Signature::Coquaternion, COQUATERNION),
    ] {
        for (r, row) in table.iter().enumerate() {
            for (c, &(idx, sign)) in row.iter().enumerate() {
                let mut product = basis(sig, r) * basis(sig, c);
                if faults.corrupt_mul_table && (r, c) == (1, 2) {
                    product = -product;
                }
                let expected = basis(sig, idx) * sign;
                if product != expected {
                    return Err(format!(
                        "{sig:?} basis product ({r}, {c}): got {product}, expected {expected}"
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_assoc(_: &FaultInjection) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    for sig in [Signature::Quaternion, Signature::Coquaternion] {
        for _ in 0..200 {
            let (a, b, c) = (
                sample(&mut rng, sig, 2.0),
                sample(&mut rng, sig, 2.0),
                sample(&mut rng, sig, 2.0),
            );
            let lhs = (a * b) * c;
            let rhs_v = a * (b * c);
            let diff = (lhs - rhs_v).euclid2().sqrt();
            let scale = 1.0 + lhs.euclid2().sqrt();
            if diff > 1e-12 * scale {
                return Err(format!("{sig:?}: |(ab)c − a(bc)| = {diff}"));
            }
        }
    }
    Ok(())
}

fn check_conj_anti_hom(_: &FaultInjection) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    for sig in [Signature::Quaternion, Signature::Coquaternion] {
        for _ in 0..200 {
            let (a, b) = (sample(&mut rng, sig, 2.0), sample(&mut rng, sig, 2.0));
            let diff = ((a * b).conj() - b.conj() * a.conj()).euclid2().sqrt();
            if diff > 1e-12 * (1.0 + (a * b).euclid2().sqrt()) {
                return Err(format!("{sig:?}: |conj(ab) − conj(b)conj(a)| = {diff}"));
            }
        }
    }
    Ok(())
}

fn check_norm2_mult(_: &FaultInjection) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    for sig in [Signature::Quaternion, Signature::Coquaternion] {
        for _ in 0..200 {
            let (a, b) = (sample(&mut rng, sig, 2.0), sample(&mut rng, sig, 2.0));
            let lhs = (a * b).norm2();
            let rhs_v = a.norm2() * b.norm2();
            if (lhs - rhs_v).abs() > 1e-11 * (1.0 + lhs.abs()) {
                return Err(format!("{sig:?}: |q̄q(ab) − q̄q(a)q̄q(b)| at {lhs} vs {rhs_v}"));
            }
        }
    }
    Ok(())
}

fn check_matrix_hom(_: &FaultInjection) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0004);
    for sig in [Signature::Quaternion, Signature::Coquaternion] {
        for _ in 0..200 {
            let (a, b) = (sample(&mut rng, sig, 2.0), sample(&mut rng, sig, 2.0));
            let diff = (a * b)
                .to_matrix()
                .max_abs_diff(&a.to_matrix().mul(&b.to_matrix()));
            if diff > 1e-12 * (1.0 + (a * b).euclid2().sqrt()) {
                return Err(format!("{sig:?}: ‖M(ab) − M(a)M(b)‖∞ = {diff}"));
            }
        }
    }
    Ok(())
}

fn check_det_oracle(_: &FaultInjection) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for sig in [Signature::Quaternion, Signature::Coquaternion] {
        for _ in 0..200 {
            let q = sample(&mut rng, sig, 2.0);
            let diff = (q.to_matrix().det() - q.norm2()).abs();
            if diff > 1e-10 * (1.0 + q.norm2().abs()) {
                return Err(format!("{sig:?}: |det M(q) − q̄q| = {diff}"));
            }
        }
    }
    Ok(())
}

fn check_polar_reconstruct(_: &FaultInjection) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for sig in [Signature::Quaternion, Signature::Coquaternion] {
        let mut done = 0;
        while done < 200 {
            let q = sample(&mut rng, sig, 2.0);
            // Stay clearly off the null cone, where reconstruction is exact
            // but a different branch applies.
            if q.norm2().abs() < 1e-3 || q.imaginary_norm2().abs() < 1e-3 {
                continue;
            }
            done += 1;
            let polar = q.polar().map_err(|e| format!("{sig:?}: {e} for {q}"))?;
            let back = polar.reconstruct();
            let diff = (q - back).euclid2().sqrt();
            if diff > 1e-10 * (1.0 + q.euclid2().sqrt()) {
                return Err(format!("{sig:?}: |q − reconstruct(polar(q))| = {diff}"));
            }
        }
    }
    Ok(())
}

fn check_exp_matrix(_: &FaultInjection) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    for sig in [Signature::Quaternion, Signature::Coquaternion] {
        for _ in 0..200 {
            let q = sample(&mut rng, sig, 1.5);
            let direct = q.exp().to_matrix();
            let via_matrix = q.to_matrix().exp();
            let diff = direct.max_abs_diff(&via_matrix);
            if diff > 1e-9 * (1.0 + q.exp().euclid2().sqrt()) {
                return Err(format!("{sig:?}: ‖M(exp q) − exp M(q)‖∞ = {diff}"));
            }
        }
    }
    Ok(())
}

fn random_point(rng: &mut ChaCha8Rng) -> PhasePoint {
    PhasePoint::new(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
    )
}

fn max_coord_diff(a: &PhasePoint, b: &PhasePoint) -> f64 {
    a.coords()
        .iter()
        .zip(b.coords())
        .fold(0.0f64, |acc, (x, y)| acc.max((x - y).abs()))
}

fn check_flow_equivalence(_: &FaultInjection) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for source in ["0.5*(p^2 + x^2)", "0.5*p^2 + x^3"] {
        // Both flows read the real component of the analytic expansion: the
        // equivalence claim identifies the complexified flow of H0 with the
        // real-sector flow of the same H0.
        let h = parse_analytic(source)
            .map_err(|e| format!("parse {source:?}: {e}"))?
            .expand(Signature::Coquaternion)
            .real_part();
        for _ in 0..100 {
            let s = random_point(&mut rng);
            let a = rhs(FlowKind::ComplexifiedClassical, &h, &s)
                .map_err(|e| e.to_string())?;
            let b = rhs(FlowKind::CoquaternionicReal, &h, &s).map_err(|e| e.to_string())?;
            let diff = max_coord_diff(&a, &b);
            if diff > 1e-12 {
                return Err(format!("{source}: velocity mismatch {diff}"));
            }
        }
    }
    Ok(())
}

fn check_flow_reduction(_: &FaultInjection) -> Result<(), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    let sig = Signature::Coquaternion;

    // Complex-valued Hamiltonian (no j or k component): the full flow must
    // restrict to the complex-sector flow.
    let complex_h = parse_analytic("(1 + 0.5i)*x^2*p + 2i*p^2 + i*x")
        .map_err(|e| e.to_string())?
        .expand(sig);
    // Real-valued Hamiltonian: the complex-sector flow must restrict to the
    // real-sector flow.
    let real_h = HamiltonianSpec::new(
        sig,
        &[
            Term::new(HyperComplex::real(sig, 0.5), [2, 0, 0, 0]),
            Term::new(HyperComplex::real(sig, -1.3), [0, 1, 0, 2]),
            Term::new(HyperComplex::real(sig, 0.7), [1, 1, 1, 0]),
        ],
    )
    .map_err(|e| e.to_string())?;

    for _ in 0..100 {
        let s = random_point(&mut rng);
        let full = rhs(FlowKind::CoquaternionicFull, &complex_h, &s).map_err(|e| e.to_string())?;
        let complex = rhs(FlowKind::CoquaternionicComplex, &complex_h, &s)
            .map_err(|e| e.to_string())?;
        let diff = max_coord_diff(&full, &complex);
        if diff > 1e-14 {
            return Err(format!("full vs complex sector: {diff}"));
        }

        let complex = rhs(FlowKind::CoquaternionicComplex, &real_h, &s)
            .map_err(|e| e.to_string())?;
        let real = rhs(FlowKind::CoquaternionicReal, &real_h, &s).map_err(|e| e.to_string())?;
        let diff = max_coord_diff(&complex, &real);
        if diff > 1e-14 {
            return Err(format!("complex vs real sector: {diff}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pristine_run_passes_every_check() {
        let passed = run(&FaultInjection::default()).unwrap();
        assert_eq!(passed.len(), CHECKS.len());
        assert_eq!(passed[0], "mul-table");
    }

    #[test]
    fn runs_are_deterministic() {
        let a = run(&FaultInjection::default()).unwrap();
        let b = run(&FaultInjection::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn corrupted_table_is_caught_and_named() {
        let failure = run(&FaultInjection {
            corrupt_mul_table: true,
        })
        .unwrap_err();
        assert_eq!(failure.name, "mul-table");
        assert!(failure.detail.contains("basis product"));
    }
}
