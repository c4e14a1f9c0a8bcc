//! Fixed-step integrators for the flow families.
//!
//! Classical fourth-order Runge–Kutta applies to every [`FlowKind`]. The
//! symplectic leapfrog (kick–drift–kick Strang splitting) applies to the
//! three canonical-pair kinds when `H = T(p) + V(x)`: each half flow is then
//! exactly solvable, and the composition preserves the flow's symplectic
//! structure, so energy errors oscillate instead of drifting.

use crate::algebra::HyperComplex;
use crate::hamiltonian::{HamiltonianSpec, PhasePoint, Term};

use super::{rhs_unchecked, DynamicsError, FlowKind, Trajectory};

/// Integration scheme for [`integrate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Rk4,
    SymplecticLeapfrog,
}

/// Integrate from `s0` to within one step of `t_end`, recording every step.
pub fn integrate(
    kind: FlowKind,
    h: &HamiltonianSpec,
    s0: &PhasePoint,
    t_end: f64,
    dt: f64,
    method: Method,
) -> Result<Trajectory, DynamicsError> {
    let steps = step_count(t_end, dt)?;
    let mut traj = Trajectory::with_capacity(steps + 1);
    integrate_observed(kind, h, s0, t_end, dt, method, |t, s, e| {
        traj.push(t, s, e);
    })?;
    Ok(traj)
}

/// Streaming form of [`integrate`]: invokes `observe(t, state, energy)` at
/// the initial point and after every step, returning the final state. Keeps
/// memory flat for long runs.
pub fn integrate_observed(
    kind: FlowKind,
    h: &HamiltonianSpec,
    s0: &PhasePoint,
    t_end: f64,
    dt: f64,
    method: Method,
    mut observe: impl FnMut(f64, PhasePoint, HyperComplex),
) -> Result<PhasePoint, DynamicsError> {
    let steps = step_count(t_end, dt)?;
    kind.check_compatible(h)?;

    let stepper: Box<dyn Fn(&[f64; 4]) -> [f64; 4]> = match method {
        Method::Rk4 => Box::new(move |y| rk4_step(kind, h, y, dt)),
        Method::SymplecticLeapfrog => {
            if !matches!(
                kind,
                FlowKind::ComplexifiedClassical
                    | FlowKind::Quaternionic
                    | FlowKind::CoquaternionicReal
            ) {
                return Err(DynamicsError::UnsupportedMethod { kind });
            }
            let (kinetic, potential) = split_separable(h)?;
            Box::new(move |y| leapfrog_step(kind, &kinetic, &potential, y, dt))
        }
    };

    let mut state = *s0;
    observe(0.0, state, h.eval(&state));
    for step in 1..=steps {
        let t = step as f64 * dt;
        let next = stepper(&state.coords());
        if !next.iter().all(|c| c.is_finite()) {
            return Err(DynamicsError::NonFinite { t });
        }
        state = PhasePoint::from_coords(next);
        observe(t, state, h.eval(&state));
    }
    Ok(state)
}

fn step_count(t_end: f64, dt: f64) -> Result<usize, DynamicsError> {
    if !(dt.is_finite() && t_end.is_finite() && dt > 0.0 && t_end > 0.0) {
        return Err(DynamicsError::StepSizeInvalid { dt, t_end });
    }
    // Lands within one step of the requested horizon.
    Ok((t_end / dt).round().max(1.0) as usize)
}

// The stage arithmetic below runs on raw coordinate arrays rather than
// `PhasePoint`s: intermediate stages of a diverging orbit may overflow, and
// only the accepted end-of-step state is subject to the finiteness check.
fn rk4_step(kind: FlowKind, h: &HamiltonianSpec, y: &[f64; 4], dt: f64) -> [f64; 4] {
    let k1 = rhs_unchecked(kind, h, y);
    let k2 = rhs_unchecked(kind, h, &offset(y, &k1, dt / 2.0));
    let k3 = rhs_unchecked(kind, h, &offset(y, &k2, dt / 2.0));
    let k4 = rhs_unchecked(kind, h, &offset(y, &k3, dt));
    let mut out = [0.0; 4];
    for c in 0..4 {
        out[c] = y[c] + dt / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
    }
    out
}

fn offset(y: &[f64; 4], k: &[f64; 4], scale: f64) -> [f64; 4] {
    [
        y[0] + scale * k[0],
        y[1] + scale * k[1],
        y[2] + scale * k[2],
        y[3] + scale * k[3],
    ]
}

/// Split into kinetic (p-only) and potential (x-only) parts; constants join
/// the potential.
fn split_separable(
    h: &HamiltonianSpec,
) -> Result<(HamiltonianSpec, HamiltonianSpec), DynamicsError> {
    let mut kinetic: Vec<Term> = Vec::new();
    let mut potential: Vec<Term> = Vec::new();
    for &term in h.terms() {
        let depends_on_x = term.powers[0] != 0 || term.powers[2] != 0;
        let depends_on_p = term.powers[1] != 0 || term.powers[3] != 0;
        match (depends_on_x, depends_on_p) {
            (true, true) => return Err(DynamicsError::NonSeparable),
            (false, true) => kinetic.push(term),
            _ => potential.push(term),
        }
    }
    let sig = h.sig();
    Ok((
        HamiltonianSpec::new(sig, &kinetic).expect("terms already validated"),
        HamiltonianSpec::new(sig, &potential).expect("terms already validated"),
    ))
}

/// Kick–drift–kick step. The potential flow only moves the momentum rows and
/// the kinetic flow only moves the position rows, each exactly, because the
/// frozen variables make the respective right-hand sides constant.
fn leapfrog_step(
    kind: FlowKind,
    kinetic: &HamiltonianSpec,
    potential: &HamiltonianSpec,
    y: &[f64; 4],
    dt: f64,
) -> [f64; 4] {
    let kick = rhs_unchecked(kind, potential, y);
    let half = offset(y, &kick, dt / 2.0);
    let drift = rhs_unchecked(kind, kinetic, &half);
    let moved = offset(&half, &drift, dt);
    let kick = rhs_unchecked(kind, potential, &moved);
    offset(&moved, &kick, dt / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature::{self, Coquaternion};
    use crate::dynamics::energy_drift;

    fn real_spec(sig: Signature, terms: &[(f64, [u8; 4])]) -> HamiltonianSpec {
        let terms: Vec<Term> = terms
            .iter()
            .map(|&(c, powers)| Term::new(HyperComplex::real(sig, c), powers))
            .collect();
        HamiltonianSpec::new(sig, &terms).unwrap()
    }

    /// H = ½(x0² + p0² − x1² − p1²): the coquaternionic oscillator, whose
    /// flow rotates both pairs with period 2π.
    fn split_oscillator() -> HamiltonianSpec {
        real_spec(
            Coquaternion,
            &[
                (0.5, [2, 0, 0, 0]),
                (0.5, [0, 2, 0, 0]),
                (-0.5, [0, 0, 2, 0]),
                (-0.5, [0, 0, 0, 2]),
            ],
        )
    }

    #[test]
    fn oscillator_orbit_closes_after_one_period() {
        let h = split_oscillator();
        let s0 = PhasePoint::new(1.0, 0.0, 0.0, 0.0);
        let t_end = 2.0 * std::f64::consts::PI;
        // Steps land on multiples of dt, so pick dt dividing the period.
        let dt = t_end / 6283.0;
        for method in [Method::Rk4, Method::SymplecticLeapfrog] {
            let traj =
                integrate(FlowKind::CoquaternionicReal, &h, &s0, t_end, dt, method).unwrap();
            let last = traj.final_state().unwrap();
            for (a, b) in last.coords().iter().zip(s0.coords()) {
                assert!((a - b).abs() < 1e-5, "{method:?}: {a} vs {b}");
            }
            // Conserved indefinite energy.
            let (abs, _) = energy_drift(&traj).unwrap();
            assert!(abs < 1e-6, "{method:?}: drift {abs}");
        }
    }

    #[test]
    fn closed_form_rotation_of_all_four_components() {
        // Starting off the real slice, both pairs rotate at unit angular
        // speed: x0(t) = cos t, p0(t) = −sin t from (1, 0), and likewise for
        // the second pair from (0, 0, 0.5, 0).
        let h = split_oscillator();
        let s0 = PhasePoint::new(1.0, 0.0, 0.5, 0.0);
        let t_end = 1.7;
        let traj = integrate(
            FlowKind::CoquaternionicReal,
            &h,
            &s0,
            t_end,
            1e-3,
            Method::Rk4,
        )
        .unwrap();
        let last = traj.final_state().unwrap();
        // ẋ0 = p0, ṗ0 = −x0; ẋ1 = p1, ṗ1 = −x1 for this Hamiltonian.
        assert!((last.x0 - t_end.cos()).abs() < 1e-9);
        assert!((last.p0 + t_end.sin()).abs() < 1e-9);
        assert!((last.x1 - 0.5 * t_end.cos()).abs() < 1e-9);
        assert!((last.p1 + 0.5 * t_end.sin()).abs() < 1e-9);
    }

    #[test]
    fn step_size_validation() {
        let h = split_oscillator();
        let s0 = PhasePoint::new(1.0, 0.0, 0.0, 0.0);
        for (t_end, dt) in [(1.0, 0.0), (1.0, -0.1), (0.0, 0.1), (f64::NAN, 0.1)] {
            assert!(matches!(
                integrate(FlowKind::CoquaternionicReal, &h, &s0, t_end, dt, Method::Rk4),
                Err(DynamicsError::StepSizeInvalid { .. })
            ));
        }
    }

    #[test]
    fn leapfrog_requires_separable_h_and_a_canonical_kind() {
        let coupled = real_spec(Coquaternion, &[(1.0, [1, 1, 0, 0])]);
        let s0 = PhasePoint::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(
            integrate(
                FlowKind::CoquaternionicReal,
                &coupled,
                &s0,
                1.0,
                0.1,
                Method::SymplecticLeapfrog,
            )
            .err(),
            Some(DynamicsError::NonSeparable)
        );

        let h = split_oscillator();
        assert_eq!(
            integrate(
                FlowKind::CoquaternionicComplex,
                &h,
                &s0,
                1.0,
                0.1,
                Method::SymplecticLeapfrog,
            )
            .err(),
            Some(DynamicsError::UnsupportedMethod {
                kind: FlowKind::CoquaternionicComplex
            })
        );
    }

    #[test]
    fn escape_to_infinity_reports_non_finite() {
        // H = x0⁸ p0⁸ is wildly unstable from a generic start.
        let h = real_spec(Coquaternion, &[(1.0, [8, 8, 0, 0])]);
        let s0 = PhasePoint::new(2.0, 2.0, 0.0, 0.0);
        let err = integrate(
            FlowKind::ComplexCanonical,
            &h,
            &s0,
            10.0,
            0.5,
            Method::Rk4,
        )
        .unwrap_err();
        assert!(matches!(err, DynamicsError::NonFinite { .. }));
    }

    #[test]
    fn trajectory_bookkeeping() {
        let h = split_oscillator();
        let s0 = PhasePoint::new(1.0, 0.0, 0.0, 0.0);
        let traj = integrate(
            FlowKind::CoquaternionicReal,
            &h,
            &s0,
            1.0,
            0.25,
            Method::Rk4,
        )
        .unwrap();
        assert_eq!(traj.len(), 5);
        assert_eq!(traj.times()[0], 0.0);
        assert!((traj.times()[4] - 1.0).abs() < 1e-15);
        assert_eq!(traj.states().len(), traj.energies().len());
        assert!((traj.energies()[0].q0 - 0.5).abs() < 1e-15);
    }

    #[test]
    fn observer_sees_every_step() {
        let h = split_oscillator();
        let s0 = PhasePoint::new(1.0, 0.0, 0.0, 0.0);
        let mut count = 0;
        let last = integrate_observed(
            FlowKind::CoquaternionicReal,
            &h,
            &s0,
            1.0,
            0.1,
            Method::Rk4,
            |_, _, _| count += 1,
        )
        .unwrap();
        assert_eq!(count, 11);
        let traj = integrate(FlowKind::CoquaternionicReal, &h, &s0, 1.0, 0.1, Method::Rk4).unwrap();
        assert_eq!(traj.final_state().unwrap(), last);
    }
}
