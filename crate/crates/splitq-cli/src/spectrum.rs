//! The `spectrum` subcommand: a one-shot spectral report for the Hermitian
//! two-level family `[[s + t, q], [q̄, s − t]]`, printed as a single JSON
//! object on stdout.

use std::str::FromStr;

use clap::{Args, ValueEnum};
use serde::Serialize;
use splitq::algebra::{HyperComplex, Signature};
use splitq::dynamics::FixedPointClass;
use splitq::spectral::{
    eigenvalues, mode_fixed_points, pt_phase, PTPhase, SpectralError, TwoLevelParams,
};

use crate::CliError;

/// Four comma-separated reals, e.g. `--q 1,0,-0.5,0`.
#[derive(Clone, Copy, Debug)]
pub struct Quad(pub [f64; 4]);

impl FromStr for Quad {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 4 {
            return Err(format!(
                "expected 4 comma-separated components, found {}",
                parts.len()
            ));
        }
        let mut out = [0.0; 4];
        for (slot, part) in out.iter_mut().zip(&parts) {
            *slot = part
                .trim()
                .parse::<f64>()
                .map_err(|e| format!("component \"{part}\": {e}"))?;
        }
        Ok(Quad(out))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SigArg {
    Quaternion,
    Coquaternion,
}

#[derive(Args)]
pub struct SpectrumArgs {
    /// Common level shift s (half the trace)
    #[arg(long, allow_hyphen_values = true)]
    s: f64,
    /// Diagonal splitting t
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    /// Off-diagonal element q as four comma-separated components
    #[arg(long, allow_hyphen_values = true)]
    q: Quad,
    /// Algebra signature of q
    #[arg(long, value_enum, default_value = "coquaternion")]
    sig: SigArg,
}

#[derive(Serialize)]
struct ComplexOut {
    re: f64,
    im: f64,
}

/// The printed report. `phase` is `null` for the quaternion signature,
/// where the gap radicand is never negative and no phase boundary exists.
#[derive(Serialize)]
struct Report {
    s: f64,
    t: f64,
    q: [f64; 4],
    signature: &'static str,
    discriminant: f64,
    e_plus: ComplexOut,
    e_minus: ComplexOut,
    phase: Option<&'static str>,
    modes: [&'static str; 2],
}

pub(crate) fn phase_name(phase: PTPhase) -> &'static str {
    match phase {
        PTPhase::Unbroken => "unbroken",
        PTPhase::Broken => "broken",
        PTPhase::Exceptional => "exceptional",
    }
}

fn class_name(class: FixedPointClass) -> &'static str {
    match class {
        FixedPointClass::Centre => "centre",
        FixedPointClass::Focus => "focus",
        FixedPointClass::Vortex => "vortex",
        FixedPointClass::Degenerate => "degenerate",
    }
}

pub fn run(args: &SpectrumArgs) -> Result<(), CliError> {
    let sig = match args.sig {
        SigArg::Quaternion => Signature::Quaternion,
        SigArg::Coquaternion => Signature::Coquaternion,
    };
    let q = HyperComplex::from_components(sig, args.q.0);
    let params = TwoLevelParams::new(args.s, args.t, q);
    let (e_plus, e_minus) = eigenvalues(&params);
    let phase = match pt_phase(&params) {
        Ok(ph) => Some(phase_name(ph)),
        Err(SpectralError::WrongSignature { .. }) => None,
        Err(e) => return Err(CliError::Schema(e.to_string())),
    };
    let (mode_plus, mode_minus) = mode_fixed_points(&params);

    let report = Report {
        s: args.s,
        t: args.t,
        q: args.q.0,
        signature: match sig {
            Signature::Quaternion => "quaternion",
            Signature::Coquaternion => "coquaternion",
        },
        discriminant: params.discriminant(),
        e_plus: ComplexOut {
            re: e_plus.re,
            im: e_plus.im,
        },
        e_minus: ComplexOut {
            re: e_minus.re,
            im: e_minus.im,
        },
        phase,
        modes: [class_name(mode_plus), class_name(mode_minus)],
    };
    println!(
        "{}",
        serde_json::to_string(&report).expect("report serialization cannot fail")
    );
    Ok(())
}
