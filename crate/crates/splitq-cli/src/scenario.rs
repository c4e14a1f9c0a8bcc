//! Scenario documents and the `simulate` subcommand.
//!
//! A scenario is a JSON file with a `version` field, a flow kind, a
//! Hamiltonian description (term list or analytic string, plus its
//! signature), the initial phase point, the time grid, the method, and an
//! output destination. Unknown fields are rejected so typos surface as
//! schema errors naming the field.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use splitq::algebra::{HyperComplex, Signature};
use splitq::dynamics::{integrate_observed, FlowKind, Method};
use splitq::hamiltonian::{parse_analytic, HamiltonianSpec, PhasePoint, Term};

use crate::CliError;

/// Schema version accepted for scenario and sweep documents.
pub const SCHEMA_VERSION: u32 = 1;

/// Trajectory columns, in output order.
pub const CSV_HEADER: &str = "t,x0,p0,x1,p1,H0,H1,H2,H3";

/// Output encodings for trajectories. CSV streams row by row; JSON buffers
/// the whole trajectory into one document.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum KindSpec {
    ComplexCanonical,
    ComplexifiedClassical,
    NonHermitianReal,
    Quaternionic,
    CoquaternionicReal,
    CoquaternionicComplex,
    CoquaternionicFull,
}

impl From<KindSpec> for FlowKind {
    fn from(k: KindSpec) -> FlowKind {
        match k {
            KindSpec::ComplexCanonical => FlowKind::ComplexCanonical,
            KindSpec::ComplexifiedClassical => FlowKind::ComplexifiedClassical,
            KindSpec::NonHermitianReal => FlowKind::NonHermitianReal,
            KindSpec::Quaternionic => FlowKind::Quaternionic,
            KindSpec::CoquaternionicReal => FlowKind::CoquaternionicReal,
            KindSpec::CoquaternionicComplex => FlowKind::CoquaternionicComplex,
            KindSpec::CoquaternionicFull => FlowKind::CoquaternionicFull,
        }
    }
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub(crate) enum SigSpec {
    Quaternion,
    Coquaternion,
}

impl From<SigSpec> for Signature {
    fn from(s: SigSpec) -> Signature {
        match s {
            SigSpec::Quaternion => Signature::Quaternion,
            SigSpec::Coquaternion => Signature::Coquaternion,
        }
    }
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
enum MethodSpec {
    Rk4,
    Leapfrog,
}

impl From<MethodSpec> for Method {
    fn from(m: MethodSpec) -> Method {
        match m {
            MethodSpec::Rk4 => Method::Rk4,
            MethodSpec::Leapfrog => Method::SymplecticLeapfrog,
        }
    }
}

/// One monomial: four coefficient components and four exponents in
/// `(x0, p0, x1, p1)` order.
#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDoc {
    coeff: [f64; 4],
    powers: [u8; 4],
}

/// Hamiltonian description: a signature plus exactly one of `terms`
/// (explicit monomials) or `analytic` (a complex polynomial in `x`, `p`
/// that is expanded over the doubled phase space).
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct HamiltonianDoc {
    signature: SigSpec,
    #[serde(default)]
    terms: Option<Vec<TermDoc>>,
    #[serde(default)]
    analytic: Option<String>,
}

impl HamiltonianDoc {
    fn build(&self) -> Result<HamiltonianSpec, CliError> {
        let sig = Signature::from(self.signature);
        match (&self.terms, &self.analytic) {
            (Some(terms), None) => {
                let terms: Vec<Term> = terms
                    .iter()
                    .map(|t| Term::new(HyperComplex::from_components(sig, t.coeff), t.powers))
                    .collect();
                HamiltonianSpec::new(sig, &terms)
                    .map_err(|e| CliError::Schema(format!("field \"hamiltonian.terms\": {e}")))
            }
            (None, Some(src)) => {
                let spec = parse_analytic(src)
                    .map_err(|e| CliError::Schema(format!("field \"hamiltonian.analytic\": {e}")))?;
                Ok(spec.expand(sig))
            }
            _ => Err(CliError::Schema(
                "field \"hamiltonian\": exactly one of \"terms\" and \"analytic\" is required"
                    .into(),
            )),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Scenario {
    version: u32,
    kind: KindSpec,
    hamiltonian: HamiltonianDoc,
    initial: [f64; 4],
    t_end: f64,
    dt: f64,
    method: MethodSpec,
    #[serde(default)]
    output: Option<PathBuf>,
    #[serde(default)]
    format: Option<Format>,
}

/// Energy-drift summary printed (as one JSON line) after a run. Mirrors the
/// library's drift metric: maximum deviation per energy component, relative
/// to that component's initial magnitude when it is nonzero.
#[derive(Clone, Copy, Serialize)]
struct Summary {
    steps: usize,
    t_end: f64,
    max_abs_drift: f64,
    max_rel_drift: f64,
}

#[derive(Default)]
struct DriftTracker {
    initial: Option<[f64; 4]>,
    max_abs: f64,
    max_rel: f64,
    rows: usize,
}

impl DriftTracker {
    fn record(&mut self, energy: &HyperComplex) {
        let c = energy.components();
        let initial = *self.initial.get_or_insert(c);
        for (v, v0) in c.iter().zip(initial) {
            let d = (v - v0).abs();
            self.max_abs = self.max_abs.max(d);
            self.max_rel = self
                .max_rel
                .max(if v0.abs() > 1e-12 { d / v0.abs() } else { d });
        }
        self.rows += 1;
    }
}

pub fn run(
    file: &Path,
    output: Option<PathBuf>,
    format: Option<Format>,
) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file).map_err(|e| {
        CliError::Schema(format!("cannot read scenario file {}: {e}", file.display()))
    })?;
    let doc: Scenario = serde_json::from_str(&text)
        .map_err(|e| CliError::Schema(format!("invalid scenario: {e}")))?;
    if doc.version != SCHEMA_VERSION {
        return Err(CliError::Schema(format!(
            "field \"version\": expected {SCHEMA_VERSION}, found {}",
            doc.version
        )));
    }
    if !(doc.dt.is_finite() && doc.dt > 0.0) {
        return Err(CliError::Schema(format!(
            "field \"dt\": must be positive and finite, found {}",
            doc.dt
        )));
    }

    let h = doc.hamiltonian.build()?;
    let [x0, p0, x1, p1] = doc.initial;
    let initial = PhasePoint::try_new(x0, p0, x1, p1)
        .map_err(|e| CliError::Schema(format!("field \"initial\": {e}")))?;
    let out_path = output.or(doc.output).ok_or_else(|| {
        CliError::Schema(
            "field \"output\": no destination given (set it in the scenario or pass --output)"
                .into(),
        )
    })?;
    let format = format.or(doc.format).unwrap_or(Format::Csv);

    let kind = FlowKind::from(doc.kind);
    let method = Method::from(doc.method);
    let sink = File::create(&out_path).map_err(|e| {
        CliError::Integration(format!("cannot create {}: {e}", out_path.display()))
    })?;
    let mut writer = BufWriter::new(sink);

    let mut drift = DriftTracker::default();
    let mut io_err: Option<std::io::Error> = None;
    let mut rows: Vec<[f64; 9]> = Vec::new();
    if format == Format::Csv {
        writeln!(writer, "{CSV_HEADER}").map_err(|e| {
            CliError::Integration(format!("cannot write {}: {e}", out_path.display()))
        })?;
    }

    let outcome = integrate_observed(
        kind,
        &h,
        &initial,
        doc.t_end,
        doc.dt,
        method,
        |t, s, e| {
            drift.record(&e);
            match format {
                Format::Csv => {
                    if io_err.is_none() {
                        if let Err(err) = write_csv_row(&mut writer, t, &s, &e) {
                            io_err = Some(err);
                        }
                    }
                }
                Format::Json => rows.push(flat_row(t, &s, &e)),
            }
        },
    );
    outcome.map_err(|e| CliError::Integration(e.to_string()))?;
    if let Some(err) = io_err {
        return Err(CliError::Integration(format!(
            "cannot write {}: {err}",
            out_path.display()
        )));
    }

    let summary = Summary {
        steps: drift.rows.saturating_sub(1),
        t_end: doc.t_end,
        max_abs_drift: drift.max_abs,
        max_rel_drift: drift.max_rel,
    };
    if format == Format::Json {
        write_json(&mut writer, &rows, summary)
            .map_err(|e| CliError::Integration(format!("cannot write {}: {e}", out_path.display())))?;
    }
    writer
        .flush()
        .map_err(|e| CliError::Integration(format!("cannot write {}: {e}", out_path.display())))?;

    println!(
        "{}",
        serde_json::to_string(&summary).expect("summary serialization cannot fail")
    );
    Ok(())
}

fn flat_row(t: f64, s: &PhasePoint, e: &HyperComplex) -> [f64; 9] {
    let c = s.coords();
    let h = e.components();
    [t, c[0], c[1], c[2], c[3], h[0], h[1], h[2], h[3]]
}

/// One CSV line: '.' decimal separator, ',' field separator, shortest
/// round-trip float formatting — byte-identical across repeated runs.
fn write_csv_row(
    w: &mut impl Write,
    t: f64,
    s: &PhasePoint,
    e: &HyperComplex,
) -> std::io::Result<()> {
    let row = flat_row(t, s, e);
    let mut line = String::with_capacity(96);
    for (idx, v) in row.iter().enumerate() {
        if idx > 0 {
            line.push(',');
        }
        line.push_str(&v.to_string());
    }
    writeln!(w, "{line}")
}

fn write_json(w: &mut impl Write, rows: &[[f64; 9]], summary: Summary) -> std::io::Result<()> {
    #[derive(Serialize)]
    struct Doc<'a> {
        header: [&'static str; 9],
        rows: &'a [[f64; 9]],
        summary: Summary,
    }
    let doc = Doc {
        header: ["t", "x0", "p0", "x1", "p1", "H0", "H1", "H2", "H3"],
        rows,
        summary,
    };
    serde_json::to_writer(&mut *w, &doc)?;
    writeln!(w)
}
