//! The `sweep` subcommand: evaluate the coquaternionic two-level spectrum
//! over a rectangular parameter grid and write one CSV row per point.
//!
//! Grid points are evaluated concurrently, but rows come back in row-major
//! order over the axes as listed in the file, so output bytes are
//! independent of the worker count.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Deserialize;
use splitq::algebra::{HyperComplex, Signature};
use splitq::spectral::{eigenvalues, pt_phase, TwoLevelParams};

use crate::scenario::SCHEMA_VERSION;
use crate::spectrum::phase_name;
use crate::CliError;

/// Hard ceiling on the total number of grid points.
pub const MAX_GRID_POINTS: u128 = 10_000_000;

/// Grid columns, in output order.
pub const SWEEP_HEADER: &str = "s,t,q0,q1,q2,q3,re_e_plus,im_e_plus,re_e_minus,im_e_minus,phase";

/// Points evaluated per parallel batch; bounds memory for large grids.
const CHUNK: u64 = 65_536;

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Param {
    S,
    T,
    Q0,
    Q1,
    Q2,
    Q3,
}

/// One swept axis: `steps` evenly spaced values from `min` to `max`
/// inclusive (`steps == 1` pins the axis at `min`).
#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Axis {
    param: Param,
    min: f64,
    max: f64,
    steps: u64,
}

impl Axis {
    fn value(&self, index: u64) -> f64 {
        if self.steps == 1 {
            self.min
        } else {
            self.min + (self.max - self.min) * index as f64 / (self.steps - 1) as f64
        }
    }
}

/// Parameter values held fixed on every axis that is not swept.
#[derive(Clone, Copy, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
struct BaseParams {
    s: f64,
    t: f64,
    q: [f64; 4],
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepSpec {
    version: u32,
    #[serde(default)]
    base: BaseParams,
    axes: Vec<Axis>,
    #[serde(default)]
    output: Option<PathBuf>,
}

struct Row {
    params: [f64; 6],
    e_plus: (f64, f64),
    e_minus: (f64, f64),
    phase: &'static str,
}

/// Decode a row-major grid index (first axis outermost) into parameter
/// values and evaluate the spectrum there.
fn eval_point(base: &BaseParams, axes: &[Axis], index: u64) -> Row {
    let mut values = [base.s, base.t, base.q[0], base.q[1], base.q[2], base.q[3]];
    let mut rest = index;
    for axis in axes.iter().rev() {
        let i = rest % axis.steps;
        rest /= axis.steps;
        let slot = match axis.param {
            Param::S => 0,
            Param::T => 1,
            Param::Q0 => 2,
            Param::Q1 => 3,
            Param::Q2 => 4,
            Param::Q3 => 5,
        };
        values[slot] = axis.value(i);
    }
    let q = HyperComplex::new(
        Signature::Coquaternion,
        values[2],
        values[3],
        values[4],
        values[5],
    );
    let params = TwoLevelParams::new(values[0], values[1], q);
    let (e_plus, e_minus) = eigenvalues(&params);
    let phase = pt_phase(&params).expect("coquaternionic phase is always defined");
    Row {
        params: values,
        e_plus: (e_plus.re, e_plus.im),
        e_minus: (e_minus.re, e_minus.im),
        phase: phase_name(phase),
    }
}

fn write_row(w: &mut impl Write, row: &Row) -> std::io::Result<()> {
    let mut line = String::with_capacity(96);
    for v in row.params {
        line.push_str(&v.to_string());
        line.push(',');
    }
    for v in [row.e_plus.0, row.e_plus.1, row.e_minus.0, row.e_minus.1] {
        line.push_str(&v.to_string());
        line.push(',');
    }
    line.push_str(row.phase);
    writeln!(w, "{line}")
}

/// Build the worker pool: `SPLITQ_THREADS` overrides the worker count,
/// otherwise rayon defaults to the hardware parallelism.
fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(raw) = std::env::var_os("SPLITQ_THREADS") {
        let raw = raw.to_string_lossy();
        let workers: usize = raw
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| {
                CliError::Schema(format!(
                    "SPLITQ_THREADS: expected a positive integer, found \"{raw}\""
                ))
            })?;
        builder = builder.num_threads(workers);
    }
    builder
        .build()
        .map_err(|e| CliError::Schema(format!("cannot build worker pool: {e}")))
}

pub fn run(file: &Path, output: Option<PathBuf>) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Schema(format!("cannot read sweep file {}: {e}", file.display())))?;
    let spec: SweepSpec = serde_json::from_str(&text)
        .map_err(|e| CliError::Schema(format!("invalid sweep: {e}")))?;
    if spec.version != SCHEMA_VERSION {
        return Err(CliError::Schema(format!(
            "field \"version\": expected {SCHEMA_VERSION}, found {}",
            spec.version
        )));
    }
    for (idx, axis) in spec.axes.iter().enumerate() {
        if axis.steps < 1 {
            return Err(CliError::Schema(format!(
                "field \"axes[{idx}].steps\": must be at least 1"
            )));
        }
    }
    let total: u128 = spec.axes.iter().map(|a| a.steps as u128).product();
    if total > MAX_GRID_POINTS {
        return Err(CliError::Guard(format!(
            "grid has {total} points, exceeding the guard of {MAX_GRID_POINTS}"
        )));
    }
    let total = total as u64;

    let out_path = output.or(spec.output).ok_or_else(|| {
        CliError::Schema(
            "field \"output\": no destination given (set it in the sweep file or pass --output)"
                .into(),
        )
    })?;
    let sink = File::create(&out_path).map_err(|e| {
        CliError::Integration(format!("cannot create {}: {e}", out_path.display()))
    })?;
    let mut writer = BufWriter::new(sink);
    let write_err = |e: std::io::Error| {
        CliError::Integration(format!("cannot write {}: {e}", out_path.display()))
    };

    writeln!(writer, "{SWEEP_HEADER}").map_err(write_err)?;
    let pool = thread_pool()?;
    let mut start = 0u64;
    while start < total {
        let end = (start + CHUNK).min(total);
        let rows: Vec<Row> = pool.install(|| {
            (start..end)
                .into_par_iter()
                .map(|index| eval_point(&spec.base, &spec.axes, index))
                .collect()
        });
        for row in &rows {
            write_row(&mut writer, row).map_err(write_err)?;
        }
        start = end;
    }
    writer.flush().map_err(write_err)?;
    Ok(())
}
