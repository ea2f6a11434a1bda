//! Command-line front end: `equiv-check`, `halting-demo`, `self-ref-sweep`
//! and `trajectory`.
//!
//! Data goes to standard output and diagnostics to standard error. Exit
//! codes: 0 success, 1 property violated or I/O failure, 2 usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::bloch::{expectation, rotate_observable, rotate_state, BlochVector};
use crate::error::Error;
use crate::halting::{self_reference, HaltingMachine, FIXED_POINT_TOL};
use crate::pictures::{trajectory, EvolutionSpec, PictureKind, TrajectorySample};
use crate::random::{haar_unitary, random_bloch_vector, rng_from_seed, RNG_ALGORITHM};
use crate::su2::Axis;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Threshold for `equiv-check`.
pub const EQUIV_TOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(
    name = "qhalt",
    version,
    about = "Single-qubit Schrodinger/Heisenberg picture dynamics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check e·(U v U†) = (U† e U)·v over Haar-random unitaries and vectors.
    EquivCheck {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Run the halting machine once and print the run report as JSON.
    HaltingDemo(HaltingDemoArgs),
    /// Tabulate the self-reference discrepancy over a (theta, delta) grid.
    SelfRefSweep(SweepArgs),
    /// Print a sampled trajectory as plot-ready rows.
    Trajectory(TrajectoryArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct HaltingDemoArgs {
    #[arg(long, num_args = 3, value_names = ["NX", "NY", "NZ"], default_values_t = [0.0, 1.0, 0.0])]
    axis: Vec<f64>,
    /// Rotation angle (radians unless --degrees).
    #[arg(long, default_value_t = 0.0)]
    delta: f64,
    #[arg(long, num_args = 3, value_names = ["VX", "VY", "VZ"], default_values_t = [0.0, 0.0, 1.0])]
    system: Vec<f64>,
    /// Observer basis vector for the system.
    #[arg(long, num_args = 3, value_names = ["EX", "EY", "EZ"], default_values_t = [0.0, 0.0, 1.0])]
    basis: Vec<f64>,
    #[arg(long, default_value = "schrodinger")]
    picture: String,
    #[arg(long)]
    degrees: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Jsonl,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct SweepArgs {
    #[arg(long, default_value_t = 37)]
    theta_steps: usize,
    #[arg(long, default_value_t = 73)]
    delta_steps: usize,
    #[arg(long, default_value_t = 0.0)]
    theta_min: f64,
    #[arg(long, default_value_t = std::f64::consts::PI)]
    theta_max: f64,
    #[arg(long, default_value_t = 0.0)]
    delta_min: f64,
    #[arg(long, default_value_t = 2.0 * std::f64::consts::PI)]
    delta_max: f64,
    /// Fixed-point tolerance in radians.
    #[arg(long, default_value_t = FIXED_POINT_TOL)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
    /// Worker threads (0 = one per core). Output order does not depend on it.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Write rows to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Interpret the theta/delta range flags as degrees.
    #[arg(long)]
    degrees: bool,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
struct TrajectoryArgs {
    #[arg(long)]
    picture: String,
    #[arg(long, num_args = 3, value_names = ["NX", "NY", "NZ"], default_values_t = [0.0, 1.0, 0.0])]
    axis: Vec<f64>,
    #[arg(long, default_value_t = 1.0)]
    rate: f64,
    #[arg(long, num_args = 3, value_names = ["VX", "VY", "VZ"], default_values_t = [0.0, 0.0, 1.0])]
    input: Vec<f64>,
    #[arg(long)]
    t_start: f64,
    #[arg(long)]
    t_end: f64,
    #[arg(long)]
    steps: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    format: OutputFormat,
}

/// Grid and output settings for the self-reference sweep. The rotation axis
/// is `+z`; the basis vector sits at polar angle `theta` in the x-z plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepConfig {
    pub theta_steps: usize,
    pub delta_steps: usize,
    pub theta_range: (f64, f64),
    pub delta_range: (f64, f64),
    pub tol: f64,
    pub output_format: OutputFormat,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            theta_steps: 37,
            delta_steps: 73,
            theta_range: (0.0, std::f64::consts::PI),
            delta_range: (0.0, 2.0 * std::f64::consts::PI),
            tol: FIXED_POINT_TOL,
            output_format: OutputFormat::Csv,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.theta_steps < 2 || self.delta_steps < 2 {
            return Err("theta-steps and delta-steps must be at least 2".into());
        }
        let ordered = |(lo, hi): (f64, f64)| lo.is_finite() && hi.is_finite() && lo < hi;
        if !ordered(self.theta_range) || !ordered(self.delta_range) {
            return Err("sweep ranges must be finite with min < max".into());
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err("tol must be positive".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SweepRecord {
    pub theta: f64,
    pub delta: f64,
    pub discrepancy_angle: f64,
    pub fixed_point: bool,
}

fn linspace((lo, hi): (f64, f64), steps: usize) -> Vec<f64> {
    let step = (hi - lo) / (steps - 1) as f64;
    (0..steps)
        .map(|i| if i + 1 == steps { hi } else { lo + i as f64 * step })
        .collect()
}

/// Evaluate the sweep grid in row-major `(theta, delta)` order.
///
/// `workers = 0` uses rayon's default pool size. Results are collected by
/// grid index, so the output is the same for any worker count.
pub fn run_sweep(config: &SweepConfig, workers: usize) -> Result<Vec<SweepRecord>, String> {
    config.validate()?;
    let thetas = linspace(config.theta_range, config.theta_steps);
    let deltas = linspace(config.delta_range, config.delta_steps);
    let cells: Vec<(f64, f64)> = thetas
        .iter()
        .flat_map(|&t| deltas.iter().map(move |&d| (t, d)))
        .collect();
    let tol = config.tol;
    let eval = |&(theta, delta): &(f64, f64)| {
        let basis = BlochVector::from_angles(theta, 0.0);
        let report = self_reference(&Axis::Z, delta, &basis).expect("finite grid point");
        SweepRecord {
            theta,
            delta,
            discrepancy_angle: report.discrepancy_angle,
            fixed_point: report.discrepancy_angle < tol,
        }
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| e.to_string())?;
    Ok(pool.install(|| cells.par_iter().map(eval).collect()))
}

/// Render `x` like C's `%.17g`: 17 significant digits, trailing zeros removed.
pub fn format_float(x: f64) -> String {
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    fn trim(s: &str) -> &str {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.')
        } else {
            s
        }
    }
    if !(-4..17).contains(&exp) {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim(mantissa), sign, exp.abs())
    } else {
        let fixed = format!("{:.*}", (16 - exp) as usize, x);
        trim(&fixed).to_string()
    }
}

pub const SWEEP_CSV_HEADER: &str = "theta,delta,discrepancy_angle,fixed_point";
pub const TRAJECTORY_CSV_HEADER: &str = "time_label,vx,vy,vz";

pub fn write_sweep(records: &[SweepRecord], format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
    if format == OutputFormat::Csv {
        writeln!(out, "{SWEEP_CSV_HEADER}")?;
    }
    for r in records {
        let (t, d, a) = (
            format_float(r.theta),
            format_float(r.delta),
            format_float(r.discrepancy_angle),
        );
        match format {
            OutputFormat::Csv => writeln!(out, "{t},{d},{a},{}", r.fixed_point)?,
            OutputFormat::Jsonl => writeln!(
                out,
                "{{\"theta\":{t},\"delta\":{d},\"discrepancy_angle\":{a},\"fixed_point\":{}}}",
                r.fixed_point
            )?,
        }
    }
    Ok(())
}

pub fn write_trajectory(samples: &[TrajectorySample], format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
    if format == OutputFormat::Csv {
        writeln!(out, "{TRAJECTORY_CSV_HEADER}")?;
    }
    for s in samples {
        let t = format_float(s.time_label);
        let [x, y, z] = s.vector.to_array().map(format_float);
        match format {
            OutputFormat::Csv => writeln!(out, "{t},{x},{y},{z}")?,
            OutputFormat::Jsonl => writeln!(out, "{{\"time_label\":{t},\"vx\":{x},\"vy\":{y},\"vz\":{z}}}")?,
        }
    }
    Ok(())
}

/// Largest `|e·(U v U†) − (U† e U)·v|` over `trials` Haar-random draws.
pub fn equiv_check(trials: u64, seed: u64) -> f64 {
    let mut rng = rng_from_seed(seed);
    (0..trials)
        .map(|_| {
            let u = haar_unitary(&mut rng);
            let e = random_bloch_vector(&mut rng);
            let v = random_bloch_vector(&mut rng);
            (expectation(&e, &rotate_state(&u, &v)) - expectation(&rotate_observable(&u, &e), &v)).abs()
        })
        .fold(0.0, f64::max)
}

enum Failure {
    Usage(String),
    Io(io::Error),
    Violated,
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn vector3(flag: &str, v: &[f64]) -> Result<[f64; 3], Failure> {
    <[f64; 3]>::try_from(v).map_err(|_| Failure::Usage(format!("--{flag} takes three numbers")))
}

fn bloch_arg(flag: &str, v: &[f64]) -> Result<BlochVector, Failure> {
    let [x, y, z] = vector3(flag, v)?;
    BlochVector::from_direction(x, y, z).map_err(|e: Error| Failure::Usage(format!("--{flag}: {e}")))
}

fn axis_arg(flag: &str, v: &[f64]) -> Result<Axis, Failure> {
    let [x, y, z] = vector3(flag, v)?;
    Axis::from_direction(x, y, z).map_err(|e: Error| Failure::Usage(format!("--{flag}: {e}")))
}

/// Parse `args` (including the program name) and execute the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_FAILURE
        }
        Err(Failure::Violated) => EXIT_FAILURE,
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::EquivCheck { trials, seed } => {
            let max_dev = equiv_check(trials, seed);
            writeln!(out, "equiv-check trials={trials} seed={seed} rng={RNG_ALGORITHM}")?;
            writeln!(out, "max deviation = {}", format_float(max_dev))?;
            if max_dev < EQUIV_TOL {
                writeln!(out, "max deviation < 1e-12")?;
                Ok(())
            } else {
                writeln!(out, "max deviation >= 1e-12: picture equivalence violated")?;
                Err(Failure::Violated)
            }
        }
        Command::HaltingDemo(a) => {
            let picture: PictureKind = a.picture.parse().map_err(Failure::Usage)?;
            let delta = if a.degrees { a.delta.to_radians() } else { a.delta };
            let machine = HaltingMachine::new(
                axis_arg("axis", &a.axis)?,
                delta,
                bloch_arg("system", &a.system)?,
                bloch_arg("basis", &a.basis)?,
            )
            .map_err(usage)?;
            let report = machine.run(picture).map_err(usage)?;
            let json = serde_json::to_string_pretty(&report).map_err(|e| Failure::Io(e.into()))?;
            writeln!(out, "{json}")?;
            Ok(())
        }
        Command::SelfRefSweep(a) => {
            let conv = |x: f64| if a.degrees { x.to_radians() } else { x };
            let config = SweepConfig {
                theta_steps: a.theta_steps,
                delta_steps: a.delta_steps,
                theta_range: (conv(a.theta_min), conv(a.theta_max)),
                delta_range: (conv(a.delta_min), conv(a.delta_max)),
                tol: a.tol,
                output_format: a.format,
            };
            let records = run_sweep(&config, a.workers).map_err(Failure::Usage)?;
            match &a.output {
                Some(path) => {
                    let file = File::create(path)
                        .map_err(|e| Failure::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
                    let mut w = BufWriter::new(file);
                    write_sweep(&records, config.output_format, &mut w)?;
                    w.flush()?;
                    writeln!(err, "wrote {} rows to {}", records.len(), path.display())?;
                }
                None => write_sweep(&records, config.output_format, out)?,
            }
            Ok(())
        }
        Command::Trajectory(a) => {
            let picture: PictureKind = a.picture.parse().map_err(Failure::Usage)?;
            let spec = EvolutionSpec::new(axis_arg("axis", &a.axis)?, a.rate, picture).map_err(usage)?;
            let input = bloch_arg("input", &a.input)?;
            let samples = trajectory(&spec, &input, a.t_start, a.t_end, a.steps).map_err(usage)?;
            write_trajectory(&samples, a.format, out)?;
            Ok(())
        }
    }
}
