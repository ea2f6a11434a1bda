//! Evolution of a Bloch vector in the Schrödinger and Heisenberg pictures
//! under a single-axis generator `U(t) = e^{−i·rate·(n̂·σ⃗)t/2}`.
//!
//! The time-reversed Heisenberg reading rewrites `U† = e^{+i(n̂·σ⃗)t/2}` as
//! `e^{−i(n̂·σ⃗)(−t)/2}`. It is the same operator, so it shares the Heisenberg
//! vectors and differs only in the time label attached to each sample.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bloch::{rotate_observable, rotate_state, BlochVector};
use crate::error::{Error, Result};
use crate::su2::{exp_generator, Axis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PictureKind {
    #[serde(rename = "schrodinger")]
    Schrodinger,
    #[serde(rename = "heisenberg")]
    Heisenberg,
    #[serde(rename = "heisenberg-reversed")]
    HeisenbergTimeReversed,
}

impl PictureKind {
    pub const ALL: [PictureKind; 3] = [
        PictureKind::Schrodinger,
        PictureKind::Heisenberg,
        PictureKind::HeisenbergTimeReversed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PictureKind::Schrodinger => "schrodinger",
            PictureKind::Heisenberg => "heisenberg",
            PictureKind::HeisenbergTimeReversed => "heisenberg-reversed",
        }
    }
}

impl fmt::Display for PictureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PictureKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        PictureKind::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown picture `{s}` (expected schrodinger, heisenberg or heisenberg-reversed)"))
    }
}

/// Generator axis, angular rate and picture for an evolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionSpec {
    pub generator_axis: Axis,
    /// Radians per unit time.
    pub rate: f64,
    pub picture: PictureKind,
}

impl EvolutionSpec {
    pub fn new(generator_axis: Axis, rate: f64, picture: PictureKind) -> Result<Self> {
        if !rate.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(EvolutionSpec {
            generator_axis,
            rate,
            picture,
        })
    }

    /// Unit rate, so the rotation angle equals `t`.
    pub fn unit_rate(generator_axis: Axis, picture: PictureKind) -> Self {
        EvolutionSpec {
            generator_axis,
            rate: 1.0,
            picture,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrajectorySample {
    pub time_label: f64,
    pub vector: BlochVector,
    pub picture: PictureKind,
}

/// Evolve `input` to physical time `t`.
pub fn evolve(spec: &EvolutionSpec, input: &BlochVector, t: f64) -> BlochVector {
    let u = exp_generator(&spec.generator_axis, spec.rate * t);
    match spec.picture {
        PictureKind::Schrodinger => rotate_state(&u, input),
        PictureKind::Heisenberg | PictureKind::HeisenbergTimeReversed => rotate_observable(&u, input),
    }
}

/// Uniform endpoint-inclusive grid of `steps` points.
pub fn time_grid(t_start: f64, t_end: f64, steps: usize) -> Result<Vec<f64>> {
    if !(t_start.is_finite() && t_end.is_finite()) || t_start >= t_end {
        return Err(Error::BadRange {
            start: t_start,
            end: t_end,
        });
    }
    if steps < 2 {
        return Err(Error::TooFewSteps(steps));
    }
    let dt = (t_end - t_start) / (steps - 1) as f64;
    Ok((0..steps)
        .map(|i| if i + 1 == steps { t_end } else { t_start + i as f64 * dt })
        .collect())
}

/// Sample the evolution on a uniform grid over `[t_start, t_end]`.
///
/// Samples in the time-reversed Heisenberg picture carry the label `−t` and
/// the Heisenberg vector at physical time `t`.
pub fn trajectory(
    spec: &EvolutionSpec,
    input: &BlochVector,
    t_start: f64,
    t_end: f64,
    steps: usize,
) -> Result<Vec<TrajectorySample>> {
    let grid = time_grid(t_start, t_end, steps)?;
    Ok(grid
        .into_iter()
        .map(|t| TrajectorySample {
            time_label: match spec.picture {
                PictureKind::HeisenbergTimeReversed => -t,
                _ => t,
            },
            vector: evolve(spec, input, t),
            picture: spec.picture,
        })
        .collect())
}

/// Checks that the time-reversed Heisenberg trajectory, read as a function
/// of its own label `τ = −t`, is the Schrödinger trajectory at time `τ`.
pub fn reversed_label_equivalence(axis: &Axis, rate: f64, input: &BlochVector, t_grid: &[f64]) -> Result<bool> {
    if t_grid.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let reversed = EvolutionSpec::new(*axis, rate, PictureKind::HeisenbergTimeReversed)?;
    let forward = EvolutionSpec::new(*axis, rate, PictureKind::Schrodinger)?;
    Ok(t_grid.iter().all(|&t| {
        let label = -t;
        let reversed_vector = evolve(&reversed, input, t);
        let schrodinger_vector = evolve(&forward, input, label);
        reversed_vector.max_abs_diff(&schrodinger_vector) <= 1e-12
    }))
}
