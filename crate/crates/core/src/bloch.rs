//! Bloch vectors, observable basis vectors and the adjoint action of SU(2)
//! on them.
//!
//! A state `|ψ⟩⟨ψ| = ½(𝟙 + v̂·σ⃗)` and an observable `ê·σ⃗` are both carried by
//! [`BlochVector`]. States transform as `v̂ → U v̂ U†` ([`rotate_state`]) and
//! basis vectors as `ê → U† ê U` ([`rotate_observable`]). Conjugation by
//! `make_unitary(n̂, δ)` is the active right-handed rotation by `+δ` about `n̂`,
//! so a y-rotation by `π/2` sends `+z` to `+x`.

use std::ops::{Mul, Neg};

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::random::rng_from_seed;
use crate::su2::{self, pauli, Axis, Complex, Matrix2, PauliAxis, Unitary2, NORMALIZE_TOL};

/// A real unit 3-vector on the Bloch sphere.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(into = "[f64; 3]")]
pub struct BlochVector {
    vx: f64,
    vy: f64,
    vz: f64,
}

impl From<BlochVector> for [f64; 3] {
    fn from(v: BlochVector) -> Self {
        v.to_array()
    }
}

impl From<Axis> for BlochVector {
    fn from(a: Axis) -> Self {
        BlochVector {
            vx: a.nx(),
            vy: a.ny(),
            vz: a.nz(),
        }
    }
}

impl BlochVector {
    pub const PLUS_X: BlochVector = BlochVector {
        vx: 1.0,
        vy: 0.0,
        vz: 0.0,
    };
    pub const PLUS_Y: BlochVector = BlochVector {
        vx: 0.0,
        vy: 1.0,
        vz: 0.0,
    };
    pub const PLUS_Z: BlochVector = BlochVector {
        vx: 0.0,
        vy: 0.0,
        vz: 1.0,
    };
    pub const MINUS_Z: BlochVector = BlochVector {
        vx: 0.0,
        vy: 0.0,
        vz: -1.0,
    };

    /// Inputs within [`NORMALIZE_TOL`] of unit norm are normalized; others
    /// yield [`Error::NotUnit`].
    pub fn new(vx: f64, vy: f64, vz: f64) -> Result<Self> {
        if !(vx.is_finite() && vy.is_finite() && vz.is_finite()) {
            return Err(Error::NonFinite);
        }
        let [vx, vy, vz] = su2::normalize_near_unit(vx, vy, vz).map_err(|norm| Error::NotUnit { norm })?;
        Ok(BlochVector { vx, vy, vz })
    }

    /// Unit vector along any finite non-zero direction.
    pub fn from_direction(x: f64, y: f64, z: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let [vx, vy, vz] = su2::normalize_any(x, y, z).map_err(|norm| Error::NotUnit { norm })?;
        Ok(BlochVector { vx, vy, vz })
    }

    /// `(sin θ cos φ, sin θ sin φ, cos θ)`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        BlochVector {
            vx: st * cp,
            vy: st * sp,
            vz: ct,
        }
    }

    /// Renormalizes a vector already known to be unit up to round-off.
    pub(crate) fn renormalized(c: [f64; 3]) -> Self {
        let norm = (c[0] * c[0] + c[1] * c[1] + c[2] * c[2]).sqrt();
        BlochVector {
            vx: c[0] / norm,
            vy: c[1] / norm,
            vz: c[2] / norm,
        }
    }

    pub fn vx(&self) -> f64 {
        self.vx
    }

    pub fn vy(&self) -> f64 {
        self.vy
    }

    pub fn vz(&self) -> f64 {
        self.vz
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.vx, self.vy, self.vz]
    }

    pub fn dot(&self, other: &BlochVector) -> f64 {
        self.vx * other.vx + self.vy * other.vy + self.vz * other.vz
    }

    pub fn cross(&self, other: &BlochVector) -> [f64; 3] {
        cross(self.to_array(), other.to_array())
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }

    /// Geodesic angle to `other`, in `[0, π]`.
    ///
    /// Evaluated as `atan2(|a×b|, a·b)`, which equals `arccos(a·b)` but keeps
    /// full precision for nearly parallel vectors.
    pub fn angle_to(&self, other: &BlochVector) -> f64 {
        let [x, y, z] = self.cross(other);
        (x * x + y * y + z * z).sqrt().atan2(self.dot(other))
    }

    pub fn max_abs_diff(&self, other: &BlochVector) -> f64 {
        (self.vx - other.vx)
            .abs()
            .max((self.vy - other.vy).abs())
            .max((self.vz - other.vz).abs())
    }

    pub fn as_axis(&self) -> Axis {
        Axis::new(self.vx, self.vy, self.vz).expect("Bloch vectors are unit")
    }
}

impl Neg for BlochVector {
    type Output = BlochVector;

    fn neg(self) -> BlochVector {
        BlochVector {
            vx: -self.vx,
            vy: -self.vy,
            vz: -self.vz,
        }
    }
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// A real 3×3 rotation matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rotation3 {
    entries: [[f64; 3]; 3],
}

impl Rotation3 {
    pub const fn identity() -> Self {
        Rotation3 {
            entries: [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]],
        }
    }

    /// Accepts `entries` if `R·Rᵀ = 𝟙` and `det R = 1` within `1e-10`.
    pub fn new(entries: [[f64; 3]; 3]) -> Option<Self> {
        let r = Rotation3 { entries };
        (r.orthogonality_deviation() <= 1e-10 && (r.determinant() - 1.0).abs() <= 1e-10).then_some(r)
    }

    pub fn entries(&self) -> &[[f64; 3]; 3] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let a = &self.entries;
        let mut t = [[0.0; 3]; 3];
        for (i, row) in t.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = a[j][i];
            }
        }
        Rotation3 { entries: t }
    }

    pub fn determinant(&self) -> f64 {
        let a = &self.entries;
        a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
    }

    /// Max entrywise deviation of `R·Rᵀ` from 𝟙.
    pub fn orthogonality_deviation(&self) -> f64 {
        (*self * self.transpose()).max_abs_diff(&Rotation3::identity())
    }

    pub fn max_abs_diff(&self, other: &Rotation3) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `R·v` without renormalization.
    pub fn apply(&self, v: &BlochVector) -> [f64; 3] {
        let c = v.to_array();
        self.entries.map(|row| row[0] * c[0] + row[1] * c[1] + row[2] * c[2])
    }
}

impl Mul for Rotation3 {
    type Output = Rotation3;

    fn mul(self, rhs: Rotation3) -> Rotation3 {
        let (a, b) = (&self.entries, &rhs.entries);
        let mut out = [[0.0; 3]; 3];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..3).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        Rotation3 { entries: out }
    }
}

/// One projective measurement result of `ê·σ⃗`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(into = "i8")]
pub enum MeasurementOutcome {
    Plus,
    Minus,
}

impl MeasurementOutcome {
    pub fn value(self) -> i8 {
        match self {
            MeasurementOutcome::Plus => 1,
            MeasurementOutcome::Minus => -1,
        }
    }
}

impl From<MeasurementOutcome> for i8 {
    fn from(m: MeasurementOutcome) -> i8 {
        m.value()
    }
}

/// `½(𝟙 + v̂·σ⃗)`.
pub fn state_to_density(v: &BlochVector) -> Matrix2 {
    let half = Complex::new(0.5, 0.0);
    let n_dot_sigma = pauli(PauliAxis::X)
        .scale(Complex::new(v.vx, 0.0))
        .add(&pauli(PauliAxis::Y).scale(Complex::new(v.vy, 0.0)))
        .add(&pauli(PauliAxis::Z).scale(Complex::new(v.vz, 0.0)));
    Matrix2::identity().add(&n_dot_sigma).scale(half)
}

const STATE_TOL: f64 = 1e-9;

/// Inverse of [`state_to_density`]: `v_i = Tr(σ_i·ρ)`.
///
/// Only pure states are accepted; mixed states (Bloch norm below `1 − 1e-6`)
/// are rejected rather than projected onto the sphere.
pub fn density_to_state(m: &Matrix2) -> Result<BlochVector> {
    if !m.is_hermitian(STATE_TOL) {
        return Err(Error::NotAState {
            reason: "not Hermitian",
        });
    }
    if (m.trace() - Complex::new(1.0, 0.0)).norm() > STATE_TOL {
        return Err(Error::NotAState {
            reason: "trace is not 1",
        });
    }
    let [x, y, z] = PauliAxis::ALL.map(|p| (pauli(p) * *m).trace().re);
    let norm = (x * x + y * y + z * z).sqrt();
    if norm < 1.0 - NORMALIZE_TOL {
        return Err(Error::NotAState {
            reason: "mixed state (Bloch norm below 1)",
        });
    }
    if norm > 1.0 + NORMALIZE_TOL {
        return Err(Error::NotAState {
            reason: "Bloch norm above 1",
        });
    }
    Ok(BlochVector {
        vx: x / norm,
        vy: y / norm,
        vz: z / norm,
    })
}

/// `ê·v̂`, the expectation of `ê·σ⃗` in state `v̂`.
pub fn expectation(e: &BlochVector, v: &BlochVector) -> f64 {
    let d = e.dot(v);
    if d.abs() > 1.0 && d.abs() - 1.0 < 1e-12 {
        d.signum()
    } else {
        d
    }
}

/// `shots` i.i.d. measurements of `ê·σ⃗` on `v̂`, each `+1` with probability
/// `(1 + ê·v̂)/2`. Reproducible from `seed`; see [`crate::random::RNG_ALGORITHM`].
pub fn measure_sample(e: &BlochVector, v: &BlochVector, seed: u64, shots: usize) -> Result<Vec<MeasurementOutcome>> {
    if shots == 0 {
        return Err(Error::ZeroShots);
    }
    let p_plus = (1.0 + expectation(e, v)) / 2.0;
    let mut rng = rng_from_seed(seed);
    Ok((0..shots)
        .map(|_| {
            if rng.random::<f64>() < p_plus {
                MeasurementOutcome::Plus
            } else {
                MeasurementOutcome::Minus
            }
        })
        .collect())
}

/// The SO(3) image of `u`: `R_ij = ½·Tr(σ_i · U · σ_j · U†)`.
pub fn adjoint_rotation(u: &Unitary2) -> Rotation3 {
    let m = *u.matrix();
    let md = m.adjoint();
    let conjugated = PauliAxis::ALL.map(|p| m * pauli(p) * md);
    let mut entries = [[0.0; 3]; 3];
    for (i, row) in entries.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = 0.5 * (pauli(PauliAxis::ALL[i]) * conjugated[j]).trace().re;
        }
    }
    Rotation3 { entries }
}

/// Schrödinger-picture update `v̂ → U v̂ U†`.
pub fn rotate_state(u: &Unitary2, v: &BlochVector) -> BlochVector {
    BlochVector::renormalized(adjoint_rotation(u).apply(v))
}

/// Heisenberg-picture update `ê → U† ê U`.
pub fn rotate_observable(u: &Unitary2, e: &BlochVector) -> BlochVector {
    rotate_state(&u.adjoint(), e)
}

/// Closed-form rotation `v cos δ + (n̂×v) sin δ + n̂(n̂·v)(1 − cos δ)`.
///
/// Shares no code with the matrix-conjugation path and is used to check it.
pub fn rodrigues(axis: &Axis, angle: f64, v: &BlochVector) -> BlochVector {
    let n = axis.to_array();
    let c = v.to_array();
    let (s, co) = angle.sin_cos();
    let nxv = cross(n, c);
    let ndv = n[0] * c[0] + n[1] * c[1] + n[2] * c[2];
    let out = [0, 1, 2].map(|i| c[i] * co + nxv[i] * s + n[i] * ndv * (1.0 - co));
    BlochVector {
        vx: out[0],
        vy: out[1],
        vz: out[2],
    }
}
