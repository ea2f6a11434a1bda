//! Complex 2×2 algebra for a single qubit: Pauli matrices, axis-angle
//! unitaries, adjoints and products.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Matrix entry type.
pub type Complex = Complex64;

/// Maximum entrywise deviation of `U·U†` from the identity for a matrix to
/// count as unitary.
pub const TOL_ALG: f64 = 1e-12;

/// Tolerance on `|n|² = 1` for unit 3-vectors.
pub const TOL_UNIT: f64 = 1e-9;

/// Inputs whose norm is within this distance of 1 are silently normalized by
/// the strict constructors; anything further away is rejected.
pub const NORMALIZE_TOL: f64 = 1e-6;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);
const I: Complex = Complex::new(0.0, 1.0);

/// Normalize `(x, y, z)` if it is within [`NORMALIZE_TOL`] of unit length.
///
/// Returns the norm on failure so callers can build their own error.
pub(crate) fn normalize_near_unit(x: f64, y: f64, z: f64) -> std::result::Result<[f64; 3], f64> {
    let norm = (x * x + y * y + z * z).sqrt();
    if norm == 0.0 || (norm - 1.0).abs() >= NORMALIZE_TOL {
        return Err(norm);
    }
    Ok([x / norm, y / norm, z / norm])
}

/// Normalize any finite non-zero vector.
pub(crate) fn normalize_any(x: f64, y: f64, z: f64) -> std::result::Result<[f64; 3], f64> {
    let norm = (x * x + y * y + z * z).sqrt();
    if !(norm.is_finite() && norm > 0.0) {
        return Err(norm);
    }
    Ok([x / norm, y / norm, z / norm])
}

fn all_finite(v: &[f64]) -> bool {
    v.iter().all(|x| x.is_finite())
}

/// Name of one of the three Pauli matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 3] = [PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    pub fn index(self) -> usize {
        match self {
            PauliAxis::X => 0,
            PauliAxis::Y => 1,
            PauliAxis::Z => 2,
        }
    }
}

impl FromStr for PauliAxis {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "x" => Ok(PauliAxis::X),
            "y" => Ok(PauliAxis::Y),
            "z" => Ok(PauliAxis::Z),
            other => Err(format!("unknown Pauli axis `{other}` (expected x, y or z)")),
        }
    }
}

/// A real unit 3-vector used as a rotation axis `n̂`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Axis {
    nx: f64,
    ny: f64,
    nz: f64,
}

impl Axis {
    pub const X: Axis = Axis {
        nx: 1.0,
        ny: 0.0,
        nz: 0.0,
    };
    pub const Y: Axis = Axis {
        nx: 0.0,
        ny: 1.0,
        nz: 0.0,
    };
    pub const Z: Axis = Axis {
        nx: 0.0,
        ny: 0.0,
        nz: 1.0,
    };

    /// Build an axis from direction cosines.
    ///
    /// Inputs within [`NORMALIZE_TOL`] of unit norm are normalized; the zero
    /// vector and anything further from unit norm yield [`Error::AxisNotUnit`].
    pub fn new(nx: f64, ny: f64, nz: f64) -> Result<Self> {
        if !all_finite(&[nx, ny, nz]) {
            return Err(Error::NonFinite);
        }
        let [nx, ny, nz] = normalize_near_unit(nx, ny, nz).map_err(|norm| Error::AxisNotUnit { norm })?;
        Ok(Axis { nx, ny, nz })
    }

    /// Build an axis pointing along any finite non-zero direction.
    pub fn from_direction(x: f64, y: f64, z: f64) -> Result<Self> {
        if !all_finite(&[x, y, z]) {
            return Err(Error::NonFinite);
        }
        let [nx, ny, nz] = normalize_any(x, y, z).map_err(|norm| Error::AxisNotUnit { norm })?;
        Ok(Axis { nx, ny, nz })
    }

    pub fn from_pauli(which: PauliAxis) -> Self {
        match which {
            PauliAxis::X => Axis::X,
            PauliAxis::Y => Axis::Y,
            PauliAxis::Z => Axis::Z,
        }
    }

    pub fn nx(&self) -> f64 {
        self.nx
    }

    pub fn ny(&self) -> f64 {
        self.ny
    }

    pub fn nz(&self) -> f64 {
        self.nz
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.nx, self.ny, self.nz]
    }
}

/// A 2×2 complex matrix with finite entries, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2 {
    entries: [[Complex; 2]; 2],
}

impl Matrix2 {
    /// Rejects matrices with NaN or infinite entries.
    pub fn new(entries: [[Complex; 2]; 2]) -> Result<Self> {
        let finite = entries.iter().flatten().all(|c| c.re.is_finite() && c.im.is_finite());
        if !finite {
            return Err(Error::NonFinite);
        }
        Ok(Matrix2 { entries })
    }

    pub(crate) const fn from_entries(entries: [[Complex; 2]; 2]) -> Self {
        Matrix2 { entries }
    }

    pub const fn identity() -> Self {
        Matrix2::from_entries([[ONE, ZERO], [ZERO, ONE]])
    }

    pub fn entries(&self) -> &[[Complex; 2]; 2] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex {
        self.entries[row][col]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let a = &self.entries;
        Matrix2::from_entries([[a[0][0].conj(), a[1][0].conj()], [a[0][1].conj(), a[1][1].conj()]])
    }

    pub fn trace(&self) -> Complex {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn determinant(&self) -> Complex {
        let a = &self.entries;
        a[0][0] * a[1][1] - a[0][1] * a[1][0]
    }

    pub fn scale(&self, k: Complex) -> Self {
        let a = &self.entries;
        Matrix2::from_entries([[a[0][0] * k, a[0][1] * k], [a[1][0] * k, a[1][1] * k]])
    }

    pub fn add(&self, other: &Matrix2) -> Self {
        let (a, b) = (&self.entries, &other.entries);
        Matrix2::from_entries([
            [a[0][0] + b[0][0], a[0][1] + b[0][1]],
            [a[1][0] + b[1][0], a[1][1] + b[1][1]],
        ])
    }

    /// Largest `|a_ij − b_ij|` over all entries.
    pub fn max_abs_diff(&self, other: &Matrix2) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.max_abs_diff(&self.adjoint()) <= tol
    }
}

impl Mul for Matrix2 {
    type Output = Matrix2;

    fn mul(self, rhs: Matrix2) -> Matrix2 {
        let (a, b) = (&self.entries, &rhs.entries);
        Matrix2::from_entries([
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ])
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = &self.entries;
        write!(f, "[[{}, {}], [{}, {}]]", a[0][0], a[0][1], a[1][0], a[1][1])
    }
}

/// The exact Pauli matrix for `which`.
pub const fn pauli(which: PauliAxis) -> Matrix2 {
    match which {
        PauliAxis::X => Matrix2::from_entries([[ZERO, ONE], [ONE, ZERO]]),
        PauliAxis::Y => Matrix2::from_entries([[ZERO, Complex::new(0.0, -1.0)], [I, ZERO]]),
        PauliAxis::Z => Matrix2::from_entries([[ONE, ZERO], [ZERO, Complex::new(-1.0, 0.0)]]),
    }
}

/// A 2×2 unitary matrix. The global phase is kept as given.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Unitary2 {
    matrix: Matrix2,
}

impl Unitary2 {
    /// Accepts `matrix` if `U·U†` is the identity within [`TOL_ALG`].
    pub fn new(matrix: Matrix2) -> Result<Self> {
        let deviation = (matrix * matrix.adjoint()).max_abs_diff(&Matrix2::identity());
        if deviation > TOL_ALG {
            return Err(Error::NotUnitary { deviation });
        }
        Ok(Unitary2 { matrix })
    }

    pub const fn identity() -> Self {
        Unitary2 {
            matrix: Matrix2::identity(),
        }
    }

    /// A Pauli matrix viewed as a unitary (each one is Hermitian and squares to 𝟙).
    pub const fn pauli(which: PauliAxis) -> Self {
        Unitary2 { matrix: pauli(which) }
    }

    pub fn matrix(&self) -> &Matrix2 {
        &self.matrix
    }

    pub fn adjoint(&self) -> Self {
        Unitary2 {
            matrix: self.matrix.adjoint(),
        }
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Unitary2) -> Self {
        Unitary2 {
            matrix: self.matrix * other.matrix,
        }
    }

    /// Max entrywise deviation of `U·U†` from 𝟙.
    pub fn unitarity_deviation(&self) -> f64 {
        (self.matrix * self.matrix.adjoint()).max_abs_diff(&Matrix2::identity())
    }

    /// Strict entrywise comparison.
    pub fn approx_eq(&self, other: &Unitary2, tol: f64) -> bool {
        self.matrix.max_abs_diff(&other.matrix) <= tol
    }

    /// Comparison up to a global unit phase `e^{iφ}`.
    pub fn projective_eq(&self, other: &Unitary2, tol: f64) -> bool {
        // Tr(A†B) = 2·e^{iφ} when B = e^{iφ}A.
        let overlap = (self.matrix.adjoint() * other.matrix).trace();
        let magnitude = overlap.norm();
        if magnitude == 0.0 {
            return false;
        }
        let phase = overlap / magnitude;
        self.matrix.scale(phase).max_abs_diff(&other.matrix) <= tol
    }
}

impl Neg for Unitary2 {
    type Output = Unitary2;

    fn neg(self) -> Unitary2 {
        Unitary2 {
            matrix: self.matrix.scale(Complex::new(-1.0, 0.0)),
        }
    }
}

impl Mul for Unitary2 {
    type Output = Unitary2;

    fn mul(self, rhs: Unitary2) -> Unitary2 {
        self.compose(&rhs)
    }
}

/// `cos(δ/2)·𝟙 − i·sin(δ/2)·(n̂·σ⃗)`: the rotation of the Bloch sphere by
/// `angle` about `axis`. The angle is not wrapped.
pub fn make_unitary(axis: &Axis, angle: f64) -> Unitary2 {
    let (s, c) = (angle / 2.0).sin_cos();
    let Axis { nx, ny, nz } = *axis;
    // n·σ = [[nz, nx − i·ny], [nx + i·ny, −nz]]
    let matrix = Matrix2::from_entries([
        [Complex::new(c, -s * nz), Complex::new(-s * ny, -s * nx)],
        [Complex::new(s * ny, -s * nx), Complex::new(c, s * nz)],
    ]);
    Unitary2 { matrix }
}

/// `e^{−i(n̂·σ⃗)t/2}`, the forward evolution for time `t` under a unit-rate
/// single-axis generator. Identical to [`make_unitary`].
pub fn exp_generator(axis: &Axis, t: f64) -> Unitary2 {
    make_unitary(axis, t)
}

/// Free-function form of [`Unitary2::adjoint`].
pub fn adjoint(u: &Unitary2) -> Unitary2 {
    u.adjoint()
}

/// Free-function form of [`Unitary2::compose`].
pub fn compose(a: &Unitary2, b: &Unitary2) -> Unitary2 {
    a.compose(b)
}
