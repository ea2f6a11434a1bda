//! The single-qubit halting machine and the self-reference experiment.
//!
//! The machine rotates a system vector by `δ` about `n̂` with
//! `U_δ = cos(δ/2)𝟙 − i sin(δ/2)(n̂·σ⃗)` and flips a halt qubit pinned at
//! `(0,0,1)` by conjugation with `σ_x`. In the Schrödinger picture the vectors
//! move; in the Heisenberg picture the observer's basis vectors move instead.
//!
//! Feeding the observer's own basis vector in as the system input gives
//! `U_δ ê U_δ†` in one picture and `U_δ† ê U_δ` in the other. These agree only
//! when `ê = ±n̂` or `δ ≡ 0 (mod π)`.

use serde::Serialize;

use crate::bloch::{expectation, rotate_observable, rotate_state, BlochVector};
use crate::error::{Error, Result};
use crate::pictures::PictureKind;
use crate::su2::{make_unitary, Axis, PauliAxis, Unitary2};

/// Default angular tolerance for [`is_fixed_point`], in radians.
pub const FIXED_POINT_TOL: f64 = 1e-9;

const HALT_FLIP: Unitary2 = Unitary2::pauli(PauliAxis::X);

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HaltingMachine {
    axis: Axis,
    angle: f64,
    system: BlochVector,
    halt: BlochVector,
    system_basis: BlochVector,
    halt_basis: BlochVector,
}

impl HaltingMachine {
    /// The halt qubit and its basis vector both start at `(0,0,1)`.
    pub fn new(axis: Axis, angle: f64, system: BlochVector, system_basis: BlochVector) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::NonFinite);
        }
        Ok(HaltingMachine {
            axis,
            angle,
            system,
            halt: BlochVector::PLUS_Z,
            system_basis,
            halt_basis: BlochVector::PLUS_Z,
        })
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn system(&self) -> BlochVector {
        self.system
    }

    pub fn halt(&self) -> BlochVector {
        self.halt
    }

    pub fn system_basis(&self) -> BlochVector {
        self.system_basis
    }

    pub fn halt_basis(&self) -> BlochVector {
        self.halt_basis
    }

    pub fn unitary(&self) -> Unitary2 {
        make_unitary(&self.axis, self.angle)
    }

    /// `+1` before any run.
    pub fn initial_halt_expectation(&self) -> f64 {
        expectation(&self.halt_basis, &self.halt)
    }

    pub fn run(&self, picture: PictureKind) -> Result<RunReport> {
        run(self, picture)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RunReport {
    pub picture: PictureKind,
    pub system_out: BlochVector,
    pub halt_out: BlochVector,
    pub system_basis_out: BlochVector,
    pub halt_basis_out: BlochVector,
    pub system_expectation: f64,
    pub halt_expectation: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SelfRefReport {
    /// `U_δ ê U_δ†`
    pub schrodinger_output: BlochVector,
    /// `U_δ† ê U_δ`
    pub heisenberg_output: BlochVector,
    /// Geodesic angle between the two outputs, in `[0, π]`.
    pub discrepancy_angle: f64,
    pub halted_in_both: bool,
}

/// Run the machine once in the Schrödinger or Heisenberg picture.
pub fn run(machine: &HaltingMachine, picture: PictureKind) -> Result<RunReport> {
    let u = machine.unitary();
    let (system_out, halt_out, system_basis_out, halt_basis_out) = match picture {
        PictureKind::Schrodinger => (
            rotate_state(&u, &machine.system),
            rotate_state(&HALT_FLIP, &machine.halt),
            machine.system_basis,
            machine.halt_basis,
        ),
        PictureKind::Heisenberg => (
            machine.system,
            machine.halt,
            rotate_observable(&u, &machine.system_basis),
            rotate_observable(&HALT_FLIP, &machine.halt_basis),
        ),
        PictureKind::HeisenbergTimeReversed => return Err(Error::UnsupportedPicture),
    };
    Ok(RunReport {
        picture,
        system_out,
        halt_out,
        system_basis_out,
        halt_basis_out,
        system_expectation: expectation(&system_basis_out, &system_out),
        halt_expectation: expectation(&halt_basis_out, &halt_out),
    })
}

/// Use the observer's basis vector `basis` as the machine input and compare
/// what the two pictures produce.
pub fn self_reference(axis: &Axis, angle: f64, basis: &BlochVector) -> Result<SelfRefReport> {
    let machine = HaltingMachine::new(*axis, angle, *basis, *basis)?;
    let u = machine.unitary();
    let schrodinger_output = rotate_state(&u, basis);
    let heisenberg_output = rotate_state(&u.adjoint(), basis);
    let halted = |p| run(&machine, p).map(|r| (r.halt_expectation + 1.0).abs() <= 1e-12);
    let halted_in_both = halted(PictureKind::Schrodinger)? && halted(PictureKind::Heisenberg)?;
    Ok(SelfRefReport {
        schrodinger_output,
        heisenberg_output,
        discrepancy_angle: schrodinger_output.angle_to(&heisenberg_output),
        halted_in_both,
    })
}

/// Whether the two pictures agree (discrepancy below `tol` radians) on the
/// self-referential input. A non-positive `tol` never matches.
pub fn is_fixed_point(axis: &Axis, angle: f64, basis: &BlochVector, tol: f64) -> bool {
    self_reference(axis, angle, basis).is_ok_and(|r| r.discrepancy_angle < tol)
}

/// Analytic discrepancy for a basis at angle `theta` from the axis and
/// rotation angle `delta`: `Δ = arccos(cos²θ + sin²θ·cos 2δ)`.
///
/// Both outputs sit on the cone of half-angle `θ` about `n̂`, `2δ` apart in
/// azimuth, so `sin(Δ/2) = |sin θ · sin δ|` and
/// `cos(Δ/2) = √(cos²θ + sin²θ·cos²δ)`. The half-angle form is evaluated
/// with `atan2` so that small discrepancies keep full precision.
pub fn discrepancy_closed_form(theta: f64, delta: f64) -> f64 {
    let (st, ct) = theta.sin_cos();
    let (sd, cd) = delta.sin_cos();
    let half_sin = (st * sd).abs();
    let half_cos = (ct * ct + st * st * cd * cd).sqrt();
    2.0 * half_sin.atan2(half_cos)
}
