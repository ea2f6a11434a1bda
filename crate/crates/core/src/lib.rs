//! Single-qubit dynamics in the Schrödinger and Heisenberg pictures.
//!
//! States and observables are both unit vectors on the Bloch sphere. A
//! unitary `U` moves a state by `v̂ → U v̂ U†` and an observable by
//! `ê → U† ê U`; expectation values `ê·v̂` agree between the two. On top of
//! that the crate provides a halting-machine model, the self-reference
//! experiment where the two pictures disagree, and time-relabelled Heisenberg
//! trajectories.

pub mod bloch;
pub mod cli;
pub mod error;
pub mod halting;
pub mod pictures;
pub mod random;
pub mod su2;

pub use bloch::{
    adjoint_rotation, density_to_state, expectation, measure_sample, rodrigues, rotate_observable, rotate_state,
    state_to_density, BlochVector, MeasurementOutcome, Rotation3,
};
pub use error::{Error, Result};
pub use halting::{
    discrepancy_closed_form, is_fixed_point, run, self_reference, HaltingMachine, RunReport, SelfRefReport,
};
pub use pictures::{evolve, reversed_label_equivalence, trajectory, EvolutionSpec, PictureKind, TrajectorySample};
pub use su2::{adjoint, compose, exp_generator, make_unitary, pauli, Axis, Complex, Matrix2, PauliAxis, Unitary2};
