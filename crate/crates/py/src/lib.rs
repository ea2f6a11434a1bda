//! Python bindings for `qhalt`.
//!
//! Vectors cross the boundary as `BlochVector`/`Axis` objects or as
//! `[x, y, z]` lists; pictures are passed by name (`"schrodinger"`,
//! `"heisenberg"`, `"heisenberg-reversed"`).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qhalt::{Complex, Matrix2, PauliAxis, PictureKind};

fn to_py_err(e: qhalt::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_picture(name: &str) -> PyResult<PictureKind> {
    name.parse().map_err(PyValueError::new_err)
}

#[pyclass(name = "Axis", module = "qhalt", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyAxis(qhalt::Axis);

#[pymethods]
impl PyAxis {
    /// Components within 1e-6 of unit norm are normalized; others are rejected.
    #[new]
    fn new(nx: f64, ny: f64, nz: f64) -> PyResult<Self> {
        qhalt::Axis::new(nx, ny, nz).map(PyAxis).map_err(to_py_err)
    }

    #[staticmethod]
    fn from_direction(x: f64, y: f64, z: f64) -> PyResult<Self> {
        qhalt::Axis::from_direction(x, y, z).map(PyAxis).map_err(to_py_err)
    }

    #[staticmethod]
    fn pauli(name: &str) -> PyResult<Self> {
        let which: PauliAxis = name.parse().map_err(PyValueError::new_err)?;
        Ok(PyAxis(qhalt::Axis::from_pauli(which)))
    }

    fn as_list(&self) -> [f64; 3] {
        self.0.to_array()
    }

    fn __repr__(&self) -> String {
        let [x, y, z] = self.0.to_array();
        format!("Axis({x}, {y}, {z})")
    }
}

#[pyclass(name = "BlochVector", module = "qhalt", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyBlochVector(qhalt::BlochVector);

#[pymethods]
impl PyBlochVector {
    #[new]
    fn new(vx: f64, vy: f64, vz: f64) -> PyResult<Self> {
        qhalt::BlochVector::new(vx, vy, vz)
            .map(PyBlochVector)
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn from_direction(x: f64, y: f64, z: f64) -> PyResult<Self> {
        qhalt::BlochVector::from_direction(x, y, z)
            .map(PyBlochVector)
            .map_err(to_py_err)
    }

    #[staticmethod]
    fn from_angles(theta: f64, phi: f64) -> Self {
        PyBlochVector(qhalt::BlochVector::from_angles(theta, phi))
    }

    #[getter]
    fn vx(&self) -> f64 {
        self.0.vx()
    }

    #[getter]
    fn vy(&self) -> f64 {
        self.0.vy()
    }

    #[getter]
    fn vz(&self) -> f64 {
        self.0.vz()
    }

    fn dot(&self, other: &PyBlochVector) -> f64 {
        self.0.dot(&other.0)
    }

    fn angle_to(&self, other: &PyBlochVector) -> f64 {
        self.0.angle_to(&other.0)
    }

    fn as_axis(&self) -> PyAxis {
        PyAxis(self.0.as_axis())
    }

    fn as_list(&self) -> [f64; 3] {
        self.0.to_array()
    }

    fn __neg__(&self) -> Self {
        PyBlochVector(-self.0)
    }

    fn __repr__(&self) -> String {
        let [x, y, z] = self.0.to_array();
        format!("BlochVector({x}, {y}, {z})")
    }
}

#[pyclass(name = "Unitary2", module = "qhalt", frozen, from_py_object)]
#[derive(Clone, Copy)]
pub struct PyUnitary2(qhalt::Unitary2);

#[pymethods]
impl PyUnitary2 {
    /// Build from a 2×2 nested list of complex numbers; must be unitary to 1e-12.
    #[new]
    fn new(rows: [[Complex; 2]; 2]) -> PyResult<Self> {
        let m = Matrix2::new(rows).map_err(to_py_err)?;
        qhalt::Unitary2::new(m).map(PyUnitary2).map_err(to_py_err)
    }

    #[staticmethod]
    fn identity() -> Self {
        PyUnitary2(qhalt::Unitary2::identity())
    }

    #[staticmethod]
    fn pauli(name: &str) -> PyResult<Self> {
        let which: PauliAxis = name.parse().map_err(PyValueError::new_err)?;
        Ok(PyUnitary2(qhalt::Unitary2::pauli(which)))
    }

    fn matrix(&self) -> [[Complex; 2]; 2] {
        *self.0.matrix().entries()
    }

    fn adjoint(&self) -> Self {
        PyUnitary2(self.0.adjoint())
    }

    fn compose(&self, other: &PyUnitary2) -> Self {
        PyUnitary2(self.0.compose(&other.0))
    }

    fn __matmul__(&self, other: &PyUnitary2) -> Self {
        self.compose(other)
    }

    fn __neg__(&self) -> Self {
        PyUnitary2(-self.0)
    }

    #[pyo3(signature = (other, tol = 1e-12))]
    fn approx_eq(&self, other: &PyUnitary2, tol: f64) -> bool {
        self.0.approx_eq(&other.0, tol)
    }

    #[pyo3(signature = (other, tol = 1e-12))]
    fn projective_eq(&self, other: &PyUnitary2, tol: f64) -> bool {
        self.0.projective_eq(&other.0, tol)
    }

    fn unitarity_deviation(&self) -> f64 {
        self.0.unitarity_deviation()
    }
}

#[pyclass(name = "RunReport", module = "qhalt", frozen, skip_from_py_object)]
pub struct PyRunReport(qhalt::RunReport);

#[pymethods]
impl PyRunReport {
    #[getter]
    fn picture(&self) -> &'static str {
        self.0.picture.name()
    }

    #[getter]
    fn system_out(&self) -> PyBlochVector {
        PyBlochVector(self.0.system_out)
    }

    #[getter]
    fn halt_out(&self) -> PyBlochVector {
        PyBlochVector(self.0.halt_out)
    }

    #[getter]
    fn system_basis_out(&self) -> PyBlochVector {
        PyBlochVector(self.0.system_basis_out)
    }

    #[getter]
    fn halt_basis_out(&self) -> PyBlochVector {
        PyBlochVector(self.0.halt_basis_out)
    }

    #[getter]
    fn system_expectation(&self) -> f64 {
        self.0.system_expectation
    }

    #[getter]
    fn halt_expectation(&self) -> f64 {
        self.0.halt_expectation
    }
}

#[pyclass(name = "SelfRefReport", module = "qhalt", frozen, skip_from_py_object)]
pub struct PySelfRefReport(qhalt::SelfRefReport);

#[pymethods]
impl PySelfRefReport {
    #[getter]
    fn schrodinger_output(&self) -> PyBlochVector {
        PyBlochVector(self.0.schrodinger_output)
    }

    #[getter]
    fn heisenberg_output(&self) -> PyBlochVector {
        PyBlochVector(self.0.heisenberg_output)
    }

    #[getter]
    fn discrepancy_angle(&self) -> f64 {
        self.0.discrepancy_angle
    }

    #[getter]
    fn halted_in_both(&self) -> bool {
        self.0.halted_in_both
    }
}

#[pyclass(name = "HaltingMachine", module = "qhalt", frozen, skip_from_py_object)]
pub struct PyHaltingMachine(qhalt::HaltingMachine);

#[pymethods]
impl PyHaltingMachine {
    #[new]
    fn new(axis: PyAxis, angle: f64, system: PyBlochVector, system_basis: PyBlochVector) -> PyResult<Self> {
        qhalt::HaltingMachine::new(axis.0, angle, system.0, system_basis.0)
            .map(PyHaltingMachine)
            .map_err(to_py_err)
    }

    /// `picture` is `"schrodinger"` or `"heisenberg"`.
    fn run(&self, picture: &str) -> PyResult<PyRunReport> {
        self.0.run(parse_picture(picture)?).map(PyRunReport).map_err(to_py_err)
    }

    #[getter]
    fn halt(&self) -> PyBlochVector {
        PyBlochVector(self.0.halt())
    }

    #[getter]
    fn halt_basis(&self) -> PyBlochVector {
        PyBlochVector(self.0.halt_basis())
    }
}

#[pyfunction]
fn pauli(name: &str) -> PyResult<[[Complex; 2]; 2]> {
    let which: PauliAxis = name.parse().map_err(PyValueError::new_err)?;
    Ok(*qhalt::pauli(which).entries())
}

#[pyfunction]
fn make_unitary(axis: PyAxis, angle: f64) -> PyUnitary2 {
    PyUnitary2(qhalt::make_unitary(&axis.0, angle))
}

#[pyfunction]
fn exp_generator(axis: PyAxis, t: f64) -> PyUnitary2 {
    PyUnitary2(qhalt::exp_generator(&axis.0, t))
}

#[pyfunction]
fn adjoint_rotation(u: PyUnitary2) -> [[f64; 3]; 3] {
    *qhalt::adjoint_rotation(&u.0).entries()
}

#[pyfunction]
fn rotate_state(u: PyUnitary2, v: PyBlochVector) -> PyBlochVector {
    PyBlochVector(qhalt::rotate_state(&u.0, &v.0))
}

#[pyfunction]
fn rotate_observable(u: PyUnitary2, e: PyBlochVector) -> PyBlochVector {
    PyBlochVector(qhalt::rotate_observable(&u.0, &e.0))
}

#[pyfunction]
fn rodrigues(axis: PyAxis, angle: f64, v: PyBlochVector) -> PyBlochVector {
    PyBlochVector(qhalt::rodrigues(&axis.0, angle, &v.0))
}

#[pyfunction]
fn expectation(e: PyBlochVector, v: PyBlochVector) -> f64 {
    qhalt::expectation(&e.0, &v.0)
}

#[pyfunction]
fn state_to_density(v: PyBlochVector) -> [[Complex; 2]; 2] {
    *qhalt::state_to_density(&v.0).entries()
}

#[pyfunction]
fn density_to_state(rows: [[Complex; 2]; 2]) -> PyResult<PyBlochVector> {
    let m = Matrix2::new(rows).map_err(to_py_err)?;
    qhalt::density_to_state(&m).map(PyBlochVector).map_err(to_py_err)
}

/// List of `+1`/`-1` outcomes.
#[pyfunction]
fn measure_sample(e: PyBlochVector, v: PyBlochVector, seed: u64, shots: usize) -> PyResult<Vec<i8>> {
    let outcomes = qhalt::measure_sample(&e.0, &v.0, seed, shots).map_err(to_py_err)?;
    Ok(outcomes.into_iter().map(|m| m.value()).collect())
}

#[pyfunction]
#[pyo3(signature = (picture, axis, input, t, rate = 1.0))]
fn evolve(picture: &str, axis: PyAxis, input: PyBlochVector, t: f64, rate: f64) -> PyResult<PyBlochVector> {
    let spec = qhalt::EvolutionSpec::new(axis.0, rate, parse_picture(picture)?).map_err(to_py_err)?;
    Ok(PyBlochVector(qhalt::evolve(&spec, &input.0, t)))
}

/// List of `(time_label, [vx, vy, vz])` tuples.
#[pyfunction]
#[pyo3(signature = (picture, axis, input, t_start, t_end, steps, rate = 1.0))]
fn trajectory(
    picture: &str,
    axis: PyAxis,
    input: PyBlochVector,
    t_start: f64,
    t_end: f64,
    steps: usize,
    rate: f64,
) -> PyResult<Vec<(f64, [f64; 3])>> {
    let spec = qhalt::EvolutionSpec::new(axis.0, rate, parse_picture(picture)?).map_err(to_py_err)?;
    let samples = qhalt::trajectory(&spec, &input.0, t_start, t_end, steps).map_err(to_py_err)?;
    Ok(samples
        .into_iter()
        .map(|s| (s.time_label, s.vector.to_array()))
        .collect())
}

#[pyfunction]
fn reversed_label_equivalence(axis: PyAxis, rate: f64, input: PyBlochVector, t_grid: Vec<f64>) -> PyResult<bool> {
    qhalt::reversed_label_equivalence(&axis.0, rate, &input.0, &t_grid).map_err(to_py_err)
}

#[pyfunction]
fn self_reference(axis: PyAxis, angle: f64, basis: PyBlochVector) -> PyResult<PySelfRefReport> {
    qhalt::self_reference(&axis.0, angle, &basis.0)
        .map(PySelfRefReport)
        .map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (axis, angle, basis, tol = qhalt::halting::FIXED_POINT_TOL))]
fn is_fixed_point(axis: PyAxis, angle: f64, basis: PyBlochVector, tol: f64) -> bool {
    qhalt::is_fixed_point(&axis.0, angle, &basis.0, tol)
}

#[pyfunction]
fn discrepancy_closed_form(theta: f64, delta: f64) -> f64 {
    qhalt::discrepancy_closed_form(theta, delta)
}

#[pymodule]
#[pyo3(name = "qhalt")]
pub fn qhalt_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAxis>()?;
    m.add_class::<PyBlochVector>()?;
    m.add_class::<PyUnitary2>()?;
    m.add_class::<PyHaltingMachine>()?;
    m.add_class::<PyRunReport>()?;
    m.add_class::<PySelfRefReport>()?;
    m.add_function(wrap_pyfunction!(pauli, m)?)?;
    m.add_function(wrap_pyfunction!(make_unitary, m)?)?;
    m.add_function(wrap_pyfunction!(exp_generator, m)?)?;
    m.add_function(wrap_pyfunction!(adjoint_rotation, m)?)?;
    m.add_function(wrap_pyfunction!(rotate_state, m)?)?;
    m.add_function(wrap_pyfunction!(rotate_observable, m)?)?;
    m.add_function(wrap_pyfunction!(rodrigues, m)?)?;
    m.add_function(wrap_pyfunction!(expectation, m)?)?;
    m.add_function(wrap_pyfunction!(state_to_density, m)?)?;
    m.add_function(wrap_pyfunction!(density_to_state, m)?)?;
    m.add_function(wrap_pyfunction!(measure_sample, m)?)?;
    m.add_function(wrap_pyfunction!(evolve, m)?)?;
    m.add_function(wrap_pyfunction!(trajectory, m)?)?;
    m.add_function(wrap_pyfunction!(reversed_label_equivalence, m)?)?;
    m.add_function(wrap_pyfunction!(self_reference, m)?)?;
    m.add_function(wrap_pyfunction!(is_fixed_point, m)?)?;
    m.add_function(wrap_pyfunction!(discrepancy_closed_form, m)?)?;
    m.add("RNG_ALGORITHM", qhalt::random::RNG_ALGORITHM)?;
    Ok(())
}
