use pyo3::prelude::*;
use pyo3::types::PyDict;

fn with_module<R>(f: impl FnOnce(Python<'_>, &Bound<'_, PyDict>) -> R) -> R {
    Python::attach(|py| {
        let m = PyModule::new(py, "qhalt").unwrap();
        qhalt_py::qhalt_module(&m).unwrap();
        let globals = PyDict::new(py);
        globals.set_item("qhalt", m).unwrap();
        globals.set_item("math", py.import("math").unwrap()).unwrap();
        f(py, &globals)
    })
}

#[test]
fn rotations_and_pictures() {
    with_module(|py, g| {
        py.run(
            cr#"
y = qhalt.Axis(0, 1, 0)
up = qhalt.BlochVector(0, 0, 1)
u = qhalt.make_unitary(y, math.pi / 2)
s = qhalt.rotate_state(u, up).as_list()
h = qhalt.rotate_observable(u, up).as_list()
assert abs(s[0] - 1) < 1e-15 and abs(h[0] + 1) < 1e-15, (s, h)
assert (u @ u.adjoint()).approx_eq(qhalt.Unitary2.identity())
assert u.projective_eq(-u)
assert qhalt.Unitary2([[0j, 1], [1, 0]]).approx_eq(qhalt.Unitary2.pauli("x"))
t = qhalt.trajectory("heisenberg-reversed", y, up, 0.0, math.pi / 2, 3)
assert [x for x, _ in t] == [0.0, -math.pi / 4, -math.pi / 2]
"#,
            Some(g),
            None,
        )
        .unwrap();
    });
}

#[test]
fn halting_and_self_reference() {
    with_module(|py, g| {
        py.run(
            cr#"
y = qhalt.Axis(0, 1, 0)
up = qhalt.BlochVector(0, 0, 1)
m = qhalt.HaltingMachine(y, math.pi / 2, up, up)
assert m.run("schrodinger").halt_expectation == -1.0
assert m.run("heisenberg").halt_basis_out.as_list() == [0.0, 0.0, -1.0]
r = qhalt.self_reference(y, math.pi / 2, up)
assert abs(r.discrepancy_angle - math.pi) < 1e-10 and r.halted_in_both
assert qhalt.is_fixed_point(y, math.pi, qhalt.BlochVector.from_angles(1.0, 2.0))
"#,
            Some(g),
            None,
        )
        .unwrap();
    });
}

#[test]
fn errors_become_value_errors() {
    with_module(|py, g| {
        for code in [
            c"qhalt.Axis(0, 0, 0)",
            c"qhalt.BlochVector(0, 0, 2)",
            c"qhalt.Unitary2([[1, 1], [0, 1]])",
            c"qhalt.HaltingMachine(qhalt.Axis(0,0,1), 1.0, qhalt.BlochVector(0,0,1), qhalt.BlochVector(0,0,1)).run('heisenberg-reversed')",
            c"qhalt.measure_sample(qhalt.BlochVector(0,0,1), qhalt.BlochVector(0,0,1), 1, 0)",
            c"qhalt.density_to_state([[0.5, 0], [0, 0.5]])",
            c"qhalt.evolve('sideways', qhalt.Axis(0,0,1), qhalt.BlochVector(0,0,1), 1.0)",
        ] {
            let err = py.run(code, Some(g), None).unwrap_err();
            assert!(err.is_instance_of::<pyo3::exceptions::PyValueError>(py), "{code:?}: {err}");
        }
    });
}
