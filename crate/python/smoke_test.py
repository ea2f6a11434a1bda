"""Smoke test for the qhalt Python extension.

Build and install first:

    cd crates/py && maturin develop --release   # or: pip install .
    python python/smoke_test.py
"""

import math
import random

import qhalt


def close(a, b, tol=1e-12):
    return all(abs(x - y) <= tol for x, y in zip(a, b))


def main():
    y = qhalt.Axis(0, 1, 0)
    up = qhalt.BlochVector(0, 0, 1)

    u = qhalt.make_unitary(y, math.pi / 2)
    assert u.unitarity_deviation() < 1e-12
    assert close(qhalt.rotate_state(u, up).as_list(), [1, 0, 0])
    assert close(qhalt.rotate_observable(u, up).as_list(), [-1, 0, 0])
    assert qhalt.pauli("y") == [[0j, -1j], [1j, 0j]]
    assert close(qhalt.adjoint_rotation(qhalt.Unitary2.pauli("x"))[1], [0, -1, 0])

    rng = random.Random(7)
    for _ in range(200):
        axis = qhalt.Axis.from_direction(rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))
        e = qhalt.BlochVector.from_direction(rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))
        v = qhalt.BlochVector.from_direction(rng.gauss(0, 1), rng.gauss(0, 1), rng.gauss(0, 1))
        w = qhalt.make_unitary(axis, rng.uniform(-10, 10))
        lhs = qhalt.expectation(e, qhalt.rotate_state(w, v))
        rhs = qhalt.expectation(qhalt.rotate_observable(w, e), v)
        assert abs(lhs - rhs) < 1e-12

    machine = qhalt.HaltingMachine(y, math.pi / 2, up, up)
    s = machine.run("schrodinger")
    h = machine.run("heisenberg")
    assert s.halt_expectation == -1.0 and h.halt_expectation == -1.0
    assert abs(s.system_expectation - h.system_expectation) < 1e-12
    try:
        machine.run("heisenberg-reversed")
    except ValueError:
        pass
    else:
        raise AssertionError("reversed picture should be rejected")

    report = qhalt.self_reference(y, math.pi / 2, up)
    assert abs(report.discrepancy_angle - math.pi) < 1e-10
    assert report.halted_in_both
    assert not qhalt.is_fixed_point(y, math.pi / 2, up)
    assert qhalt.is_fixed_point(y, 0.7, qhalt.BlochVector(0, -1, 0))
    assert abs(qhalt.discrepancy_closed_form(math.pi / 2, math.pi / 2) - math.pi) < 1e-15

    traj = qhalt.trajectory("heisenberg-reversed", y, up, 0.0, math.pi, 5)
    assert close([t for t, _ in traj], [0, -math.pi / 4, -math.pi / 2, -3 * math.pi / 4, -math.pi])
    assert close(traj[2][1], [-1, 0, 0])
    assert qhalt.reversed_label_equivalence(y, 1.0, up, [0.0, 0.3, 1.1])

    shots = qhalt.measure_sample(up, qhalt.BlochVector(1, 0, 0), 42, 100_000)
    assert set(shots) <= {1, -1}
    assert abs(sum(shots) / len(shots)) < 0.02
    assert shots == qhalt.measure_sample(up, qhalt.BlochVector(1, 0, 0), 42, 100_000)

    rho = qhalt.state_to_density(qhalt.BlochVector(1, 0, 0))
    assert close([z.real for row in rho for z in row], [0.5] * 4)
    assert close(qhalt.density_to_state(rho).as_list(), [1, 0, 0])

    print("qhalt python smoke test passed (rng: %s)" % qhalt.RNG_ALGORITHM)


if __name__ == "__main__":
    main()
