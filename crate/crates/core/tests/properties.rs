use std::f64::consts::PI;

use proptest::prelude::*;
use qhalt::random::{haar_unitary, rng_from_seed};
use qhalt::*;

fn unit_vector() -> impl Strategy<Value = BlochVector> {
    (-1.0f64..1.0, 0.0..2.0 * PI).prop_map(|(cos_theta, phi)| BlochVector::from_angles(cos_theta.acos(), phi))
}

fn axis() -> impl Strategy<Value = Axis> {
    unit_vector().prop_map(|v| v.as_axis())
}

fn angle() -> impl Strategy<Value = f64> {
    -4.0 * PI..4.0 * PI
}

fn unitary() -> impl Strategy<Value = Unitary2> {
    any::<u64>().prop_map(|seed| haar_unitary(&mut rng_from_seed(seed)))
}

/// Independent Rodrigues-free check: rotations about a coordinate axis,
/// written out by hand.
fn y_rotation_oracle(alpha: f64, v: &BlochVector) -> [f64; 3] {
    let (s, c) = alpha.sin_cos();
    [c * v.vx() + s * v.vz(), v.vy(), -s * v.vx() + c * v.vz()]
}

fn close(a: &BlochVector, b: &BlochVector, tol: f64) -> bool {
    a.max_abs_diff(b) <= tol
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn make_unitary_is_unitary(n in axis(), d in angle()) {
        let u = make_unitary(&n, d);
        prop_assert!((u * u.adjoint()).approx_eq(&Unitary2::identity(), 1e-12));
    }

    #[test]
    fn su2_periods(n in axis(), d in angle()) {
        let u = make_unitary(&n, d);
        prop_assert!(make_unitary(&n, d + 4.0 * PI).approx_eq(&u, 1e-12));
        prop_assert!(make_unitary(&n, d + 2.0 * PI).approx_eq(&-u, 1e-12));
    }

    #[test]
    fn compose_associative(a in unitary(), b in unitary(), c in unitary()) {
        prop_assert!(((a * b) * c).approx_eq(&(a * (b * c)), 1e-12));
    }

    #[test]
    fn adjoint_reverses_products(a in unitary(), b in unitary()) {
        prop_assert!(adjoint(&compose(&a, &b)).approx_eq(&compose(&b.adjoint(), &a.adjoint()), 1e-12));
        prop_assert_eq!(a.adjoint().adjoint(), a);
    }

    #[test]
    fn picture_equivalence(u in unitary(), e in unit_vector(), v in unit_vector()) {
        let s = expectation(&e, &rotate_state(&u, &v));
        let h = expectation(&rotate_observable(&u, &e), &v);
        prop_assert!((s - h).abs() < 1e-12);
    }

    #[test]
    fn homomorphism(a in unitary(), b in unitary()) {
        let lhs = adjoint_rotation(&(a * b));
        let rhs = adjoint_rotation(&a) * adjoint_rotation(&b);
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-10);
        prop_assert!(lhs.orthogonality_deviation() < 1e-10);
        prop_assert!((lhs.determinant() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn double_cover_kernel(u in unitary()) {
        prop_assert!(adjoint_rotation(&u).max_abs_diff(&adjoint_rotation(&-u)) < 1e-12);
    }

    #[test]
    fn conjugation_matches_rodrigues(n in axis(), d in angle(), v in unit_vector()) {
        prop_assert!(close(&rotate_state(&make_unitary(&n, d), &v), &rodrigues(&n, d, &v), 1e-12));
    }

    #[test]
    fn norm_preserved_before_renormalizing(u in unitary(), v in unit_vector()) {
        let [x, y, z] = adjoint_rotation(&u).apply(&v);
        prop_assert!(((x * x + y * y + z * z).sqrt() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn observable_is_state_under_adjoint(u in unitary(), e in unit_vector()) {
        prop_assert!(close(&rotate_observable(&u, &e), &rotate_state(&u.adjoint(), &e), 1e-15));
    }

    #[test]
    fn so3_period(n in axis(), d in angle(), v in unit_vector()) {
        let a = rotate_state(&make_unitary(&n, d + 2.0 * PI), &v);
        prop_assert!(close(&a, &rotate_state(&make_unitary(&n, d), &v), 1e-12));
    }

    #[test]
    fn printed_y_formulas(alpha in angle(), v in unit_vector()) {
        let u = make_unitary(&Axis::Y, alpha);
        let s = rotate_state(&u, &v);
        let expected = y_rotation_oracle(alpha, &v);
        prop_assert!(s.to_array().iter().zip(expected).all(|(a, b)| (a - b).abs() < 1e-12));
        let (sa, ca) = alpha.sin_cos();
        let h = rotate_observable(&u, &v);
        let expected = [ca * v.vx() - sa * v.vz(), v.vy(), sa * v.vx() + ca * v.vz()];
        prop_assert!(h.to_array().iter().zip(expected).all(|(a, b)| (a - b).abs() < 1e-12));
    }

    #[test]
    fn generator_adjoint_is_negative_time(n in axis(), t in -50.0f64..50.0) {
        prop_assert!(adjoint(&exp_generator(&n, t)).approx_eq(&exp_generator(&n, -t), 1e-15));
    }

    #[test]
    fn heisenberg_is_schrodinger_backwards(n in axis(), rate in -3.0f64..3.0, v in unit_vector(), t in -10.0f64..10.0) {
        let h = EvolutionSpec::new(n, rate, PictureKind::Heisenberg).unwrap();
        let s = EvolutionSpec::new(n, rate, PictureKind::Schrodinger).unwrap();
        prop_assert!(close(&evolve(&h, &v, t), &evolve(&s, &v, -t), 1e-12));
    }

    #[test]
    fn expectation_invariant_along_evolution(n in axis(), e in unit_vector(), v in unit_vector(), t in -10.0f64..10.0) {
        let s = EvolutionSpec::unit_rate(n, PictureKind::Schrodinger);
        let h = EvolutionSpec::unit_rate(n, PictureKind::Heisenberg);
        let a = expectation(&e, &evolve(&s, &v, t));
        let b = expectation(&evolve(&h, &e, t), &v);
        prop_assert!((a - b).abs() < 1e-12);
    }

    #[test]
    fn reversed_labels_follow_schrodinger(n in axis(), rate in -3.0f64..3.0, v in unit_vector(),
                                          grid in prop::collection::vec(-10.0f64..10.0, 1..20)) {
        prop_assert!(reversed_label_equivalence(&n, rate, &v, &grid).unwrap());
    }

    #[test]
    fn trajectory_steps_are_rotations_by_rate_dt(n in axis(), rate in -2.0f64..2.0, v in unit_vector(),
                                                 t0 in -3.0f64..0.0, len in 0.1f64..3.0, steps in 2usize..40) {
        let spec = EvolutionSpec::new(n, rate, PictureKind::Schrodinger).unwrap();
        let traj = trajectory(&spec, &v, t0, t0 + len, steps).unwrap();
        prop_assert_eq!(traj.len(), steps);
        for w in traj.windows(2) {
            let dt = w[1].time_label - w[0].time_label;
            prop_assert!(close(&rodrigues(&n, rate * dt, &w[0].vector), &w[1].vector, 1e-10));
        }
        // A vector perpendicular to the axis moves by exactly |rate·dt| along the great circle.
        let perp = BlochVector::from_direction(n.ny() - n.nz(), n.nz() - n.nx(), n.nx() - n.ny());
        if let Ok(p) = perp {
            let traj = trajectory(&spec, &p, t0, t0 + len, steps).unwrap();
            let dt = len / (steps - 1) as f64;
            for w in traj.windows(2) {
                prop_assert!((w[0].vector.angle_to(&w[1].vector) - (rate * dt).abs()).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn halt_always_signals(n in axis(), d in angle(), v in unit_vector(), e in unit_vector()) {
        let m = HaltingMachine::new(n, d, v, e).unwrap();
        prop_assert_eq!(m.initial_halt_expectation(), 1.0);
        let s = m.run(PictureKind::Schrodinger).unwrap();
        let h = m.run(PictureKind::Heisenberg).unwrap();
        prop_assert!((s.halt_expectation + 1.0).abs() < 1e-12);
        prop_assert!((h.halt_expectation + 1.0).abs() < 1e-12);
        prop_assert!((s.system_expectation - h.system_expectation).abs() < 1e-12);
    }

    #[test]
    fn discrepancy_matches_closed_form(n in axis(), b in unit_vector(), d in angle()) {
        let r = self_reference(&n, d, &b).unwrap();
        let theta = b.angle_to(&n.into());
        prop_assert!((r.discrepancy_angle - discrepancy_closed_form(theta, d)).abs() < 1e-10);
        prop_assert!(r.halted_in_both);
        prop_assert!((0.0..=PI).contains(&r.discrepancy_angle));
    }

    #[test]
    fn discrepancy_is_rotation_invariant(n in axis(), b in unit_vector(), d in angle(), g in unitary()) {
        let before = self_reference(&n, d, &b).unwrap().discrepancy_angle;
        let n2 = rotate_state(&g, &n.into()).as_axis();
        let b2 = rotate_state(&g, &b);
        let after = self_reference(&n2, d, &b2).unwrap().discrepancy_angle;
        prop_assert!((before - after).abs() < 1e-10);
    }

    #[test]
    fn fixed_point_classification(n in axis(), b in unit_vector(), d in angle()) {
        // Zero set of the discrepancy: basis on ±axis, or delta a multiple of pi.
        let theta = b.angle_to(&n.into());
        let k = (d / PI).round();
        let off_axis = theta.sin();
        let off_k_pi = (d - k * PI).sin().abs();
        let predicted = off_axis * off_k_pi;
        // Away from the boundary of the tolerance band the classification is unambiguous.
        prop_assume!(!(1e-13..=1e-6).contains(&predicted));
        prop_assert_eq!(is_fixed_point(&n, d, &b, 1e-9), predicted < 1e-13);
    }

    #[test]
    fn density_round_trip(v in unit_vector()) {
        prop_assert!(close(&density_to_state(&state_to_density(&v)).unwrap(), &v, 1e-12));
    }
}
