mod common;

use std::f64::consts::PI;

use dorey_core::root_system::{IntMatrix, TOLERANCE};
use dorey_core::{Colour, Family, RootSystem, Weight};
use proptest::prelude::*;

use common::{all, binomial, rs};

fn weight_in(r: &RootSystem, raw: &[i64]) -> Weight {
    Weight::from_coeffs(raw[..r.rank()].to_vec())
}

fn reflect_class(r: &RootSystem, colour: Colour, mu: &Weight, reversed: bool) -> Weight {
    let mut nodes: Vec<usize> = r.nodes().filter(|&i| r.colour(i) == colour).collect();
    if reversed {
        nodes.reverse();
    }
    nodes
        .iter()
        .fold(mu.clone(), |acc, &i| r.simple_reflection(i, &acc))
}

fn arb_case() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (0..common::ALL.len(), prop::collection::vec(-6i64..=6, 8))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn reflections_are_involutions((a, raw) in arb_case(), node in 0usize..8) {
        let r = &all()[a];
        let mu = weight_in(r, &raw);
        let i = node % r.rank();
        prop_assert_eq!(r.simple_reflection(i, &r.simple_reflection(i, &mu)), mu);
    }

    #[test]
    fn coxeter_element_is_white_after_black((a, raw) in arb_case()) {
        let r = &all()[a];
        let mu = weight_in(r, &raw);
        for rev_black in [false, true] {
            for rev_white in [false, true] {
                let b = reflect_class(r, Colour::Black, &mu, rev_black);
                let wb = reflect_class(r, Colour::White, &b, rev_white);
                prop_assert_eq!(&wb, &r.coxeter_apply(&mu, 1));
            }
        }
    }

    #[test]
    fn coxeter_power_h_fixes_weights((a, raw) in arb_case(), k in -40i64..40) {
        let r = &all()[a];
        let mu = weight_in(r, &raw);
        let h = r.coxeter_number() as i64;
        prop_assert_eq!(r.coxeter_apply(&mu, h), mu.clone());
        prop_assert_eq!(r.coxeter_apply(&r.coxeter_apply(&mu, k), -k), mu.clone());
        prop_assert_eq!(r.coxeter_apply(&mu, k + h), r.coxeter_apply(&mu, k));
    }

    /// `(1 + w)λ_i` for white `i` and `(1 + w⁻¹)λ_i` for black `i` equal the
    /// neighbour sum; applying `w^n` to both sides keeps it.
    #[test]
    fn neighbour_sum_identity(a in 0..common::ALL.len(), node in 0usize..8, n in -30i64..30) {
        let r = &all()[a];
        let i = node % r.rank();
        let lam = r.fundamental(i);
        let step = match r.colour(i) {
            Colour::White => 1,
            Colour::Black => -1,
        };
        let lhs = &lam + &r.coxeter_apply(&lam, step);
        let mut rhs = Weight::zero(r.rank());
        for &j in r.neighbours(i) {
            rhs += &r.fundamental(j);
        }
        prop_assert_eq!(r.coxeter_apply(&lhs, n), r.coxeter_apply(&rhs, n));
    }

    /// Rotating by `w` turns the plane projection by `+2π/h`.
    #[test]
    fn coxeter_element_rotates_the_plane((a, raw) in arb_case()) {
        let r = &all()[a];
        let mu = weight_in(r, &raw);
        let (x, y) = r.plane_project(&mu);
        prop_assume!(x.hypot(y) > 1e-6);
        let h = r.coxeter_number() as f64;
        let theta = r.plane_angle(&mu, &r.coxeter_apply(&mu, 1)).unwrap();
        let want = if r.coxeter_number() == 2 { PI } else { 2.0 * PI / h };
        prop_assert!((theta - want).abs() < TOLERANCE, "{} vs {}", theta, want);
    }

    #[test]
    fn dominant_representative_lies_in_the_orbit(a in 0usize..10, raw in prop::collection::vec(-3i64..=3, 8)) {
        let r = &all()[a];
        let mu = weight_in(r, &raw);
        let d = r.dominant_representative(&mu);
        prop_assert!(d.coeffs().iter().all(|&c| c >= 0));
        prop_assert!(r.weyl_orbit(&mu).contains(&d));
    }
}

#[test]
fn coxeter_number_is_the_order() {
    for r in all() {
        let h = r.coxeter_number();
        let want = match (r.family(), r.rank()) {
            (Family::A, n) => n + 1,
            (Family::D, n) => 2 * n - 2,
            (Family::E, 6) => 12,
            (Family::E, 7) => 18,
            (Family::E, _) => 30,
        };
        assert_eq!(h, want, "{}", r.name());
        let columns: Vec<Weight> = r
            .nodes()
            .map(|i| r.coxeter_apply(&r.fundamental(i), 1))
            .collect();
        let w = IntMatrix::from_columns(&columns);
        assert_eq!(&w, r.coxeter_matrix());
        let mut power = w.clone();
        for k in 1..h {
            assert!(!power.is_identity(), "{}: w^{k} = 1", r.name());
            power = power.mul(&w);
        }
        assert!(power.is_identity(), "{}", r.name());
    }
}

#[test]
fn swapped_colouring_inverts_the_coxeter_element() {
    for r in all() {
        let s = r.swapped();
        assert!(
            s.coxeter_matrix().mul(r.coxeter_matrix()).is_identity(),
            "{}",
            r.name()
        );
    }
}

#[test]
fn half_coxeter_elements_on_fundamentals() {
    for r in all() {
        for colour in [Colour::Black, Colour::White] {
            for i in r.nodes() {
                let lam = r.fundamental(i);
                let got = reflect_class(r, colour, &lam, false);
                let want = if r.colour(i) == colour {
                    let mut s = -&lam;
                    for &j in r.neighbours(i) {
                        s += &r.fundamental(j);
                    }
                    s
                } else {
                    lam.clone()
                };
                assert_eq!(got, want, "{} node {}", r.name(), i + 1);
            }
        }
    }
}

fn float_matrix(m: &IntMatrix) -> Vec<f64> {
    let n = m.dim();
    (0..n * n).map(|k| m.get(k / n, k % n) as f64).collect()
}

fn mat_mul(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            for j in 0..n {
                out[i * n + j] += a[i * n + k] * b[k * n + j];
            }
        }
    }
    out
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

#[test]
fn projector_is_idempotent_and_commutes_with_w() {
    for r in all() {
        let n = r.rank();
        let p = r.plane().projector();
        let w = float_matrix(r.coxeter_matrix());
        assert!(max_diff(&mat_mul(p, p, n), p) < TOLERANCE, "{}", r.name());
        assert!(
            max_diff(&mat_mul(p, &w, n), &mat_mul(&w, p, n)) < TOLERANCE,
            "{}",
            r.name()
        );
    }
}

#[test]
fn coxeter_orbit_sums_vanish() {
    for r in all() {
        for i in r.nodes() {
            let orbit = r.coxeter_orbit(i);
            assert_eq!(orbit.len(), r.coxeter_number());
            let sum = orbit
                .iter()
                .fold(Weight::zero(r.rank()), |acc, w| acc + w.clone());
            assert!(sum.is_zero(), "{} node {}", r.name(), i + 1);
        }
    }
}

#[test]
fn bar_is_an_involution_given_by_the_longest_element() {
    for r in all() {
        for i in r.nodes() {
            let b = r.bar(i);
            assert_eq!(r.bar(b), i);
            let k = r.longest_element_power(i) as i64;
            assert_eq!(-r.coxeter_apply(&r.fundamental(i), k), r.fundamental(b));
            assert_eq!(
                r.dominant_representative(&-r.fundamental(i)),
                r.fundamental(b)
            );
        }
    }
}

#[test]
fn small_weight_orbits() {
    let a2 = rs(Family::A, 2);
    assert_eq!(a2.weyl_orbit(&a2.fundamental(0)).len(), 3);
    assert_eq!(a2.weyl_orbit(&Weight::zero(2)).len(), 1);
    // |W(D5)| / |W(A1 × A3)|
    let d5 = rs(Family::D, 5);
    let w_d5 = 2u64.pow(4) * 120;
    assert_eq!(
        d5.weyl_orbit(&d5.fundamental(1)).len() as u64,
        w_d5 / (2 * 24)
    );
    for n in 1..=7u64 {
        let a = rs(Family::A, n as usize);
        for i in a.nodes() {
            assert_eq!(
                a.weyl_orbit(&a.fundamental(i)).len() as u64,
                binomial(n + 1, i as u64 + 1)
            );
        }
    }
}

#[test]
fn colour_classes_are_independent_sets() {
    for r in all() {
        assert_eq!(r.colour(0), Colour::Black);
        for i in r.nodes() {
            for &j in r.neighbours(i) {
                assert_ne!(r.colour(i), r.colour(j));
            }
        }
    }
}
