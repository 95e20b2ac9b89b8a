//! Genus verification: fast path against the semilinear oracle, stable-slope
//! behavior, and the absolute-genus-zero parametrization on every point.

use genuslab::curve::enumerate_points;
use genuslab::genus::{
    absolute_parametrization_check, point_parameter_roundtrip, relative_genus,
    rr_dimension_fast, rr_dimension_oracle, rr_dimension_oracle_checked,
};
use genuslab::parse::parse_ratfn;
use genuslab::{Curve, FieldCtx};

fn general_curve(p: u64, a_text: &str) -> Curve {
    let ctx = FieldCtx::prime_field(p).unwrap();
    Curve::with_coefficient(p, 1, parse_ratfn(&ctx, a_text).unwrap()).unwrap()
}

#[test]
fn fast_equals_oracle_p3() {
    let curves = vec![
        Curve::cn(3, 1).unwrap(),     // A_1
        Curve::cn(3, 2).unwrap(),     // A_2
        general_curve(3, "t"),        // simplest a outside K^p
        general_curve(3, "t + t^2"),
    ];
    for curve in &curves {
        for m in 0..=4u64 {
            let fast = rr_dimension_fast(curve, m).unwrap();
            // The checked oracle runs both bounds B = m and B = m + p and
            // insists they agree.
            let oracle = rr_dimension_oracle_checked(curve, m).unwrap();
            assert_eq!(
                fast.ell, oracle,
                "a = {}, m = {m}",
                curve.coefficient()
            );
        }
    }
}

#[test]
fn frozen_oracle_values_p3() {
    // Dimensions computed by the semilinear oracle itself.
    let c1 = Curve::cn(3, 1).unwrap();
    assert_eq!(rr_dimension_oracle(&c1, 1, 1).unwrap(), 3);
    assert_eq!(rr_dimension_oracle(&c1, 2, 2).unwrap(), 6);
    let ct = general_curve(3, "t");
    assert_eq!(rr_dimension_oracle(&ct, 2, 2).unwrap(), 6);
}

#[test]
fn stable_slope_is_p() {
    for p in [3u64, 5, 7] {
        let curve = Curve::cn(p, 1).unwrap();
        for m in (p - 1)..=12 {
            let lo = rr_dimension_fast(&curve, m).unwrap();
            let hi = rr_dimension_fast(&curve, m + 1).unwrap();
            assert_eq!(hi.ell - lo.ell, p, "p={p}, m={m}");
        }
    }
}

#[test]
fn genus_depends_only_on_p() {
    for p in [3u64, 5, 7] {
        let expected = (p - 1) * (p - 2) / 2;
        for n in 1u32..=3 {
            let curve = Curve::cn(p, n).unwrap();
            assert_eq!(relative_genus(&curve).unwrap(), expected, "(p,n)=({p},{n})");
            let at_stability = rr_dimension_fast(&curve, p - 1).unwrap();
            assert_eq!(at_stability.genus_estimate as u64, expected);
        }
    }
}

#[test]
fn parametrization_identity_matrix() {
    for p in [3u64, 5] {
        for n in 1u32..=2 {
            let curve = Curve::cn(p, n).unwrap();
            let param = absolute_parametrization_check(&curve).unwrap();
            assert_eq!(param.p, p);
            // For C_n the p-th root of A_n(s^p) is A_n(s) itself.
            assert_eq!(param.a_hat, *curve.coefficient());
        }
    }
}

#[test]
fn parametrization_for_general_coefficient() {
    let curve = general_curve(3, "t + t^2");
    absolute_parametrization_check(&curve).unwrap();
}

#[test]
fn every_point_roundtrips_through_the_parameter() {
    for (p, n) in [(3u64, 1u32), (3, 2)] {
        let curve = Curve::cn(p, n).unwrap();
        for k in [1usize, 2 * n as usize] {
            for pt in enumerate_points(&curve, k, None).unwrap() {
                assert!(
                    point_parameter_roundtrip(&curve, &pt).unwrap(),
                    "(p,n,k)=({p},{n},{k})"
                );
            }
        }
    }
}
