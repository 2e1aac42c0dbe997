mod common;

use std::f64::consts::TAU;

use common::{point_in_disk, product};
use diskbound::maps::DEFAULT_SPEED_STEP;
use diskbound::{
    boundary_length, winding_number, BlaschkeProduct, ComplexPoint, DiskMap, MapSpec,
    MoebiusTransform, PowerRadialMap,
};
use num_complex::Complex64;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn blaschke_maps_disk_into_disk_and_circle_to_circle(
        b in product(8, 0.95),
        z in point_in_disk(0.999),
        s in 0.0..TAU,
    ) {
        prop_assert!(b.modulus(z.to_complex()) < 1.0);
        let on_circle = b.modulus(Complex64::from_polar(1.0, s));
        prop_assert!((on_circle - 1.0).abs() < 1e-9);
    }

    #[test]
    fn winding_number_counts_zeros(b in product(8, 0.9)) {
        prop_assert_eq!(winding_number(&b, 64).unwrap(), b.degree() as i64);
    }

    #[test]
    fn boundary_length_is_two_pi_d(b in product(6, 0.9)) {
        let length = boundary_length(&b, 1 << 16, DEFAULT_SPEED_STEP);
        let expected = TAU * b.degree() as f64;
        prop_assert!((length - expected).abs() / expected < 1e-6, "{length} vs {expected}");
    }

    #[test]
    fn boundary_speed_matches_derivative(b in product(5, 0.9), s in 0.0..TAU) {
        let fd = b.boundary_speed(s, DEFAULT_SPEED_STEP);
        let exact = b.boundary_derivative(s);
        prop_assert!((fd - exact).abs() <= 1e-5 * exact.max(1.0), "{fd} vs {exact}");
    }

    #[test]
    fn moebius_round_trip(a in point_in_disk(0.99), z in point_in_disk(0.999)) {
        let m = MoebiusTransform::new(a).unwrap();
        let back = m.inverse(m.eval(z.to_complex()));
        prop_assert!((back - z.to_complex()).norm() < 1e-12);
        let forward = m.eval(m.inverse(z.to_complex()));
        prop_assert!((forward - z.to_complex()).norm() < 1e-12);
    }

    #[test]
    fn moebius_is_a_degree_one_product(a in point_in_disk(0.99), z in point_in_disk(0.999)) {
        let m = MoebiusTransform::new(a).unwrap();
        let b = m.to_blaschke();
        prop_assert_eq!(b.degree(), 1);
        prop_assert!((m.modulus(z.to_complex()) - b.modulus(z.to_complex())).abs() < 1e-12);
    }

    #[test]
    fn power_radial_with_unit_k_is_monomial(d in 1u32..=6, z in point_in_disk(0.999)) {
        let power = PowerRadialMap::new(d, 1.0).unwrap();
        let mono = BlaschkeProduct::monomial(d).unwrap();
        let w = z.to_complex();
        prop_assert!((power.eval(w) - mono.eval(w)).norm() < 1e-12);
    }

    #[test]
    fn power_radial_winds_d_times(d in 1u32..=6, k in 1.0..4.0f64) {
        let power = PowerRadialMap::new(d, k).unwrap();
        prop_assert_eq!(winding_number(&power, 64).unwrap(), d as i64);
        prop_assert_eq!(power.boundary_k(), k);
    }
}

#[test]
fn map_spec_round_trips_through_json() {
    let spec = MapSpec::Blaschke {
        phase: 0.25,
        zeros: vec![
            ComplexPoint::new(0.5, 0.0).unwrap(),
            ComplexPoint::new(0.0, -0.3).unwrap(),
        ],
    };
    let json = serde_json::to_string(&spec).unwrap();
    let back: MapSpec = serde_json::from_str(&json).unwrap();
    assert_eq!(spec, back);
    let map = back.build().unwrap();
    assert_eq!(map.degree_hint(), Some(2));
}

#[test]
fn rejects_zero_on_circle() {
    let zeros = vec![ComplexPoint::new(1.0, 0.0).unwrap()];
    assert!(BlaschkeProduct::new(0.0, zeros).is_err());
    assert!(MoebiusTransform::new(ComplexPoint::new(0.0, 1.0).unwrap()).is_err());
    assert!(PowerRadialMap::new(0, 1.0).is_err());
    assert!(PowerRadialMap::new(2, 0.5).is_err());
}
