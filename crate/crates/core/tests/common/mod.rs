#![allow(dead_code)]

use diskbound::{BlaschkeProduct, ComplexPoint};
use proptest::prelude::*;

pub fn point_in_disk(max_modulus: f64) -> impl Strategy<Value = ComplexPoint> {
    (0.0..max_modulus, 0.0..std::f64::consts::TAU)
        .prop_map(|(r, theta)| ComplexPoint::from_polar(r, theta).unwrap())
}

pub fn product(max_degree: usize, max_modulus: f64) -> impl Strategy<Value = BlaschkeProduct> {
    (
        -3.0..3.0f64,
        prop::collection::vec(point_in_disk(max_modulus), 1..=max_degree),
    )
        .prop_map(|(phase, zeros)| BlaschkeProduct::new(phase, zeros).unwrap())
}

/// Disk of radius `t(1-|a|²)/(1-|a|²t²)`: the Möbius image of `{|w| < t}`.
pub fn moebius_sublevel_disk_area(a_modulus: f64, t: f64) -> f64 {
    let x = a_modulus * a_modulus;
    let rho = t * (1.0 - x) / (1.0 - x * t * t);
    std::f64::consts::PI * rho * rho
}
