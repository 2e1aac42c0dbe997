use num_complex::Complex64;

use super::{check_in_disk, BlaschkeProduct, DiskMap, MAX_ZERO_MODULUS};
use crate::complex::ComplexPoint;
use crate::error::{Error, Result};

/// Disk automorphism `f(z) = (z + a) / (1 + z·ā)` with inverse
/// `g(w) = (w - a) / (1 - w·ā)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MoebiusTransform {
    a: Complex64,
}

impl MoebiusTransform {
    pub fn new(a: ComplexPoint) -> Result<Self> {
        let modulus = a.norm();
        if modulus > MAX_ZERO_MODULUS {
            return Err(Error::domain("|a|", modulus, "|a| <= 1 - 1e-9"));
        }
        Ok(Self { a: a.to_complex() })
    }

    pub fn a(&self) -> ComplexPoint {
        ComplexPoint::try_from(self.a).expect("validated at construction")
    }

    pub fn eval_at(&self, z: ComplexPoint) -> Result<ComplexPoint> {
        let z = check_in_disk(z)?;
        ComplexPoint::try_from(self.eval(z))
    }

    pub fn inverse(&self, w: Complex64) -> Complex64 {
        (w - self.a) / (1.0 - w * self.a.conj())
    }

    pub fn inverse_at(&self, w: ComplexPoint) -> Result<ComplexPoint> {
        let w = check_in_disk(w)?;
        ComplexPoint::try_from(self.inverse(w))
    }

    /// The same map as a degree-one product with zero `-a` and phase 0.
    pub fn to_blaschke(&self) -> BlaschkeProduct {
        let zero = ComplexPoint::try_from(-self.a).expect("finite");
        BlaschkeProduct::new(0.0, vec![zero]).expect("|a| checked at construction")
    }
}

impl DiskMap for MoebiusTransform {
    fn eval(&self, z: Complex64) -> Complex64 {
        (z + self.a) / (1.0 + z * self.a.conj())
    }

    fn degree_hint(&self) -> Option<u32> {
        Some(1)
    }

    fn boundary_k(&self) -> f64 {
        1.0
    }

    /// `|f'(e^{is})| = (1 - |a|²) / |1 + e^{is}·ā|²`.
    fn boundary_speed(&self, s: f64, _step: f64) -> f64 {
        let z = Complex64::from_polar(1.0, s);
        (1.0 - self.a.norm_sqr()) / (1.0 + z * self.a.conj()).norm_sqr()
    }
}

#[cfg(test)]
mod tests {
    use approx::assert_abs_diff_eq;

    use super::*;
    use crate::maps::finite_difference_speed;

    fn moebius(re: f64, im: f64) -> MoebiusTransform {
        MoebiusTransform::new(ComplexPoint::new(re, im).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let z = ComplexPoint::new(0.3, 0.4).unwrap();
        assert_eq!(moebius(0.0, 0.0).eval_at(z).unwrap(), z);

        let m = moebius(0.5, 0.0);
        let w = m.eval_at(ComplexPoint::ZERO).unwrap();
        assert_abs_diff_eq!(w.re(), 0.5, epsilon = 1e-15);
        let w = m.eval_at(ComplexPoint::new(-0.5, 0.0).unwrap()).unwrap();
        assert_abs_diff_eq!(w.norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn speed_at_one() {
        let m = moebius(0.5, 0.0);
        assert_abs_diff_eq!(m.boundary_speed(0.0, 0.0), 1.0 / 3.0, epsilon = 1e-15);
        let fd = finite_difference_speed(|z| m.eval(z), 0.0, 1e-5);
        assert_abs_diff_eq!(fd, 1.0 / 3.0, epsilon = 1e-9);
    }

    #[test]
    fn agrees_with_blaschke_form() {
        let m = moebius(-0.2, 0.6);
        let b = m.to_blaschke();
        for k in 0..20 {
            let z = Complex64::from_polar(0.05 * k as f64, 0.7 * k as f64);
            assert!((m.eval(z) - b.eval(z)).norm() < 1e-15);
        }
    }

    #[test]
    fn rejects_large_parameter() {
        assert!(MoebiusTransform::new(ComplexPoint::new(0.6, 0.8).unwrap()).is_err());
    }
}
