use num_complex::Complex64;

use super::{check_in_disk, DiskMap};
use crate::complex::ComplexPoint;
use crate::error::{Error, Result};

/// Largest zero modulus accepted at construction. Keeps every factor
/// denominator `1 - z·ā` bounded away from zero on the closed disk.
pub const MAX_ZERO_MODULUS: f64 = 1.0 - 1e-9;

/// Finite Blaschke product `B(z) = e^{is} ∏ (z - a_k) / (1 - z·ā_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlaschkeProduct {
    phase: f64,
    zeros: Vec<ComplexPoint>,
    rotation: Complex64,
    roots: Vec<Complex64>,
}

impl BlaschkeProduct {
    pub fn new(phase: f64, zeros: Vec<ComplexPoint>) -> Result<Self> {
        if zeros.is_empty() {
            return Err(Error::ZeroDegree);
        }
        if !phase.is_finite() {
            return Err(Error::domain("phase", phase, "a finite angle"));
        }
        for (index, a) in zeros.iter().enumerate() {
            let modulus = a.norm();
            if modulus > MAX_ZERO_MODULUS {
                return Err(Error::ZeroOutsideDisk {
                    index,
                    modulus,
                    max: MAX_ZERO_MODULUS,
                });
            }
        }
        Ok(Self {
            phase,
            rotation: Complex64::from_polar(1.0, phase),
            roots: zeros.iter().map(|a| a.to_complex()).collect(),
            zeros,
        })
    }

    /// `z^d`: every zero at the origin.
    pub fn monomial(d: u32) -> Result<Self> {
        Self::new(0.0, vec![ComplexPoint::ZERO; d as usize])
    }

    pub fn phase(&self) -> f64 {
        self.phase
    }

    pub fn zeros(&self) -> &[ComplexPoint] {
        &self.zeros
    }

    pub fn degree(&self) -> u32 {
        self.zeros.len() as u32
    }

    /// Checked evaluation; rejects `|z| > 1 + 1e-9`.
    pub fn eval_at(&self, z: ComplexPoint) -> Result<ComplexPoint> {
        let z = check_in_disk(z)?;
        ComplexPoint::try_from(self.eval(z))
    }

    /// `|B'(e^{is})|`, which on the circle equals `Σ (1 - |a_k|²) / |e^{is} - a_k|²`.
    pub fn boundary_derivative(&self, s: f64) -> f64 {
        let z = Complex64::from_polar(1.0, s);
        self.roots
            .iter()
            .map(|a| (1.0 - a.norm_sqr()) / (z - a).norm_sqr())
            .sum()
    }
}

impl DiskMap for BlaschkeProduct {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.roots
            .iter()
            .fold(self.rotation, |acc, a| acc * (z - a) / (1.0 - z * a.conj()))
    }

    fn modulus(&self, z: Complex64) -> f64 {
        self.roots
            .iter()
            .map(|a| (z - a).norm_sqr() / (1.0 - z * a.conj()).norm_sqr())
            .product::<f64>()
            .sqrt()
    }

    fn degree_hint(&self) -> Option<u32> {
        Some(self.degree())
    }

    fn boundary_k(&self) -> f64 {
        1.0
    }

    fn boundary_speed(&self, s: f64, _step: f64) -> f64 {
        self.boundary_derivative(s)
    }
}
