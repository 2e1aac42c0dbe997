use num_complex::Complex64;

use super::{check_in_disk, DiskMap};
use crate::complex::ComplexPoint;
use crate::error::{Error, Result};

/// `f(z) = e^{id·θ} r^{Kd}` for `z = r e^{iθ}`: the family that attains the
/// sublevel and `L^p` bounds with equality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerRadialMap {
    d: u32,
    k: f64,
}

impl PowerRadialMap {
    pub fn new(d: u32, k: f64) -> Result<Self> {
        if d == 0 {
            return Err(Error::ZeroDegree);
        }
        if !(k.is_finite() && k >= 1.0) {
            return Err(Error::domain("K", k, "K >= 1"));
        }
        Ok(Self { d, k })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    fn exponent(&self) -> f64 {
        self.k * self.d as f64
    }

    pub fn eval_at(&self, z: ComplexPoint) -> Result<ComplexPoint> {
        let z = check_in_disk(z)?;
        ComplexPoint::try_from(self.eval(z))
    }
}

impl DiskMap for PowerRadialMap {
    fn eval(&self, z: Complex64) -> Complex64 {
        let r = z.norm();
        if r == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        (z / r).powi(self.d as i32) * r.powf(self.exponent())
    }

    fn modulus(&self, z: Complex64) -> f64 {
        z.norm().powf(self.exponent())
    }

    fn degree_hint(&self) -> Option<u32> {
        Some(self.d)
    }

    fn boundary_k(&self) -> f64 {
        self.k
    }

    fn boundary_speed(&self, _s: f64, _step: f64) -> f64 {
        self.d as f64
    }
}
