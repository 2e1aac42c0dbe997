//! Unit-disk self-maps and their boundary behaviour.

mod blaschke;
mod boundary;
mod moebius;
mod power;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use blaschke::{BlaschkeProduct, MAX_ZERO_MODULUS};
pub use boundary::{
    boundary_length, boundary_speed, finite_difference_speed, winding_number, DEFAULT_SPEED_STEP,
    MAX_WINDING_STEPS,
};
pub use moebius::MoebiusTransform;
pub use power::PowerRadialMap;

use crate::complex::ComplexPoint;
use crate::error::{Error, Result};
use crate::radial::{DensitySpec, RadialQcMap};

/// Slack allowed on `|z| <= 1` by the checked evaluators.
pub const DISK_SLACK: f64 = 1e-9;

/// Uniform evaluation handle for the supported self-maps of the disk.
///
/// Implementations are immutable, so one map may be shared across threads.
pub trait DiskMap: Sync {
    fn eval(&self, z: Complex64) -> Complex64;

    fn modulus(&self, z: Complex64) -> f64 {
        self.eval(z).norm()
    }

    /// Winding number of `f(𝕋)` about the origin when it is known by
    /// construction.
    fn degree_hint(&self) -> Option<u32>;

    /// Dilatation constant `K >= 1` at the boundary circle.
    fn boundary_k(&self) -> f64;

    /// `|∂_s f(e^{is})|`. The default is a symmetric difference along the circle.
    fn boundary_speed(&self, s: f64, step: f64) -> f64 {
        finite_difference_speed(|z| self.eval(z), s, step)
    }
}

pub(crate) fn check_in_disk(z: ComplexPoint) -> Result<Complex64> {
    let modulus = z.norm();
    if modulus <= 1.0 + DISK_SLACK {
        Ok(z.to_complex())
    } else {
        Err(Error::OutsideDisk { modulus })
    }
}

/// Declarative description of a map, used by configuration files.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum MapSpec {
    Blaschke {
        #[serde(default)]
        phase: f64,
        zeros: Vec<ComplexPoint>,
    },
    Moebius {
        a: ComplexPoint,
    },
    PowerRadial {
        d: u32,
        #[serde(rename = "K")]
        k: f64,
    },
    RadialQc {
        a: f64,
        #[serde(rename = "K", default, skip_serializing_if = "Option::is_none")]
        k: Option<f64>,
        density: DensitySpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grid_size: Option<usize>,
    },
}

impl MapSpec {
    pub fn build(&self) -> Result<AnyMap> {
        Ok(match self {
            MapSpec::Blaschke { phase, zeros } => {
                AnyMap::Blaschke(BlaschkeProduct::new(*phase, zeros.clone())?)
            }
            MapSpec::Moebius { a } => AnyMap::Moebius(MoebiusTransform::new(*a)?),
            MapSpec::PowerRadial { d, k } => AnyMap::PowerRadial(PowerRadialMap::new(*d, *k)?),
            MapSpec::RadialQc {
                a,
                k,
                density,
                grid_size,
            } => AnyMap::RadialQc(RadialQcMap::build(
                *a,
                *k,
                density.clone(),
                grid_size.unwrap_or(RadialQcMap::DEFAULT_GRID_SIZE),
            )?),
        })
    }
}

/// Closed sum of the concrete map families.
#[derive(Debug, Clone)]
pub enum AnyMap {
    Blaschke(BlaschkeProduct),
    Moebius(MoebiusTransform),
    PowerRadial(PowerRadialMap),
    RadialQc(RadialQcMap),
}

impl AnyMap {
    fn inner(&self) -> &dyn DiskMap {
        match self {
            AnyMap::Blaschke(m) => m,
            AnyMap::Moebius(m) => m,
            AnyMap::PowerRadial(m) => m,
            AnyMap::RadialQc(m) => m,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AnyMap::Blaschke(_) => "blaschke",
            AnyMap::Moebius(_) => "moebius",
            AnyMap::PowerRadial(_) => "power_radial",
            AnyMap::RadialQc(_) => "radial_qc",
        }
    }
}

impl DiskMap for AnyMap {
    fn eval(&self, z: Complex64) -> Complex64 {
        self.inner().eval(z)
    }

    fn modulus(&self, z: Complex64) -> f64 {
        self.inner().modulus(z)
    }

    fn degree_hint(&self) -> Option<u32> {
        self.inner().degree_hint()
    }

    fn boundary_k(&self) -> f64 {
        self.inner().boundary_k()
    }

    fn boundary_speed(&self, s: f64, step: f64) -> f64 {
        self.inner().boundary_speed(s, step)
    }
}
