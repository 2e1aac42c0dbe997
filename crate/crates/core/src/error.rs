use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite complex value ({re}, {im})")]
    NonFinite { re: f64, im: f64 },

    #[error("point with modulus {modulus} lies outside the closed unit disk")]
    OutsideDisk { modulus: f64 },

    #[error("zero #{index} has modulus {modulus}; zeros must satisfy |a| <= {max}")]
    ZeroOutsideDisk {
        index: usize,
        modulus: f64,
        max: f64,
    },

    #[error("map degree must be at least 1")]
    ZeroDegree,

    #[error("{name} = {value} is out of range (expected {expected})")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("winding number did not converge within {max_steps} boundary steps")]
    NonConvergence { max_steps: usize },

    #[error("boundary value vanishes at s = {s}")]
    BoundaryZero { s: f64 },

    #[error("density is not admissible: integral of h is {integral}, must be below 4a = {limit}")]
    Inadmissible { integral: f64, limit: f64 },

    #[error("radial profile is not increasing: a - H(u) = {slope} at u = {u}")]
    NonMonotone { u: f64, slope: f64 },

    #[error("invalid density: {0}")]
    Density(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            expected,
        }
    }
}

/// Checks `lo <= value <= hi` (and finiteness).
pub fn check_range(
    name: &'static str,
    value: f64,
    lo: f64,
    hi: f64,
    expected: &'static str,
) -> Result<f64> {
    if value.is_finite() && value >= lo && value <= hi {
        Ok(value)
    } else {
        Err(Error::domain(name, value, expected))
    }
}
