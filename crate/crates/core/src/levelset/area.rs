use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::maps::DiskMap;
use crate::{par, sampling};

pub const MIN_MC_SAMPLES: usize = 1000;
pub const MIN_GRID_RESOLUTION: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AreaMethod {
    MonteCarlo,
    Grid,
}

/// Area of a level region, in units where the whole disk has area `π`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AreaEstimate {
    pub value: f64,
    /// One standard error. Zero for the grid method, which carries `bracket`.
    pub stderr: f64,
    pub method: AreaMethod,
    /// Sample points (Monte Carlo) or pixels (grid) used.
    pub samples: u64,
    pub bracket: Option<(f64, f64)>,
}

impl AreaEstimate {
    fn exact(value: f64, method: AreaMethod, samples: u64) -> Self {
        Self {
            value,
            stderr: 0.0,
            method,
            samples,
            bracket: (method == AreaMethod::Grid).then_some((value, value)),
        }
    }

    /// The estimate for the complementary region of the disk.
    pub fn complement(&self) -> Self {
        Self {
            value: PI - self.value,
            bracket: self.bracket.map(|(lo, hi)| (PI - hi, PI - lo)),
            ..*self
        }
    }

    /// Whether `x` is consistent with the estimate: inside the bracket for
    /// the grid method, within `sigmas` standard errors otherwise.
    pub fn contains(&self, x: f64, sigmas: f64) -> bool {
        match self.bracket {
            Some((lo, hi)) => lo <= x && x <= hi,
            None => (self.value - x).abs() <= sigmas * self.stderr,
        }
    }
}

/// Which estimator to run, with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum Estimator {
    MonteCarlo { samples: usize, seed: u64 },
    Grid { resolution: usize },
}

impl Estimator {
    pub fn validate(&self) -> Result<()> {
        match *self {
            Estimator::MonteCarlo { samples, .. } if samples < MIN_MC_SAMPLES => Err(
                Error::domain("samples", samples as f64, "at least 1000 samples"),
            ),
            Estimator::Grid { resolution } if resolution < MIN_GRID_RESOLUTION => Err(
                Error::domain("resolution", resolution as f64, "resolution >= 64"),
            ),
            _ => Ok(()),
        }
    }
}

fn check_t(t: f64) -> Result<f64> {
    check_range("t", t, 0.0, 1.0, "0 <= t <= 1")
}

/// Sorted moduli of one Monte Carlo sample set. Every sublevel query
/// against it is a binary search, and all queries see the same points.
#[derive(Debug, Clone)]
pub struct ModulusSample {
    sorted: Vec<f64>,
}

impl ModulusSample {
    pub fn draw(map: &dyn DiskMap, n: usize, seed: u64) -> Result<Self> {
        Estimator::MonteCarlo { samples: n, seed }.validate()?;
        let mut sorted = sampling::disk_moduli(map, n, seed);
        par::sort_f64(&mut sorted);
        Ok(Self { sorted })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    pub fn sorted_moduli(&self) -> &[f64] {
        &self.sorted
    }

    /// Number of samples with `|f| < t`.
    pub fn count_below(&self, t: f64) -> usize {
        self.sorted.partition_point(|&m| m < t)
    }

    pub fn sublevel(&self, t: f64) -> Result<AreaEstimate> {
        let t = check_t(t)?;
        let n = self.sorted.len();
        if t == 0.0 {
            return Ok(AreaEstimate::exact(0.0, AreaMethod::MonteCarlo, n as u64));
        }
        if t == 1.0 {
            return Ok(AreaEstimate::exact(PI, AreaMethod::MonteCarlo, n as u64));
        }
        let p = self.count_below(t) as f64 / n as f64;
        Ok(AreaEstimate {
            value: PI * p,
            stderr: PI * (p * (1.0 - p) / n as f64).sqrt(),
            method: AreaMethod::MonteCarlo,
            samples: n as u64,
            bracket: None,
        })
    }

    pub fn superlevel(&self, t: f64) -> Result<AreaEstimate> {
        Ok(self.sublevel(t)?.complement())
    }
}

/// `|{z ∈ 𝔻 : |f(z)| < t}|` from `n` uniform disk samples.
pub fn sublevel_area_mc(map: &dyn DiskMap, t: f64, n: usize, seed: u64) -> Result<AreaEstimate> {
    let t = check_t(t)?;
    Estimator::MonteCarlo { samples: n, seed }.validate()?;
    if t == 0.0 || t == 1.0 {
        let value = if t == 0.0 { 0.0 } else { PI };
        return Ok(AreaEstimate::exact(value, AreaMethod::MonteCarlo, n as u64));
    }
    ModulusSample::draw(map, n, seed)?.sublevel(t)
}

const IN_DISK: u8 = 1;
const BELOW: u8 = 2;

/// Pixel lattice on `[-1, 1]²`; row 0 is the top edge (`y = 1`).
#[derive(Debug, Clone, Copy)]
pub(crate) struct Lattice {
    h: f64,
}

impl Lattice {
    pub(crate) fn new(n: usize) -> Self {
        Self { h: 2.0 / n as f64 }
    }

    pub(crate) fn center(&self, col: usize, row: usize) -> Complex64 {
        Complex64::new(
            -1.0 + (col as f64 + 0.5) * self.h,
            1.0 - (row as f64 + 0.5) * self.h,
        )
    }

    fn corner(&self, col: usize, row: usize) -> Complex64 {
        Complex64::new(-1.0 + col as f64 * self.h, 1.0 - row as f64 * self.h)
    }

    pub(crate) fn pixel_area(&self) -> f64 {
        self.h * self.h
    }
}

fn classify(map: &dyn DiskMap, t: f64, z: Complex64) -> u8 {
    if z.norm_sqr() >= 1.0 {
        0
    } else if map.modulus(z) < t {
        IN_DISK | BELOW
    } else {
        IN_DISK
    }
}

/// Per-pixel membership of the pixel centre in `{|z| < 1, |f| < t}`,
/// row-major from the top-left pixel.
pub(crate) fn center_mask(map: &dyn DiskMap, t: f64, n: usize) -> Vec<bool> {
    let lattice = Lattice::new(n);
    par::map_collect(n, |row| {
        (0..n)
            .map(|col| classify(map, t, lattice.center(col, row)) & BELOW != 0)
            .collect::<Vec<_>>()
    })
    .concat()
}

#[derive(Default, Clone, Copy)]
struct RowCounts {
    centers: u64,
    interior: u64,
    boundary: u64,
}

/// Deterministic pixel-count estimate of the sublevel area.
///
/// `value` counts pixels whose centre lies in the region. The bracket runs
/// from the pixels whose four corners all lie in the region to `value`
/// plus every pixel whose corners disagree on either `|z| < 1` or
/// `|f| < t`.
pub fn sublevel_area_grid(map: &dyn DiskMap, t: f64, resolution: usize) -> Result<AreaEstimate> {
    let t = check_t(t)?;
    Estimator::Grid { resolution }.validate()?;
    let pixels = (resolution * resolution) as u64;
    if t == 0.0 || t == 1.0 {
        let value = if t == 0.0 { 0.0 } else { PI };
        return Ok(AreaEstimate::exact(value, AreaMethod::Grid, pixels));
    }
    let lattice = Lattice::new(resolution);
    let n = resolution;
    let corners: Vec<u8> = par::map_collect(n + 1, |row| {
        (0..=n)
            .map(|col| classify(map, t, lattice.corner(col, row)))
            .collect::<Vec<_>>()
    })
    .concat();
    let rows = par::map_collect(n, |row| {
        let mut counts = RowCounts::default();
        let top = &corners[row * (n + 1)..(row + 1) * (n + 1)];
        let bottom = &corners[(row + 1) * (n + 1)..(row + 2) * (n + 1)];
        for col in 0..n {
            if classify(map, t, lattice.center(col, row)) & BELOW != 0 {
                counts.centers += 1;
            }
            let quad = [top[col], top[col + 1], bottom[col], bottom[col + 1]];
            let all = quad.iter().fold(IN_DISK | BELOW, |acc, &c| acc & c);
            let any = quad.iter().fold(0, |acc, &c| acc | c);
            if all != any {
                counts.boundary += 1;
            } else if all & BELOW != 0 {
                counts.interior += 1;
            }
        }
        counts
    });
    let total = rows.iter().fold(RowCounts::default(), |acc, r| RowCounts {
        centers: acc.centers + r.centers,
        interior: acc.interior + r.interior,
        boundary: acc.boundary + r.boundary,
    });
    let area = lattice.pixel_area();
    let value = total.centers as f64 * area;
    let lower = (total.interior as f64 * area).min(value);
    let upper = value + total.boundary as f64 * area;
    Ok(AreaEstimate {
        value,
        stderr: 0.0,
        method: AreaMethod::Grid,
        samples: pixels,
        bracket: Some((lower, upper)),
    })
}

/// `|{z ∈ 𝔻 : |f(z)| >= t}|` as `π` minus the sublevel estimate; the level
/// set `{|f| = t}` itself has zero area for the supported maps.
pub fn superlevel_area(map: &dyn DiskMap, t: f64, estimator: Estimator) -> Result<AreaEstimate> {
    let sub = match estimator {
        Estimator::MonteCarlo { samples, seed } => sublevel_area_mc(map, t, samples, seed)?,
        Estimator::Grid { resolution } => sublevel_area_grid(map, t, resolution)?,
    };
    Ok(sub.complement())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ComplexPoint;
    use crate::levelset::moebius_superlevel_closed_form;
    use crate::maps::{BlaschkeProduct, MoebiusTransform, PowerRadialMap};

    #[test]
    fn trivial_levels_are_exact() {
        let b = BlaschkeProduct::monomial(2).unwrap();
        let zero = sublevel_area_mc(&b, 0.0, 1000, 1).unwrap();
        assert_eq!((zero.value, zero.stderr), (0.0, 0.0));
        let full = sublevel_area_grid(&b, 1.0, 64).unwrap();
        assert_eq!(full.value, PI);
        let sup = superlevel_area(&b, 0.0, Estimator::Grid { resolution: 64 }).unwrap();
        assert_eq!(sup.value, PI);
    }

    #[test]
    fn identity_quarter_disk() {
        let id = BlaschkeProduct::monomial(1).unwrap();
        let mc = sublevel_area_mc(&id, 0.5, 1_000_000, 1).unwrap();
        assert!((mc.value - PI / 4.0).abs() <= 3.0 * mc.stderr, "{mc:?}");
        let grid = sublevel_area_grid(&id, 0.5, 2048).unwrap();
        assert!((grid.value - PI / 4.0).abs() <= 2e-3 * PI / 4.0);
        assert!(grid.contains(PI / 4.0, 0.0));
    }

    #[test]
    fn power_radial_equality_family() {
        let p = PowerRadialMap::new(1, 2.0).unwrap();
        let grid = sublevel_area_grid(&p, 0.25, 2048).unwrap();
        assert!((grid.value - PI / 4.0).abs() <= 2e-3 * PI / 4.0);
    }

    #[test]
    fn moebius_grid_and_closed_form() {
        let m = MoebiusTransform::new(ComplexPoint::new(0.5, 0.0).unwrap()).unwrap();
        let grid = sublevel_area_grid(&m, 0.5, 2048).unwrap();
        let expected = PI - moebius_superlevel_closed_form(0.5, 0.5).unwrap();
        assert!((expected - 0.16 * PI).abs() < 1e-14);
        assert!((grid.value - expected).abs() <= 5e-3 * expected);
        assert!(grid.contains(expected, 0.0));
        let sup = superlevel_area(&m, 0.3, Estimator::Grid { resolution: 1024 }).unwrap();
        let (lo, hi) = sup.bracket.unwrap();
        let exact = moebius_superlevel_closed_form(0.5, 0.3).unwrap();
        assert!(lo <= exact && exact <= hi);
    }

    #[test]
    fn sample_complement_sums_to_pi() {
        let b = BlaschkeProduct::monomial(3).unwrap();
        let sample = ModulusSample::draw(&b, 5000, 4).unwrap();
        for t in [0.0, 0.2, 0.7, 1.0] {
            let sub = sample.sublevel(t).unwrap();
            let sup = sample.superlevel(t).unwrap();
            assert!((sub.value + sup.value - PI).abs() <= f64::EPSILON * PI);
            assert_eq!(sub.stderr, sup.stderr);
        }
    }

    #[test]
    fn errors_on_bad_input() {
        let b = BlaschkeProduct::monomial(1).unwrap();
        assert!(sublevel_area_mc(&b, 1.5, 1000, 1).is_err());
        assert!(sublevel_area_mc(&b, 0.5, 999, 1).is_err());
        assert!(sublevel_area_grid(&b, -0.1, 128).is_err());
        assert!(sublevel_area_grid(&b, 0.5, 32).is_err());
    }
}
