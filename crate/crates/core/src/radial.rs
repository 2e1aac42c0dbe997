//! Radial maps `f(z) = g(|z|) e^{i arg z}` driven by a density `h`.
//!
//! The profile is
//!
//! ```text
//! g(s) = exp( -∫_s^1 (a - H(u)) / u du ),   H(u) = ∫_u^1 h(v)/4 dv,
//! ```
//!
//! so `g(1) = 1`, `r g'(r)/g(r) = a - H(r) <= a`, and `g` increases
//! whenever `∫_0^1 h < 4a`. In the variable `x = ln u` the outer integrand
//! `a - H(e^x)` is smooth and bounded, which is how the table is built.

use std::io::{BufRead, Write};
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::complex::ComplexPoint;
use crate::error::{check_range, Error, Result};
use crate::maps::{check_in_disk, DiskMap};
use crate::quadrature::GaussLegendre;

/// Nonnegative density sampled on a uniform grid of `[0, 1]`, read by
/// linear interpolation. Serialized as a list of `[v, h]` pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<(f64, f64)>", into = "Vec<(f64, f64)>")]
pub struct DensitySpec {
    samples: Vec<(f64, f64)>,
    /// `∫_0^{v_i} h` at each sample.
    cumulative: Vec<f64>,
}

impl DensitySpec {
    pub fn new(samples: Vec<(f64, f64)>) -> Result<Self> {
        let n = samples.len();
        if n < 2 {
            return Err(Error::Density(format!("need at least 2 samples, got {n}")));
        }
        let spacing = 1.0 / (n - 1) as f64;
        for (i, &(v, h)) in samples.iter().enumerate() {
            if !v.is_finite() || (v - i as f64 * spacing).abs() > 1e-9 {
                return Err(Error::Density(format!(
                    "sample {i} at v = {v} is not on the uniform grid over [0, 1]"
                )));
            }
            if !h.is_finite() || h < 0.0 {
                return Err(Error::Density(format!(
                    "h({v}) = {h}; density values must be finite and nonnegative"
                )));
            }
        }
        let mut cumulative = Vec::with_capacity(n);
        cumulative.push(0.0);
        for pair in samples.windows(2) {
            let (v0, h0) = pair[0];
            let (v1, h1) = pair[1];
            let last = *cumulative.last().unwrap();
            cumulative.push(last + 0.5 * (v1 - v0) * (h0 + h1));
        }
        Ok(Self {
            samples,
            cumulative,
        })
    }

    /// Values at `v_i = i / (n - 1)`.
    pub fn uniform(values: &[f64]) -> Result<Self> {
        let n = values.len();
        if n < 2 {
            return Err(Error::Density(format!("need at least 2 samples, got {n}")));
        }
        let last = (n - 1) as f64;
        Self::new(
            values
                .iter()
                .enumerate()
                .map(|(i, &h)| (i as f64 / last, h))
                .collect(),
        )
    }

    pub fn constant(value: f64) -> Result<Self> {
        Self::uniform(&[value, value])
    }

    pub fn from_fn<F: Fn(f64) -> f64>(n: usize, f: F) -> Result<Self> {
        let n = n.max(2);
        let last = (n - 1) as f64;
        let values: Vec<f64> = (0..n).map(|i| f(i as f64 / last)).collect();
        Self::uniform(&values)
    }

    /// Two numeric columns `v, h` separated by commas or whitespace. Blank
    /// lines, `#` comments and a leading non-numeric header are skipped.
    pub fn from_csv<R: BufRead>(reader: R) -> Result<Self> {
        let mut samples = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line.map_err(|e| Error::Density(e.to_string()))?;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .collect();
            let parsed: Option<Vec<f64>> = fields.iter().map(|s| s.parse().ok()).collect();
            match parsed {
                Some(values) if values.len() == 2 => samples.push((values[0], values[1])),
                None if samples.is_empty() => continue,
                _ => {
                    return Err(Error::Density(format!(
                        "line {}: expected two numbers, got {line:?}",
                        lineno + 1
                    )))
                }
            }
        }
        Self::new(samples)
    }

    pub fn load_csv(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path).map_err(|source| Error::Io {
            path: path.to_owned(),
            source,
        })?;
        Self::from_csv(std::io::BufReader::new(file))
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }

    fn segment(&self, v: f64) -> usize {
        let last = self.samples.len() - 1;
        ((v * last as f64).floor().max(0.0) as usize).min(last - 1)
    }

    /// `h(v)` by linear interpolation, clamped to `[0, 1]`.
    pub fn value(&self, v: f64) -> f64 {
        let v = v.clamp(0.0, 1.0);
        let i = self.segment(v);
        let (v0, h0) = self.samples[i];
        let (v1, h1) = self.samples[i + 1];
        h0 + (h1 - h0) * (v - v0) / (v1 - v0)
    }

    /// `∫_0^1 h`.
    pub fn integral(&self) -> f64 {
        *self.cumulative.last().unwrap()
    }

    /// `∫_u^1 h`, exact for the piecewise-linear interpolant.
    pub fn tail_integral(&self, u: f64) -> f64 {
        let u = u.clamp(0.0, 1.0);
        let i = self.segment(u);
        let (v0, h0) = self.samples[i];
        let head = self.cumulative[i] + 0.5 * (u - v0) * (h0 + self.value(u));
        self.integral() - head
    }
}

impl TryFrom<Vec<(f64, f64)>> for DensitySpec {
    type Error = Error;

    fn try_from(samples: Vec<(f64, f64)>) -> Result<Self> {
        Self::new(samples)
    }
}

impl From<DensitySpec> for Vec<(f64, f64)> {
    fn from(d: DensitySpec) -> Self {
        d.samples
    }
}

/// Radial quasiconformal map `f(z) = g(r) e^{iθ}` with tabulated `log g`.
#[derive(Debug, Clone)]
pub struct RadialQcMap {
    a: f64,
    k: f64,
    density: DensitySpec,
    /// Table abscissae `ln r`, increasing, last entry 0.
    xs: Vec<f64>,
    log_g: Vec<f64>,
    /// `a - H(u_cut)`: slope of `log g` against `ln r` below the table.
    tail_slope: f64,
    rule: GaussLegendre,
}

impl RadialQcMap {
    pub const DEFAULT_GRID_SIZE: usize = 1024;
    pub const MIN_GRID_SIZE: usize = 256;
    /// Smallest tabulated radius; below it `log g` continues linearly in `ln r`.
    pub const U_CUT: f64 = 1e-8;

    /// Builds the profile. `k` defaults to `a`, the smallest admissible
    /// dilatation.
    pub fn build(a: f64, k: Option<f64>, density: DensitySpec, grid_size: usize) -> Result<Self> {
        if !(a.is_finite() && a > 0.0) {
            return Err(Error::domain("a", a, "a > 0"));
        }
        let k = k.unwrap_or(a);
        if !(k.is_finite() && k >= a && k >= 1.0) {
            return Err(Error::domain("K", k, "K >= max(a, 1)"));
        }
        if grid_size < Self::MIN_GRID_SIZE {
            return Err(Error::domain(
                "grid_size",
                grid_size as f64,
                "grid_size >= 256",
            ));
        }
        let integral = density.integral();
        if integral >= 4.0 * a {
            return Err(Error::Inadmissible {
                integral,
                limit: 4.0 * a,
            });
        }

        let x_min = Self::U_CUT.ln();
        let mut xs: Vec<f64> = (0..grid_size)
            .map(|i| x_min * (1.0 - i as f64 / (grid_size - 1) as f64))
            .collect();
        // Density knots become table nodes so each segment sees a smooth integrand.
        xs.extend(
            density
                .samples()
                .iter()
                .map(|&(v, _)| v)
                .filter(|&v| v > Self::U_CUT && v < 1.0)
                .map(f64::ln),
        );
        xs.sort_by(f64::total_cmp);
        xs.dedup_by(|b, a| (*b - *a).abs() < 1e-12);
        *xs.last_mut().unwrap() = 0.0;

        let mut map = Self {
            a,
            k,
            tail_slope: 0.0,
            density,
            log_g: vec![0.0; xs.len()],
            xs,
            rule: GaussLegendre::new(8),
        };
        for &x in &map.xs {
            let u = x.exp();
            let slope = map.log_slope(u);
            if slope <= 0.0 {
                return Err(Error::NonMonotone { u, slope });
            }
        }
        for i in (0..map.xs.len() - 1).rev() {
            let step = map.segment_integral(map.xs[i], map.xs[i + 1]);
            map.log_g[i] = map.log_g[i + 1] - step;
        }
        map.tail_slope = map.log_slope(Self::U_CUT);
        Ok(map)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn density(&self) -> &DensitySpec {
        &self.density
    }

    /// `H(u) = ∫_u^1 h/4`.
    pub fn h_tail(&self, u: f64) -> f64 {
        0.25 * self.density.tail_integral(u)
    }

    /// `r g'(r) / g(r) = a - H(r)`.
    pub fn log_slope(&self, r: f64) -> f64 {
        self.a - self.h_tail(r)
    }

    fn segment_integral(&self, x0: f64, x1: f64) -> f64 {
        self.rule.integrate(x0, x1, |x| self.log_slope(x.exp()))
    }

    /// `ln g(r)`; `-∞` at `r = 0`.
    pub fn log_g(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return f64::NEG_INFINITY;
        }
        if r >= 1.0 {
            return 0.0;
        }
        let x = r.ln();
        if x <= self.xs[0] {
            return self.log_g[0] + self.tail_slope * (x - self.xs[0]);
        }
        let i = self
            .xs
            .partition_point(|&v| v <= x)
            .clamp(1, self.xs.len() - 1)
            - 1;
        self.log_g[i] + self.segment_integral(self.xs[i], x)
    }

    pub fn g(&self, r: f64) -> f64 {
        self.log_g(r).exp()
    }

    /// Tabulated `(r, g(r))` pairs, increasing in both coordinates.
    pub fn g_table(&self) -> Vec<(f64, f64)> {
        self.xs
            .iter()
            .zip(&self.log_g)
            .map(|(&x, &lg)| (x.exp(), lg.exp()))
            .collect()
    }

    /// Largest difference quotient of `ln g` against `ln r` between
    /// neighbouring table nodes; a discrete `max r g'/g`.
    pub fn max_table_log_slope(&self) -> f64 {
        self.xs
            .windows(2)
            .zip(self.log_g.windows(2))
            .map(|(x, lg)| (lg[1] - lg[0]) / (x[1] - x[0]))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Radial Laplacian `(ln g)'' + (ln g)'/r` by central differences.
    pub fn laplacian_log_modulus(&self, r: f64, step: f64) -> f64 {
        let lo = self.log_g(r - step);
        let mid = self.log_g(r);
        let hi = self.log_g(r + step);
        (hi - 2.0 * mid + lo) / (step * step) + (hi - lo) / (2.0 * step * r)
    }

    /// `max |Δ ln|f|(r) - h(r)|` over the probe radii.
    pub fn verify_laplacian(&self, probes: &[f64], step: f64) -> Result<f64> {
        check_range("step", step, f64::MIN_POSITIVE, 1e-3, "0 < step <= 1e-3")?;
        let mut worst: f64 = 0.0;
        for &r in probes {
            check_range("probe radius", r, 0.05, 0.95, "probe in (0.05, 0.95)")?;
            let residual = (self.laplacian_log_modulus(r, step) - self.density.value(r)).abs();
            worst = worst.max(residual);
        }
        Ok(worst)
    }

    /// The radius with `g(r) = t`, to within `1e-12`.
    pub fn g_inverse(&self, t: f64) -> Result<f64> {
        check_range("t", t, 0.0, 1.0, "0 <= t <= 1")?;
        if t == 0.0 {
            return Ok(0.0);
        }
        if t == 1.0 {
            return Ok(1.0);
        }
        let target = t.ln();
        if target <= self.log_g[0] {
            let x = self.xs[0] + (target - self.log_g[0]) / self.tail_slope;
            return Ok(x.exp());
        }
        let i = self
            .log_g
            .partition_point(|&v| v <= target)
            .clamp(1, self.xs.len() - 1)
            - 1;
        let (mut lo, mut hi) = (self.xs[i].exp(), self.xs[i + 1].exp());
        while hi - lo > 1e-13 {
            let mid = 0.5 * (lo + hi);
            if self.log_g(mid) < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    pub fn eval_at(&self, z: ComplexPoint) -> Result<ComplexPoint> {
        let z = check_in_disk(z)?;
        ComplexPoint::try_from(self.eval(z))
    }

    /// Writes the `r,g` table with a header row.
    pub fn write_table_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "r,g")?;
        for (r, g) in self.g_table() {
            writeln!(out, "{r},{g}")?;
        }
        Ok(())
    }
}

impl DiskMap for RadialQcMap {
    fn eval(&self, z: Complex64) -> Complex64 {
        let r = z.norm();
        if r == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        z * (self.g(r) / r)
    }

    fn modulus(&self, z: Complex64) -> f64 {
        self.g(z.norm())
    }

    fn degree_hint(&self) -> Option<u32> {
        None
    }

    fn boundary_k(&self) -> f64 {
        self.k
    }
}
