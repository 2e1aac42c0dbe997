//! `L^p` norms over the unit disk (Lebesgue measure, disk area `π`).
//!
//! Two independent routes are provided: the distribution-function identity
//! `‖f‖_p^p = p ∫_0^1 μ(t) t^{p-1} dt` with `μ(t) = |{|f| >= t}|`, and a
//! direct polar tensor rule. Their agreement is the main consistency check.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::levelset::{Estimator, ModulusSample};
use crate::maps::DiskMap;
use crate::par;
use crate::quadrature::GaussLegendre;

pub const DEFAULT_T_NODES: usize = 64;
pub const DEFAULT_RADIAL_NODES: usize = 256;
pub const DEFAULT_ANGULAR_NODES: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormMethod {
    Distributional,
    Quadrature2d,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NormResult {
    pub p: f64,
    pub value: f64,
    pub method: NormMethod,
    pub error_estimate: f64,
}

fn check_p(p: f64) -> Result<f64> {
    if p.is_finite() && p >= 1.0 {
        Ok(p)
    } else {
        Err(Error::domain("p", p, "p >= 1"))
    }
}

fn check_nodes(name: &'static str, nodes: usize) -> Result<()> {
    if nodes < 16 {
        Err(Error::domain(name, nodes as f64, "at least 16 nodes"))
    } else {
        Ok(())
    }
}

/// `p ∫_0^1 μ(t) t^{p-1} dt` on a Gauss–Legendre rule.
fn layer_cake<F: Fn(f64) -> f64>(rule: &GaussLegendre, p: f64, mu: F) -> f64 {
    rule.integrate(0.0, 1.0, |t| p * mu(t) * t.powf(p - 1.0))
}

/// Norm and its error from `‖f‖_p^p` and the error on that quantity.
fn root(p: f64, power: f64, power_err: f64, method: NormMethod) -> NormResult {
    let value = power.max(0.0).powf(1.0 / p);
    let slope = if value > 0.0 {
        p * value.powf(p - 1.0)
    } else {
        f64::INFINITY
    };
    NormResult {
        p,
        value,
        method,
        error_estimate: power_err / slope,
    }
}

/// Sorted moduli at the centres of in-disk pixels of an `n × n` lattice.
fn pixel_moduli(map: &dyn DiskMap, n: usize) -> Vec<f64> {
    let h = 2.0 / n as f64;
    let mut moduli: Vec<f64> = par::map_collect(n, |row| {
        let y = 1.0 - (row as f64 + 0.5) * h;
        (0..n)
            .filter_map(|col| {
                let z = Complex64::new(-1.0 + (col as f64 + 0.5) * h, y);
                (z.norm_sqr() < 1.0).then(|| map.modulus(z))
            })
            .collect::<Vec<_>>()
    })
    .concat();
    par::sort_f64(&mut moduli);
    moduli
}

/// `‖f‖_p` from superlevel areas at `t_nodes` Gauss–Legendre levels.
///
/// The areas come from one shared sample set: a Monte Carlo draw, or the
/// pixel centres of a grid. The error estimate is the root-sum-square of
/// the quadrature error (difference against a half-size rule) and the area
/// error (propagated standard errors for Monte Carlo, the change from
/// halving the resolution for the grid).
pub fn lp_norm_distributional(
    map: &dyn DiskMap,
    p: f64,
    t_nodes: usize,
    area: Estimator,
) -> Result<NormResult> {
    let p = check_p(p)?;
    check_nodes("t_nodes", t_nodes)?;
    area.validate()?;
    let full = GaussLegendre::new(t_nodes);
    let half = GaussLegendre::new(t_nodes / 2);
    let (power, quad_err, area_err) = match area {
        Estimator::MonteCarlo { samples, seed } => {
            let sample = ModulusSample::draw(map, samples, seed)?;
            let n = samples as f64;
            let frac = |t: f64| sample.count_below(t) as f64 / n;
            let mu = |t: f64| PI - PI * frac(t);
            let power = layer_cake(&full, p, mu);
            let coarse = layer_cake(&half, p, mu);
            let area_err = layer_cake(&full, p, |t| {
                let q = frac(t);
                PI * (q * (1.0 - q) / n).sqrt()
            });
            (power, (power - coarse).abs(), area_err)
        }
        Estimator::Grid { resolution } => {
            let at = |res: usize| {
                let moduli = pixel_moduli(map, res);
                let cell = (2.0 / res as f64).powi(2);
                let mu = |t: f64| PI - cell * moduli.partition_point(|&m| m < t) as f64;
                (layer_cake(&full, p, mu), layer_cake(&half, p, mu))
            };
            let (power, coarse) = at(resolution);
            let (halved, _) = at(resolution / 2);
            (power, (power - coarse).abs(), (power - halved).abs())
        }
    };
    Ok(root(
        p,
        power,
        quad_err.hypot(area_err),
        NormMethod::Distributional,
    ))
}

/// `∬ |f(re^{iθ})|^p r dr dθ`: Gauss–Legendre in `r`, trapezoid in `θ`.
fn polar_integral(map: &dyn DiskMap, p: f64, radial: usize, angular: usize) -> f64 {
    let rule = GaussLegendre::new(radial);
    let nodes: Vec<(f64, f64)> = rule.on_interval(0.0, 1.0).collect();
    let dtheta = TAU / angular as f64;
    let rings = par::map_collect(nodes.len(), |i| {
        let (r, w) = nodes[i];
        let ring: f64 = (0..angular)
            .map(|j| {
                let z = Complex64::from_polar(r, j as f64 * dtheta);
                map.modulus(z).powf(p)
            })
            .sum();
        w * r * ring * dtheta
    });
    rings.iter().sum()
}

/// `‖f‖_p` by direct polar quadrature; the error estimate is the change
/// when both node counts are halved.
pub fn lp_norm_quadrature2d(
    map: &dyn DiskMap,
    p: f64,
    radial_nodes: usize,
    angular_nodes: usize,
) -> Result<NormResult> {
    let p = check_p(p)?;
    check_nodes("radial_nodes", radial_nodes)?;
    check_nodes("angular_nodes", angular_nodes)?;
    let fine = polar_integral(map, p, radial_nodes, angular_nodes);
    let coarse = polar_integral(map, p, radial_nodes / 2, angular_nodes / 2);
    let fine_norm = fine.powf(1.0 / p);
    let coarse_norm = coarse.powf(1.0 / p);
    Ok(NormResult {
        p,
        value: fine_norm,
        method: NormMethod::Quadrature2d,
        error_estimate: (fine_norm - coarse_norm).abs(),
    })
}

/// `(2π / (2 + Kdp))^{1/p}`, the norm of `e^{id·arg z}|z|^{Kd}`.
pub fn lp_lower_bound(k: f64, d: u32, p: f64) -> f64 {
    (TAU / (2.0 + k * d as f64 * p)).powf(1.0 / p)
}

/// `‖(z + a)/(1 + z·ā)‖_2` as a function of `|a|`:
///
/// ```text
/// h(|a|) = √π · √((2|a|⁴ - |a|² - (1 - |a|²)² ln(1 - |a|²)) / |a|⁴)
/// ```
///
/// The quotient is `0/0` at `a = 0`; below `|a| = 1e-3` the series
/// `1/2 + x/3 + x²/12 + x³/30` in `x = |a|²` is used instead.
pub fn moebius_l2_closed_form(a_modulus: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&a_modulus) {
        return Err(Error::domain("|a|", a_modulus, "0 <= |a| < 1"));
    }
    let x = a_modulus * a_modulus;
    let bracket = if a_modulus < 1e-3 {
        0.5 + x * (1.0 / 3.0 + x * (1.0 / 12.0 + x / 30.0))
    } else {
        (2.0 * x * x - x - (1.0 - x) * (1.0 - x) * (-x).ln_1p()) / (x * x)
    };
    Ok((PI * bracket).sqrt())
}

/// [`moebius_l2_closed_form`] wrapped as a [`NormResult`].
pub fn moebius_l2_norm(a_modulus: f64) -> Result<NormResult> {
    Ok(NormResult {
        p: 2.0,
        value: moebius_l2_closed_form(a_modulus)?,
        method: NormMethod::ClosedForm,
        error_estimate: 0.0,
    })
}
