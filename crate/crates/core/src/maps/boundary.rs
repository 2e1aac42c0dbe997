use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use super::DiskMap;
use crate::error::{Error, Result};

/// Default angular step for finite-difference boundary speeds (radians).
pub const DEFAULT_SPEED_STEP: f64 = 1e-5;

/// Refinement ceiling for [`winding_number`].
pub const MAX_WINDING_STEPS: usize = 1 << 22;

/// `|∂_s f(e^{is})|`. Blaschke products and Möbius maps use their closed
/// form and ignore `step`.
pub fn boundary_speed(map: &dyn DiskMap, s: f64, step: f64) -> f64 {
    map.boundary_speed(s, step)
}

/// Symmetric difference `|f(e^{i(s+h)}) - f(e^{i(s-h)})| / 2h`.
pub fn finite_difference_speed<F>(f: F, s: f64, step: f64) -> f64
where
    F: Fn(Complex64) -> Complex64,
{
    let forward = f(Complex64::from_polar(1.0, s + step));
    let backward = f(Complex64::from_polar(1.0, s - step));
    (forward - backward).norm() / (2.0 * step)
}

/// `∫_0^{2π} |∂_s f(e^{is})| ds` by the periodic trapezoid rule on `nodes`
/// equispaced points. For maps with unimodular boundary values this is
/// `2π` times the winding number.
pub fn boundary_length(map: &dyn DiskMap, nodes: usize, step: f64) -> f64 {
    assert!(nodes > 0, "boundary_length needs at least one node");
    let h = TAU / nodes as f64;
    let sum: f64 = (0..nodes)
        .map(|k| map.boundary_speed(k as f64 * h, step))
        .sum();
    sum * h
}

/// Index of the boundary curve `f(e^{is})` about the origin.
///
/// Tracks the continuous argument on `n_steps` equispaced boundary points,
/// doubling the resolution until every increment is below `π/2`, and
/// rounds the accumulated turn to whole multiples of `2π`.
pub fn winding_number(map: &dyn DiskMap, n_steps: usize) -> Result<i64> {
    if n_steps < 64 {
        return Err(Error::domain("n_steps", n_steps as f64, "n_steps >= 64"));
    }
    let mut n = n_steps;
    while n <= MAX_WINDING_STEPS {
        if let Some(turn) = total_turn(map, n)? {
            return Ok((turn / TAU).round() as i64);
        }
        n *= 2;
    }
    Err(Error::NonConvergence {
        max_steps: MAX_WINDING_STEPS,
    })
}

/// Accumulated argument change over one loop, or `None` if some step
/// turned by `π/2` or more.
fn total_turn(map: &dyn DiskMap, n: usize) -> Result<Option<f64>> {
    let h = TAU / n as f64;
    let point = |k: usize| -> Result<Complex64> {
        let s = k as f64 * h;
        let w = map.eval(Complex64::from_polar(1.0, s));
        if w.norm() == 0.0 || !w.re.is_finite() || !w.im.is_finite() {
            Err(Error::BoundaryZero { s })
        } else {
            Ok(w)
        }
    };
    let first = point(0)?;
    let mut prev = first;
    let mut turn = 0.0;
    for k in 1..=n {
        let next = if k == n { first } else { point(k)? };
        let step = (next / prev).arg();
        if step.abs() >= FRAC_PI_2 {
            return Ok(None);
        }
        turn += step;
        prev = next;
    }
    Ok(Some(turn))
}
