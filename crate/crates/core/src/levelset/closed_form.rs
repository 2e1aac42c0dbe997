use std::f64::consts::PI;

use crate::error::{check_range, Error, Result};

/// Superlevel area `|{|f| > t}|` of the Möbius map `(z + a)/(1 + z·ā)`:
///
/// ```text
/// μ_a(t) = π (1 - t²)(1 - |a|⁴ t²) / (1 - |a|² t²)²
/// ```
pub fn moebius_superlevel_closed_form(a_modulus: f64, t: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&a_modulus) {
        return Err(Error::domain("|a|", a_modulus, "0 <= |a| < 1"));
    }
    check_range("t", t, 0.0, 1.0, "0 <= t <= 1")?;
    let r2t2 = a_modulus * a_modulus * t * t;
    Ok(PI * (1.0 - t * t) * (1.0 - a_modulus * a_modulus * r2t2) / ((1.0 - r2t2) * (1.0 - r2t2)))
}

/// True when `μ_a(t)` is nondecreasing along `r_grid` (taken in the given order).
pub fn moebius_monotonicity_check(t: f64, r_grid: &[f64]) -> Result<bool> {
    let values = r_grid
        .iter()
        .map(|&r| moebius_superlevel_closed_form(r, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(values.windows(2).all(|w| w[1] >= w[0]))
}

/// `π t^{2/(Kd)}`: the largest possible sublevel area for a map of winding
/// number `d` that is `K`-quasiregular at the boundary.
pub fn sharp_sublevel_bound(t: f64, d: u32, k: f64) -> f64 {
    PI * t.powf(2.0 / (k * d as f64))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `dμ_a/d|a| = 4π r (1 - r²) t² (1 - t²) / (1 - r² t²)³`.
    fn derivative(r: f64, t: f64) -> f64 {
        4.0 * PI * r * (1.0 - r * r) * t * t * (1.0 - t * t) / (1.0 - r * r * t * t).powi(3)
    }

    #[test]
    fn closed_form_values() {
        let v = moebius_superlevel_closed_form(0.0, 0.5).unwrap();
        assert!((v - 0.75 * PI).abs() < 1e-15);
        assert_eq!(moebius_superlevel_closed_form(0.73, 1.0).unwrap(), 0.0);
        let v = moebius_superlevel_closed_form(0.5, 0.5).unwrap();
        assert!((v - 0.84 * PI).abs() < 1e-14);
        assert!(moebius_superlevel_closed_form(1.0, 0.5).is_err());
        assert!(moebius_superlevel_closed_form(0.5, 1.5).is_err());
    }

    #[test]
    fn derivative_matches_finite_differences() {
        for &(r, t) in &[(0.2, 0.3), (0.5, 0.5), (0.9, 0.8)] {
            let h = 1e-6;
            let fd = (moebius_superlevel_closed_form(r + h, t).unwrap()
                - moebius_superlevel_closed_form(r - h, t).unwrap())
                / (2.0 * h);
            assert!((fd - derivative(r, t)).abs() < 1e-7, "{fd}");
        }
    }

    #[test]
    fn monotone_in_a() {
        let grid: Vec<f64> = (0..10).map(|i| i as f64 / 10.0).collect();
        assert!(moebius_monotonicity_check(0.5, &grid).unwrap());
        assert!(moebius_monotonicity_check(0.0, &grid).unwrap());
        let sparse = [0.0, 0.5, 0.99];
        assert!(sparse.iter().skip(1).all(|&r| derivative(r, 0.9) > 0.0));
        assert!(moebius_monotonicity_check(0.9, &sparse).unwrap());
        assert!(!moebius_monotonicity_check(0.5, &[0.9, 0.1]).unwrap());
    }

    #[test]
    fn sharp_bound_values() {
        assert!((sharp_sublevel_bound(1.0, 3, 2.5) - PI).abs() < 1e-15);
        assert!((sharp_sublevel_bound(0.125, 4, 1.0) - PI / 8f64.sqrt()).abs() < 1e-15);
        assert!((sharp_sublevel_bound(0.25, 1, 2.0) - PI / 4.0).abs() < 1e-15);
    }
}
