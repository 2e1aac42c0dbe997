use serde::{Deserialize, Serialize};

use super::area::{sublevel_area_grid, AreaEstimate, Estimator, ModulusSample};
use super::closed_form::sharp_sublevel_bound;
use crate::error::Result;
use crate::maps::{winding_number, DiskMap};

/// Standard errors allowed before a Monte Carlo estimate counts as a
/// departure from the bound.
pub const SIGMAS: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Measured area is below the bound by more than the estimator error.
    Holds,
    /// Bound and measurement agree within the error: a candidate equality case.
    HoldsWithinError,
    /// Measured area exceeds the bound by more than the estimator error.
    Violated,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::HoldsWithinError => "holds_within_error",
            Verdict::Violated => "violated",
        }
    }
}

/// One check of `|{|f| < t}| <= π t^{2/(Kd)}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub t: f64,
    pub d: u32,
    #[serde(rename = "K")]
    pub k: f64,
    pub measured_sublevel: AreaEstimate,
    pub sharp_bound: f64,
    pub margin: f64,
    pub verdict: Verdict,
}

impl BoundReport {
    pub fn new(t: f64, d: u32, k: f64, measured: AreaEstimate) -> Self {
        let bound = sharp_sublevel_bound(t, d, k);
        Self {
            t,
            d,
            k,
            measured_sublevel: measured,
            sharp_bound: bound,
            margin: bound - measured.value,
            verdict: verdict(&measured, bound),
        }
    }

    /// One CSV row matching [`BoundReport::CSV_HEADER`].
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.t,
            self.d,
            self.k,
            self.measured_sublevel.value,
            self.measured_sublevel.stderr,
            self.sharp_bound,
            self.margin,
            self.verdict.as_str()
        )
    }

    pub const CSV_HEADER: &'static str = "t,d,K,measured,stderr,bound,margin,verdict";
}

fn verdict(measured: &AreaEstimate, bound: f64) -> Verdict {
    match measured.bracket {
        Some((lo, hi)) => {
            if lo > bound {
                Verdict::Violated
            } else if bound <= hi {
                Verdict::HoldsWithinError
            } else {
                Verdict::Holds
            }
        }
        None => {
            let slack = SIGMAS * measured.stderr;
            if measured.value - slack > bound {
                Verdict::Violated
            } else if (measured.value - bound).abs() <= slack {
                Verdict::HoldsWithinError
            } else {
                Verdict::Holds
            }
        }
    }
}

/// Winding degree used in the bound: the known degree when the map
/// carries one, otherwise the boundary index.
pub fn map_degree(map: &dyn DiskMap) -> Result<u32> {
    match map.degree_hint() {
        Some(d) => Ok(d),
        None => {
            let d = winding_number(map, 256)?;
            u32::try_from(d)
                .ok()
                .filter(|&d| d >= 1)
                .ok_or(crate::Error::ZeroDegree)
        }
    }
}

pub fn check_bound(map: &dyn DiskMap, t: f64, estimator: Estimator) -> Result<BoundReport> {
    Ok(bound_sweep(map, &[t], estimator)?.remove(0))
}

/// [`check_bound`] over several levels. The Monte Carlo estimator draws a
/// single sample set and answers every level from it.
pub fn bound_sweep(
    map: &dyn DiskMap,
    ts: &[f64],
    estimator: Estimator,
) -> Result<Vec<BoundReport>> {
    estimator.validate()?;
    let d = map_degree(map)?;
    let k = map.boundary_k();
    match estimator {
        Estimator::MonteCarlo { samples, seed } => {
            let sample = ModulusSample::draw(map, samples, seed)?;
            ts.iter()
                .map(|&t| Ok(BoundReport::new(t, d, k, sample.sublevel(t)?)))
                .collect()
        }
        Estimator::Grid { resolution } => ts
            .iter()
            .map(|&t| {
                Ok(BoundReport::new(
                    t,
                    d,
                    k,
                    sublevel_area_grid(map, t, resolution)?,
                ))
            })
            .collect(),
    }
}
