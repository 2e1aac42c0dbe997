//! WebAssembly bindings for the browser demo in `www/`.

use diskbound::levelset::{bound_sweep, disk_mask, map_degree};
use diskbound::norms::moebius_l2_closed_form;
use diskbound::{
    count_components, rasterize_sublevel, sharp_sublevel_bound, BlaschkeProduct, ComplexPoint,
    DiskMap, Estimator, Result,
};
use wasm_bindgen::prelude::*;

/// Largest image side the demo will render.
pub const MAX_RESOLUTION: usize = 1024;

/// Sublevel set of a Blaschke product next to the `z^d` reference.
#[wasm_bindgen]
pub struct SublevelView {
    resolution: usize,
    rgba: Vec<u8>,
    components: usize,
    area: f64,
    reference_area: f64,
    bound: f64,
    degree: u32,
}

#[wasm_bindgen]
impl SublevelView {
    #[wasm_bindgen(getter)]
    pub fn resolution(&self) -> usize {
        self.resolution
    }

    /// RGBA pixels, row 0 at the top, ready for `ImageData`.
    pub fn rgba(&self) -> Vec<u8> {
        self.rgba.clone()
    }

    #[wasm_bindgen(getter)]
    pub fn components(&self) -> usize {
        self.components
    }

    #[wasm_bindgen(getter)]
    pub fn area(&self) -> f64 {
        self.area
    }

    #[wasm_bindgen(getter)]
    pub fn reference_area(&self) -> f64 {
        self.reference_area
    }

    #[wasm_bindgen(getter)]
    pub fn bound(&self) -> f64 {
        self.bound
    }

    #[wasm_bindgen(getter)]
    pub fn degree(&self) -> u32 {
        self.degree
    }
}

fn product(zeros: &[f64], phase: f64) -> Result<BlaschkeProduct> {
    if !zeros.chunks_exact(2).remainder().is_empty() {
        return Err(diskbound::Error::domain(
            "zeros",
            zeros.len() as f64,
            "an even number of coordinates",
        ));
    }
    let zeros = zeros
        .chunks_exact(2)
        .map(|c| ComplexPoint::new(c[0], c[1]))
        .collect::<Result<Vec<_>>>()?;
    BlaschkeProduct::new(phase, zeros)
}

/// Colours: set of the product (dark), set of `z^d` only (light),
/// rest of the disk (white), outside the disk (grey).
pub fn sublevel(zeros: &[f64], phase: f64, t: f64, resolution: usize) -> Result<SublevelView> {
    diskbound::error::check_range(
        "resolution",
        resolution as f64,
        16.0,
        MAX_RESOLUTION as f64,
        "16..=1024",
    )?;
    let map = product(zeros, phase)?;
    let degree = map_degree(&map)?;
    let reference = BlaschkeProduct::monomial(degree)?;
    let grid = rasterize_sublevel(&map, t, resolution)?;
    let reference_grid = rasterize_sublevel(&reference, t, resolution)?;
    let inside = disk_mask(resolution);
    let rgba = grid
        .mask()
        .iter()
        .zip(reference_grid.mask())
        .zip(&inside)
        .flat_map(
            |((&set, &reference), &inside)| match (inside, set, reference) {
                (false, _, _) => [200, 200, 200, 255],
                (true, true, _) => [30, 60, 140, 255],
                (true, false, true) => [170, 195, 235, 255],
                (true, false, false) => [255, 255, 255, 255],
            },
        )
        .collect();
    Ok(SublevelView {
        resolution,
        rgba,
        components: count_components(&grid),
        area: grid.area(),
        reference_area: reference_grid.area(),
        bound: sharp_sublevel_bound(t, degree, map.boundary_k()),
        degree,
    })
}

/// `(|a|, h(|a|))` pairs flattened, for `n` evenly spaced `|a|` in `[0, a_max]`.
pub fn l2_curve(n: usize, a_max: f64) -> Result<Vec<f64>> {
    diskbound::error::check_range("a_max", a_max, 0.0, 0.999, "[0, 0.999]")?;
    let n = n.max(2);
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        let a = a_max * i as f64 / (n - 1) as f64;
        out.push(a);
        out.push(moebius_l2_closed_form(a)?);
    }
    Ok(out)
}

/// Monte Carlo bound sweep as JSON.
pub fn bound_sweep_json(
    zeros: &[f64],
    phase: f64,
    ts: &[f64],
    samples: usize,
    seed: u64,
) -> Result<String> {
    let map = product(zeros, phase)?;
    let reports = bound_sweep(&map, ts, Estimator::MonteCarlo { samples, seed })?;
    Ok(serde_json::to_string(&reports).expect("reports serialize"))
}

fn js_error(err: diskbound::Error) -> JsError {
    JsError::new(&err.to_string())
}

/// `zeros` holds `re, im` pairs.
#[wasm_bindgen(js_name = sublevelView)]
pub fn sublevel_view(
    zeros: &[f64],
    phase: f64,
    t: f64,
    resolution: usize,
) -> Result<SublevelView, JsError> {
    sublevel(zeros, phase, t, resolution).map_err(js_error)
}

#[wasm_bindgen(js_name = moebiusL2Curve)]
pub fn moebius_l2_curve(n: usize, a_max: f64) -> Result<Vec<f64>, JsError> {
    l2_curve(n, a_max).map_err(js_error)
}

#[wasm_bindgen(js_name = boundSweep)]
pub fn bound_sweep_js(
    zeros: &[f64],
    phase: f64,
    ts: &[f64],
    samples: usize,
    seed: u64,
) -> Result<String, JsError> {
    bound_sweep_json(zeros, phase, ts, samples, seed).map_err(js_error)
}
