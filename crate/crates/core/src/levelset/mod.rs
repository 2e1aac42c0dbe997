//! Sublevel and superlevel sets `{|f| < t}`, `{|f| >= t}` inside the disk.

mod area;
mod bound;
mod closed_form;
mod raster;

pub use area::{
    sublevel_area_grid, sublevel_area_mc, superlevel_area, AreaEstimate, AreaMethod, Estimator,
    ModulusSample, MIN_GRID_RESOLUTION, MIN_MC_SAMPLES,
};
pub use bound::{bound_sweep, check_bound, map_degree, BoundReport, Verdict};
pub use closed_form::{
    moebius_monotonicity_check, moebius_superlevel_closed_form, sharp_sublevel_bound,
};
pub use raster::{
    count_components, disk_mask, rasterize_sublevel, write_gray_png, write_pgm, RasterGrid,
};
