//! Numerical toolkit for self-maps of the unit disk.
//!
//! The crate builds finite Blaschke products, Möbius automorphisms, the
//! power-radial family `e^{id·arg z}|z|^{Kd}` and tabulated radial
//! quasiconformal maps, then measures their sublevel sets
//! `{z ∈ 𝔻 : |f(z)| < t}` and compares the result with the sharp bound
//! `π t^{2/(Kd)}`.
//!
//! Module map:
//!
//! - [`maps`]: map types, the [`DiskMap`] evaluation trait, boundary speed
//!   and winding numbers.
//! - [`radial`]: radial maps `g(r)e^{iθ}` built from a density `h`.
//! - [`levelset`]: Monte Carlo and grid area estimators, closed forms,
//!   bound reports, rasters and connected components.
//! - [`norms`]: `L^p` norms on the disk and their lower bounds.

pub mod complex;
pub mod error;
pub mod levelset;
pub mod maps;
pub mod norms;
pub mod quadrature;
pub mod radial;
pub mod sampling;

mod par;

pub use complex::ComplexPoint;
pub use error::{Error, Result};
pub use levelset::{
    check_bound, count_components, rasterize_sublevel, sharp_sublevel_bound, sublevel_area_grid,
    sublevel_area_mc, superlevel_area, AreaEstimate, AreaMethod, BoundReport, Estimator,
    RasterGrid, Verdict,
};
pub use maps::{
    boundary_length, boundary_speed, winding_number, AnyMap, BlaschkeProduct, DiskMap, MapSpec,
    MoebiusTransform, PowerRadialMap,
};
pub use norms::{
    lp_lower_bound, lp_norm_distributional, lp_norm_quadrature2d, NormMethod, NormResult,
};
pub use radial::{DensitySpec, RadialQcMap};
