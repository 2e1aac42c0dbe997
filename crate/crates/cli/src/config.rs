//! Job configuration: a TOML file, overridable from the command line.
//!
//! ```toml
//! task = "bound_sweep"
//! seed = 1
//! samples = 1000000
//! t = [0.1, 0.5, 0.9]
//! out_dir = "out"
//!
//! [map]
//! variant = "blaschke"
//! phase = 0.0
//! zeros = [[0.5, 0.0], [0.0, -0.3]]
//! ```

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use diskbound::levelset::{MIN_GRID_RESOLUTION, MIN_MC_SAMPLES};
use diskbound::{AnyMap, ComplexPoint, DensitySpec, Estimator, MapSpec, RadialQcMap};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    Area,
    BoundSweep,
    Norm,
    Winding,
    #[serde(rename = "fig1")]
    Figure1,
    #[serde(rename = "fig23")]
    Figure2_3,
    RadialVerify,
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Area => "area",
            Task::BoundSweep => "bound-sweep",
            Task::Norm => "norm",
            Task::Winding => "winding",
            Task::Figure1 => "fig1",
            Task::Figure2_3 => "fig23",
            Task::RadialVerify => "radial-verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodChoice {
    #[default]
    MonteCarlo,
    Grid,
}

/// Map section of a job file. Mirrors [`MapSpec`] with extra conveniences:
/// a `monomial` shorthand and radial densities given inline, as a constant
/// or as a CSV path.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "snake_case", deny_unknown_fields)]
pub enum MapConfig {
    Blaschke {
        #[serde(default)]
        phase: f64,
        zeros: Vec<ComplexPoint>,
    },
    Monomial {
        d: u32,
    },
    Moebius {
        a: ComplexPoint,
    },
    PowerRadial {
        d: u32,
        #[serde(rename = "K")]
        k: f64,
    },
    RadialQc {
        a: f64,
        #[serde(rename = "K", default, skip_serializing_if = "Option::is_none")]
        k: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        density: Option<DensitySpec>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        density_constant: Option<f64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        density_csv: Option<PathBuf>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        grid_size: Option<usize>,
    },
}

impl MapConfig {
    /// The product with zeros `±1/2, ±i/2`, equal to `(1 - 16z⁴)/(z⁴ - 16)`.
    pub fn figure_product() -> Self {
        let zeros = [(0.5, 0.0), (-0.5, 0.0), (0.0, 0.5), (0.0, -0.5)]
            .iter()
            .map(|&(re, im)| ComplexPoint::new(re, im).expect("finite"))
            .collect();
        MapConfig::Blaschke { phase: 0.0, zeros }
    }

    pub fn unit_density_radial() -> Self {
        MapConfig::RadialQc {
            a: 1.0,
            k: Some(1.0),
            density: None,
            density_constant: Some(1.0),
            density_csv: None,
            grid_size: None,
        }
    }

    /// Resolves density sources (relative CSV paths against `base`).
    pub fn to_spec(&self, base: &Path) -> Result<MapSpec> {
        Ok(match self.clone() {
            MapConfig::Blaschke { phase, zeros } => MapSpec::Blaschke { phase, zeros },
            MapConfig::Monomial { d } => MapSpec::Blaschke {
                phase: 0.0,
                zeros: vec![ComplexPoint::ZERO; d as usize],
            },
            MapConfig::Moebius { a } => MapSpec::Moebius { a },
            MapConfig::PowerRadial { d, k } => MapSpec::PowerRadial { d, k },
            MapConfig::RadialQc {
                a,
                k,
                density,
                density_constant,
                density_csv,
                grid_size,
            } => {
                let density = match (density, density_constant, density_csv) {
                    (Some(d), None, None) => d,
                    (None, Some(c), None) => DensitySpec::constant(c)?,
                    (None, None, Some(path)) => DensitySpec::load_csv(&base.join(path))?,
                    (None, None, None) => DensitySpec::constant(0.0)?,
                    _ => bail!("give at most one of density, density_constant, density_csv"),
                };
                MapSpec::RadialQc {
                    a,
                    k,
                    density,
                    grid_size,
                }
            }
        })
    }
}

fn default_seed() -> u64 {
    1
}
fn default_samples() -> usize {
    1_000_000
}
fn default_t_nodes() -> usize {
    64
}
fn default_radial_nodes() -> usize {
    diskbound::norms::DEFAULT_RADIAL_NODES
}
fn default_angular_nodes() -> usize {
    diskbound::norms::DEFAULT_ANGULAR_NODES
}
fn default_a_step() -> f64 {
    0.01
}
fn default_a_max() -> f64 {
    0.99
}
fn default_out_dir() -> PathBuf {
    PathBuf::from("out")
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub task: Task,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<MapConfig>,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_samples")]
    pub samples: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub resolution: Option<usize>,
    #[serde(default)]
    pub method: MethodChoice,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<Vec<f64>>,
    #[serde(default = "default_t_nodes")]
    pub t_nodes: usize,
    #[serde(default = "default_radial_nodes")]
    pub radial_nodes: usize,
    #[serde(default = "default_angular_nodes")]
    pub angular_nodes: usize,
    #[serde(default = "default_a_step")]
    pub a_step: f64,
    #[serde(default = "default_a_max")]
    pub a_max: f64,
    #[serde(default = "default_out_dir")]
    pub out_dir: PathBuf,
    /// Worker threads; outputs do not depend on it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    /// Directory that relative paths in the file resolve against.
    #[serde(skip)]
    pub base_dir: PathBuf,
}

impl JobConfig {
    pub fn new(task: Task) -> Self {
        Self {
            task,
            map: None,
            seed: default_seed(),
            samples: default_samples(),
            resolution: None,
            method: MethodChoice::default(),
            t: None,
            p: None,
            t_nodes: default_t_nodes(),
            radial_nodes: default_radial_nodes(),
            angular_nodes: default_angular_nodes(),
            a_step: default_a_step(),
            a_max: default_a_max(),
            out_dir: default_out_dir(),
            threads: None,
            base_dir: PathBuf::from("."),
        }
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let mut config =
            Self::from_toml(&text).with_context(|| format!("parsing {}", path.display()))?;
        config.base_dir = path.parent().map(Path::to_owned).unwrap_or_default();
        Ok(config)
    }

    /// Checks every parameter and builds the map; nothing is computed
    /// before this succeeds.
    pub fn validate(&self) -> Result<ValidJob> {
        let map_config = match (&self.map, self.task) {
            (Some(m), _) => Some(m.clone()),
            (None, Task::Figure2_3) => Some(MapConfig::figure_product()),
            (None, Task::RadialVerify) => Some(MapConfig::unit_density_radial()),
            (None, Task::Figure1) => None,
            (None, task) => bail!("task {} needs a [map] section", task.name()),
        };
        let map = match &map_config {
            Some(m) => Some(m.to_spec(&self.base_dir)?.build()?),
            None => None,
        };
        if self.task == Task::RadialVerify && !matches!(map, Some(AnyMap::RadialQc(_))) {
            bail!("radial-verify needs a radial_qc map");
        }

        let resolution = self.resolution.unwrap_or(match self.task {
            Task::Figure2_3 => 1024,
            _ => 2048,
        });
        if resolution < MIN_GRID_RESOLUTION {
            bail!("resolution must be at least {MIN_GRID_RESOLUTION}, got {resolution}");
        }
        if self.samples < MIN_MC_SAMPLES {
            bail!(
                "samples must be at least {MIN_MC_SAMPLES}, got {}",
                self.samples
            );
        }
        let ts = self.t.clone().unwrap_or_else(|| match self.task {
            Task::Figure2_3 => vec![1.0 / 8.0, 1.0 / 18.0],
            Task::Area => vec![0.5],
            _ => (1..=9).map(|i| i as f64 / 10.0).collect(),
        });
        if ts.is_empty() {
            bail!("t list is empty");
        }
        if let Some(t) = ts.iter().find(|t| !(0.0..=1.0).contains(*t)) {
            bail!("t = {t} is outside [0, 1]");
        }
        let ps = self.p.clone().unwrap_or_else(|| vec![1.0, 2.0, 4.0]);
        if let Some(p) = ps.iter().find(|p| !(p.is_finite() && **p >= 1.0)) {
            bail!("p = {p} must be at least 1");
        }
        if self.t_nodes < 16 || self.radial_nodes < 16 || self.angular_nodes < 16 {
            bail!("quadrature node counts must be at least 16");
        }
        if !(self.a_step > 0.0 && self.a_max >= 0.0 && self.a_max < 1.0) {
            bail!("fig1 grid needs a_step > 0 and 0 <= a_max < 1");
        }
        if self.threads == Some(0) {
            bail!("threads must be positive");
        }
        let estimator = match self.method {
            MethodChoice::MonteCarlo => Estimator::MonteCarlo {
                samples: self.samples,
                seed: self.seed,
            },
            MethodChoice::Grid => Estimator::Grid { resolution },
        };
        Ok(ValidJob {
            task: self.task,
            map,
            map_config,
            estimator,
            resolution,
            ts,
            ps,
            t_nodes: self.t_nodes,
            radial_nodes: self.radial_nodes,
            angular_nodes: self.angular_nodes,
            a_grid: a_grid(self.a_step, self.a_max),
            seed: self.seed,
            samples: self.samples,
            out_dir: self.out_dir.clone(),
        })
    }
}

/// `0, step, 2·step, …` up to `max`, with values rounded to 12 digits so
/// that `0.01·k` prints as written.
fn a_grid(step: f64, max: f64) -> Vec<f64> {
    let count = (max / step + 1e-9).floor() as usize;
    (0..=count)
        .map(|k| ((k as f64 * step) * 1e12).round() / 1e12)
        .collect()
}

/// A job whose parameters all passed validation.
#[derive(Debug, Clone)]
pub struct ValidJob {
    pub task: Task,
    pub map: Option<AnyMap>,
    pub map_config: Option<MapConfig>,
    pub estimator: Estimator,
    pub resolution: usize,
    pub ts: Vec<f64>,
    pub ps: Vec<f64>,
    pub t_nodes: usize,
    pub radial_nodes: usize,
    pub angular_nodes: usize,
    pub a_grid: Vec<f64>,
    pub seed: u64,
    pub samples: usize,
    pub out_dir: PathBuf,
}

impl ValidJob {
    pub fn map(&self) -> &AnyMap {
        self.map.as_ref().expect("validated jobs with a map")
    }

    pub fn radial(&self) -> &RadialQcMap {
        match self.map() {
            AnyMap::RadialQc(m) => m,
            _ => unreachable!("checked in validate"),
        }
    }
}
