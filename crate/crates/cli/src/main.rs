use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use diskbound::ComplexPoint;
use diskbound_cli::{run_job, JobConfig, MapConfig, MethodChoice, Task, EXIT_INVALID};

/// Sublevel-area, winding and L^p-norm experiments for disk self-maps.
#[derive(Parser, Debug)]
#[command(name = "diskbound", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Sublevel and superlevel areas of |f|.
    Area,
    /// Compare sublevel areas with the sharp bound π t^{2/(Kd)}.
    BoundSweep,
    /// L^p norms by the distributional formula and by 2-D quadrature.
    Norm,
    /// Winding number and boundary length.
    Winding,
    /// L² norm of Möbius maps against |a|.
    Fig1,
    /// Sublevel sets of the four-zero product at t = 1/8 and 1/18.
    Fig23,
    /// Checks on a radial quasiconformal map.
    RadialVerify,
}

impl Command {
    fn task(self) -> Task {
        match self {
            Command::Area => Task::Area,
            Command::BoundSweep => Task::BoundSweep,
            Command::Norm => Task::Norm,
            Command::Winding => Task::Winding,
            Command::Fig1 => Task::Figure1,
            Command::Fig23 => Task::Figure2_3,
            Command::RadialVerify => Task::RadialVerify,
        }
    }
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Method {
    Mc,
    Grid,
}

#[derive(Args, Debug)]
struct Common {
    /// TOML job file; flags given on the command line override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[arg(long, global = true)]
    resolution: Option<usize>,
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    method: Option<Method>,
    /// Comma-separated levels, e.g. `0.1,0.5,0.9`.
    #[arg(long, global = true, value_delimiter = ',')]
    t: Option<Vec<f64>>,
    /// Comma-separated exponents, e.g. `1,2,4`.
    #[arg(long, global = true, value_delimiter = ',')]
    p: Option<Vec<f64>>,
    /// Blaschke zeros as `re:im` pairs separated by commas, e.g. `0.5:0,-0.5:0`.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    zeros: Option<Vec<String>>,
    /// Unimodular phase of the Blaschke product.
    #[arg(long, global = true, allow_hyphen_values = true)]
    phase: Option<f64>,
    /// Use z^d.
    #[arg(long, global = true)]
    monomial: Option<u32>,
    /// Use the Möbius map with parameter `re:im`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    moebius: Option<String>,
    #[arg(long, global = true)]
    threads: Option<usize>,
}

fn parse_point(text: &str) -> Result<ComplexPoint> {
    let (re, im) = text.split_once(':').unwrap_or((text, "0"));
    let re: f64 = re
        .trim()
        .parse()
        .with_context(|| format!("bad point {text:?}"))?;
    let im: f64 = im
        .trim()
        .parse()
        .with_context(|| format!("bad point {text:?}"))?;
    Ok(ComplexPoint::new(re, im)?)
}

fn build_config(cli: &Cli) -> Result<JobConfig> {
    let c = &cli.common;
    let mut config = match &c.config {
        Some(path) => JobConfig::load(path)?,
        None => JobConfig::new(cli.command.task()),
    };
    if c.config.is_some() && config.task != cli.command.task() {
        bail!(
            "job file declares task {} but the subcommand is {}",
            config.task.name(),
            cli.command.task().name()
        );
    }
    let map_flags = [c.zeros.is_some(), c.monomial.is_some(), c.moebius.is_some()]
        .iter()
        .filter(|&&b| b)
        .count();
    if map_flags > 1 {
        bail!("give at most one of --zeros, --monomial, --moebius");
    }
    if let Some(zeros) = &c.zeros {
        let zeros = zeros
            .iter()
            .map(|z| parse_point(z))
            .collect::<Result<_>>()?;
        config.map = Some(MapConfig::Blaschke {
            phase: c.phase.unwrap_or(0.0),
            zeros,
        });
    } else if let Some(phase) = c.phase {
        match &mut config.map {
            Some(MapConfig::Blaschke { phase: p, .. }) => *p = phase,
            _ => bail!("--phase applies to a Blaschke product"),
        }
    }
    if let Some(d) = c.monomial {
        config.map = Some(MapConfig::Monomial { d });
    }
    if let Some(a) = &c.moebius {
        config.map = Some(MapConfig::Moebius { a: parse_point(a)? });
    }
    if let Some(seed) = c.seed {
        config.seed = seed;
    }
    if let Some(samples) = c.samples {
        config.samples = samples;
    }
    if let Some(resolution) = c.resolution {
        config.resolution = Some(resolution);
    }
    if let Some(dir) = &c.out_dir {
        config.out_dir = dir.clone();
    }
    if let Some(method) = c.method {
        config.method = match method {
            Method::Mc => MethodChoice::MonteCarlo,
            Method::Grid => MethodChoice::Grid,
        };
    }
    if let Some(t) = &c.t {
        config.t = Some(t.clone());
    }
    if let Some(p) = &c.p {
        config.p = Some(p.clone());
    }
    if let Some(threads) = c.threads {
        config.threads = Some(threads);
    }
    Ok(config)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            // Usage errors share the validation exit code; 2 means a violated bound.
            return ExitCode::from(if err.use_stderr() {
                EXIT_INVALID as u8
            } else {
                0
            });
        }
    };
    let code = match build_config(&cli) {
        Ok(config) => run_job(&config),
        Err(err) => {
            eprintln!("error: {err:#}");
            EXIT_INVALID
        }
    };
    ExitCode::from(code as u8)
}
