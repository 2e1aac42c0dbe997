use std::f64::consts::PI;

use anyhow::Result;
use diskbound::levelset::{bound_sweep, map_degree, ModulusSample};
use diskbound::maps::DEFAULT_SPEED_STEP;
use diskbound::norms::moebius_l2_closed_form;
use diskbound::sampling::RNG_ALGORITHM;
use diskbound::{
    boundary_length, count_components, lp_lower_bound, lp_norm_distributional,
    lp_norm_quadrature2d, rasterize_sublevel, sharp_sublevel_bound, sublevel_area_grid,
    winding_number, AnyMap, AreaEstimate, BlaschkeProduct, BoundReport, ComplexPoint, DiskMap,
    Estimator, MoebiusTransform, NormMethod, NormResult, Verdict,
};
use serde::Serialize;

use crate::config::{MapConfig, Task, ValidJob};
use crate::output::{overlay, OutputDir, Plot};

/// What a finished job reports back to the caller.
#[derive(Debug, Clone, Default)]
pub struct JobOutcome {
    pub files: Vec<String>,
    pub violations: usize,
    pub summary: Vec<String>,
}

#[derive(Serialize)]
struct JobMetadata<'a> {
    task: &'static str,
    map: Option<&'a MapConfig>,
    estimator: Estimator,
    rng: &'static str,
    t: &'a [f64],
    outputs: &'a [String],
}

pub fn run(job: &ValidJob) -> Result<JobOutcome> {
    let mut out = OutputDir::create(&job.out_dir)?;
    let mut outcome = match job.task {
        Task::Area => area(job, &mut out)?,
        Task::BoundSweep => bounds(job, &mut out)?,
        Task::Norm => norms(job, &mut out)?,
        Task::Winding => winding(job, &mut out)?,
        Task::Figure1 => figure1(job, &mut out)?,
        Task::Figure2_3 => figure2_3(job, &mut out)?,
        Task::RadialVerify => radial_verify(job, &mut out)?,
    };
    let outputs = out.written().to_vec();
    out.json(
        "job.json",
        &JobMetadata {
            task: job.task.name(),
            map: job.map_config.as_ref(),
            estimator: job.estimator,
            rng: RNG_ALGORITHM,
            t: &job.ts,
            outputs: &outputs,
        },
    )?;
    outcome.files = out.written().to_vec();
    Ok(outcome)
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

#[derive(Serialize)]
struct AreaRow {
    t: f64,
    sublevel: AreaEstimate,
    superlevel: AreaEstimate,
}

fn area(job: &ValidJob, out: &mut OutputDir) -> Result<JobOutcome> {
    let map = job.map();
    let subs: Vec<AreaEstimate> = match job.estimator {
        Estimator::MonteCarlo { samples, seed } => {
            let sample = ModulusSample::draw(map, samples, seed)?;
            job.ts
                .iter()
                .map(|&t| sample.sublevel(t))
                .collect::<Result<_, _>>()?
        }
        Estimator::Grid { resolution } => job
            .ts
            .iter()
            .map(|&t| sublevel_area_grid(map, t, resolution))
            .collect::<Result<_, _>>()?,
    };
    let rows: Vec<AreaRow> = job
        .ts
        .iter()
        .zip(subs)
        .map(|(&t, sub)| AreaRow {
            t,
            sublevel: sub,
            superlevel: sub.complement(),
        })
        .collect();
    let csv: Vec<String> = rows
        .iter()
        .map(|r| {
            let method = serde_json::to_value(r.sublevel.method)?;
            Ok(format!(
                "{},{},{},{},{},{},{}",
                r.t,
                method.as_str().unwrap_or_default(),
                r.sublevel.value,
                r.superlevel.value,
                r.sublevel.stderr,
                opt(r.sublevel.bracket.map(|b| b.0)),
                opt(r.sublevel.bracket.map(|b| b.1)),
            ))
        })
        .collect::<Result<_>>()?;
    out.json("area.json", &rows)?;
    out.csv(
        "area.csv",
        "t,method,sublevel,superlevel,stderr,lower,upper",
        &csv,
    )?;
    let summary = rows
        .iter()
        .map(|r| {
            format!(
                "t = {}: sublevel {:.6} ± {:.2e}",
                r.t, r.sublevel.value, r.sublevel.stderr
            )
        })
        .collect();
    Ok(JobOutcome {
        summary,
        ..Default::default()
    })
}

fn bounds(job: &ValidJob, out: &mut OutputDir) -> Result<JobOutcome> {
    let reports = bound_sweep(job.map(), &job.ts, job.estimator)?;
    let rows: Vec<String> = reports.iter().map(BoundReport::csv_row).collect();
    out.csv("bounds.csv", BoundReport::CSV_HEADER, &rows)?;
    out.json("bounds.json", &reports)?;
    let violations = reports
        .iter()
        .filter(|r| r.verdict == Verdict::Violated)
        .count();
    let summary = reports
        .iter()
        .map(|r| {
            format!(
                "t = {}: measured {:.6}, bound {:.6}, {}",
                r.t,
                r.measured_sublevel.value,
                r.sharp_bound,
                r.verdict.as_str()
            )
        })
        .collect();
    Ok(JobOutcome {
        violations,
        summary,
        ..Default::default()
    })
}

fn norms(job: &ValidJob, out: &mut OutputDir) -> Result<JobOutcome> {
    let map = job.map();
    let d = map_degree(map)?;
    let k = map.boundary_k();
    let mut results: Vec<NormResult> = Vec::new();
    for &p in &job.ps {
        results.push(lp_norm_distributional(map, p, job.t_nodes, job.estimator)?);
        results.push(lp_norm_quadrature2d(
            map,
            p,
            job.radial_nodes,
            job.angular_nodes,
        )?);
        if let (AnyMap::Moebius(m), true) = (map, p == 2.0) {
            results.push(diskbound::norms::moebius_l2_norm(m.a().norm())?);
        }
    }
    let rows: Vec<String> = results
        .iter()
        .map(|r| {
            let method = match r.method {
                NormMethod::Distributional => "distributional",
                NormMethod::Quadrature2d => "quadrature2d",
                NormMethod::ClosedForm => "closed_form",
            };
            format!(
                "{},{},{},{},{}",
                r.p,
                method,
                r.value,
                r.error_estimate,
                lp_lower_bound(k, d, r.p)
            )
        })
        .collect();
    out.json("norms.json", &results)?;
    out.csv(
        "norms.csv",
        "p,method,value,error_estimate,lower_bound",
        &rows,
    )?;
    Ok(JobOutcome {
        summary: rows,
        ..Default::default()
    })
}

#[derive(Serialize)]
struct WindingReport {
    winding_number: i64,
    degree_hint: Option<u32>,
    boundary_nodes: usize,
    boundary_length: f64,
    expected_length: f64,
    relative_error: f64,
}

fn winding(job: &ValidJob, out: &mut OutputDir) -> Result<JobOutcome> {
    let map = job.map();
    let d = winding_number(map, 64)?;
    let nodes = 1 << 16;
    let length = boundary_length(map, nodes, DEFAULT_SPEED_STEP);
    let expected = 2.0 * PI * d as f64;
    let report = WindingReport {
        winding_number: d,
        degree_hint: map.degree_hint(),
        boundary_nodes: nodes,
        boundary_length: length,
        expected_length: expected,
        relative_error: (length - expected).abs() / expected,
    };
    out.json("winding.json", &report)?;
    Ok(JobOutcome {
        summary: vec![format!(
            "winding number {d}; boundary length {length:.12} (2πd = {expected:.12})"
        )],
        ..Default::default()
    })
}

fn figure1(job: &ValidJob, out: &mut OutputDir) -> Result<JobOutcome> {
    let mut rows = Vec::with_capacity(job.a_grid.len());
    let mut curve = Vec::with_capacity(job.a_grid.len());
    let mut best = (f64::INFINITY, 0.0);
    for &a in &job.a_grid {
        let closed = moebius_l2_closed_form(a)?;
        let m = MoebiusTransform::new(ComplexPoint::new(a, 0.0)?)?;
        let quad = lp_norm_quadrature2d(&m, 2.0, job.radial_nodes, job.angular_nodes)?;
        rows.push(format!("{a},{closed},{}", quad.value));
        curve.push((a, closed));
        if closed < best.0 {
            best = (closed, a);
        }
    }
    out.csv("fig1.csv", "a_modulus,h_closed_form,h_quadrature", &rows)?;
    let plot = Plot {
        width: 640,
        height: 400,
        x_range: (0.0, 1.0),
        y_range: (1.2, 1.8),
    };
    out.png("fig1.png", plot.width, plot.height, &plot.render(&curve))?;
    Ok(JobOutcome {
        summary: vec![format!("minimum h = {:.6} at |a| = {}", best.0, best.1)],
        ..Default::default()
    })
}

#[derive(Serialize)]
struct FigureLevel {
    t: f64,
    components: usize,
    reference_components: usize,
    sublevel: AreaEstimate,
    reference_sublevel: AreaEstimate,
    bound: f64,
    below_bound: bool,
    image: String,
    overlay: String,
}

fn figure2_3(job: &ValidJob, out: &mut OutputDir) -> Result<JobOutcome> {
    let map = job.map();
    let d = map_degree(map)?;
    let k = map.boundary_k();
    let reference = BlaschkeProduct::monomial(d)?;
    let n = job.resolution;
    let mut levels = Vec::new();
    for (i, &t) in job.ts.iter().enumerate() {
        let grid = rasterize_sublevel(map, t, n)?;
        let reference_grid = rasterize_sublevel(&reference, t, n)?;
        let sublevel = sublevel_area_grid(map, t, n)?;
        let bound = sharp_sublevel_bound(t, d, k);
        let image = format!("fig23_t{i}");
        out.pgm(&format!("{image}.pgm"), n, &grid.to_gray())?;
        out.png(&format!("{image}.png"), n, n, &grid.to_gray())?;
        let overlay_name = format!("fig23_overlay_t{i}.png");
        out.png(&overlay_name, n, n, &overlay(&grid, &reference_grid))?;
        levels.push(FigureLevel {
            t,
            components: count_components(&grid),
            reference_components: count_components(&reference_grid),
            reference_sublevel: sublevel_area_grid(&reference, t, n)?,
            below_bound: sublevel.bracket.map_or(sublevel.value, |b| b.1) < bound,
            sublevel,
            bound,
            image: format!("{image}.pgm"),
            overlay: overlay_name,
        });
    }
    out.json("fig23.json", &levels)?;
    let summary = levels
        .iter()
        .map(|l| {
            format!(
                "t = {:.6}: {} component(s), area {:.6} vs bound {:.6}",
                l.t, l.components, l.sublevel.value, l.bound
            )
        })
        .collect();
    Ok(JobOutcome {
        summary,
        ..Default::default()
    })
}

#[derive(Serialize)]
struct RadialLevel {
    t: f64,
    exact_sublevel: f64,
    bound: f64,
    holds: bool,
    grid: AreaEstimate,
    grid_consistent: bool,
}

#[derive(Serialize)]
struct RadialReport {
    a: f64,
    #[serde(rename = "K")]
    k: f64,
    g_at_one: f64,
    max_log_slope: f64,
    winding_number: i64,
    laplacian_step: f64,
    laplacian_probes: Vec<f64>,
    /// `max |(ln g)'' + (ln g)'/r - h(r)|` over the probes.
    laplacian_residual: f64,
    /// `max |(ln g)'' + (ln g)'/r - h(r)/(4r)|` over the probes.
    laplacian_residual_h_over_4r: f64,
    /// Sup distance to `r^{a - c/4} e^{c(r-1)/4}` when `h ≡ c`.
    constant_density_sup_error: Option<f64>,
    levels: Vec<RadialLevel>,
}

fn radial_verify(job: &ValidJob, out: &mut OutputDir) -> Result<JobOutcome> {
    let map = job.radial();
    let step = 1e-4;
    let probes: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).collect();
    let residual = map.verify_laplacian(&probes, step)?;
    let residual_4r = probes
        .iter()
        .map(|&r| (map.laplacian_log_modulus(r, step) - map.density().value(r) / (4.0 * r)).abs())
        .fold(0.0, f64::max);
    let samples = map.density().samples();
    let constant = samples
        .iter()
        .all(|&(_, h)| h == samples[0].1)
        .then_some(samples[0].1);
    let constant_density_sup_error = constant.map(|c| {
        (1..=10_000)
            .map(|i| {
                let r = i as f64 / 10_000.0;
                let exact = r.powf(map.a() - c / 4.0) * (c * (r - 1.0) / 4.0).exp();
                (map.g(r) - exact).abs()
            })
            .fold(0.0, f64::max)
    });
    let mut levels = Vec::new();
    for &t in &job.ts {
        let r = map.g_inverse(t)?;
        let exact = PI * r * r;
        let bound = sharp_sublevel_bound(t, 1, map.k());
        let grid = sublevel_area_grid(map, t, job.resolution)?;
        levels.push(RadialLevel {
            t,
            exact_sublevel: exact,
            bound,
            holds: exact <= bound,
            grid_consistent: grid.contains(exact, 0.0),
            grid,
        });
    }
    let report = RadialReport {
        a: map.a(),
        k: map.k(),
        g_at_one: map.g(1.0),
        max_log_slope: map.max_table_log_slope(),
        winding_number: winding_number(map, 64)?,
        laplacian_step: step,
        laplacian_probes: probes,
        laplacian_residual: residual,
        laplacian_residual_h_over_4r: residual_4r,
        constant_density_sup_error,
        levels,
    };
    out.json("radial.json", &report)?;
    let mut table = Vec::new();
    map.write_table_csv(&mut table)?;
    let text = String::from_utf8(table)?;
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("r,g").to_owned();
    let rows: Vec<String> = lines.map(str::to_owned).collect();
    out.csv("g_table.csv", &header, &rows)?;
    Ok(JobOutcome {
        violations: report.levels.iter().filter(|l| !l.holds).count(),
        summary: vec![
            format!("g(1) = {}", report.g_at_one),
            format!("max r g'/g = {} (a = {})", report.max_log_slope, report.a),
            format!("Laplacian residual vs h: {:.3e}", report.laplacian_residual),
            format!(
                "Laplacian residual vs h/(4r): {:.3e}",
                report.laplacian_residual_h_over_4r
            ),
        ],
        ..Default::default()
    })
}
