//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::f64::consts::PI;
use std::path::Path;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use diskbound::levelset::{bound_sweep, moebius_superlevel_closed_form, ModulusSample};
use diskbound::maps::DEFAULT_SPEED_STEP;
use diskbound::norms::moebius_l2_closed_form;
use diskbound::{
    boundary_length, lp_lower_bound, lp_norm_quadrature2d, sharp_sublevel_bound,
    sublevel_area_grid, superlevel_area, winding_number, BlaschkeProduct, ComplexPoint,
    DensitySpec, Estimator, MoebiusTransform, PowerRadialMap, RadialQcMap, Verdict,
};
use diskbound_cli::{execute, JobConfig, MapConfig, MethodChoice, Task};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MC_SAMPLES: usize = 1_000_000;
const GRID: usize = 2048;
const SIGMAS: f64 = 3.0;

// Criterion 1
const MOEBIUS_MIN_CELLS: usize = 24;
const MOEBIUS_BUDGET: Duration = Duration::from_secs(120);
// Criterion 2
const SWEEP_PRODUCTS: usize = 50;
const SWEEP_BUDGET: Duration = Duration::from_secs(300);
// Criterion 3
const EQUALITY_REL_TOL: f64 = 4.0 / GRID as f64;
// Criterion 4
const LENGTH_REL_TOL: f64 = 1e-6;
const LENGTH_NODES: usize = 1 << 16;
// Criterion 5
const NORM_PRODUCTS: usize = 30;
const POWER_REL_TOL: f64 = 1e-4;
const MOEBIUS_L2_TOL: f64 = 1e-3;
const H_AT_ZERO: f64 = 1.2533;
// Criterion 6
const RADIAL_SUP_TOL: f64 = 1e-6;
const LAPLACIAN_TOL: f64 = 1e-3;
const LAPLACIAN_STEP: f64 = 1e-4;
// Criterion 7
const FIGURE_BUDGET: Duration = Duration::from_secs(30);

type Check = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
}

fn random_product(rng: &mut ChaCha8Rng, max_degree: u32, max_modulus: f64) -> BlaschkeProduct {
    let d = rng.random_range(1..=max_degree);
    let zeros = (0..d)
        .map(|_| {
            let r = max_modulus * rng.random::<f64>().sqrt();
            ComplexPoint::from_polar(r, rng.random_range(0.0..2.0 * PI)).unwrap()
        })
        .collect();
    BlaschkeProduct::new(rng.random_range(-PI..PI), zeros).unwrap()
}

fn t_grid() -> Vec<f64> {
    (1..=9).map(|i| i as f64 / 10.0).collect()
}

fn moebius_oracle() -> Outcome {
    let start = Instant::now();
    let moduli = [0.0, 0.3, 0.5, 0.7, 0.9];
    let ts = [0.1, 0.3, 0.5, 0.7, 0.9];
    let (mut mc_ok, mut grid_ok, mut worst) = (0, 0, 0.0f64);
    for (i, &a) in moduli.iter().enumerate() {
        let m = MoebiusTransform::new(ComplexPoint::from_polar(a, 0.7).unwrap()).unwrap();
        let sample = ModulusSample::draw(&m, MC_SAMPLES, 100 + i as u64).unwrap();
        for &t in &ts {
            let exact = moebius_superlevel_closed_form(a, t).unwrap();
            let mc = sample.superlevel(t).unwrap();
            let z = (mc.value - exact).abs() / mc.stderr;
            worst = worst.max(z);
            mc_ok += usize::from(z <= SIGMAS);
            let grid = superlevel_area(&m, t, Estimator::Grid { resolution: GRID }).unwrap();
            grid_ok += usize::from(grid.contains(exact, 0.0));
        }
    }
    let elapsed = start.elapsed();
    Outcome {
        pass: mc_ok >= MOEBIUS_MIN_CELLS && grid_ok == 25 && elapsed <= MOEBIUS_BUDGET,
        detail: format!(
            "MC within 3σ in {mc_ok}/25 (worst {worst:.2}σ), grid bracket holds in {grid_ok}/25, {:.1} s",
            elapsed.as_secs_f64()
        ),
    }
}

fn sharp_bound_sweep() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let ts = t_grid();
    let (mut checks, mut violated, mut min_margin_sigma) = (0, 0, f64::INFINITY);
    for i in 0..SWEEP_PRODUCTS {
        let b = random_product(&mut rng, 6, 0.9);
        let estimator = Estimator::MonteCarlo {
            samples: MC_SAMPLES,
            seed: 1000 + i as u64,
        };
        for report in bound_sweep(&b, &ts, estimator).unwrap() {
            checks += 1;
            let m = &report.measured_sublevel;
            let within = m.value <= report.sharp_bound + SIGMAS * m.stderr;
            if report.verdict == Verdict::Violated || !within {
                violated += 1;
            }
            if m.stderr > 0.0 {
                min_margin_sigma = min_margin_sigma.min(report.margin / m.stderr);
            }
        }
    }
    let elapsed = start.elapsed();
    Outcome {
        pass: checks == SWEEP_PRODUCTS * 9 && violated == 0 && elapsed <= SWEEP_BUDGET,
        detail: format!(
            "{violated} violated of {checks} checks, smallest margin {min_margin_sigma:.1}σ, {:.1} s",
            elapsed.as_secs_f64()
        ),
    }
}

fn equality_case() -> Outcome {
    let mut worst = 0.0f64;
    for d in 1..=5 {
        let mono = BlaschkeProduct::monomial(d).unwrap();
        for t in t_grid() {
            let bound = sharp_sublevel_bound(t, d, 1.0);
            let grid = sublevel_area_grid(&mono, t, GRID).unwrap();
            worst = worst.max((grid.value - bound).abs() / bound);
        }
    }
    let mut min_gap_sigma = f64::INFINITY;
    for d in 1..=5u32 {
        let mut zeros = vec![ComplexPoint::ZERO; d as usize];
        zeros[0] = ComplexPoint::new(0.3, 0.0).unwrap();
        let b = BlaschkeProduct::new(0.0, zeros).unwrap();
        let sample = ModulusSample::draw(&b, MC_SAMPLES, 77).unwrap();
        let m = sample.sublevel(0.5).unwrap();
        let gap = (sharp_sublevel_bound(0.5, d, 1.0) - m.value) / m.stderr;
        min_gap_sigma = min_gap_sigma.min(gap);
    }
    Outcome {
        pass: worst <= EQUALITY_REL_TOL && min_gap_sigma > SIGMAS,
        detail: format!(
            "z^d worst relative error {worst:.2e} (tol {EQUALITY_REL_TOL:.2e}), perturbed gap ≥ {min_gap_sigma:.1}σ"
        ),
    }
}

fn boundary_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut worst, mut winding_ok) = (0.0f64, 0);
    for _ in 0..20 {
        let b = random_product(&mut rng, 8, 0.9);
        let expected = 2.0 * PI * b.degree() as f64;
        let length = boundary_length(&b, LENGTH_NODES, DEFAULT_SPEED_STEP);
        worst = worst.max((length - expected).abs() / expected);
        winding_ok += usize::from(winding_number(&b, 64).unwrap() == b.degree() as i64);
    }
    Outcome {
        pass: worst <= LENGTH_REL_TOL && winding_ok == 20,
        detail: format!("worst length error {worst:.2e}, winding exact in {winding_ok}/20"),
    }
}

fn lp_bounds() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut below = 0;
    for _ in 0..NORM_PRODUCTS {
        let b = random_product(&mut rng, 6, 0.9);
        for p in [1.0, 2.0] {
            let norm = lp_norm_quadrature2d(&b, p, 256, 512).unwrap();
            let bound = lp_lower_bound(1.0, b.degree(), p);
            below += usize::from(norm.value < bound - SIGMAS * norm.error_estimate);
        }
    }
    let mut power_worst = 0.0f64;
    for d in 1..=4 {
        for k in [1.0, 2.0, 3.5, 100.0] {
            let map = PowerRadialMap::new(d, k).unwrap();
            for p in [1.0, 2.0, 4.0] {
                let norm = lp_norm_quadrature2d(&map, p, 512, 512).unwrap();
                let bound = lp_lower_bound(k, d, p);
                power_worst = power_worst.max((norm.value - bound).abs() / bound);
            }
        }
    }
    let mut moebius_worst = 0.0f64;
    for a in [0.0, 0.25, 0.5, 0.75] {
        let m = MoebiusTransform::new(ComplexPoint::new(a, 0.0).unwrap()).unwrap();
        let norm = lp_norm_quadrature2d(&m, 2.0, 256, 512).unwrap();
        moebius_worst = moebius_worst.max((norm.value - moebius_l2_closed_form(a).unwrap()).abs());
    }
    let h0 = moebius_l2_closed_form(0.0).unwrap();
    let h0_ok = (h0 - (PI / 2.0).sqrt()).abs() < 1e-12 && (h0 - H_AT_ZERO).abs() < 5e-5;
    Outcome {
        pass: below == 0 && power_worst <= POWER_REL_TOL && moebius_worst <= MOEBIUS_L2_TOL && h0_ok,
        detail: format!(
            "{below} of {} norms below bound, power-radial worst {power_worst:.1e}, Möbius L² worst {moebius_worst:.1e}, h(0) = {h0:.6}",
            2 * NORM_PRODUCTS
        ),
    }
}

fn radial_family() -> Outcome {
    let map = RadialQcMap::build(
        1.0,
        Some(1.0),
        DensitySpec::constant(1.0).unwrap(),
        RadialQcMap::DEFAULT_GRID_SIZE,
    )
    .unwrap();
    let sup = (0..=10_000)
        .map(|i| {
            let r = i as f64 / 10_000.0;
            let exact = r.powf(0.75) * ((r - 1.0) / 4.0).exp();
            (map.g(r) - exact).abs()
        })
        .fold(0.0, f64::max);
    let probes: Vec<f64> = (1..=9).map(|i| i as f64 / 10.0).collect();
    let laplacian = map.verify_laplacian(&probes, LAPLACIAN_STEP).unwrap();
    let mut area_ok = 0;
    let ts: Vec<f64> = (1..=99).map(|i| i as f64 / 100.0).collect();
    for &t in &ts {
        let r = map.g_inverse(t).unwrap();
        area_ok += usize::from(PI * r * r <= sharp_sublevel_bound(t, 1, map.k()));
    }
    Outcome {
        pass: sup <= RADIAL_SUP_TOL && laplacian <= LAPLACIAN_TOL && area_ok == ts.len(),
        detail: format!(
            "g sup error {sup:.1e} (tol {RADIAL_SUP_TOL:.0e}), Laplacian residual vs h {laplacian:.3} (tol {LAPLACIAN_TOL:.0e}), area bound holds at {area_ok}/{} levels",
            ts.len()
        ),
    }
}

fn figure_reproduction() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut job = JobConfig::new(Task::Figure2_3);
    job.out_dir = dir.path().to_owned();
    let start = Instant::now();
    let result = execute(&job);
    let elapsed = start.elapsed();
    if let Err(err) = result {
        return Outcome {
            pass: false,
            detail: format!("job failed: {err:#}"),
        };
    }
    let text = std::fs::read_to_string(dir.path().join("fig23.json")).unwrap();
    let levels: serde_json::Value = serde_json::from_str(&text).unwrap();
    let levels = levels.as_array().unwrap();
    let components: Vec<u64> = levels
        .iter()
        .map(|l| l["components"].as_u64().unwrap())
        .collect();
    let below = levels.iter().all(|l| l["below_bound"].as_bool().unwrap());
    let bound_matches = levels.iter().all(|l| {
        let t = l["t"].as_f64().unwrap();
        (l["bound"].as_f64().unwrap() - PI * t.sqrt()).abs() < 1e-12
    });
    Outcome {
        pass: components == [1, 4] && below && bound_matches && elapsed <= FIGURE_BUDGET,
        detail: format!(
            "components {components:?} at t = 1/8, 1/18; below π√t: {below}; {:.1} s",
            elapsed.as_secs_f64()
        ),
    }
}

fn job_outputs(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("csv" | "json")))
        .map(|p| {
            (
                p.file_name().unwrap().to_string_lossy().into_owned(),
                std::fs::read(&p).unwrap(),
            )
        })
        .collect();
    files.sort();
    files
}

fn determinism() -> Outcome {
    let four_zeros = MapConfig::figure_product();
    let mut jobs = Vec::new();
    for task in [
        Task::Area,
        Task::BoundSweep,
        Task::Norm,
        Task::Winding,
        Task::RadialVerify,
    ] {
        let mut job = JobConfig::new(task);
        job.samples = 200_000;
        job.resolution = Some(256);
        if task != Task::RadialVerify {
            job.map = Some(four_zeros.clone());
        }
        jobs.push(job);
    }
    let mut grid_job = JobConfig::new(Task::BoundSweep);
    grid_job.map = Some(MapConfig::Moebius {
        a: ComplexPoint::new(0.4, -0.2).unwrap(),
    });
    grid_job.method = MethodChoice::Grid;
    grid_job.resolution = Some(512);
    jobs.push(grid_job);

    let root = tempfile::tempdir().unwrap();
    let (mut identical, mut files) = (0, 0);
    for (i, job) in jobs.iter().enumerate() {
        let runs: Vec<_> = [Some(1), Some(4), Some(4), None]
            .iter()
            .enumerate()
            .map(|(k, &threads)| {
                let mut job = job.clone();
                job.threads = threads;
                job.out_dir = root.path().join(format!("job{i}_run{k}"));
                execute(&job).unwrap();
                job_outputs(&job.out_dir)
            })
            .collect();
        files += runs[0].len();
        identical += usize::from(runs.iter().all(|r| *r == runs[0]) && !runs[0].is_empty());
    }
    Outcome {
        pass: identical == jobs.len(),
        detail: format!(
            "{identical}/{} jobs byte-identical across 1, 4 and default worker counts ({files} CSV/JSON files per run)",
            jobs.len()
        ),
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 8] = [
        ("Möbius oracle equivalence", moebius_oracle),
        ("sharp sublevel bound", sharp_bound_sweep),
        ("equality case", equality_case),
        ("boundary length and winding", boundary_identity),
        ("L^p lower bounds", lp_bounds),
        ("radial family", radial_family),
        ("figure reproduction", figure_reproduction),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = check();
        let tag = if outcome.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!outcome.pass);
        println!("[{tag}] criterion {}: {name}: {}", i + 1, outcome.detail);
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
