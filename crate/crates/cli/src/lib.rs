//! Job runner behind the `diskbound` command-line tool.

pub mod config;
pub mod jobs;
pub mod output;

use anyhow::Result;

pub use config::{JobConfig, MapConfig, MethodChoice, Task, ValidJob};
pub use jobs::JobOutcome;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_NON_CONVERGENCE: i32 = 3;

/// Validates and runs a job, honouring `threads` when given.
pub fn execute(config: &JobConfig) -> Result<JobOutcome> {
    let job = config.validate()?;
    match config.threads {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()?
            .install(|| jobs::run(&job)),
        None => jobs::run(&job),
    }
}

pub fn exit_code(err: &anyhow::Error) -> i32 {
    let non_convergence = err.chain().any(|cause| {
        matches!(
            cause.downcast_ref::<diskbound::Error>(),
            Some(diskbound::Error::NonConvergence { .. })
        )
    });
    if non_convergence {
        EXIT_NON_CONVERGENCE
    } else {
        EXIT_INVALID
    }
}

/// Runs a job and maps the result to the process exit code. Diagnostics go
/// to standard error.
pub fn run_job(config: &JobConfig) -> i32 {
    match execute(config) {
        Ok(outcome) if outcome.violations > 0 => {
            eprintln!(
                "{} bound violation(s) detected; see {}",
                outcome.violations,
                config.out_dir.display()
            );
            EXIT_VIOLATION
        }
        Ok(_) => EXIT_OK,
        Err(err) => {
            eprintln!("error: {err:#}");
            exit_code(&err)
        }
    }
}
