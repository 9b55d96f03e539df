//! Library side of the `salemforge` command-line tool.

pub mod census;
pub mod commands;
pub mod error;

pub use error::{CliError, CliResult};

/// Environment variable capping the worker pool.
pub const WORKERS_ENV: &str = "SALEMFORGE_WORKERS";

/// Installs the global worker pool, honouring `SALEMFORGE_WORKERS`.
pub fn init_workers() -> CliResult<()> {
    let Ok(value) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("{WORKERS_ENV} must be a positive integer, got `{value}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("worker pool: {e}")))
}
