//! Command implementations behind the `ordmiss` binary.

pub mod fit;
pub mod input;
pub mod replicate;
pub mod simulate;

use std::path::Path;

use anyhow::{Context, Result};
use ordmiss::sim::psoriasis;

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "ORDMISS_WORKERS";

pub fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Writes the synthetic psoriasis-like trial to `out`.
pub fn cmd_example(out: &Path, n: usize, seed: u64) -> Result<()> {
    let subjects = psoriasis::generate(n, seed)?;
    let file =
        std::fs::File::create(out).with_context(|| format!("cannot write {}", out.display()))?;
    psoriasis::write_csv(&subjects, file)?;
    Ok(())
}
