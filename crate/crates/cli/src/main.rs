use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};
use ordmiss::sim::presets::PresetTable;
use ordmiss::sim::psoriasis;
use ordmiss_cli::fit::{cmd_fit, FitArgs, Method, OrDirection};
use ordmiss_cli::input::ColumnSpec;
use ordmiss_cli::replicate::{cmd_replicate, render, ReplicateArgs, DEFAULT_SEED};
use ordmiss_cli::simulate::{cmd_simulate, render_summary, write_json, SimulateArgs};
use ordmiss_cli::{cmd_example, default_workers, WORKERS_ENV};

#[derive(Parser)]
#[command(
    name = "ordmiss",
    version,
    about = "Proportional-odds regression with nonignorable missing ordinal responses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a dataset from CSV.
    Fit {
        #[arg(long)]
        input: PathBuf,
        /// Ordinal response column; empty or NA cells are missing.
        #[arg(long)]
        response: String,
        /// Outcome covariates (comma separated). Default: every other column.
        #[arg(long, value_delimiter = ',')]
        covariates: Vec<String>,
        /// Extra covariates for the missingness model only.
        #[arg(long, value_delimiter = ',')]
        aux: Vec<String>,
        #[arg(long)]
        id: Option<String>,
        /// Response levels from lowest to highest (comma separated).
        #[arg(long, value_delimiter = ',')]
        levels: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Method::Em)]
        method: Method,
        #[arg(long, default_value_t = 0.95)]
        ci_level: f64,
        #[arg(long, value_enum, default_value_t = OrDirection::Lower)]
        or_direction: OrDirection,
        /// Write the report as JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one scenario from a JSON config (or a previous manifest).
    Simulate {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, env = WORKERS_ENV, default_value_t = default_workers())]
        workers: usize,
        /// Overrides the config's base seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run a preset family and compare with the published summaries.
    Replicate {
        #[arg(long)]
        table: PresetTable,
        /// Sample sizes (comma separated). Default: all sizes of the family.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1000)]
        reps: usize,
        #[arg(long, env = WORKERS_ENV, default_value_t = default_workers())]
        workers: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the synthetic psoriasis-like example dataset.
    Example {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = psoriasis::DEFAULT_N)]
        n: usize,
        #[arg(long, default_value_t = psoriasis::DEFAULT_SEED)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Fit {
            input,
            response,
            covariates,
            aux,
            id,
            levels,
            method,
            ci_level,
            or_direction,
            out,
        } => {
            let args = FitArgs {
                input,
                columns: ColumnSpec {
                    response,
                    covariates,
                    aux,
                    id,
                    levels,
                },
                method,
                ci_level,
                or_direction,
            };
            let report = cmd_fit(&args)?;
            print!("{}", report.render_text());
            if let Some(path) = out {
                write_json(&path, &report)?;
            }
        }
        Command::Simulate {
            config,
            out,
            workers,
            seed,
        } => {
            let res = cmd_simulate(&SimulateArgs {
                config,
                out: out.clone(),
                workers,
                seed,
            })?;
            print!("{}", render_summary(&res.table));
            println!("wrote {}", out.display());
        }
        Command::Replicate {
            table,
            sizes,
            reps,
            workers,
            seed,
            out,
        } => {
            let results = cmd_replicate(&ReplicateArgs {
                table,
                sizes,
                reps,
                workers,
                seed,
                out,
            })?;
            print!("{}", render(table, &results));
        }
        Command::Example { out, n, seed } => {
            cmd_example(&out, n, seed)?;
            println!("wrote {}", out.display());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
