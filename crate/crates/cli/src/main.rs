//! `dormancy` — pipeline CLI for sleeping-beauty citation analytics.
//!
//! Subcommands mirror the pipeline stages: `simulate` emits a synthetic
//! corpus, `ingest` freezes TSV inputs into a binary index, `detect`
//! selects sleeping beauties and extracts their princes and storytellers,
//! `analyze` produces the distribution and propagation artifacts, and
//! `case-study` exports one SB's citation history.
//!
//! Exit codes: 0 on success (including empty results with warnings where
//! documented), 1 when an analysis had no qualifying data at all, 2 on
//! fatal errors.

mod commands;
mod config;
mod provenance;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use config::PipelineConfig;

#[derive(Parser, Debug)]
#[command(name = "dormancy", version, about = "Sleeping-beauty citation analytics pipeline")]
struct Cli {
    /// Config file with `key = value` lines.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Override any config key (repeatable), e.g. `--set seed=7`.
    #[arg(long = "set", value_name = "KEY=VALUE", global = true)]
    set: Vec<String>,

    /// Worker threads (0 = one per core).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Directory artifacts are written to.
    #[arg(long, global = true)]
    output_dir: Option<PathBuf>,

    /// Generator seed.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Print the effective configuration and exit.
    #[arg(long, global = true)]
    show_config: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse papers.tsv and citations.tsv into a binary corpus index.
    Ingest {
        /// Paper metadata TSV.
        #[arg(long)]
        papers: Option<PathBuf>,
        /// Citation edge TSV.
        #[arg(long)]
        citations: Option<PathBuf>,
        /// Index file to write.
        #[arg(long)]
        index: Option<PathBuf>,
    },
    /// Select sleeping beauties and extract their triads.
    Detect {
        /// Index file to read.
        #[arg(long)]
        index: Option<PathBuf>,
    },
    /// Compute ratio distributions, densities, the ST-count pmf and the
    /// propagation table from detect outputs.
    Analyze {
        #[arg(long)]
        index: Option<PathBuf>,
        /// triads.jsonl produced by detect.
        #[arg(long)]
        triads: Option<PathBuf>,
    },
    /// Export one SB's yearly citation history alongside its prince and
    /// storytellers.
    CaseStudy {
        /// Sleeping-beauty paper id (must appear in the triads file).
        sb_id: String,
        #[arg(long)]
        index: Option<PathBuf>,
        #[arg(long)]
        triads: Option<PathBuf>,
    },
    /// Generate a synthetic corpus with planted triads.
    Simulate,
}

fn effective_config(cli: &Cli) -> Result<PipelineConfig> {
    let mut cfg = PipelineConfig::default();
    if let Some(path) = &cli.config {
        cfg.load_file(path)?;
    }
    for assignment in &cli.set {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| anyhow::anyhow!("--set expects KEY=VALUE, got `{assignment}`"))?;
        cfg.set(key.trim(), value.trim())?;
    }
    if let Some(w) = cli.workers {
        cfg.workers = w;
    }
    if let Some(dir) = &cli.output_dir {
        cfg.output_dir = dir.clone();
    }
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = effective_config(&cli)?;

    if cli.show_config {
        print!("{}", cfg.show());
        return Ok(ExitCode::SUCCESS);
    }

    if cfg.workers > 0 {
        // A second initialization in the same process is harmless; rayon
        // keeps the first pool.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build_global();
    }

    let command = match cli.command {
        Some(c) => c,
        None => {
            anyhow::bail!("no subcommand given (try `dormancy --help`)");
        }
    };

    std::fs::create_dir_all(&cfg.output_dir)?;

    match command {
        Command::Ingest {
            papers,
            citations,
            index,
        } => commands::ingest::run(&cfg, papers, citations, index),
        Command::Detect { index } => commands::detect::run(&cfg, index),
        Command::Analyze { index, triads } => commands::analyze::run(&cfg, index, triads),
        Command::CaseStudy { sb_id, index, triads } => {
            commands::case_study::run(&cfg, &sb_id, index, triads)
        }
        Command::Simulate => commands::simulate::run(&cfg),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
