//! `dormancy analyze` — ratio distributions, densities, ST-count pmf and
//! the propagation table.

use std::io::BufRead;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use serde::Serialize;

use crate::config::PipelineConfig;
use crate::provenance::{write_manifest, Provenance};
use dormancy::{
    propagation_table, st_count_pmf, storyteller_ratios, Error, KdeModel, PropagationTable,
    RatioSample, TriadRecord,
};

pub fn read_triads(path: &Path) -> Result<Vec<TriadRecord>> {
    let file = std::fs::File::open(path)
        .with_context(|| format!("cannot open triads file {}", path.display()))?;
    let mut triads = Vec::new();
    for (lineno, line) in std::io::BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        triads.push(
            serde_json::from_str(&line)
                .with_context(|| format!("{}:{}: bad triad record", path.display(), lineno + 1))?,
        );
    }
    Ok(triads)
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn kde_grid_csv(
    path: &Path,
    comments: &[String],
    samples: &[f64],
    bandwidth: Option<f64>,
    n_points: usize,
) -> Result<()> {
    let rows: Vec<String> = if samples.is_empty() {
        Vec::new()
    } else {
        let kde = KdeModel::reflected(samples, bandwidth, 0.0, 1.0)?;
        kde.grid_export(n_points)
            .into_iter()
            .map(|(x, d)| format!("{x},{d}"))
            .collect()
    };
    super::write_csv(path, comments, "x,density", rows.into_iter())
}

#[derive(Serialize)]
struct PropagationArtifact<'a> {
    provenance: &'a Provenance,
    table: &'a PropagationTable,
}

fn mean_of(samples: &[RatioSample], pick: impl Fn(&RatioSample) -> Option<f64>) -> (usize, Option<f64>) {
    let values: Vec<f64> = samples.iter().filter_map(pick).collect();
    if values.is_empty() {
        (0, None)
    } else {
        (values.len(), Some(values.iter().sum::<f64>() / values.len() as f64))
    }
}

fn fmt_mean(m: Option<f64>) -> String {
    m.map(|v| format!("{v:.4}")).unwrap_or_else(|| "n/a".to_string())
}

pub fn run(
    cfg: &PipelineConfig,
    index: Option<PathBuf>,
    triads: Option<PathBuf>,
) -> Result<ExitCode> {
    let index_path = index.unwrap_or_else(|| cfg.index.clone());
    let triads_path = triads.unwrap_or_else(|| cfg.resolve_out("triads.jsonl"));
    let index = super::load_index(&index_path)?;
    let triads = read_triads(&triads_path)?;

    let prov = Provenance::new("analyze", &cfg.hash())
        .input(&index_path)?
        .input(&triads_path)?;
    let comments = prov.comment_lines();

    // Ratio samples and their densities.
    let filter = super::ratio_filter(cfg);
    let samples = storyteller_ratios(&triads, &filter);

    let ratios_path = cfg.resolve_out("ratios.csv");
    super::write_csv(
        &ratios_path,
        &comments,
        "sb_id,st_over_csb,st_over_cpr,n_st",
        samples.iter().map(|s| {
            format!(
                "{},{},{},{}",
                super::csv_field(&s.sb_id),
                opt(s.st_over_csb),
                opt(s.st_over_cpr),
                s.n_st
            )
        }),
    )?;

    let csb_samples: Vec<f64> = samples.iter().filter_map(|s| s.st_over_csb).collect();
    let cpr_samples: Vec<f64> = samples.iter().filter_map(|s| s.st_over_cpr).collect();
    let kde_path = cfg.resolve_out("kde_grid.csv");
    kde_grid_csv(&kde_path, &comments, &csb_samples, cfg.kde_bandwidth, cfg.kde_points)?;
    let kde_pr_path = cfg.resolve_out("kde_grid_pr.csv");
    kde_grid_csv(&kde_pr_path, &comments, &cpr_samples, cfg.kde_bandwidth, cfg.kde_points)?;

    // ST-count pmf; an empty population writes a header-only artifact.
    let pmf = match st_count_pmf(&triads, &filter) {
        Ok(pmf) => pmf,
        Err(Error::EmptyInput) => Vec::new(),
        Err(e) => return Err(e.into()),
    };
    let pmf_path = cfg.resolve_out("st_pmf.csv");
    super::write_csv(
        &pmf_path,
        &comments,
        "n_st,probability",
        pmf.iter().map(|(n, p)| format!("{n},{p}")),
    )?;

    // Propagation table.
    let table = propagation_table(&index, &triads, &super::propagation_config(cfg))?;
    let prop_path = cfg.resolve_out("propagation.json");
    let artifact = PropagationArtifact {
        provenance: &prov,
        table: &table,
    };
    let mut json = serde_json::to_string_pretty(&artifact)?;
    json.push('\n');
    std::fs::write(&prop_path, json)
        .with_context(|| format!("cannot write {}", prop_path.display()))?;

    // Console summary: the two ratio means and the table.
    let (n_csb, mean_csb) = mean_of(&samples, |s| s.st_over_csb);
    let (n_cpr, mean_cpr) = mean_of(&samples, |s| s.st_over_cpr);
    println!("mean st/C^sb = {} (n={})", fmt_mean(mean_csb), n_csb);
    println!("mean st/C^pr = {} (n={})", fmt_mean(mean_cpr), n_cpr);
    println!("{:<12} {:>8} {:>8} {:>8} {:>9}", "group", "e_sb", "e_pr", "e_nsb", "n_triads");
    for row in &table.rows {
        let group = match row.group {
            dormancy::Group::SbOnly => "sb_only",
            dormancy::Group::PrOnly => "pr_only",
            dormancy::Group::Storyteller => "storyteller",
        };
        println!(
            "{:<12} {:>8} {:>8} {:>8} {:>9}",
            group,
            fmt_mean(row.e_sb),
            fmt_mean(row.e_pr),
            fmt_mean(row.e_nsb),
            row.n_triads
        );
    }

    write_manifest(
        &prov,
        &cfg.output_dir,
        &[ratios_path, kde_path, kde_pr_path, pmf_path, prop_path],
    )?;

    if samples.is_empty() {
        eprintln!("warning: no triads passed the qualification filter; artifacts are empty");
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
