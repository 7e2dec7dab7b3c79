//! `dormancy case-study` — per-year citation history of one sleeping
//! beauty: SB citations, prince citations, storytellers published, and
//! markers for the prince year and the awakening year.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Result;

use crate::config::PipelineConfig;
use crate::provenance::{write_manifest, Provenance};
use dormancy::{Error, YearWindow};

pub fn run(
    cfg: &PipelineConfig,
    sb_id: &str,
    index: Option<PathBuf>,
    triads: Option<PathBuf>,
) -> Result<ExitCode> {
    let index_path = index.unwrap_or_else(|| cfg.index.clone());
    let triads_path = triads.unwrap_or_else(|| cfg.resolve_out("triads.jsonl"));
    let index = super::load_index(&index_path)?;
    let triads = super::analyze::read_triads(&triads_path)?;

    let triad = triads
        .iter()
        .find(|t| t.sb_id == sb_id)
        .ok_or_else(|| Error::UnknownSb(sb_id.to_string()))?;

    let sb_idx = index
        .idx_of(sb_id)
        .ok_or_else(|| Error::UnknownPaper(sb_id.to_string()))?;
    let sb_year = index.year_of(sb_idx);
    let y_max = index.year_range().end();

    let pr = triad.prince.pr_id.as_deref();
    let start = triad.prince.y_pr.map_or(sb_year, |y| y.min(sb_year));

    // Storytellers published per year.
    let mut st_by_year = std::collections::HashMap::new();
    for st in &triad.storytellers {
        if let Some(p) = index.idx_of(st) {
            *st_by_year.entry(index.year_of(p)).or_insert(0usize) += 1;
        }
    }

    let count = |id: &str, year: i32| -> usize {
        index
            .citers_of(id, YearWindow::new(year, year).expect("single-year window"))
            .map(|v| v.len())
            .unwrap_or(0)
    };

    let rows = (start..=y_max).map(|year| {
        let sb_citations = count(sb_id, year);
        let pr_citations = pr.map(|p| count(p, year).to_string()).unwrap_or_default();
        let st_count = pr
            .map(|_| st_by_year.get(&year).copied().unwrap_or(0).to_string())
            .unwrap_or_default();
        let is_y_pr = triad
            .prince
            .y_pr
            .map(|y| if y == year { "1" } else { "0" }.to_string())
            .unwrap_or_default();
        let is_awakening = if year == triad.awakening_year { 1 } else { 0 };
        format!("{year},{sb_citations},{pr_citations},{st_count},{is_y_pr},{is_awakening}")
    });

    let prov = Provenance::new("case-study", &cfg.hash())
        .input(&index_path)?
        .input(&triads_path)?;
    let mut comments = prov.comment_lines();
    comments.push(format!("sb_id={sb_id}"));
    if let Some(p) = pr {
        comments.push(format!("pr_id={p}"));
    }

    let history_path = cfg.resolve_out("history.csv");
    super::write_csv(
        &history_path,
        &comments,
        "year,sb_citations,pr_citations,st_count,is_y_pr,is_awakening",
        rows,
    )?;
    write_manifest(&prov, &cfg.output_dir, &[history_path])?;

    if pr.is_none() {
        eprintln!("warning: {sb_id} has no prince; prince and storyteller columns are empty");
    }
    Ok(ExitCode::SUCCESS)
}
