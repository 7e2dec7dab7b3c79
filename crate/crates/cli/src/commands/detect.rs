//! `dormancy detect` — sleeping-beauty selection and triad extraction.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::PipelineConfig;
use crate::provenance::{write_manifest, Provenance};
use dormancy::{extract_triad, select_sleeping_beauties, AbsenceReason, TriadRecord};

#[derive(Serialize)]
struct Summary {
    sb_count: usize,
    with_prince: usize,
    no_citations_before_burst: usize,
    no_co_cited_papers: usize,
}

pub fn run(cfg: &PipelineConfig, index: Option<PathBuf>) -> Result<ExitCode> {
    let index_path = index.unwrap_or_else(|| cfg.index.clone());
    let index = super::load_index(&index_path)?;

    let selected = select_sleeping_beauties(&index, &super::sb_config(cfg))?;
    let triad_cfg = super::triad_config(cfg);
    let triads: Vec<TriadRecord> = selected
        .par_iter()
        .map(|sb| extract_triad(&index, sb, &triad_cfg))
        .collect::<dormancy::Result<_>>()?;

    let sb_path = cfg.resolve_out("sb.jsonl");
    let mut w = std::io::BufWriter::new(
        std::fs::File::create(&sb_path)
            .with_context(|| format!("cannot write {}", sb_path.display()))?,
    );
    for sb in &selected {
        writeln!(w, "{}", serde_json::to_string(sb)?)?;
    }
    w.flush()?;

    let triads_path = cfg.resolve_out("triads.jsonl");
    let mut w = std::io::BufWriter::new(
        std::fs::File::create(&triads_path)
            .with_context(|| format!("cannot write {}", triads_path.display()))?,
    );
    for t in &triads {
        writeln!(w, "{}", serde_json::to_string(t)?)?;
    }
    w.flush()?;

    let summary = Summary {
        sb_count: selected.len(),
        with_prince: triads
            .iter()
            .filter(|t| t.prince.absence_reason == AbsenceReason::None)
            .count(),
        no_citations_before_burst: triads
            .iter()
            .filter(|t| t.prince.absence_reason == AbsenceReason::NoCitationsBeforeBurst)
            .count(),
        no_co_cited_papers: triads
            .iter()
            .filter(|t| t.prince.absence_reason == AbsenceReason::NoCoCitedPapers)
            .count(),
    };
    println!("{}", serde_json::to_string(&summary)?);

    let prov = Provenance::new("detect", &cfg.hash()).input(&index_path)?;
    write_manifest(&prov, &cfg.output_dir, &[sb_path, triads_path])?;

    Ok(ExitCode::SUCCESS)
}
