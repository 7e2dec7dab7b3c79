//! `dormancy ingest` — TSV pair to binary index.

use std::io::BufReader;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use serde::Serialize;

use crate::config::PipelineConfig;
use crate::provenance::{write_manifest, Provenance};
use dormancy::{ingest_citations, ingest_papers, CorpusIndex, IngestReport};

#[derive(Serialize)]
struct Report<'a> {
    papers: &'a IngestReport,
    citations: &'a IngestReport,
    paper_count: usize,
    edge_count: u64,
    index: String,
}

pub fn run(
    cfg: &PipelineConfig,
    papers: Option<PathBuf>,
    citations: Option<PathBuf>,
    index: Option<PathBuf>,
) -> Result<ExitCode> {
    let papers_path = papers.unwrap_or_else(|| cfg.papers.clone());
    let citations_path = citations.unwrap_or_else(|| cfg.citations.clone());
    let index_path = index.unwrap_or_else(|| cfg.index.clone());
    let corpus_cfg = super::corpus_config(cfg)?;

    let papers_file = std::fs::File::open(&papers_path)
        .with_context(|| format!("cannot open papers file {}", papers_path.display()))?;
    let (paper_records, papers_report) =
        ingest_papers(BufReader::new(papers_file), &corpus_cfg)
            .with_context(|| format!("ingesting {}", papers_path.display()))?;

    let citations_file = std::fs::File::open(&citations_path)
        .with_context(|| format!("cannot open citations file {}", citations_path.display()))?;
    let (edges, citations_report) =
        ingest_citations(BufReader::new(citations_file), &paper_records)
            .with_context(|| format!("ingesting {}", citations_path.display()))?;

    let index = CorpusIndex::build(paper_records, &edges, &corpus_cfg)?;
    index
        .save(&index_path)
        .with_context(|| format!("cannot write index {}", index_path.display()))?;

    let report = Report {
        papers: &papers_report,
        citations: &citations_report,
        paper_count: index.len(),
        edge_count: index.edge_count(),
        index: index_path.display().to_string(),
    };
    println!("{}", serde_json::to_string(&report)?);

    let prov = Provenance::new("ingest", &cfg.hash())
        .input(&papers_path)?
        .input(&citations_path)?;
    write_manifest(&prov, &cfg.output_dir, &[index_path])?;

    Ok(ExitCode::SUCCESS)
}
