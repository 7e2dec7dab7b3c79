//! TSV ingest for paper metadata and citation edges.
//!
//! Both readers skip `#` comment lines (the synthetic generator writes its
//! config into one), require an exact header, and are tolerant of malformed
//! rows: bad rows are counted and dropped, never fatal. Only a duplicate
//! paper id or a wrong header aborts the ingest.

use std::collections::{HashMap, HashSet};
use std::io::BufRead;

use serde::Serialize;

use crate::error::{Error, Result};

use super::{CitationEdge, CorpusConfig, DocType, PaperRecord};

pub const PAPERS_HEADER: &str = "id\tyear\tdoc_type\tfield_code";
pub const CITATIONS_HEADER: &str = "citing\tcited";

/// Counters accumulated while ingesting one TSV stream.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct IngestReport {
    /// Rows kept.
    pub records: usize,
    /// Malformed rows dropped (wrong column count, unparseable year or
    /// field code, year outside the corpus range).
    pub skipped: usize,
    /// Edges dropped because one endpoint is not in the corpus.
    pub dangling: usize,
    /// Edges dropped because the same (citing, cited) pair was already seen.
    pub duplicates: usize,
    /// Edges dropped because a paper cited itself.
    pub self_citations: usize,
}

fn read_header<R: BufRead>(reader: &mut R, expected: &str) -> Result<()> {
    let mut line = String::new();
    loop {
        line.clear();
        if reader.read_line(&mut line)? == 0 {
            return Err(Error::MalformedHeader {
                expected: expected.to_string(),
                got: "<end of stream>".to_string(),
            });
        }
        let trimmed = line.trim_end_matches(['\n', '\r']);
        if trimmed.starts_with('#') || trimmed.is_empty() {
            continue;
        }
        if trimmed == expected {
            return Ok(());
        }
        return Err(Error::MalformedHeader {
            expected: expected.to_string(),
            got: trimmed.to_string(),
        });
    }
}

/// Parse `papers.tsv`. Duplicate ids are fatal; otherwise each bad row is
/// skipped and counted.
pub fn ingest_papers<R: BufRead>(
    mut reader: R,
    config: &CorpusConfig,
) -> Result<(Vec<PaperRecord>, IngestReport)> {
    read_header(&mut reader, PAPERS_HEADER)?;

    let mut papers = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut report = IngestReport::default();
    let mut line = String::new();

    loop {
        line.clear();
        if reader.read_line(&mut line)? == 0 {
            break;
        }
        let row = line.trim_end_matches(['\n', '\r']);
        if row.is_empty() || row.starts_with('#') {
            continue;
        }
        let mut cols = row.split('\t');
        let (id, year, doc_type, field_code) = match (
            cols.next(),
            cols.next(),
            cols.next(),
            cols.next(),
            cols.next(),
        ) {
            (Some(id), Some(y), Some(d), Some(f), None) if !id.is_empty() => (id, y, d, f),
            _ => {
                report.skipped += 1;
                continue;
            }
        };
        let year: i32 = match year.trim().parse() {
            Ok(y) => y,
            Err(_) => {
                report.skipped += 1;
                continue;
            }
        };
        if !config.years.contains(year) {
            report.skipped += 1;
            continue;
        }
        let field_code: u16 = match field_code.trim().parse() {
            Ok(f) => f,
            Err(_) => {
                report.skipped += 1;
                continue;
            }
        };
        if !seen.insert(id.to_string()) {
            return Err(Error::DuplicateId(id.to_string()));
        }
        papers.push(PaperRecord {
            id: id.to_string(),
            year,
            doc_type: DocType::parse(doc_type),
            field_code,
        });
        report.records += 1;
    }
    Ok((papers, report))
}

/// Parse `citations.tsv` against an already-ingested paper list.
///
/// Keeps edges whose endpoints both exist, stamping each with the citing
/// paper's year. Dangling endpoints, duplicates and self-citations are
/// counted and dropped.
pub fn ingest_citations<R: BufRead>(
    mut reader: R,
    papers: &[PaperRecord],
) -> Result<(Vec<CitationEdge>, IngestReport)> {
    read_header(&mut reader, CITATIONS_HEADER)?;

    let by_id: HashMap<&str, u32> = papers
        .iter()
        .enumerate()
        .map(|(pos, p)| (p.id.as_str(), pos as u32))
        .collect();

    let mut edges = Vec::new();
    let mut seen: HashSet<(u32, u32)> = HashSet::new();
    let mut report = IngestReport::default();
    let mut line = String::new();

    loop {
        line.clear();
        if reader.read_line(&mut line)? == 0 {
            break;
        }
        let row = line.trim_end_matches(['\n', '\r']);
        if row.is_empty() || row.starts_with('#') {
            continue;
        }
        let mut cols = row.split('\t');
        let (citing, cited) = match (cols.next(), cols.next(), cols.next()) {
            (Some(a), Some(b), None) if !a.is_empty() && !b.is_empty() => (a, b),
            _ => {
                report.skipped += 1;
                continue;
            }
        };
        if citing == cited {
            report.self_citations += 1;
            continue;
        }
        let (citing, cited) = match (by_id.get(citing), by_id.get(cited)) {
            (Some(&a), Some(&b)) => (a, b),
            _ => {
                report.dangling += 1;
                continue;
            }
        };
        if !seen.insert((citing, cited)) {
            report.duplicates += 1;
            continue;
        }
        edges.push(CitationEdge {
            citing,
            cited,
            year: papers[citing as usize].year,
        });
        report.records += 1;
    }
    Ok((edges, report))
}
