//! Paper metadata and citation-graph ingest, indexing and persistence.
//!
//! The corpus enters as two TSV streams (`papers.tsv`, `citations.tsv`),
//! is validated row by row, and is frozen into an immutable [`CorpusIndex`]
//! that answers forward/backward neighbor queries with year filters. After
//! `build` the index never mutates, so it can be shared freely across
//! worker threads.

mod index;
mod ingest;
mod persist;

pub use index::{CorpusIndex, PaperIdx};
pub use ingest::{ingest_citations, ingest_papers, IngestReport};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Document type of a paper, as carried by the metadata TSV.
///
/// Unrecognized strings map to `Other`; bibliographic corpora are dirty and
/// an unknown type label is not a reason to drop a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocType {
    Article,
    ConferencePaper,
    Review,
    Other,
}

impl DocType {
    pub fn parse(s: &str) -> DocType {
        match s.to_ascii_lowercase().as_str() {
            "article" => DocType::Article,
            "conference_paper" => DocType::ConferencePaper,
            "review" => DocType::Review,
            _ => DocType::Other,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DocType::Article => "article",
            DocType::ConferencePaper => "conference_paper",
            DocType::Review => "review",
            DocType::Other => "other",
        }
    }

    pub(crate) fn from_byte(b: u8) -> Result<DocType> {
        Ok(match b {
            0 => DocType::Article,
            1 => DocType::ConferencePaper,
            2 => DocType::Review,
            3 => DocType::Other,
            _ => return Err(Error::CorruptFile(format!("invalid doc_type byte {b}"))),
        })
    }

    pub(crate) fn to_byte(self) -> u8 {
        match self {
            DocType::Article => 0,
            DocType::ConferencePaper => 1,
            DocType::Review => 2,
            DocType::Other => 3,
        }
    }
}

/// One paper's metadata: opaque unique id, publication year, document type
/// and subject-category code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaperRecord {
    pub id: String,
    pub year: i32,
    pub doc_type: DocType,
    pub field_code: u16,
}

/// A citation edge between two papers of the same corpus.
///
/// `citing` and `cited` are positions into the paper list the edge was
/// ingested or generated against, not external ids; `year` is the citing
/// paper's publication year (citations are dated by when the citing paper
/// appeared).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CitationEdge {
    pub citing: u32,
    pub cited: u32,
    pub year: i32,
}

/// Inclusive calendar-year window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct YearWindow {
    start: i32,
    end: i32,
}

impl YearWindow {
    pub fn new(start: i32, end: i32) -> Result<YearWindow> {
        if start > end {
            return Err(Error::InvalidYearWindow { start, end });
        }
        Ok(YearWindow { start, end })
    }

    pub fn start(&self) -> i32 {
        self.start
    }

    pub fn end(&self) -> i32 {
        self.end
    }

    pub fn contains(&self, year: i32) -> bool {
        self.start <= year && year <= self.end
    }

    pub fn len(&self) -> usize {
        (self.end - self.start + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false // start <= end by construction
    }
}

/// Corpus-level configuration: the calendar range papers must fall in.
/// Rows outside the range are skipped at ingest, which also drops their
/// edges (they dangle).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusConfig {
    pub years: YearWindow,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            years: YearWindow::new(1970, 2020).expect("static window"),
        }
    }
}

/// Per-calendar-year citation counts for one paper.
///
/// `counts[t]` is the number of citing papers published in year
/// `pub_year + t`; the first entry covers the publication year itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CitationSeries {
    pub pub_year: i32,
    pub counts: Vec<u32>,
}

impl CitationSeries {
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| u64::from(c)).sum()
    }
}
