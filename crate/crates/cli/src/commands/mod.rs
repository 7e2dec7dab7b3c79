pub mod analyze;
pub mod case_study;
pub mod detect;
pub mod ingest;
pub mod simulate;

use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};

use crate::config::PipelineConfig;
use dormancy::{
    CorpusConfig, CorpusIndex, PropagationConfig, RatioFilter, SbConfig, TriadConfig, YearWindow,
};

pub fn corpus_config(cfg: &PipelineConfig) -> Result<CorpusConfig> {
    Ok(CorpusConfig {
        years: YearWindow::new(cfg.y_min, cfg.y_max)
            .with_context(|| format!("invalid corpus range {}..{}", cfg.y_min, cfg.y_max))?,
    })
}

pub fn sb_config(cfg: &PipelineConfig) -> SbConfig {
    SbConfig {
        citation_pct: cfg.citation_pct,
        b_pct: cfg.b_pct,
        doc_types: cfg.doc_types.clone(),
        horizon: cfg.horizon,
        per_field_b_quantile: cfg.b_quantile_per_field,
    }
}

pub fn triad_config(cfg: &PipelineConfig) -> TriadConfig {
    TriadConfig {
        cutoff_year: cfg.prince_cutoff_year,
        prince_strict_before: cfg.prince_strict_before,
        st_end_inclusive: cfg.st_end_inclusive,
    }
}

pub fn ratio_filter(cfg: &PipelineConfig) -> RatioFilter {
    RatioFilter {
        min_csb: cfg.min_csb,
        min_cpr: cfg.min_cpr,
        mode: cfg.ratio_mode,
    }
}

pub fn propagation_config(cfg: &PipelineConfig) -> PropagationConfig {
    PropagationConfig {
        filter: RatioFilter {
            min_csb: cfg.min_csb,
            min_cpr: cfg.min_cpr,
            mode: cfg.prop_mode,
        },
        e_nsb_variant: cfg.e_nsb_variant,
        pooled: cfg.pooled,
    }
}

pub fn load_index(path: &Path) -> Result<CorpusIndex> {
    CorpusIndex::load(path).with_context(|| format!("cannot load index {}", path.display()))
}

/// Write a CSV artifact: `#` provenance comments, a header row, then rows.
pub fn write_csv(
    path: &Path,
    comments: &[String],
    header: &str,
    rows: impl Iterator<Item = String>,
) -> Result<()> {
    let file = std::fs::File::create(path)
        .with_context(|| format!("cannot write {}", path.display()))?;
    let mut w = std::io::BufWriter::new(file);
    for c in comments {
        writeln!(w, "# {c}")?;
    }
    writeln!(w, "{header}")?;
    for row in rows {
        writeln!(w, "{row}")?;
    }
    w.flush()?;
    Ok(())
}

/// Minimal CSV field quoting for opaque ids.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
