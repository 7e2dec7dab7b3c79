//! Pipeline configuration: defaults, `key = value` config files, and
//! command-line overrides.
//!
//! Every run is self-describing: `--show-config` prints the effective
//! configuration in the same format the config file uses, and artifacts
//! carry a hash of the analysis-relevant keys (paths are excluded from
//! the hash so identical analyses in different directories match).

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use sha2::{Digest, Sha256};

use dormancy::{DocType, ENsbVariant, FilterMode};

#[derive(Debug, Clone)]
pub struct PipelineConfig {
    // Paths (not part of the config hash).
    pub papers: PathBuf,
    pub citations: PathBuf,
    pub index: PathBuf,
    pub output_dir: PathBuf,

    // Corpus range and horizon.
    pub y_min: i32,
    pub y_max: i32,
    pub horizon: Option<i32>,

    // Sleeping-beauty selection.
    pub citation_pct: f64,
    pub b_pct: f64,
    pub b_quantile_per_field: bool,
    pub doc_types: Vec<DocType>,

    // Prince / storyteller strictness.
    pub prince_cutoff_year: Option<i32>,
    pub prince_strict_before: bool,
    pub st_end_inclusive: bool,

    // Statistics.
    pub min_csb: usize,
    pub min_cpr: usize,
    pub ratio_mode: FilterMode,
    pub prop_mode: FilterMode,
    pub e_nsb_variant: ENsbVariant,
    pub pooled: bool,
    pub kde_bandwidth: Option<f64>,
    pub kde_points: usize,

    // Synthetic corpus.
    pub n_papers: usize,
    pub refs_per_paper: usize,
    pub attachment_offset: f64,
    pub recency_half_life: f64,
    pub fields: usize,
    pub seed: u64,
    pub plant_triads: usize,
    pub sleep_years: usize,
    pub burst_size: usize,
    pub burst_years: usize,
    pub n_st: usize,
    pub n_followers: usize,

    // Worker pool; 0 means one thread per core.
    pub workers: usize,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        PipelineConfig {
            papers: "papers.tsv".into(),
            citations: "citations.tsv".into(),
            index: "corpus.idx".into(),
            output_dir: ".".into(),
            y_min: 1970,
            y_max: 2020,
            horizon: None,
            citation_pct: 0.95,
            b_pct: 0.99,
            b_quantile_per_field: false,
            doc_types: vec![DocType::Article, DocType::ConferencePaper],
            prince_cutoff_year: None,
            prince_strict_before: true,
            st_end_inclusive: true,
            min_csb: 10,
            min_cpr: 10,
            ratio_mode: FilterMode::Either,
            prop_mode: FilterMode::Both,
            e_nsb_variant: ENsbVariant::SbConjunctive,
            pooled: false,
            kde_bandwidth: None,
            kde_points: 512,
            n_papers: 20_000,
            refs_per_paper: 5,
            attachment_offset: 1.0,
            recency_half_life: 5.0,
            fields: 4,
            seed: 42,
            plant_triads: 1,
            sleep_years: 15,
            burst_size: 50,
            burst_years: 5,
            n_st: 12,
            n_followers: 12,
            workers: 0,
        }
    }
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value {
        "true" | "1" | "yes" => Ok(true),
        "false" | "0" | "no" => Ok(false),
        _ => bail!("config key `{key}`: expected a boolean, got `{value}`"),
    }
}

fn parse_mode(key: &str, value: &str) -> Result<FilterMode> {
    match value {
        "either" => Ok(FilterMode::Either),
        "both" => Ok(FilterMode::Both),
        _ => bail!("config key `{key}`: expected `either` or `both`, got `{value}`"),
    }
}

fn mode_str(mode: FilterMode) -> &'static str {
    match mode {
        FilterMode::Either => "either",
        FilterMode::Both => "both",
    }
}

fn variant_str(v: ENsbVariant) -> &'static str {
    match v {
        ENsbVariant::SbConjunctive => "sb_conjunctive",
        ENsbVariant::GroupCitersOnly => "group_citers",
    }
}

impl PipelineConfig {
    /// Apply one `key = value` assignment.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let v = value.trim();
        let int = |k: &str| -> Result<i64> {
            v.parse::<i64>()
                .with_context(|| format!("config key `{k}`: expected an integer, got `{v}`"))
        };
        let float = |k: &str| -> Result<f64> {
            v.parse::<f64>()
                .with_context(|| format!("config key `{k}`: expected a number, got `{v}`"))
        };
        match key {
            "papers" => self.papers = v.into(),
            "citations" => self.citations = v.into(),
            "index" => self.index = v.into(),
            "output_dir" => self.output_dir = v.into(),
            "y_min" => self.y_min = int(key)? as i32,
            "y_max" => self.y_max = int(key)? as i32,
            "horizon" => {
                self.horizon = if v.is_empty() { None } else { Some(int(key)? as i32) }
            }
            "citation_pct" => self.citation_pct = float(key)?,
            "b_pct" => self.b_pct = float(key)?,
            "b_quantile_per_field" => self.b_quantile_per_field = parse_bool(key, v)?,
            "doc_types" => {
                self.doc_types = v
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| DocType::parse(s.trim()))
                    .collect();
            }
            "prince_cutoff_year" => {
                self.prince_cutoff_year =
                    if v.is_empty() { None } else { Some(int(key)? as i32) }
            }
            "prince_strict_before" => self.prince_strict_before = parse_bool(key, v)?,
            "st_end_inclusive" => self.st_end_inclusive = parse_bool(key, v)?,
            "min_csb" => self.min_csb = int(key)? as usize,
            "min_cpr" => self.min_cpr = int(key)? as usize,
            "ratio_mode" => self.ratio_mode = parse_mode(key, v)?,
            "prop_mode" => self.prop_mode = parse_mode(key, v)?,
            "e_nsb_variant" => {
                self.e_nsb_variant = match v {
                    "sb_conjunctive" => ENsbVariant::SbConjunctive,
                    "group_citers" => ENsbVariant::GroupCitersOnly,
                    _ => bail!(
                        "config key `e_nsb_variant`: expected `sb_conjunctive` or `group_citers`, got `{v}`"
                    ),
                }
            }
            "pooled" => self.pooled = parse_bool(key, v)?,
            "kde_bandwidth" => {
                self.kde_bandwidth = if v.is_empty() { None } else { Some(float(key)?) }
            }
            "kde_points" => self.kde_points = int(key)? as usize,
            "n_papers" => self.n_papers = int(key)? as usize,
            "refs_per_paper" => self.refs_per_paper = int(key)? as usize,
            "attachment_offset" => self.attachment_offset = float(key)?,
            "recency_half_life" => self.recency_half_life = float(key)?,
            "fields" => self.fields = int(key)? as usize,
            "seed" => {
                self.seed = v
                    .parse::<u64>()
                    .with_context(|| format!("config key `seed`: expected an integer, got `{v}`"))?
            }
            "plant_triads" => self.plant_triads = int(key)? as usize,
            "sleep_years" => self.sleep_years = int(key)? as usize,
            "burst_size" => self.burst_size = int(key)? as usize,
            "burst_years" => self.burst_years = int(key)? as usize,
            "n_st" => self.n_st = int(key)? as usize,
            "n_followers" => self.n_followers = int(key)? as usize,
            "workers" => self.workers = int(key)? as usize,
            _ => bail!("unknown config key `{key}`"),
        }
        Ok(())
    }

    /// Load assignments from a config file on top of `self`.
    pub fn load_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .with_context(|| format!("{}:{}: expected `key = value`", path.display(), lineno + 1))?;
            self.set(key.trim(), value.trim())
                .with_context(|| format!("{}:{}", path.display(), lineno + 1))?;
        }
        Ok(())
    }

    fn dump_pairs(&self) -> Vec<(&'static str, String)> {
        let doc_types = self
            .doc_types
            .iter()
            .map(|d| d.as_str())
            .collect::<Vec<_>>()
            .join(",");
        let opt_i32 = |o: Option<i32>| o.map(|x| x.to_string()).unwrap_or_default();
        let opt_f64 = |o: Option<f64>| o.map(|x| x.to_string()).unwrap_or_default();
        vec![
            ("papers", self.papers.display().to_string()),
            ("citations", self.citations.display().to_string()),
            ("index", self.index.display().to_string()),
            ("output_dir", self.output_dir.display().to_string()),
            ("y_min", self.y_min.to_string()),
            ("y_max", self.y_max.to_string()),
            ("horizon", opt_i32(self.horizon)),
            ("citation_pct", self.citation_pct.to_string()),
            ("b_pct", self.b_pct.to_string()),
            ("b_quantile_per_field", self.b_quantile_per_field.to_string()),
            ("doc_types", doc_types),
            ("prince_cutoff_year", opt_i32(self.prince_cutoff_year)),
            ("prince_strict_before", self.prince_strict_before.to_string()),
            ("st_end_inclusive", self.st_end_inclusive.to_string()),
            ("min_csb", self.min_csb.to_string()),
            ("min_cpr", self.min_cpr.to_string()),
            ("ratio_mode", mode_str(self.ratio_mode).to_string()),
            ("prop_mode", mode_str(self.prop_mode).to_string()),
            ("e_nsb_variant", variant_str(self.e_nsb_variant).to_string()),
            ("pooled", self.pooled.to_string()),
            ("kde_bandwidth", opt_f64(self.kde_bandwidth)),
            ("kde_points", self.kde_points.to_string()),
            ("n_papers", self.n_papers.to_string()),
            ("refs_per_paper", self.refs_per_paper.to_string()),
            ("attachment_offset", self.attachment_offset.to_string()),
            ("recency_half_life", self.recency_half_life.to_string()),
            ("fields", self.fields.to_string()),
            ("seed", self.seed.to_string()),
            ("plant_triads", self.plant_triads.to_string()),
            ("sleep_years", self.sleep_years.to_string()),
            ("burst_size", self.burst_size.to_string()),
            ("burst_years", self.burst_years.to_string()),
            ("n_st", self.n_st.to_string()),
            ("n_followers", self.n_followers.to_string()),
            ("workers", self.workers.to_string()),
        ]
    }

    /// Effective configuration in config-file syntax.
    pub fn show(&self) -> String {
        let mut out = String::new();
        for (k, v) in self.dump_pairs() {
            let _ = writeln!(out, "{k} = {v}");
        }
        out
    }

    /// Short hash of the analysis-relevant configuration. Path keys and
    /// the worker count do not influence results, so they are excluded.
    pub fn hash(&self) -> String {
        const EXCLUDED: [&str; 5] = ["papers", "citations", "index", "output_dir", "workers"];
        let mut hasher = Sha256::new();
        for (k, v) in self.dump_pairs() {
            if !EXCLUDED.contains(&k) {
                hasher.update(k.as_bytes());
                hasher.update(b"=");
                hasher.update(v.as_bytes());
                hasher.update(b"\n");
            }
        }
        let digest = hasher.finalize();
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn resolve_out(&self, file: &str) -> PathBuf {
        self.output_dir.join(file)
    }
}
