//! `dormancy simulate` — synthetic corpus with planted triads, written in
//! the same TSV formats `ingest` consumes plus a ground-truth file.

use std::io::BufWriter;
use std::process::ExitCode;

use anyhow::{Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::config::PipelineConfig;
use crate::provenance::{write_manifest, Provenance};
use dormancy::synth::{write_citations_tsv, write_papers_tsv};
use dormancy::{
    generate_ca_corpus, plant_triad, PlantSpec, PlantedTriad, SynthConfig, YearWindow,
    RNG_ALGORITHM,
};

#[derive(Serialize)]
struct GroundTruth<'a> {
    provenance: &'a Provenance,
    rng: &'static str,
    config: &'a SynthConfig,
    planted: &'a [PlantedTriad],
}

pub fn run(cfg: &PipelineConfig) -> Result<ExitCode> {
    let years = YearWindow::new(cfg.y_min, cfg.y_max)
        .with_context(|| format!("invalid corpus range {}..{}", cfg.y_min, cfg.y_max))?;
    let synth = SynthConfig {
        n_papers: cfg.n_papers,
        years,
        refs_per_paper: cfg.refs_per_paper,
        attachment_offset: cfg.attachment_offset,
        recency_half_life: cfg.recency_half_life,
        fields: cfg.fields,
        seed: cfg.seed,
    };
    let (mut papers, mut edges) = generate_ca_corpus(&synth)?;

    // Leave a few organic years before the planted SBs so they have
    // something to reference.
    let plant_window = YearWindow::new((cfg.y_min + 5).min(cfg.y_max), cfg.y_max)
        .expect("start <= end by construction");
    let spec = PlantSpec {
        burst_years: cfg.burst_years,
        n_followers: cfg.n_followers,
        ..PlantSpec::new(cfg.sleep_years, cfg.burst_size, cfg.n_st, plant_window)
    };
    let mut rng = ChaCha12Rng::seed_from_u64(cfg.seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut planted = Vec::with_capacity(cfg.plant_triads);
    for _ in 0..cfg.plant_triads {
        planted.push(plant_triad(&mut papers, &mut edges, &spec, &mut rng)?);
    }

    let header = vec![
        format!("generator={} {}", crate::provenance::TOOL, crate::provenance::VERSION),
        format!("rng={RNG_ALGORITHM} seed={}", cfg.seed),
        format!(
            "n_papers={} years={}..{} refs_per_paper={} attachment_offset={} recency_half_life={} fields={}",
            cfg.n_papers, cfg.y_min, cfg.y_max, cfg.refs_per_paper, cfg.attachment_offset,
            cfg.recency_half_life, cfg.fields
        ),
        format!(
            "plant_triads={} sleep_years={} burst_size={} burst_years={} n_st={} n_followers={}",
            cfg.plant_triads, cfg.sleep_years, cfg.burst_size, cfg.burst_years, cfg.n_st,
            cfg.n_followers
        ),
    ];

    let papers_path = cfg.resolve_out("papers.tsv");
    let file = std::fs::File::create(&papers_path)
        .with_context(|| format!("cannot write {}", papers_path.display()))?;
    write_papers_tsv(BufWriter::new(file), &papers, &header)?;

    let citations_path = cfg.resolve_out("citations.tsv");
    let file = std::fs::File::create(&citations_path)
        .with_context(|| format!("cannot write {}", citations_path.display()))?;
    write_citations_tsv(BufWriter::new(file), &papers, &edges, &header)?;

    let prov = Provenance::new("simulate", &cfg.hash());
    let truth_path = cfg.resolve_out("ground_truth.json");
    let truth = GroundTruth {
        provenance: &prov,
        rng: RNG_ALGORITHM,
        config: &synth,
        planted: &planted,
    };
    let mut json = serde_json::to_string_pretty(&truth)?;
    json.push('\n');
    std::fs::write(&truth_path, json)
        .with_context(|| format!("cannot write {}", truth_path.display()))?;

    println!(
        "{}",
        serde_json::to_string(&serde_json::json!({
            "papers": papers.len(),
            "edges": edges.len(),
            "planted_triads": planted.len(),
            "seed": cfg.seed,
        }))?
    );

    write_manifest(&prov, &cfg.output_dir, &[papers_path, citations_path, truth_path])?;
    Ok(ExitCode::SUCCESS)
}
