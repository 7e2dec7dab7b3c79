//! Seeded synthetic citation corpora: a cumulative-advantage baseline with
//! recency decay, planted sleeping-beauty structures for ground-truth
//! tests, and quadratic-time oracle implementations of the triad queries.
//!
//! Attachment weight of an existing paper j for a citer written in year Y:
//!
//! ```text
//! w_j = (indegree_j + k0) * 2^(-(Y - year_j)/half_life)
//! ```
//!
//! The factor `2^(-Y/half_life)` is common to every candidate of the same
//! citing year and cancels under normalization, so the sampler maintains
//! Y-independent weights `(indegree_j + k0) * 2^((year_j - y0)/half_life)`
//! in a Fenwick tree and draws in O(log n) per reference. References are
//! drawn without replacement and always point strictly backward in time.

pub mod oracle;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

use crate::corpus::{CitationEdge, DocType, PaperRecord, YearWindow};
use crate::error::{Error, Result};

/// The RNG family used by the generator; recorded in output headers so a
/// corpus can be reproduced by later releases.
pub const RNG_ALGORITHM: &str = "chacha12";

/// Generator parameters. Output is fully determined by the config
/// (including `seed`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    pub n_papers: usize,
    pub years: YearWindow,
    /// References drawn per paper (fewer when not enough earlier papers
    /// exist).
    pub refs_per_paper: usize,
    /// Additive attachment offset k0; large values wash out preferential
    /// attachment.
    pub attachment_offset: f64,
    /// Recency half-life in years.
    pub recency_half_life: f64,
    /// Number of subject fields, assigned uniformly at random.
    pub fields: usize,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            n_papers: 10_000,
            years: YearWindow::new(1970, 2020).expect("static window"),
            refs_per_paper: 5,
            attachment_offset: 1.0,
            recency_half_life: 5.0,
            fields: 4,
            seed: 42,
        }
    }
}

impl SynthConfig {
    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InfeasibleConfig(msg.to_string()));
        if self.n_papers == 0 {
            return bad("n_papers must be positive");
        }
        if self.refs_per_paper == 0 {
            return bad("refs_per_paper must be at least 1");
        }
        if self.attachment_offset <= 0.0 || !self.attachment_offset.is_finite() {
            return bad("attachment_offset must be positive");
        }
        if self.recency_half_life <= 0.0 || !self.recency_half_life.is_finite() {
            return bad("recency_half_life must be positive");
        }
        if self.fields == 0 {
            return bad("fields must be at least 1");
        }
        Ok(())
    }
}

/// Ground truth for one planted triad.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlantedTriad {
    pub sb_id: String,
    pub pr_id: String,
    pub st_ids: Vec<String>,
    pub sleep_years: usize,
    pub burst_size: usize,
    pub awakening_year: i32,
    pub y_pr: i32,
}

/// Shape of a planted triad: a sleeping beauty dormant for `sleep_years`,
/// a prince published mid-sleep, `n_st` co-citing storytellers spread over
/// the sleep, then `burst_size` fresh citers per burst year.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantSpec {
    pub sleep_years: usize,
    pub burst_size: usize,
    pub n_st: usize,
    /// Year range the whole structure must fit in.
    pub window: YearWindow,
    /// How many years the burst lasts (clipped to the window).
    pub burst_years: usize,
    /// Post-awakening papers citing one storyteller and the SB; they make
    /// the storyteller group observable to the propagation table.
    pub n_followers: usize,
}

impl PlantSpec {
    pub fn new(sleep_years: usize, burst_size: usize, n_st: usize, window: YearWindow) -> PlantSpec {
        PlantSpec {
            sleep_years,
            burst_size,
            n_st,
            window,
            burst_years: 5,
            n_followers: 0,
        }
    }
}

/// Fenwick tree over nonnegative f64 weights supporting point updates and
/// sampling by cumulative weight.
struct WeightTree {
    tree: Vec<f64>,
    mask: usize,
}

impl WeightTree {
    fn new(n: usize) -> WeightTree {
        let mut mask = 1usize;
        while mask * 2 <= n {
            mask *= 2;
        }
        WeightTree {
            tree: vec![0.0; n + 1],
            mask,
        }
    }

    fn add(&mut self, idx: usize, delta: f64) {
        let mut i = idx + 1;
        while i < self.tree.len() {
            self.tree[i] += delta;
            i += i & i.wrapping_neg();
        }
    }

    fn total(&self) -> f64 {
        let mut sum = 0.0;
        let mut i = self.tree.len() - 1;
        while i > 0 {
            sum += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        sum
    }

    /// Smallest index whose cumulative weight exceeds `target`.
    fn search(&self, mut target: f64) -> usize {
        let mut pos = 0usize;
        let mut bit = self.mask;
        while bit != 0 {
            let next = pos + bit;
            if next < self.tree.len() && self.tree[next] <= target {
                target -= self.tree[next];
                pos = next;
            }
            bit >>= 1;
        }
        pos
    }
}

/// Generate a corpus under the recency-damped cumulative-advantage model.
///
/// Papers are assigned to years in equal contiguous blocks (index order is
/// chronological). Identical configs produce identical output.
pub fn generate_ca_corpus(config: &SynthConfig) -> Result<(Vec<PaperRecord>, Vec<CitationEdge>)> {
    config.validate()?;
    let mut rng = ChaCha12Rng::seed_from_u64(config.seed);
    let n = config.n_papers;
    let n_years = config.years.len();
    let y0 = config.years.start();

    let mut papers = Vec::with_capacity(n);
    for i in 0..n {
        let year = y0 + (i * n_years / n) as i32;
        let doc_type = match rng.gen::<f64>() {
            x if x < 0.70 => DocType::Article,
            x if x < 0.85 => DocType::ConferencePaper,
            x if x < 0.95 => DocType::Review,
            _ => DocType::Other,
        };
        papers.push(PaperRecord {
            id: format!("P{i:07}"),
            year,
            doc_type,
            field_code: rng.gen_range(0..config.fields) as u16,
        });
    }

    // Y-independent attachment weight per candidate; see module docs.
    let base: Vec<f64> = papers
        .iter()
        .map(|p| ((p.year - y0) as f64 / config.recency_half_life).exp2())
        .collect();

    let mut tree = WeightTree::new(n);
    let mut weights = vec![0.0f64; n];
    let mut inserted = 0usize; // papers.. [0, inserted) are in the tree
    let mut edges = Vec::with_capacity(n * config.refs_per_paper);
    let mut drawn: Vec<(usize, f64)> = Vec::with_capacity(config.refs_per_paper);

    for i in 0..n {
        // Candidates are exactly the strictly-earlier papers; index order
        // is chronological, so extend the tree up to the first paper of
        // this year.
        while inserted < i && papers[inserted].year < papers[i].year {
            let w = config.attachment_offset * base[inserted];
            weights[inserted] = w;
            tree.add(inserted, w);
            inserted += 1;
        }
        if inserted == 0 {
            continue;
        }

        drawn.clear();
        for _ in 0..config.refs_per_paper.min(inserted) {
            let total = tree.total();
            let target = rng.gen::<f64>() * total;
            let mut idx = tree.search(target).min(inserted - 1);
            // Float residue can land on an entry drawn moments ago; step to
            // the nearest live one.
            if weights[idx] == 0.0 {
                let down = (0..idx).rev().find(|&j| weights[j] > 0.0);
                idx = down
                    .or_else(|| (idx + 1..inserted).find(|&j| weights[j] > 0.0))
                    .expect("at least one candidate remains");
            }
            drawn.push((idx, weights[idx]));
            tree.add(idx, -weights[idx]);
            weights[idx] = 0.0;
        }
        for &(idx, w) in &drawn {
            weights[idx] = w;
            tree.add(idx, w);
        }
        drawn.sort_unstable_by_key(|&(idx, _)| idx);
        for &(idx, _) in &drawn {
            edges.push(CitationEdge {
                citing: i as u32,
                cited: idx as u32,
                year: papers[i].year,
            });
            weights[idx] += base[idx];
            tree.add(idx, base[idx]);
        }
    }
    Ok((papers, edges))
}

/// Append one planted triad to an existing corpus and return its ground
/// truth.
///
/// Storyteller papers cite exactly the SB and the prince, and burst papers
/// cite exactly the SB, so the planted prince is the unique co-citation
/// argmax and the planted storytellers are exactly the co-citers of the
/// pair — the properties the detectors are tested against.
pub fn plant_triad(
    papers: &mut Vec<PaperRecord>,
    edges: &mut Vec<CitationEdge>,
    spec: &PlantSpec,
    rng: &mut ChaCha12Rng,
) -> Result<PlantedTriad> {
    let bad = |msg: String| Err(Error::InfeasibleSpec(msg));
    if spec.sleep_years < 4 {
        return bad(format!("sleep_years {} < 4", spec.sleep_years));
    }
    if spec.burst_years == 0 {
        return bad("burst_years must be at least 1".to_string());
    }
    if spec.window.len() < spec.sleep_years + 1 {
        return bad(format!(
            "window {}..{} too short for {} sleep years plus a burst",
            spec.window.start(),
            spec.window.end(),
            spec.sleep_years
        ));
    }
    if spec.n_followers > 0 && spec.n_st == 0 {
        return bad("followers require storytellers".to_string());
    }

    let y_sb = spec.window.start();
    let y_burst = y_sb + spec.sleep_years as i32;
    let y_pr = y_sb + (spec.sleep_years / 2) as i32;
    let burst_end = (y_burst + spec.burst_years as i32 - 1).min(spec.window.end());

    let existing: HashSet<String> = papers.iter().map(|p| p.id.clone()).collect();
    let max_field = papers.iter().map(|p| p.field_code).max().unwrap_or(0);
    let field = rng.gen_range(0..=max_field);

    let mut next_serial = papers.len();
    let mut fresh_id = |existing: &HashSet<String>| -> String {
        loop {
            let id = format!("P{next_serial:07}");
            next_serial += 1;
            if !existing.contains(&id) {
                return id;
            }
        }
    };

    let add_paper = |papers: &mut Vec<PaperRecord>, id: String, year: i32| -> u32 {
        papers.push(PaperRecord {
            id,
            year,
            doc_type: DocType::Article,
            field_code: field,
        });
        (papers.len() - 1) as u32
    };
    let cite = |edges: &mut Vec<CitationEdge>, papers: &[PaperRecord], citing: u32, cited: u32| {
        edges.push(CitationEdge {
            citing,
            cited,
            year: papers[citing as usize].year,
        });
    };

    // A couple of organic references keep SB and PR looking like ordinary
    // papers; their targets are irrelevant to the planted structure.
    let organic_refs = |papers: &[PaperRecord], before: i32, rng: &mut ChaCha12Rng| -> Vec<u32> {
        let pool: Vec<u32> = (0..papers.len() as u32)
            .filter(|&p| papers[p as usize].year < before)
            .collect();
        pool.choose_multiple(rng, 2.min(pool.len())).cloned().collect()
    };

    let sb_id = fresh_id(&existing);
    let sb = add_paper(papers, sb_id.clone(), y_sb);
    for r in organic_refs(papers, y_sb, rng) {
        cite(edges, papers, sb, r);
    }

    let pr_id = fresh_id(&existing);
    let pr = add_paper(papers, pr_id.clone(), y_pr);
    for r in organic_refs(papers, y_pr, rng) {
        cite(edges, papers, pr, r);
    }

    // Storytellers live strictly before the last sleep year so the final
    // pre-burst year stays quiet and the detected awakening lands there.
    let st_span = (y_burst - 2 - y_pr + 1) as usize;
    let mut planted_st = Vec::with_capacity(spec.n_st);
    for k in 0..spec.n_st {
        let id = fresh_id(&existing);
        let year = y_pr + (k % st_span) as i32;
        let st = add_paper(papers, id.clone(), year);
        cite(edges, papers, st, sb);
        cite(edges, papers, st, pr);
        planted_st.push((year, id, st));
    }
    // Ground truth in the same (year, id) order the detector reports.
    planted_st.sort();
    let st_ids: Vec<String> = planted_st.iter().map(|(_, id, _)| id.clone()).collect();
    let st_positions: Vec<u32> = planted_st.iter().map(|&(_, _, pos)| pos).collect();

    for year in y_burst..=burst_end {
        for _ in 0..spec.burst_size {
            let id = fresh_id(&existing);
            let citer = add_paper(papers, id, year);
            cite(edges, papers, citer, sb);
        }
    }

    for k in 0..spec.n_followers {
        let id = fresh_id(&existing);
        let follower = add_paper(papers, id, y_burst);
        cite(edges, papers, follower, st_positions[k % st_positions.len()]);
        cite(edges, papers, follower, sb);
    }

    Ok(PlantedTriad {
        sb_id,
        pr_id,
        st_ids,
        sleep_years: spec.sleep_years,
        burst_size: spec.burst_size,
        awakening_year: y_burst - 1,
        y_pr,
    })
}

/// Serialize papers to the `papers.tsv` interchange format, prefixed with
/// `#`-comment header lines.
pub fn write_papers_tsv<W: std::io::Write>(
    mut w: W,
    papers: &[PaperRecord],
    comments: &[String],
) -> Result<()> {
    for c in comments {
        writeln!(w, "# {c}")?;
    }
    writeln!(w, "id\tyear\tdoc_type\tfield_code")?;
    for p in papers {
        writeln!(w, "{}\t{}\t{}\t{}", p.id, p.year, p.doc_type.as_str(), p.field_code)?;
    }
    Ok(())
}

/// Serialize edges to the `citations.tsv` interchange format.
pub fn write_citations_tsv<W: std::io::Write>(
    mut w: W,
    papers: &[PaperRecord],
    edges: &[CitationEdge],
    comments: &[String],
) -> Result<()> {
    for c in comments {
        writeln!(w, "# {c}")?;
    }
    writeln!(w, "citing\tcited")?;
    for e in edges {
        writeln!(
            w,
            "{}\t{}",
            papers[e.citing as usize].id,
            papers[e.cited as usize].id
        )?;
    }
    Ok(())
}
