//! Group-conditional propagation rates: how often post-awakening citers
//! of each window group come back to the SB and the prince.
//!
//! For one triad and a group G of window citers, let `F_G` be the distinct
//! papers published after the awakening year citing at least one member of
//! G. Then
//!
//! ```text
//! e_sb(G)  = |{f in F_G : f cites SB}| / |F_G|
//! e_pr(G)  = |{f in F_G : f cites PR}| / |F_G|
//! e_nsb(G) = |{f in F_G : f cites SB}| / |{f in F_ST : f cites SB}|
//! ```
//!
//! so the storyteller row has `e_nsb = 1` whenever it is defined. A triad
//! contributes to a row only when that row's denominator and the shared
//! storyteller-based denominator are both nonzero (paired comparison:
//! a triad unusable for the ST row is dropped from every row). Table
//! entries are unweighted means over contributing triads; a pooled
//! (micro-average) variant divides summed numerators by summed
//! denominators instead.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{CorpusIndex, PaperIdx};
use crate::error::Result;
use crate::triad::{partition_groups, TriadRecord};

use super::RatioFilter;

/// Row label of the propagation table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Group {
    SbOnly,
    PrOnly,
    Storyteller,
}

pub const GROUPS: [Group; 3] = [Group::SbOnly, Group::PrOnly, Group::Storyteller];

/// Denominator of the relative-size column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ENsbVariant {
    /// Papers citing both an ST member and the SB (the default).
    SbConjunctive,
    /// All papers citing an ST member, with plain |F_G| in the numerator.
    GroupCitersOnly,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagationConfig {
    pub filter: RatioFilter,
    pub e_nsb_variant: ENsbVariant,
    /// Pool citing papers across triads instead of averaging per-triad
    /// rates.
    pub pooled: bool,
}

impl Default for PropagationConfig {
    fn default() -> Self {
        PropagationConfig {
            filter: RatioFilter {
                mode: super::FilterMode::Both,
                ..RatioFilter::default()
            },
            e_nsb_variant: ENsbVariant::SbConjunctive,
            pooled: false,
        }
    }
}

/// One row of the table. Means are `None` when no triad contributed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropagationRow {
    pub group: Group,
    pub e_sb: Option<f64>,
    pub e_pr: Option<f64>,
    pub e_nsb: Option<f64>,
    pub n_triads: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropagationTable {
    pub rows: Vec<PropagationRow>,
}

/// Per-triad, per-group raw counts.
#[derive(Debug, Clone, Copy)]
struct GroupCounts {
    f_g: usize,
    cites_sb: usize,
    cites_pr: usize,
}

struct TriadCounts {
    sb_id: String,
    groups: [GroupCounts; 3],
}

/// Distinct post-awakening citers of any member of `members`, as a sorted
/// deduplicated index list.
fn followers(
    index: &CorpusIndex,
    members: &[PaperIdx],
    awakening_year: i32,
) -> Vec<PaperIdx> {
    let end = index.year_range().end();
    let mut out = Vec::new();
    for &m in members {
        out.extend_from_slice(index.citers_between(m, awakening_year + 1, end));
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn count_group(
    index: &CorpusIndex,
    members: &[PaperIdx],
    sb: PaperIdx,
    pr: PaperIdx,
    awakening_year: i32,
) -> GroupCounts {
    let f_g = followers(index, members, awakening_year);
    let cites_sb = f_g.iter().filter(|&&f| index.cites(f, sb)).count();
    let cites_pr = f_g.iter().filter(|&&f| index.cites(f, pr)).count();
    GroupCounts {
        f_g: f_g.len(),
        cites_sb,
        cites_pr,
    }
}

fn triad_counts(index: &CorpusIndex, triad: &TriadRecord) -> Result<TriadCounts> {
    let part = partition_groups(index, triad)?;
    let sb = index.require(&triad.sb_id)?;
    let pr = index.require(triad.prince.pr_id.as_deref().expect("qualifying triad"))?;
    let y = triad.awakening_year;
    Ok(TriadCounts {
        sb_id: triad.sb_id.clone(),
        groups: [
            count_group(index, &part.sb_only, sb, pr, y),
            count_group(index, &part.pr_only, sb, pr, y),
            count_group(index, &part.both, sb, pr, y),
        ],
    })
}

/// Build the three-row propagation table over qualifying triads.
///
/// The result is independent of triad input order: contributions are
/// sorted by SB id before accumulation.
pub fn propagation_table(
    index: &CorpusIndex,
    triads: &[TriadRecord],
    config: &PropagationConfig,
) -> Result<PropagationTable> {
    let qualifying: Vec<&TriadRecord> = triads
        .iter()
        .filter(|t| config.filter.qualifies(t))
        .collect();

    let mut counted: Vec<TriadCounts> = qualifying
        .par_iter()
        .map(|t| triad_counts(index, t))
        .collect::<Result<_>>()?;
    counted.sort_unstable_by(|a, b| a.sb_id.cmp(&b.sb_id));

    let mut rows = Vec::with_capacity(3);
    for (gi, &group) in GROUPS.iter().enumerate() {
        let mut n_triads = 0usize;
        // Macro accumulators (sums of per-triad rates) or pooled
        // accumulators (sums of counts), depending on config.
        let (mut acc_sb, mut acc_pr, mut acc_nsb) = (0.0f64, 0.0f64, 0.0f64);
        let (mut den_g, mut den_st) = (0.0f64, 0.0f64);

        for tc in &counted {
            let st = tc.groups[2];
            let st_denom = match config.e_nsb_variant {
                ENsbVariant::SbConjunctive => st.cites_sb,
                ENsbVariant::GroupCitersOnly => st.f_g,
            };
            let g = tc.groups[gi];
            if g.f_g == 0 || st_denom == 0 {
                continue;
            }
            n_triads += 1;
            let nsb_num = match config.e_nsb_variant {
                ENsbVariant::SbConjunctive => g.cites_sb,
                ENsbVariant::GroupCitersOnly => g.f_g,
            };
            if config.pooled {
                acc_sb += g.cites_sb as f64;
                acc_pr += g.cites_pr as f64;
                acc_nsb += nsb_num as f64;
                den_g += g.f_g as f64;
                den_st += st_denom as f64;
            } else {
                acc_sb += g.cites_sb as f64 / g.f_g as f64;
                acc_pr += g.cites_pr as f64 / g.f_g as f64;
                acc_nsb += nsb_num as f64 / st_denom as f64;
            }
        }

        let row = if n_triads == 0 {
            PropagationRow {
                group,
                e_sb: None,
                e_pr: None,
                e_nsb: None,
                n_triads: 0,
            }
        } else if config.pooled {
            PropagationRow {
                group,
                e_sb: Some(acc_sb / den_g),
                e_pr: Some(acc_pr / den_g),
                e_nsb: Some(acc_nsb / den_st),
                n_triads,
            }
        } else {
            let n = n_triads as f64;
            PropagationRow {
                group,
                e_sb: Some(acc_sb / n),
                e_pr: Some(acc_pr / n),
                e_nsb: Some(acc_nsb / n),
                n_triads,
            }
        };
        rows.push(row);
    }
    Ok(PropagationTable { rows })
}
