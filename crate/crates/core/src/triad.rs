//! Prince and storyteller extraction for each sleeping beauty, and the
//! group partition behind the propagation table.
//!
//! The prince of a sleeping beauty is the paper most co-cited with it over
//! the whole corpus horizon, among papers published before the awakening
//! year. Candidate enumeration walks the SB's citers' reference lists (the
//! only papers with nonzero co-citation), never the full corpus.
//! Storytellers are the papers citing both SB and prince inside the window
//! from the prince's publication year to the awakening year.

use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use crate::corpus::{CorpusIndex, PaperIdx, YearWindow};
use crate::dynamics::SleepingBeautyRecord;
use crate::error::{Error, Result};

/// Why a sleeping beauty has no prince.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AbsenceReason {
    /// A prince exists.
    None,
    /// The SB received no citations before its awakening year.
    NoCitationsBeforeBurst,
    /// The SB has pre-awakening citers, but none of its co-cited papers
    /// was published before the awakening.
    NoCoCitedPapers,
}

/// The most co-cited pre-awakening companion of one sleeping beauty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrinceRecord {
    pub sb_id: String,
    pub pr_id: Option<String>,
    pub co_citation_count: usize,
    pub y_pr: Option<i32>,
    pub absence_reason: AbsenceReason,
}

impl PrinceRecord {
    fn absent(sb_id: &str, reason: AbsenceReason) -> PrinceRecord {
        PrinceRecord {
            sb_id: sb_id.to_string(),
            pr_id: None,
            co_citation_count: 0,
            y_pr: None,
            absence_reason: reason,
        }
    }
}

/// One SB with its prince, storytellers and window citation counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TriadRecord {
    pub sb_id: String,
    pub prince: PrinceRecord,
    pub storytellers: Vec<String>,
    pub c_sb_window: usize,
    pub c_pr_window: usize,
    pub awakening_year: i32,
    /// The storyteller window `[y_pr, awakening]` actually used; `None`
    /// for princeless records.
    pub window: Option<YearWindow>,
}

/// Window-citer partition for one triad: SB-only citers, prince-only
/// citers, and the co-citing storytellers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPartition {
    pub sb_only: Vec<PaperIdx>,
    pub pr_only: Vec<PaperIdx>,
    pub both: Vec<PaperIdx>,
}

/// Strictness switches for prince and storyteller windows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriadConfig {
    /// Count co-citations up to this year; defaults to the corpus range end.
    pub cutoff_year: Option<i32>,
    /// Prince publication must be strictly before the awakening year
    /// (`false` allows the awakening year itself).
    pub prince_strict_before: bool,
    /// Storyteller window includes the awakening year (`false` stops the
    /// year before).
    pub st_end_inclusive: bool,
}

impl Default for TriadConfig {
    fn default() -> Self {
        TriadConfig {
            cutoff_year: None,
            prince_strict_before: true,
            st_end_inclusive: true,
        }
    }
}

impl TriadConfig {
    fn st_end(&self, awakening_year: i32) -> i32 {
        if self.st_end_inclusive {
            awakening_year
        } else {
            awakening_year - 1
        }
    }
}

/// Number of distinct papers published by `cutoff_year` citing both `a`
/// and `b`.
pub fn co_citation_count(
    index: &CorpusIndex,
    a: &str,
    b: &str,
    cutoff_year: i32,
) -> Result<usize> {
    if a == b {
        return Err(Error::SamePaper(a.to_string()));
    }
    let a = index.require(a)?;
    let b = index.require(b)?;
    let min_year = index.year_range().start();
    let ca = index.citers_between(a, min_year, cutoff_year);
    let cb = index.citers_between(b, min_year, cutoff_year);
    // Both slices are (year, id)-sorted; intersect by that key.
    let key = |p: PaperIdx| (index.year_of(p), p);
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < ca.len() && j < cb.len() {
        match key(ca[i]).cmp(&key(cb[j])) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    Ok(n)
}

/// Find the prince of `sb_id` given its awakening year.
///
/// Ties on co-citation count break toward the earlier publication year,
/// then the smaller id, so the result is a total-order argmax.
pub fn find_prince(
    index: &CorpusIndex,
    sb_id: &str,
    awakening_year: i32,
    config: &TriadConfig,
) -> Result<PrinceRecord> {
    let sb = index.require(sb_id)?;
    let min_year = index.year_range().start();
    let cutoff = config.cutoff_year.unwrap_or_else(|| index.year_range().end());

    if index
        .citers_between(sb, min_year, awakening_year - 1)
        .is_empty()
    {
        return Ok(PrinceRecord::absent(sb_id, AbsenceReason::NoCitationsBeforeBurst));
    }

    let candidate_ok = |p: PaperIdx| {
        let y = index.year_of(p);
        p != sb
            && (y < awakening_year || (!config.prince_strict_before && y == awakening_year))
    };

    // Two-hop walk: each SB citer contributes at most one co-citation per
    // referenced paper because reference lists are duplicate-free.
    let mut counts: HashMap<PaperIdx, usize> = HashMap::new();
    for &citer in index.citers_between(sb, min_year, cutoff) {
        for &r in index.references(citer) {
            if candidate_ok(r) {
                *counts.entry(r).or_insert(0) += 1;
            }
        }
    }
    if counts.is_empty() {
        return Ok(PrinceRecord::absent(sb_id, AbsenceReason::NoCoCitedPapers));
    }

    let (winner, count) = counts
        .into_iter()
        .max_by(|&(p1, n1), &(p2, n2)| {
            n1.cmp(&n2)
                .then_with(|| index.year_of(p2).cmp(&index.year_of(p1)))
                .then_with(|| p2.cmp(&p1))
        })
        .expect("non-empty candidate set");

    Ok(PrinceRecord {
        sb_id: sb_id.to_string(),
        pr_id: Some(index.id_of(winner).to_string()),
        co_citation_count: count,
        y_pr: Some(index.year_of(winner)),
        absence_reason: AbsenceReason::None,
    })
}

fn st_indices(
    index: &CorpusIndex,
    sb: PaperIdx,
    pr: PaperIdx,
    y_pr: i32,
    end: i32,
) -> Vec<PaperIdx> {
    let ca = index.citers_between(sb, y_pr, end);
    let cb = index.citers_between(pr, y_pr, end);
    let key = |p: PaperIdx| (index.year_of(p), p);
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < ca.len() && j < cb.len() {
        match key(ca[i]).cmp(&key(cb[j])) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(ca[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Papers citing both the SB and its prince within `[y_pr, awakening]`,
/// in (year, id) order.
pub fn find_storytellers(
    index: &CorpusIndex,
    prince: &PrinceRecord,
    awakening_year: i32,
    config: &TriadConfig,
) -> Result<Vec<String>> {
    let pr_id = prince.pr_id.as_deref().ok_or(Error::NoPrince)?;
    let sb = index.require(&prince.sb_id)?;
    let pr = index.require(pr_id)?;
    let y_pr = prince.y_pr.expect("pr_id present implies y_pr present");
    Ok(
        st_indices(index, sb, pr, y_pr, config.st_end(awakening_year))
            .into_iter()
            .map(|p| index.id_of(p).to_string())
            .collect(),
    )
}

/// Split the window citers of SB and prince into SB-only, prince-only and
/// co-citing sets. The three sets are pairwise disjoint and union to the
/// window citers of SB or prince; `both` equals the storyteller set.
pub fn partition_groups(index: &CorpusIndex, triad: &TriadRecord) -> Result<GroupPartition> {
    let pr_id = triad.prince.pr_id.as_deref().ok_or(Error::NoPrince)?;
    let window = triad.window.ok_or(Error::NoPrince)?;
    let sb = index.require(&triad.sb_id)?;
    let pr = index.require(pr_id)?;
    let ca = index.citers_between(sb, window.start(), window.end());
    let cb = index.citers_between(pr, window.start(), window.end());

    let key = |p: PaperIdx| (index.year_of(p), p);
    let mut sb_only = Vec::new();
    let mut pr_only = Vec::new();
    let mut both = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < ca.len() || j < cb.len() {
        if i == ca.len() {
            pr_only.push(cb[j]);
            j += 1;
        } else if j == cb.len() {
            sb_only.push(ca[i]);
            i += 1;
        } else {
            match key(ca[i]).cmp(&key(cb[j])) {
                std::cmp::Ordering::Less => {
                    sb_only.push(ca[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    pr_only.push(cb[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    both.push(ca[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    Ok(GroupPartition {
        sb_only,
        pr_only,
        both,
    })
}

/// Run prince and storyteller extraction for one selected SB and assemble
/// its [`TriadRecord`].
pub fn extract_triad(
    index: &CorpusIndex,
    sb: &SleepingBeautyRecord,
    config: &TriadConfig,
) -> Result<TriadRecord> {
    let awakening_year = sb.beauty.awakening_year;
    let prince = find_prince(index, &sb.id, awakening_year, config)?;
    if prince.pr_id.is_none() {
        return Ok(TriadRecord {
            sb_id: sb.id.clone(),
            prince,
            storytellers: Vec::new(),
            c_sb_window: 0,
            c_pr_window: 0,
            awakening_year,
            window: None,
        });
    }
    let storytellers = find_storytellers(index, &prince, awakening_year, config)?;
    let y_pr = prince.y_pr.expect("prince present");
    let end = config.st_end(awakening_year).max(y_pr);
    let window = YearWindow::new(y_pr, end).expect("y_pr <= end by construction");
    let sb_idx = index.require(&sb.id)?;
    let pr_idx = index.require(prince.pr_id.as_deref().expect("prince present"))?;
    Ok(TriadRecord {
        sb_id: sb.id.clone(),
        prince,
        storytellers,
        c_sb_window: index.citers_between(sb_idx, window.start(), window.end()).len(),
        c_pr_window: index.citers_between(pr_idx, window.start(), window.end()).len(),
        awakening_year,
        window: Some(window),
    })
}
