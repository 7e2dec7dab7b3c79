//! Citation dynamics: Beauty Coefficient, awakening time, field/time
//! corrected citation percentiles, and sleeping-beauty selection.
//!
//! For a yearly citation series `c_0..c_N`, let `t_m` be the earliest age
//! of the maximum count and `l(t) = (c_tm - c_0)/t_m * t + c_0` the
//! reference line from the publication-year count to the peak. Then
//!
//! ```text
//! B = sum_{t=0}^{t_m} (l(t) - c_t) / max(1, c_t)
//! ```
//!
//! measures how far the trajectory sags under that line (B = 0 when the
//! peak is at age zero). The awakening age `t_a` is the age in `[0, t_m]`
//! maximizing the point-to-line distance
//!
//! ```text
//! d(t) = |(c_tm - c_0) t - t_m c_t + t_m c_0| / sqrt((c_tm - c_0)^2 + t_m^2)
//! ```
//!
//! with ties broken toward the earliest age. B can be negative for papers
//! whose trajectory bulges above the line; that is expected and such
//! values stay in the selection quantile.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use crate::corpus::{CitationSeries, CorpusIndex, DocType, PaperIdx};
use crate::error::{Error, Result};

/// Beauty Coefficient, peak age and awakening age for one series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BeautyResult {
    pub b: f64,
    pub t_m: usize,
    pub t_a: usize,
    pub awakening_year: i32,
}

/// A selected sleeping beauty: id, dynamics, and its field/time corrected
/// citation percentile.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SleepingBeautyRecord {
    pub id: String,
    #[serde(flatten)]
    pub beauty: BeautyResult,
    pub corrected_percentile: f64,
}

/// Selection thresholds and switches for [`select_sleeping_beauties`].
#[derive(Debug, Clone, PartialEq)]
pub struct SbConfig {
    /// Keep papers at or above this corrected-citation percentile.
    pub citation_pct: f64,
    /// Keep papers whose B reaches this quantile of the survivor B's.
    pub b_pct: f64,
    /// Document types eligible for selection.
    pub doc_types: Vec<DocType>,
    /// Count citations up to this year; defaults to the corpus range end.
    pub horizon: Option<i32>,
    /// Compute the B quantile within each field instead of globally.
    pub per_field_b_quantile: bool,
}

impl Default for SbConfig {
    fn default() -> Self {
        SbConfig {
            citation_pct: 0.95,
            b_pct: 0.99,
            doc_types: vec![DocType::Article, DocType::ConferencePaper],
            horizon: None,
            per_field_b_quantile: false,
        }
    }
}

fn peak_age(counts: &[u32]) -> usize {
    let mut best = 0usize;
    for (t, &c) in counts.iter().enumerate() {
        if c > counts[best] {
            best = t;
        }
    }
    best
}

/// Beauty Coefficient and peak age. B is defined as 0 when the series
/// peaks in its first year.
pub fn beauty_coefficient(series: &CitationSeries) -> Result<(f64, usize)> {
    if series.counts.is_empty() {
        return Err(Error::EmptySeries);
    }
    let t_m = peak_age(&series.counts);
    if t_m == 0 {
        return Ok((0.0, 0));
    }
    let c0 = f64::from(series.counts[0]);
    let ctm = f64::from(series.counts[t_m]);
    let slope = (ctm - c0) / t_m as f64;
    let mut b = 0.0;
    for (t, &c) in series.counts[..=t_m].iter().enumerate() {
        let c = f64::from(c);
        b += (slope * t as f64 + c0 - c) / c.max(1.0);
    }
    Ok((b, t_m))
}

/// Awakening age: the age in `[0, t_m]` farthest from the reference line,
/// earliest on ties. Zero when the peak is at age zero.
pub fn awakening_time(series: &CitationSeries) -> Result<usize> {
    if series.counts.is_empty() {
        return Err(Error::EmptySeries);
    }
    let t_m = peak_age(&series.counts);
    if t_m == 0 {
        return Ok(0);
    }
    let c0 = f64::from(series.counts[0]);
    let ctm = f64::from(series.counts[t_m]);
    // The denominator sqrt((ctm-c0)^2 + t_m^2) is constant over t, so the
    // argmax of the numerator is the argmax of d.
    let mut best_t = 0usize;
    let mut best = 0.0f64;
    for (t, &c) in series.counts[..=t_m].iter().enumerate() {
        let num = ((ctm - c0) * t as f64 - t_m as f64 * f64::from(c) + t_m as f64 * c0).abs();
        if num > best {
            best = num;
            best_t = t;
        }
    }
    Ok(best_t)
}

/// Compute b, t_m, t_a and the awakening calendar year in one pass.
pub fn beauty_result(series: &CitationSeries) -> Result<BeautyResult> {
    let (b, t_m) = beauty_coefficient(series)?;
    let t_a = awakening_time(series)?;
    Ok(BeautyResult {
        b,
        t_m,
        t_a,
        awakening_year: series.pub_year + t_a as i32,
    })
}

/// Percentile of each paper's citation count within its (field, year)
/// cohort, counting citations up to `horizon_year`.
///
/// Percentile is the fraction of the cohort with a strictly lower count
/// plus half the tied fraction (self included); singleton cohorts get 1.0.
/// Returned vector is indexed by [`PaperIdx`].
pub fn corrected_citation_percentile(index: &CorpusIndex, horizon_year: i32) -> Vec<f64> {
    let n = index.len();
    let counts: Vec<u32> = index
        .paper_indices()
        .map(|p| {
            let pub_year = index.year_of(p);
            index
                .citers_between(p, pub_year.min(horizon_year), horizon_year)
                .len() as u32
        })
        .collect();

    let mut cohorts: HashMap<(u16, i32), Vec<PaperIdx>> = HashMap::new();
    for p in index.paper_indices() {
        cohorts
            .entry((index.field_code_of(p), index.year_of(p)))
            .or_default()
            .push(p);
    }

    let mut pct = vec![0.0f64; n];
    for members in cohorts.values_mut() {
        if members.len() == 1 {
            pct[members[0].index()] = 1.0;
            continue;
        }
        members.sort_unstable_by_key(|p| counts[p.index()]);
        let total = members.len() as f64;
        let mut lo = 0;
        while lo < members.len() {
            let mut hi = lo + 1;
            while hi < members.len()
                && counts[members[hi].index()] == counts[members[lo].index()]
            {
                hi += 1;
            }
            let value = (lo as f64 + 0.5 * (hi - lo) as f64) / total;
            for m in &members[lo..hi] {
                pct[m.index()] = value;
            }
            lo = hi;
        }
    }
    pct
}

/// Nearest-rank quantile threshold: with values sorted ascending, the
/// value below the top `round((1-q)*n)` entries. `q = 0` keeps everything.
fn quantile_threshold(values: &mut [f64], q: f64) -> f64 {
    values.sort_unstable_by(|a, b| a.partial_cmp(b).expect("finite B values"));
    let n = values.len();
    let keep = (((1.0 - q) * n as f64).round() as usize).clamp(1, n);
    values[n - keep]
}

/// Select the sleeping-beauty population.
///
/// Pipeline order is fixed: document-type filter, corrected-percentile
/// filter, Beauty Coefficient over the survivors, then the B-quantile cut
/// computed over those survivors (not the whole corpus). Output is sorted
/// by id.
pub fn select_sleeping_beauties(
    index: &CorpusIndex,
    config: &SbConfig,
) -> Result<Vec<SleepingBeautyRecord>> {
    if index.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let horizon = config.horizon.unwrap_or_else(|| index.year_range().end());
    let pct = corrected_citation_percentile(index, horizon);

    let survivors: Vec<PaperIdx> = index
        .paper_indices()
        .filter(|&p| config.doc_types.contains(&index.doc_type_of(p)))
        .filter(|&p| index.year_of(p) <= horizon)
        .filter(|&p| pct[p.index()] >= config.citation_pct)
        .collect();
    if survivors.is_empty() {
        return Ok(Vec::new());
    }

    let mut scored: Vec<(PaperIdx, BeautyResult)> = survivors
        .par_iter()
        .map(|&p| {
            let series = index.series_for(p, horizon).expect("pub_year <= horizon");
            (p, beauty_result(&series).expect("non-empty series"))
        })
        .collect();
    scored.sort_unstable_by_key(|&(p, _)| p);

    let make = |p: PaperIdx, r: &BeautyResult| SleepingBeautyRecord {
        id: index.id_of(p).to_string(),
        beauty: *r,
        corrected_percentile: pct[p.index()],
    };

    let mut out = Vec::new();
    if config.per_field_b_quantile {
        let mut by_field: HashMap<u16, Vec<f64>> = HashMap::new();
        for &(p, ref r) in &scored {
            by_field.entry(index.field_code_of(p)).or_default().push(r.b);
        }
        let thresholds: HashMap<u16, f64> = by_field
            .into_iter()
            .map(|(f, mut bs)| (f, quantile_threshold(&mut bs, config.b_pct)))
            .collect();
        for &(p, ref r) in &scored {
            if r.b >= thresholds[&index.field_code_of(p)] {
                out.push(make(p, r));
            }
        }
    } else {
        let mut bs: Vec<f64> = scored.iter().map(|(_, r)| r.b).collect();
        let threshold = quantile_threshold(&mut bs, config.b_pct);
        for &(p, ref r) in &scored {
            if r.b >= threshold {
                out.push(make(p, r));
            }
        }
    }
    Ok(out)
}
