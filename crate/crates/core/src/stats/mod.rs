//! Distribution and propagation statistics over extracted triads:
//! storyteller-ratio samples, their densities, the storyteller-count pmf,
//! and the group-conditional propagation table.

mod kde;
mod propagation;

pub use kde::{silverman_bandwidth, KdeModel};
pub use propagation::{
    propagation_table, ENsbVariant, Group, PropagationConfig, PropagationRow, PropagationTable,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::triad::TriadRecord;

/// Which window counts must clear the threshold for a triad to qualify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FilterMode {
    /// At least one of the two window counts must exceed its minimum.
    Either,
    /// Both window counts must exceed their minimums.
    Both,
}

/// Qualification filter on triad window citation counts. Comparisons are
/// strict: a count equal to the minimum does not qualify.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RatioFilter {
    pub min_csb: usize,
    pub min_cpr: usize,
    pub mode: FilterMode,
}

impl Default for RatioFilter {
    fn default() -> Self {
        RatioFilter {
            min_csb: 10,
            min_cpr: 10,
            mode: FilterMode::Either,
        }
    }
}

impl RatioFilter {
    pub(crate) fn qualifies(&self, triad: &TriadRecord) -> bool {
        if triad.prince.pr_id.is_none() {
            return false;
        }
        let sb_ok = triad.c_sb_window > self.min_csb;
        let pr_ok = triad.c_pr_window > self.min_cpr;
        match self.mode {
            FilterMode::Either => sb_ok || pr_ok,
            FilterMode::Both => sb_ok && pr_ok,
        }
    }
}

/// Storyteller share of one triad's window citations. Each ratio is
/// present only when its window count clears the filter minimum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioSample {
    pub sb_id: String,
    pub st_over_csb: Option<f64>,
    pub st_over_cpr: Option<f64>,
    pub n_st: usize,
}

/// One sample per qualifying triad, in input order.
pub fn storyteller_ratios(triads: &[TriadRecord], filter: &RatioFilter) -> Vec<RatioSample> {
    triads
        .iter()
        .filter(|t| filter.qualifies(t))
        .map(|t| {
            let n_st = t.storytellers.len();
            let ratio = |count: usize, min: usize| {
                (count > min).then(|| n_st as f64 / count as f64)
            };
            RatioSample {
                sb_id: t.sb_id.clone(),
                st_over_csb: ratio(t.c_sb_window, filter.min_csb),
                st_over_cpr: ratio(t.c_pr_window, filter.min_cpr),
                n_st,
            }
        })
        .collect()
}

/// Empirical probability mass function of the storyteller count over
/// qualifying triads, sorted by count. Probabilities sum to one.
pub fn st_count_pmf(triads: &[TriadRecord], filter: &RatioFilter) -> Result<Vec<(usize, f64)>> {
    let mut counts = std::collections::BTreeMap::new();
    let mut total = 0usize;
    for t in triads.iter().filter(|t| filter.qualifies(t)) {
        *counts.entry(t.storytellers.len()).or_insert(0usize) += 1;
        total += 1;
    }
    if total == 0 {
        return Err(Error::EmptyInput);
    }
    Ok(counts
        .into_iter()
        .map(|(n, c)| (n, c as f64 / total as f64))
        .collect())
}
