//! Exhaustive reference implementations of the prince and storyteller
//! queries, working directly on raw paper/edge lists with no index.
//!
//! These are deliberately slow and deliberately independent of the indexed
//! code paths; the fast implementations are tested against them on
//! synthetic corpora.

use std::collections::HashSet;

use crate::corpus::{CitationEdge, PaperRecord, YearWindow};
use crate::triad::{AbsenceReason, PrinceRecord};

fn position(papers: &[PaperRecord], id: &str) -> Option<usize> {
    papers.iter().position(|p| p.id == id)
}

/// Brute-force prince: scan every paper as a candidate and count its
/// co-citations with the SB by set membership. Matches the default
/// strictness of the indexed implementation (prince strictly before the
/// awakening year, co-citations counted through `cutoff_year`).
pub fn oracle_prince(
    papers: &[PaperRecord],
    edges: &[CitationEdge],
    sb_id: &str,
    awakening_year: i32,
    cutoff_year: i32,
) -> PrinceRecord {
    let absent = |reason| PrinceRecord {
        sb_id: sb_id.to_string(),
        pr_id: None,
        co_citation_count: 0,
        y_pr: None,
        absence_reason: reason,
    };
    let sb = match position(papers, sb_id) {
        Some(p) => p as u32,
        None => return absent(AbsenceReason::NoCitationsBeforeBurst),
    };

    let edge_set: HashSet<(u32, u32)> = edges.iter().map(|e| (e.citing, e.cited)).collect();
    let sb_citers: Vec<u32> = edges
        .iter()
        .filter(|e| e.cited == sb)
        .map(|e| e.citing)
        .collect();

    if !sb_citers
        .iter()
        .any(|&c| papers[c as usize].year < awakening_year)
    {
        return absent(AbsenceReason::NoCitationsBeforeBurst);
    }
    let counting_citers: Vec<u32> = sb_citers
        .into_iter()
        .filter(|&c| papers[c as usize].year <= cutoff_year)
        .collect();

    let mut best: Option<(usize, i32, &str, u32)> = None;
    for (pos, candidate) in papers.iter().enumerate() {
        let pos = pos as u32;
        if pos == sb || candidate.year >= awakening_year {
            continue;
        }
        let count = counting_citers
            .iter()
            .filter(|&&c| edge_set.contains(&(c, pos)))
            .count();
        if count == 0 {
            continue;
        }
        let better = match best {
            None => true,
            Some((bc, by, bid, _)) => {
                count > bc
                    || (count == bc
                        && (candidate.year < by || (candidate.year == by && candidate.id.as_str() < bid)))
            }
        };
        if better {
            best = Some((count, candidate.year, candidate.id.as_str(), pos));
        }
    }

    match best {
        None => absent(AbsenceReason::NoCoCitedPapers),
        Some((count, year, id, _)) => PrinceRecord {
            sb_id: sb_id.to_string(),
            pr_id: Some(id.to_string()),
            co_citation_count: count,
            y_pr: Some(year),
            absence_reason: AbsenceReason::None,
        },
    }
}

/// Brute-force storytellers: every paper in the window citing both SB and
/// prince, sorted by (year, id).
pub fn oracle_storytellers(
    papers: &[PaperRecord],
    edges: &[CitationEdge],
    sb_id: &str,
    pr_id: &str,
    window: YearWindow,
) -> Vec<String> {
    let (sb, pr) = match (position(papers, sb_id), position(papers, pr_id)) {
        (Some(a), Some(b)) => (a as u32, b as u32),
        _ => return Vec::new(),
    };
    let edge_set: HashSet<(u32, u32)> = edges.iter().map(|e| (e.citing, e.cited)).collect();
    let mut hits: Vec<&PaperRecord> = papers
        .iter()
        .enumerate()
        .filter(|&(pos, p)| {
            window.contains(p.year)
                && edge_set.contains(&(pos as u32, sb))
                && edge_set.contains(&(pos as u32, pr))
        })
        .map(|(_, p)| p)
        .collect();
    hits.sort_by_key(|p| (p.year, p.id.as_str()));
    hits.iter().map(|p| p.id.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{CorpusConfig, CorpusIndex, DocType};
    use crate::synth::{generate_ca_corpus, SynthConfig};
    use crate::triad::{find_prince, find_storytellers, TriadConfig};

    #[test]
    fn empty_edge_list_has_no_prince() {
        let papers = vec![PaperRecord {
            id: "SB".into(),
            year: 1980,
            doc_type: DocType::Article,
            field_code: 0,
        }];
        let pr = oracle_prince(&papers, &[], "SB", 2000, 2020);
        assert_eq!(pr.pr_id, None);
        assert_eq!(pr.absence_reason, AbsenceReason::NoCitationsBeforeBurst);
    }

    /// Fast and slow implementations must agree on every paper of a
    /// generated corpus, across several awakening cutoffs.
    #[test]
    fn indexed_queries_match_oracles_on_a_generated_corpus() {
        let cfg = SynthConfig {
            n_papers: 600,
            refs_per_paper: 3,
            seed: 21,
            ..SynthConfig::default()
        };
        let (papers, edges) = generate_ca_corpus(&cfg).unwrap();
        let index = CorpusIndex::build(papers.clone(), &edges, &CorpusConfig::default()).unwrap();
        let cutoff = index.year_range().end();
        let triad_cfg = TriadConfig::default();

        let mut checked = 0;
        for p in papers.iter().step_by(7) {
            let awakening = p.year + 12;
            let fast = find_prince(&index, &p.id, awakening, &triad_cfg).unwrap();
            let slow = oracle_prince(&papers, &edges, &p.id, awakening, cutoff);
            assert_eq!(fast, slow, "prince mismatch for {}", p.id);
            if let (Some(pr_id), Some(y_pr)) = (fast.pr_id.as_deref(), fast.y_pr) {
                let window = YearWindow::new(y_pr, awakening).unwrap();
                let fast_st = find_storytellers(&index, &fast, awakening, &triad_cfg).unwrap();
                let slow_st = oracle_storytellers(&papers, &edges, &p.id, pr_id, window);
                assert_eq!(fast_st, slow_st, "storyteller mismatch for {}", p.id);
            }
            checked += 1;
        }
        assert!(checked > 50);
    }
}
