//! Immutable bidirectional citation-graph index.
//!
//! Papers get dense `u32` indices assigned in lexicographic id order, so
//! index order and external-id order agree and every build of the same
//! corpus produces the same index regardless of input row order. Both
//! adjacency directions are CSR arrays: out-lists (references) sorted by
//! target, in-lists (citers) sorted by (citer year, citer id). The
//! year-major in-list order makes windowed citer queries a binary search
//! returning a contiguous slice.

use crate::error::{Error, Result};

use super::{CitationEdge, CitationSeries, CorpusConfig, DocType, PaperRecord, YearWindow};

/// Dense position of a paper inside a [`CorpusIndex`]. Ordering matches the
/// lexicographic ordering of external ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PaperIdx(pub(crate) u32);

impl PaperIdx {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Read-only citation graph plus per-paper metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusIndex {
    pub(crate) years_range: YearWindow,
    pub(crate) ids: Vec<String>,
    pub(crate) years: Vec<i32>,
    pub(crate) doc_types: Vec<DocType>,
    pub(crate) field_codes: Vec<u16>,
    pub(crate) out_offsets: Vec<u64>,
    pub(crate) out_targets: Vec<PaperIdx>,
    pub(crate) in_offsets: Vec<u64>,
    pub(crate) in_sources: Vec<PaperIdx>,
    pub(crate) edge_count: u64,
}

impl CorpusIndex {
    /// Freeze papers and edges into an index.
    ///
    /// Edges reference positions in `papers` (the ingest/generator order);
    /// they are remapped to id-sorted indices here. Duplicate edges are
    /// collapsed, so adjacency lists are duplicate-free by construction.
    pub fn build(
        papers: Vec<PaperRecord>,
        edges: &[CitationEdge],
        config: &CorpusConfig,
    ) -> Result<CorpusIndex> {
        let n = papers.len();
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_unstable_by(|&a, &b| papers[a as usize].id.cmp(&papers[b as usize].id));
        for w in order.windows(2) {
            if papers[w[0] as usize].id == papers[w[1] as usize].id {
                return Err(Error::DuplicateId(papers[w[0] as usize].id.clone()));
            }
        }
        let mut rank = vec![0u32; n];
        for (new_idx, &pos) in order.iter().enumerate() {
            rank[pos as usize] = new_idx as u32;
        }

        let mut ids = Vec::with_capacity(n);
        let mut years = Vec::with_capacity(n);
        let mut doc_types = Vec::with_capacity(n);
        let mut field_codes = Vec::with_capacity(n);
        for &pos in &order {
            let p = &papers[pos as usize];
            ids.push(p.id.clone());
            years.push(p.year);
            doc_types.push(p.doc_type);
            field_codes.push(p.field_code);
        }

        // Remap, sort once per direction, then fill CSR arrays. The edge
        // year is re-stamped from the citing paper: it is derived data and
        // the paper record is authoritative.
        let mut remapped: Vec<(u32, u32)> = edges
            .iter()
            .map(|e| (rank[e.citing as usize], rank[e.cited as usize]))
            .collect();
        remapped.sort_unstable();
        remapped.dedup();
        let edge_count = remapped.len() as u64;

        let mut out_offsets = vec![0u64; n + 1];
        for &(citing, _) in &remapped {
            out_offsets[citing as usize + 1] += 1;
        }
        for i in 0..n {
            out_offsets[i + 1] += out_offsets[i];
        }
        let out_targets: Vec<PaperIdx> = remapped.iter().map(|&(_, cited)| PaperIdx(cited)).collect();

        let mut in_edges: Vec<(u32, i32, u32)> = remapped
            .iter()
            .map(|&(citing, cited)| (cited, years[citing as usize], citing))
            .collect();
        in_edges.sort_unstable();
        let mut in_offsets = vec![0u64; n + 1];
        for &(cited, _, _) in &in_edges {
            in_offsets[cited as usize + 1] += 1;
        }
        for i in 0..n {
            in_offsets[i + 1] += in_offsets[i];
        }
        let in_sources: Vec<PaperIdx> = in_edges
            .iter()
            .map(|&(_, _, citing)| PaperIdx(citing))
            .collect();

        Ok(CorpusIndex {
            years_range: config.years,
            ids,
            years,
            doc_types,
            field_codes,
            out_offsets,
            out_targets,
            in_offsets,
            in_sources,
            edge_count,
        })
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn edge_count(&self) -> u64 {
        self.edge_count
    }

    /// The configured corpus year range (also the default horizon).
    pub fn year_range(&self) -> YearWindow {
        self.years_range
    }

    pub fn paper_indices(&self) -> impl Iterator<Item = PaperIdx> {
        (0..self.ids.len() as u32).map(PaperIdx)
    }

    pub fn contains(&self, id: &str) -> bool {
        self.idx_of(id).is_some()
    }

    pub fn idx_of(&self, id: &str) -> Option<PaperIdx> {
        self.ids
            .binary_search_by(|probe| probe.as_str().cmp(id))
            .ok()
            .map(|i| PaperIdx(i as u32))
    }

    pub(crate) fn require(&self, id: &str) -> Result<PaperIdx> {
        self.idx_of(id)
            .ok_or_else(|| Error::UnknownPaper(id.to_string()))
    }

    pub fn id_of(&self, idx: PaperIdx) -> &str {
        &self.ids[idx.index()]
    }

    pub fn year_of(&self, idx: PaperIdx) -> i32 {
        self.years[idx.index()]
    }

    pub fn doc_type_of(&self, idx: PaperIdx) -> DocType {
        self.doc_types[idx.index()]
    }

    pub fn field_code_of(&self, idx: PaperIdx) -> u16 {
        self.field_codes[idx.index()]
    }

    /// Papers this paper cites, sorted by target index (= by target id).
    pub fn references(&self, idx: PaperIdx) -> &[PaperIdx] {
        let lo = self.out_offsets[idx.index()] as usize;
        let hi = self.out_offsets[idx.index() + 1] as usize;
        &self.out_targets[lo..hi]
    }

    /// Papers citing this paper, sorted by (citer year, citer id).
    pub fn citers(&self, idx: PaperIdx) -> &[PaperIdx] {
        let lo = self.in_offsets[idx.index()] as usize;
        let hi = self.in_offsets[idx.index() + 1] as usize;
        &self.in_sources[lo..hi]
    }

    /// Whether `citing` has an edge to `cited`.
    pub fn cites(&self, citing: PaperIdx, cited: PaperIdx) -> bool {
        self.references(citing).binary_search(&cited).is_ok()
    }

    /// Citers with publication year in `[start, end]`, as a contiguous
    /// slice of the (year, id)-sorted in-list. Empty ranges are allowed.
    pub fn citers_between(&self, idx: PaperIdx, start: i32, end: i32) -> &[PaperIdx] {
        let list = self.citers(idx);
        if start > end {
            return &list[0..0];
        }
        let lo = list.partition_point(|&c| self.years[c.index()] < start);
        let hi = list.partition_point(|&c| self.years[c.index()] <= end);
        &list[lo..hi]
    }

    /// Citers of `id` within `window`, in (year, id) order, as external ids.
    pub fn citers_of(&self, id: &str, window: YearWindow) -> Result<Vec<&str>> {
        let idx = self.require(id)?;
        Ok(self
            .citers_between(idx, window.start(), window.end())
            .iter()
            .map(|&c| self.id_of(c))
            .collect())
    }

    /// Citation counts by age for `id`, from its publication year through
    /// `horizon_year` inclusive. Citations dated before the publication
    /// year or after the horizon are not binned.
    pub fn yearly_citation_series(&self, id: &str, horizon_year: i32) -> Result<CitationSeries> {
        let idx = self.require(id)?;
        self.series_for(idx, horizon_year)
    }

    pub(crate) fn series_for(&self, idx: PaperIdx, horizon_year: i32) -> Result<CitationSeries> {
        let pub_year = self.years[idx.index()];
        if horizon_year < pub_year {
            return Err(Error::HorizonBeforePublication {
                horizon: horizon_year,
                pub_year,
            });
        }
        let mut counts = vec![0u32; (horizon_year - pub_year + 1) as usize];
        for &citer in self.citers_between(idx, pub_year, horizon_year) {
            counts[(self.years[citer.index()] - pub_year) as usize] += 1;
        }
        Ok(CitationSeries { pub_year, counts })
    }
}
