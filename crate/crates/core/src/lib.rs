//! Citation-network analytics for long-dormant papers.
//!
//! The crate ingests paper metadata and citation edges into an immutable
//! graph index, scores every paper's citation trajectory (Beauty
//! Coefficient and awakening time), selects the sleeping-beauty
//! population, pairs each with its most co-cited pre-awakening companion
//! (the prince) and the early co-citing witnesses of that pair (the
//! storytellers), and computes distribution and propagation statistics
//! over the resulting triads. A seeded synthetic-corpus generator with
//! planted triads and brute-force oracles backs the test suite.

pub mod corpus;
pub mod dynamics;
pub mod error;
pub mod stats;
pub mod synth;
pub mod triad;

pub use corpus::{
    ingest_citations, ingest_papers, CitationEdge, CitationSeries, CorpusConfig, CorpusIndex,
    DocType, IngestReport, PaperIdx, PaperRecord, YearWindow,
};
pub use dynamics::{
    awakening_time, beauty_coefficient, beauty_result, corrected_citation_percentile,
    select_sleeping_beauties, BeautyResult, SbConfig, SleepingBeautyRecord,
};
pub use error::{Error, Result};
pub use stats::{
    propagation_table, silverman_bandwidth, st_count_pmf, storyteller_ratios, ENsbVariant,
    FilterMode, Group, KdeModel, PropagationConfig, PropagationRow, PropagationTable, RatioFilter,
    RatioSample,
};
pub use synth::{
    generate_ca_corpus, plant_triad, PlantSpec, PlantedTriad, SynthConfig, RNG_ALGORITHM,
};
pub use triad::{
    co_citation_count, extract_triad, find_prince, find_storytellers, partition_groups,
    AbsenceReason, GroupPartition, PrinceRecord, TriadConfig, TriadRecord,
};
