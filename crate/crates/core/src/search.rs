//! Scanning streams of graph6 records for graphs with many good vertices.
//!
//! Records are read in batches, analyzed in parallel on a dedicated rayon
//! pool, and emitted strictly in input order, so the output does not depend
//! on the worker count.

use std::io;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{analyze, proportion_serde, AnalysisError, DeltaSpectrum};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6, Graph6Error};
use crate::Proportion;

/// Hard cap for [`enumerate_connected`]; 2^21 edge subsets at n = 7.
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("enumeration is capped at n = {MAX_ENUMERATION_ORDER}, got n = {0}")]
    OrderTooLarge(usize),
    #[error("invalid filter: {0}")]
    InvalidFilter(String),
    #[error("malformed record on line {line}: {source}")]
    MalformedRecord {
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("analysis of record on line {line} failed: {source}")]
    Analysis {
        line: usize,
        #[source]
        source: AnalysisError,
    },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Every connected labeled graph on `n` vertices, in increasing order of the
/// edge-subset bitmask (bit `i` is the `i`-th pair in graph6 order).
///
/// Isomorphic copies are all produced; deduplication is left to external tools.
pub fn enumerate_connected(n: usize) -> Result<impl Iterator<Item = Graph>, SearchError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(SearchError::OrderTooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let subsets = 1u64 << pairs.len();
    Ok((0..subsets).filter_map(move |mask| {
        let mut adjacency = [0u8; MAX_ENUMERATION_ORDER];
        for (bit, &(u, v)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                adjacency[u] |= 1 << v;
                adjacency[v] |= 1 << u;
            }
        }
        if n > 1 && !mask_connected(&adjacency[..n]) {
            return None;
        }
        let edges: Vec<_> =
            pairs.iter().enumerate().filter(|&(bit, _)| mask >> bit & 1 == 1).map(|(_, &e)| e).collect();
        Some(Graph::from_edge_list(n, &edges).expect("distinct pairs"))
    }))
}

fn mask_connected(adjacency: &[u8]) -> bool {
    let all = ((1u16 << adjacency.len()) - 1) as u8;
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let mut next = 0u8;
        for (v, &nbrs) in adjacency.iter().enumerate() {
            if frontier >> v & 1 == 1 {
                next |= nbrs;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// graph6 records of [`enumerate_connected`].
pub fn enumerate_connected_records(n: usize) -> Result<impl Iterator<Item = String>, SearchError> {
    Ok(enumerate_connected(n)?.map(|g| emit_graph6(&g)))
}

/// Requires at least `min_count` vertices with `Δ_v = z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaTarget {
    pub z: i64,
    pub min_count: usize,
}

/// Conjunction of selection criteria; unset criteria always pass.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchFilter {
    pub min_good_count: Option<usize>,
    pub min_good_proportion: Option<Proportion>,
    pub require_all_good: bool,
    pub delta_target: Option<DeltaTarget>,
    pub max_order: Option<usize>,
}

impl SearchFilter {
    pub fn all_good() -> Self {
        SearchFilter { require_all_good: true, ..Self::default() }
    }

    pub fn min_proportion(p: Proportion) -> Self {
        SearchFilter { min_good_proportion: Some(p), ..Self::default() }
    }

    fn is_empty(&self) -> bool {
        *self == Self::default()
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.is_empty() {
            return Err(SearchError::InvalidFilter("at least one criterion must be set".into()));
        }
        if let Some(p) = self.min_good_proportion {
            if *p.numer() == 0 || p > Proportion::from_integer(1) {
                return Err(SearchError::InvalidFilter(format!(
                    "minimum proportion must lie in (0, 1], got {p}"
                )));
            }
        }
        if self.delta_target.is_some_and(|t| t.min_count == 0) {
            return Err(SearchError::InvalidFilter("delta target count must be at least 1".into()));
        }
        Ok(())
    }

    pub fn accepts_order(&self, n: usize) -> bool {
        self.max_order.is_none_or(|max| n <= max)
    }

    pub fn matches(&self, summary: &ReportSummary) -> bool {
        self.accepts_order(summary.n)
            && self.min_good_count.is_none_or(|c| summary.good_count >= c)
            && self.min_good_proportion.is_none_or(|p| summary.good_proportion >= p)
            && (!self.require_all_good || (summary.n > 0 && summary.good_count == summary.n))
            && self.delta_target.is_none_or(|t| summary.spectrum.count(t.z) >= t.min_count)
    }
}

/// Graph-level statistics carried by a [`SearchResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportSummary {
    pub n: usize,
    pub wiener: i64,
    pub good_count: usize,
    #[serde(with = "proportion_serde")]
    pub good_proportion: Proportion,
    #[serde(with = "spectrum_serde")]
    pub spectrum: DeltaSpectrum<i64>,
}

mod spectrum_serde {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::analysis::DeltaSpectrum;

    #[derive(Serialize, Deserialize)]
    struct Wire {
        deltas: BTreeMap<i64, usize>,
        disconnecting: usize,
    }

    pub fn serialize<S: Serializer>(s: &DeltaSpectrum<i64>, ser: S) -> Result<S::Ok, S::Error> {
        Wire { deltas: s.buckets.clone(), disconnecting: s.disconnecting }.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<DeltaSpectrum<i64>, D::Error> {
        let w = Wire::deserialize(d)?;
        Ok(DeltaSpectrum { buckets: w.deltas, disconnecting: w.disconnecting })
    }
}

impl ReportSummary {
    pub fn of(g: &Graph) -> Result<Self, AnalysisError> {
        let report = analyze::<i64>(g)?;
        Ok(ReportSummary {
            n: report.order,
            wiener: report.wiener,
            good_count: report.good_count,
            good_proportion: report.good_proportion,
            spectrum: report.spectrum(),
        })
    }
}

/// One matching record.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    /// 0-based ordinal of the record among the non-blank input lines.
    pub sequence_number: u64,
    pub graph6: String,
    pub report: ReportSummary,
}

/// Totals of one scan. `matched + not_matched + skipped_disconnected + malformed == total`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSummary {
    pub total: u64,
    pub matched: u64,
    pub not_matched: u64,
    pub skipped_disconnected: u64,
    pub malformed: u64,
    pub cancelled: bool,
    pub wall_time_ms: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum MalformedPolicy {
    #[default]
    Skip,
    Abort,
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub workers: usize,
    pub on_malformed: MalformedPolicy,
    pub batch_size: usize,
    /// Checked between batches; when set the scan stops and reports what it has.
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            on_malformed: MalformedPolicy::Skip,
            batch_size: 4096,
            cancel: None,
        }
    }
}

impl ScanOptions {
    pub fn with_workers(workers: usize) -> Self {
        ScanOptions { workers, ..Self::default() }
    }
}

enum Outcome {
    Matched(String, ReportSummary),
    NotMatched,
    Disconnected,
    Malformed(Graph6Error),
    Failed(AnalysisError),
}

fn classify(record: &str, filter: &SearchFilter) -> Outcome {
    let g = match parse_graph6(record.as_bytes()) {
        Ok(g) => g,
        Err(e) => return Outcome::Malformed(e),
    };
    if g.order() == 0 || !g.is_connected() {
        return Outcome::Disconnected;
    }
    if !filter.accepts_order(g.order()) {
        return Outcome::NotMatched;
    }
    match ReportSummary::of(&g) {
        Ok(summary) if filter.matches(&summary) => Outcome::Matched(emit_graph6(&g), summary),
        Ok(_) => Outcome::NotMatched,
        Err(e) => Outcome::Failed(e),
    }
}

struct Pending {
    line: usize,
    sequence_number: u64,
    record: String,
}

/// Runs `filter` over graph6 `lines`, calling `emit` for every match in input order.
///
/// Blank lines are ignored. Disconnected graphs are counted and skipped.
/// Malformed records are skipped or abort the scan according to
/// `options.on_malformed`; matches preceding an aborting record are still emitted.
pub fn scan_stream<I, F>(
    lines: I,
    filter: &SearchFilter,
    options: &ScanOptions,
    emit: F,
) -> Result<SearchSummary, SearchError>
where
    I: IntoIterator<Item = io::Result<String>>,
    F: FnMut(&SearchResult) -> io::Result<()>,
{
    filter.validate()?;
    scan_unchecked(lines, filter, options, emit)
}

fn scan_unchecked<I, F>(
    lines: I,
    filter: &SearchFilter,
    options: &ScanOptions,
    mut emit: F,
) -> Result<SearchSummary, SearchError>
where
    I: IntoIterator<Item = io::Result<String>>,
    F: FnMut(&SearchResult) -> io::Result<()>,
{
    let started = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers.max(1))
        .build()
        .map_err(|e| io::Error::other(e.to_string()))?;
    let batch_size = options.batch_size.max(1);
    let mut summary = SearchSummary::default();
    let mut lines = lines.into_iter().enumerate();
    let mut next_sequence = 0u64;

    loop {
        if options.cancel.as_ref().is_some_and(|c| c.load(Ordering::Relaxed)) {
            summary.cancelled = true;
            break;
        }
        let mut batch = Vec::with_capacity(batch_size);
        for (index, line) in lines.by_ref() {
            let line_text = line?;
            let record = line_text.trim();
            if record.is_empty() {
                continue;
            }
            batch.push(Pending {
                line: index + 1,
                sequence_number: next_sequence,
                record: record.to_owned(),
            });
            next_sequence += 1;
            if batch.len() == batch_size {
                break;
            }
        }
        if batch.is_empty() {
            break;
        }

        let outcomes: Vec<Outcome> = pool.install(|| {
            use rayon::prelude::*;
            batch.par_iter().map(|p| classify(&p.record, filter)).collect()
        });

        for (pending, outcome) in batch.into_iter().zip(outcomes) {
            summary.total += 1;
            match outcome {
                Outcome::Matched(graph6, report) => {
                    summary.matched += 1;
                    emit(&SearchResult { sequence_number: pending.sequence_number, graph6, report })?;
                }
                Outcome::NotMatched => summary.not_matched += 1,
                Outcome::Disconnected => summary.skipped_disconnected += 1,
                Outcome::Malformed(source) => {
                    summary.malformed += 1;
                    if options.on_malformed == MalformedPolicy::Abort {
                        return Err(SearchError::MalformedRecord { line: pending.line, source });
                    }
                }
                Outcome::Failed(source) => return Err(SearchError::Analysis { line: pending.line, source }),
            }
        }
    }
    summary.wall_time_ms = started.elapsed().as_millis() as u64;
    Ok(summary)
}

fn rank_key(r: &SearchResult) -> (std::cmp::Reverse<Proportion>, usize, u64) {
    (std::cmp::Reverse(r.report.good_proportion), r.report.n, r.sequence_number)
}

/// Best `top_n` results by good proportion, ties broken by smaller order and
/// then earlier sequence number.
pub fn rank_by_proportion<I>(results: I, top_n: usize) -> Vec<SearchResult>
where
    I: IntoIterator<Item = SearchResult>,
{
    let mut best: Vec<SearchResult> = Vec::with_capacity(top_n + 1);
    if top_n == 0 {
        return best;
    }
    for r in results {
        let key = rank_key(&r);
        if best.len() == top_n && key >= rank_key(best.last().unwrap()) {
            continue;
        }
        let at = best.partition_point(|b| rank_key(b) < key);
        best.insert(at, r);
        best.truncate(top_n);
    }
    best
}

/// Analyzes every connected record of `lines` (optionally restricted by
/// `filter`) and returns the `top_n` best by good proportion.
pub fn rank_stream<I>(
    lines: I,
    filter: &SearchFilter,
    top_n: usize,
    options: &ScanOptions,
) -> Result<(Vec<SearchResult>, SearchSummary), SearchError>
where
    I: IntoIterator<Item = io::Result<String>>,
{
    if !filter.is_empty() {
        filter.validate()?;
    }
    let mut results = Vec::new();
    let summary = scan_unchecked(lines, filter, options, |r| {
        results.push(r.clone());
        results = rank_by_proportion(std::mem::take(&mut results), top_n);
        Ok(())
    })?;
    Ok((results, summary))
}
