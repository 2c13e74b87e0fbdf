//! Wiener-index vertex-deletion invariants.
//!
//! The crate computes the Wiener index `W(G)`, vertex transmissions and the
//! change `Δ_v = W(G) − W(G − v)` caused by deleting a vertex, generates graph
//! families in which a large share of vertices are *good* (`Δ_v = 0`), and
//! scans streams of graph6 records for graphs with many good vertices.
//!
//! Analysis is generic over a signed integer [`WienerScalar`]; the aliases
//! below fix it to `i64`.
//!
//! ```
//! use wienerlab::{analyze, build_cycle, Report};
//!
//! let c11 = build_cycle(11).unwrap();
//! let report: Report = analyze(&c11).unwrap();
//! assert_eq!(report.wiener, 165);
//! assert_eq!(report.good_count, 11);
//! ```

pub mod analysis;
pub mod constructions;
pub mod edgelist;
pub mod graph;
pub mod graph6;
pub mod scalar;
pub mod search;

pub use analysis::{
    analyze, decompose_deletion, delta_pair, delta_spectrum, delta_v, good_vertices, transmission,
    wiener_index, AnalysisError, Deletion,
};
pub use constructions::{
    build_bunch, build_chorded_cycle_12, build_complete, build_cycle, build_lily, build_lily_general,
    build_path, lily_tail_params, verify_bunch_theorem, verify_lily_theorem, BunchParams, ConstructionError,
    LilyParams, TailParams,
};
pub use edgelist::{emit_edge_list, parse_edge_list};
pub use graph::{DistanceMatrix, Graph, GraphBuilder, GraphError, VertexId};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use scalar::WienerScalar;
pub use search::{
    enumerate_connected, enumerate_connected_records, rank_by_proportion, rank_stream, scan_stream,
    DeltaTarget, MalformedPolicy, ScanOptions, SearchError, SearchFilter, SearchResult, SearchSummary,
};

/// Exact share of vertices, always in lowest terms.
pub type Proportion = num_rational::Ratio<u64>;

pub type Report = analysis::AnalysisReport<i64>;
pub type VertexRecord = analysis::VertexReport<i64>;
pub type Spectrum = analysis::DeltaSpectrum<i64>;
pub type Decomposition = analysis::DeletionDecomposition<i64>;

/// Reports accumulated in 128 bits, for graphs whose distance sums approach `i64::MAX`.
pub type WideReport = analysis::AnalysisReport<i128>;
