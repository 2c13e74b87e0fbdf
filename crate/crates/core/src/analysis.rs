//! Wiener index, vertex transmissions and the effect of deleting a vertex.
//!
//! For a connected graph `G` and a vertex `v`:
//!
//! * `t(v)` is the sum of distances from `v` to every other vertex, and
//!   `W(G) = ½ Σ t(v)`;
//! * `Δ_v = W(G) − W(G − v)`, defined only when `G − v` is connected;
//! * `δ^v(u, w) = d_G(u, w) − d_{G−v}(u, w) ≤ 0`.
//!
//! A vertex is *good* when `Δ_v = 0`. Deleting `v` and recomputing distances
//! from scratch also gives `Δ_v = t(v) + ½ Σ_{u,w ≠ v} δ^v(u, w)`, and
//! [`decompose_deletion`] evaluates that second route independently of
//! [`delta_v`].

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{BfsScratch, Graph, GraphError, VertexId};
use crate::scalar::WienerScalar;
use crate::Proportion;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("removing vertex {vertex} disconnects the graph")]
    DisconnectedAfterRemoval { vertex: VertexId },
    #[error("invalid vertex triple (v={v}, u={u}, w={w}): u and w must be distinct and differ from v")]
    InvalidVertexTriple { v: VertexId, u: VertexId, w: VertexId },
    #[error("integer overflow while summing distances")]
    Overflow,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Outcome of deleting one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Deletion<S> {
    /// `G − v` is disconnected (or empty); `Δ_v` is undefined.
    Disconnects,
    /// `W(G) − W(G − v)`.
    Delta(S),
}

impl<S: WienerScalar> Deletion<S> {
    pub fn delta(self) -> Option<S> {
        match self {
            Deletion::Delta(z) => Some(z),
            Deletion::Disconnects => None,
        }
    }

    pub fn is_good(self) -> bool {
        self == Deletion::Delta(S::zero())
    }
}

fn to_scalar<S: WienerScalar>(value: u64) -> Result<S, AnalysisError> {
    S::from_u64(value).ok_or(AnalysisError::Overflow)
}

fn checked_sum<S: WienerScalar>(a: S, b: S) -> Result<S, AnalysisError> {
    a.checked_add(&b).ok_or(AnalysisError::Overflow)
}

fn require_connected(g: &Graph) -> Result<(), AnalysisError> {
    if g.order() == 0 {
        Err(AnalysisError::EmptyGraph)
    } else if g.is_connected() {
        Ok(())
    } else {
        Err(AnalysisError::DisconnectedGraph)
    }
}

/// Transmission of every vertex of a connected graph.
fn all_transmissions<S: WienerScalar>(g: &Graph) -> Result<Vec<S>, AnalysisError> {
    let mut scratch = BfsScratch::new(g.order());
    g.vertices()
        .map(|v| {
            let out = scratch.run(g, v.index(), None);
            if out.reached != g.order() {
                return Err(AnalysisError::DisconnectedGraph);
            }
            to_scalar(out.distance_sum)
        })
        .collect()
}

fn half_of<S: WienerScalar>(total: S) -> S {
    let two = S::one() + S::one();
    assert!(total.is_even(), "sum of transmissions must be even");
    total / two
}

/// `W(G − v)`, or `None` when `G − v` is disconnected or empty.
fn wiener_without<S: WienerScalar>(
    g: &Graph,
    v: VertexId,
    scratch: &mut BfsScratch,
) -> Result<Option<S>, AnalysisError> {
    let remaining = g.order() - 1;
    if remaining == 0 {
        return Ok(None);
    }
    let mut total = S::zero();
    for s in g.vertices().filter(|&s| s != v) {
        let out = scratch.run(g, s.index(), Some(v.index()));
        if out.reached != remaining {
            return Ok(None);
        }
        total = checked_sum(total, to_scalar(out.distance_sum)?)?;
    }
    Ok(Some(half_of(total)))
}

/// Sum of distances over unordered vertex pairs of a connected graph.
pub fn wiener_index<S: WienerScalar>(g: &Graph) -> Result<S, AnalysisError> {
    require_connected(g)?;
    let total = all_transmissions::<S>(g)?.into_iter().try_fold(S::zero(), checked_sum)?;
    Ok(half_of(total))
}

/// Sum of distances from `v` to every other vertex.
pub fn transmission<S: WienerScalar>(g: &Graph, v: VertexId) -> Result<S, AnalysisError> {
    g.check_vertex(v)?;
    require_connected(g)?;
    let mut scratch = BfsScratch::new(g.order());
    to_scalar(scratch.run(g, v.index(), None).distance_sum)
}

/// `W(G) − W(G − v)`, or [`Deletion::Disconnects`] when `G − v` is not connected.
pub fn delta_v<S: WienerScalar>(g: &Graph, v: VertexId) -> Result<Deletion<S>, AnalysisError> {
    g.check_vertex(v)?;
    let wiener = wiener_index::<S>(g)?;
    let mut scratch = BfsScratch::new(g.order());
    Ok(match wiener_without::<S>(g, v, &mut scratch)? {
        Some(reduced) => Deletion::Delta(wiener.checked_sub(&reduced).ok_or(AnalysisError::Overflow)?),
        None => Deletion::Disconnects,
    })
}

/// `d_G(u, w) − d_{G−v}(u, w)`; never positive.
pub fn delta_pair<S: WienerScalar>(
    g: &Graph,
    v: VertexId,
    u: VertexId,
    w: VertexId,
) -> Result<S, AnalysisError> {
    for x in [v, u, w] {
        g.check_vertex(x)?;
    }
    if u == v || w == v || u == w {
        return Err(AnalysisError::InvalidVertexTriple { v, u, w });
    }
    require_connected(g)?;
    let mut scratch = BfsScratch::new(g.order());
    scratch.run(g, u.index(), None);
    let before = scratch.dist(w.index()).expect("connected graph");
    if scratch.run(g, u.index(), Some(v.index())).reached != g.order() - 1 {
        return Err(AnalysisError::DisconnectedAfterRemoval { vertex: v });
    }
    let after = scratch.dist(w.index()).expect("G - v connected");
    Ok(S::from_u32(before).ok_or(AnalysisError::Overflow)?
        - S::from_u32(after).ok_or(AnalysisError::Overflow)?)
}

/// The two terms of `Δ_v = t(v) + ½ Σ δ^v(u, w)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionDecomposition<S: WienerScalar> {
    pub transmission: S,
    /// Half the sum of `δ^v(u, w)` over ordered pairs `u ≠ w`, both `≠ v`.
    pub half_delta_sum: Ratio<S>,
    pub delta: S,
}

/// Computes `t(v)` and `½ Σ δ^v` from the distance rows of `G` and `G − v`.
pub fn decompose_deletion<S: WienerScalar>(
    g: &Graph,
    v: VertexId,
) -> Result<DeletionDecomposition<S>, AnalysisError> {
    g.check_vertex(v)?;
    require_connected(g)?;
    if g.order() == 1 {
        return Err(AnalysisError::DisconnectedAfterRemoval { vertex: v });
    }
    let n = g.order();
    let mut full = BfsScratch::new(n);
    let mut reduced = BfsScratch::new(n);
    let transmission = to_scalar::<S>(full.run(g, v.index(), None).distance_sum)?;

    // every term is d_{G-v} - d_G >= 0, so accumulate the negated sum unsigned
    let mut stretch = 0u64;
    for u in g.vertices().filter(|&u| u != v) {
        full.run(g, u.index(), None);
        if reduced.run(g, u.index(), Some(v.index())).reached != n - 1 {
            return Err(AnalysisError::DisconnectedAfterRemoval { vertex: v });
        }
        for w in g.vertices().filter(|&w| w != v && w != u) {
            let before = full.dist(w.index()).expect("connected graph");
            let after = reduced.dist(w.index()).expect("G - v connected");
            debug_assert!(after >= before);
            stretch = stretch.checked_add(u64::from(after - before)).ok_or(AnalysisError::Overflow)?;
        }
    }
    let ordered_sum = -to_scalar::<S>(stretch)?;
    let half_delta_sum = Ratio::new(ordered_sum, S::one() + S::one());
    assert!(half_delta_sum.is_integer(), "ordered δ sum must be even");
    let delta = checked_sum(transmission, half_delta_sum.to_integer())?;
    Ok(DeletionDecomposition { transmission, half_delta_sum, delta })
}

/// Per-vertex entry of an [`AnalysisReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexReport<S> {
    pub vertex: VertexId,
    pub label: Option<String>,
    pub transmission: S,
    pub deletion: Deletion<S>,
}

/// Wiener index, transmissions and deletion deltas of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport<S> {
    pub order: usize,
    pub wiener: S,
    pub vertices: Vec<VertexReport<S>>,
    pub good_count: usize,
    pub good_proportion: Proportion,
}

impl<S: WienerScalar> AnalysisReport<S> {
    /// Good vertices in increasing order.
    pub fn good_vertices(&self) -> Vec<VertexId> {
        self.vertices.iter().filter(|r| r.deletion.is_good()).map(|r| r.vertex).collect()
    }

    /// Vertices whose deletion leaves a connected graph with `Δ_v = z`.
    pub fn vertices_with_delta(&self, z: S) -> Vec<VertexId> {
        self.vertices.iter().filter(|r| r.deletion == Deletion::Delta(z)).map(|r| r.vertex).collect()
    }

    pub fn spectrum(&self) -> DeltaSpectrum<S> {
        let mut spectrum = DeltaSpectrum::default();
        for r in &self.vertices {
            match r.deletion {
                Deletion::Delta(z) => *spectrum.buckets.entry(z).or_default() += 1,
                Deletion::Disconnects => spectrum.disconnecting += 1,
            }
        }
        spectrum
    }

    fn check_invariants(&self) -> Result<(), String> {
        if self.vertices.len() != self.order {
            return Err(format!("{} vertex records for n = {}", self.vertices.len(), self.order));
        }
        let total = self
            .vertices
            .iter()
            .try_fold(S::zero(), |acc, r| acc.checked_add(&r.transmission))
            .ok_or("transmission sum overflows")?;
        if total != self.wiener + self.wiener {
            return Err(format!("wiener {} is not half the transmission sum {total}", self.wiener));
        }
        let good = self.vertices.iter().filter(|r| r.deletion.is_good()).count();
        if good != self.good_count {
            return Err(format!("good_count {} but {good} vertices have delta 0", self.good_count));
        }
        if self.order == 0 || self.good_proportion != Ratio::new(good as u64, self.order as u64) {
            return Err("good_proportion is not good_count / n".into());
        }
        Ok(())
    }
}

/// Analyzes every vertex of a connected graph.
pub fn analyze<S: WienerScalar>(g: &Graph) -> Result<AnalysisReport<S>, AnalysisError> {
    require_connected(g)?;
    let transmissions = all_transmissions::<S>(g)?;
    let total = transmissions.iter().copied().try_fold(S::zero(), checked_sum)?;
    let wiener = half_of(total);

    let mut scratch = BfsScratch::new(g.order());
    let mut vertices = Vec::with_capacity(g.order());
    for (v, transmission) in g.vertices().zip(transmissions) {
        let deletion = match wiener_without::<S>(g, v, &mut scratch)? {
            Some(reduced) => Deletion::Delta(wiener.checked_sub(&reduced).ok_or(AnalysisError::Overflow)?),
            None => Deletion::Disconnects,
        };
        vertices.push(VertexReport {
            vertex: v,
            label: g.label(v).map(str::to_owned),
            transmission,
            deletion,
        });
    }
    let good_count = vertices.iter().filter(|r| r.deletion.is_good()).count();
    let report = AnalysisReport {
        order: g.order(),
        wiener,
        vertices,
        good_count,
        good_proportion: Ratio::new(good_count as u64, g.order() as u64),
    };
    debug_assert_eq!(report.check_invariants(), Ok(()));
    Ok(report)
}

/// Vertices `v` with `G − v` connected and `W(G − v) = W(G)`.
pub fn good_vertices(g: &Graph) -> Result<Vec<VertexId>, AnalysisError> {
    Ok(analyze::<i64>(g)?.good_vertices())
}

/// Histogram of `Δ_v` over all vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSpectrum<S> {
    pub buckets: BTreeMap<S, usize>,
    pub disconnecting: usize,
}

impl<S> Default for DeltaSpectrum<S> {
    fn default() -> Self {
        DeltaSpectrum { buckets: BTreeMap::new(), disconnecting: 0 }
    }
}

impl<S: WienerScalar> DeltaSpectrum<S> {
    pub fn count(&self, z: S) -> usize {
        self.buckets.get(&z).copied().unwrap_or(0)
    }

    /// Number of vertices accounted for; equals the graph order.
    pub fn total(&self) -> usize {
        self.buckets.values().sum::<usize>() + self.disconnecting
    }
}

pub fn delta_spectrum<S: WienerScalar>(g: &Graph) -> Result<DeltaSpectrum<S>, AnalysisError> {
    Ok(analyze::<S>(g)?.spectrum())
}

// JSON layout shared with downstream tooling.

#[derive(Serialize, Deserialize)]
pub(crate) struct ProportionWire {
    pub num: u64,
    pub den: u64,
}

impl From<&Proportion> for ProportionWire {
    fn from(p: &Proportion) -> Self {
        ProportionWire { num: *p.numer(), den: *p.denom() }
    }
}

impl TryFrom<ProportionWire> for Proportion {
    type Error = String;

    fn try_from(w: ProportionWire) -> Result<Self, String> {
        if w.den == 0 {
            return Err("proportion denominator is zero".into());
        }
        Ok(Ratio::new(w.num, w.den))
    }
}

pub(crate) mod proportion_serde {
    use super::*;

    pub fn serialize<Ser: Serializer>(p: &Proportion, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        ProportionWire::from(p).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Proportion, D::Error> {
        Proportion::try_from(ProportionWire::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "S: WienerScalar")]
struct VertexWire<S> {
    id: usize,
    label: Option<String>,
    transmission: S,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    delta: Option<S>,
    #[serde(default, skip_serializing_if = "is_false")]
    disconnects: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(bound = "S: WienerScalar")]
struct ReportWire<S> {
    n: usize,
    wiener: S,
    vertices: Vec<VertexWire<S>>,
    good_count: usize,
    #[serde(with = "proportion_serde")]
    good_proportion: Proportion,
}

impl<S: WienerScalar> Serialize for AnalysisReport<S> {
    fn serialize<Ser: Serializer>(&self, serializer: Ser) -> Result<Ser::Ok, Ser::Error> {
        ReportWire {
            n: self.order,
            wiener: self.wiener,
            vertices: self
                .vertices
                .iter()
                .map(|r| VertexWire {
                    id: r.vertex.index(),
                    label: r.label.clone(),
                    transmission: r.transmission,
                    delta: r.deletion.delta(),
                    disconnects: r.deletion == Deletion::Disconnects,
                })
                .collect(),
            good_count: self.good_count,
            good_proportion: self.good_proportion,
        }
        .serialize(serializer)
    }
}

impl<'de, S: WienerScalar> Deserialize<'de> for AnalysisReport<S> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let wire = ReportWire::<S>::deserialize(deserializer)?;
        let vertices = wire
            .vertices
            .into_iter()
            .map(|v| {
                let deletion = match (v.delta, v.disconnects) {
                    (Some(z), false) => Deletion::Delta(z),
                    (None, true) => Deletion::Disconnects,
                    _ => {
                        return Err(D::Error::custom(
                            "vertex needs exactly one of \"delta\" or \"disconnects\"",
                        ))
                    }
                };
                Ok(VertexReport {
                    vertex: VertexId(v.id),
                    label: v.label,
                    transmission: v.transmission,
                    deletion,
                })
            })
            .collect::<Result<_, _>>()?;
        let report = AnalysisReport {
            order: wire.n,
            wiener: wire.wiener,
            vertices,
            good_count: wire.good_count,
            good_proportion: wire.good_proportion,
        };
        report.check_invariants().map_err(D::Error::custom)?;
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    /// Pair sum straight from the definition, one BFS per unordered pair.
    fn brute_wiener(g: &Graph) -> i64 {
        let mut total = 0;
        for u in 0..g.order() {
            let d = g.bfs_distances(VertexId(u)).unwrap();
            for w in u + 1..g.order() {
                total += i64::from(d[w].unwrap());
            }
        }
        total
    }

    #[test]
    fn wiener_examples() {
        for n in 1..8 {
            assert_eq!(wiener_index::<i64>(&complete(n)).unwrap(), (n * (n - 1) / 2) as i64);
        }
        let c11 = cycle(11);
        assert_eq!(brute_wiener(&c11), 165);
        assert_eq!(11 * (11 * 11 - 1) / 8, 165);
        assert_eq!(wiener_index::<i64>(&c11).unwrap(), 165);
        assert_eq!(brute_wiener(&path(10)), 165);
        assert_eq!(wiener_index::<i64>(&path(10)).unwrap(), 165);
        assert_eq!(wiener_index::<i128>(&path(10)).unwrap(), 165);
    }

    #[test]
    fn wiener_errors() {
        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(wiener_index::<i64>(&two_edges), Err(AnalysisError::DisconnectedGraph));
        assert_eq!(wiener_index::<i64>(&Graph::empty(0)), Err(AnalysisError::EmptyGraph));
        assert_eq!(wiener_index::<i64>(&Graph::empty(1)), Ok(0));
    }

    #[test]
    fn overflow_is_reported() {
        // W(P_2000) = (n^3 - n) / 6 ≈ 1.3e9 > i32::MAX
        let p = path(2000);
        assert_eq!(wiener_index::<i32>(&p), Err(AnalysisError::Overflow));
        assert_eq!(wiener_index::<i64>(&p), Ok((2000i64.pow(3) - 2000) / 6));
    }

    #[test]
    fn transmission_examples() {
        assert_eq!(transmission::<i64>(&complete(5), VertexId(3)), Ok(4));
        assert_eq!(transmission::<i64>(&path(4), VertexId(0)), Ok(6));
        assert!(matches!(
            transmission::<i64>(&path(4), VertexId(4)),
            Err(AnalysisError::Graph(GraphError::OutOfRange { .. }))
        ));
    }

    #[test]
    fn delta_v_examples() {
        let c11 = cycle(11);
        for v in c11.vertices() {
            assert_eq!(delta_v::<i64>(&c11, v), Ok(Deletion::Delta(0)));
        }
        assert_eq!(delta_v::<i64>(&path(3), VertexId(1)), Ok(Deletion::Disconnects));
        assert_eq!(delta_v::<i64>(&Graph::empty(1), VertexId(0)), Ok(Deletion::Disconnects));
        // W(P4) - W(P3) = 10 - 4
        assert_eq!(delta_v::<i64>(&path(4), VertexId(0)), Ok(Deletion::Delta(6)));
        let k2 = complete(2);
        assert_eq!(delta_v::<i64>(&k2, VertexId(1)), Ok(Deletion::Delta(1)));
    }

    #[test]
    fn delta_pair_examples() {
        let c5 = cycle(5);
        assert_eq!(delta_pair::<i64>(&c5, VertexId(0), VertexId(2), VertexId(3)), Ok(0));
        // 1 and 4 are at distance 2 through 0; without 0 the path is 1-2-3-4
        assert_eq!(delta_pair::<i64>(&c5, VertexId(0), VertexId(1), VertexId(4)), Ok(-1));
        assert_eq!(
            delta_pair::<i64>(&c5, VertexId(0), VertexId(0), VertexId(4)),
            Err(AnalysisError::InvalidVertexTriple { v: VertexId(0), u: VertexId(0), w: VertexId(4) })
        );
        assert!(matches!(
            delta_pair::<i64>(&c5, VertexId(0), VertexId(2), VertexId(2)),
            Err(AnalysisError::InvalidVertexTriple { .. })
        ));
        assert_eq!(
            delta_pair::<i64>(&path(3), VertexId(1), VertexId(0), VertexId(2)),
            Err(AnalysisError::DisconnectedAfterRemoval { vertex: VertexId(1) })
        );
    }

    #[test]
    fn decomposition_examples() {
        let k4 = complete(4);
        for v in k4.vertices() {
            let d = decompose_deletion::<i64>(&k4, v).unwrap();
            assert_eq!((d.transmission, d.half_delta_sum, d.delta), (3, Ratio::from_integer(0), 3));
        }
        // C5 - v is P4: W(C5) = 15, W(P4) = 10, t(v) = 6, so ½Σδ = -1.
        let c5 = cycle(5);
        for v in c5.vertices() {
            let d = decompose_deletion::<i64>(&c5, v).unwrap();
            assert_eq!(d.transmission, 6);
            assert_eq!(d.half_delta_sum, Ratio::from_integer(-1));
            assert_eq!(Deletion::Delta(d.delta), delta_v::<i64>(&c5, v).unwrap());
        }
        assert_eq!(
            decompose_deletion::<i64>(&path(3), VertexId(1)),
            Err(AnalysisError::DisconnectedAfterRemoval { vertex: VertexId(1) })
        );
    }

    #[test]
    fn analyze_examples() {
        let report = analyze::<i64>(&cycle(11)).unwrap();
        assert_eq!(report.wiener, 165);
        assert_eq!(report.good_count, 11);
        assert_eq!(report.good_proportion, Ratio::from_integer(1));

        let report = analyze::<i64>(&complete(2)).unwrap();
        assert_eq!(report.wiener, 1);
        assert!(report.vertices.iter().all(|r| r.deletion == Deletion::Delta(1)));
        assert_eq!(report.good_count, 0);
        assert_eq!(report.good_proportion, Ratio::from_integer(0));

        assert_eq!(good_vertices(&cycle(11)).unwrap().len(), 11);
    }

    #[test]
    fn spectrum_examples() {
        let s = delta_spectrum::<i64>(&cycle(11)).unwrap();
        assert_eq!(s.buckets, BTreeMap::from([(0, 11)]));
        assert_eq!(s.disconnecting, 0);

        let s = delta_spectrum::<i64>(&path(4)).unwrap();
        assert_eq!(s.buckets, BTreeMap::from([(6, 2)]));
        assert_eq!(s.disconnecting, 2);
        assert_eq!(s.total(), 4);
    }

    #[test]
    fn json_layout() {
        let report = analyze::<i64>(&path(3)).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "n": 3,
                "wiener": 4,
                "vertices": [
                    {"id": 0, "label": null, "transmission": 3, "delta": 3},
                    {"id": 1, "label": null, "transmission": 2, "disconnects": true},
                    {"id": 2, "label": null, "transmission": 3, "delta": 3},
                ],
                "good_count": 0,
                "good_proportion": {"num": 0, "den": 1},
            })
        );
        let back: AnalysisReport<i64> = serde_json::from_value(json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn json_rejects_inconsistent_reports() {
        let mut json = serde_json::to_value(analyze::<i64>(&path(3)).unwrap()).unwrap();
        json["wiener"] = 5.into();
        assert!(serde_json::from_value::<AnalysisReport<i64>>(json).is_err());
    }
}
