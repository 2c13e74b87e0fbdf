//! Generators for graph families with many good vertices.
//!
//! Every generated vertex carries a role label so callers can address
//! vertices by name. Vertex order is fixed for each family, which keeps
//! graph6 output stable.
//!
//! * **Bunch** `B(k)`: a path `w0 … w5` plus `k` spokes `v_i_1 … v_i_5`, each
//!   joined to `w0` and `w5`. Every spoke closes an 11-cycle with the path.
//!   The `2k` spoke ends are exactly the good vertices.
//! * **Lily** `L(k, m)`: `m` blocks of `k` paths `u0 – v1_i_j – v2_i_j – v_i`
//!   sharing the hub `u0`, a complete `m`-partite graph on the first layer,
//!   and a tail path `u1 … ud` from `u0` with one pendant `u_prime` at `u_t`.
//!   The tail is sized so that every first-layer vertex has `Δ = z`.
//! * **Chorded 12-cycle**: `C12` on `v1 … v12` with chords `v1v3`, `v4v6`,
//!   `v7v9`, `v10v12`; its eight degree-3 vertices are good.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Roots;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{analyze, AnalysisError, AnalysisReport};
use crate::graph::{Graph, GraphBuilder, VertexId};
use crate::graph6::emit_graph6;
use crate::{Proportion, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family} needs at least {min} vertices, got {n}")]
    TooSmall { family: &'static str, n: usize, min: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("infeasible tail: target N = {target} is negative (need km - 6k - m + 3 + z >= 0)")]
    Infeasible { target: i64 },
}

fn finish(builder: GraphBuilder) -> Graph {
    let g = builder.build().expect("generators only add simple edges");
    debug_assert!(g.is_connected() && g.is_fully_labeled());
    g
}

fn numbered(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let mut b = GraphBuilder::new();
    let ids: Vec<_> = (0..n).map(|i| b.add_vertex(format!("v{i}"))).collect();
    for (u, v) in edges {
        b.add_edge(ids[u], ids[v]).expect("simple edge");
    }
    finish(b)
}

/// Path `v0 – v1 – … – v(n-1)`.
pub fn build_path(n: usize) -> Result<Graph, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::TooSmall { family: "path", n, min: 1 });
    }
    Ok(numbered(n, (1..n).map(|i| (i - 1, i))))
}

/// Cycle `v0 – … – v(n-1) – v0`.
pub fn build_cycle(n: usize) -> Result<Graph, ConstructionError> {
    if n < 3 {
        return Err(ConstructionError::TooSmall { family: "cycle", n, min: 3 });
    }
    Ok(numbered(n, (0..n).map(|i| (i, (i + 1) % n))))
}

pub fn build_complete(n: usize) -> Result<Graph, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::TooSmall { family: "complete graph", n, min: 1 });
    }
    Ok(numbered(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))))
}

/// Parameter of the bunch family, `k >= 2` spokes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BunchParams {
    k: usize,
}

impl BunchParams {
    pub fn new(k: usize) -> Result<Self, ConstructionError> {
        if k < 2 {
            return Err(ConstructionError::InvalidParams(format!("bunch needs k >= 2, got k = {k}")));
        }
        Ok(BunchParams { k })
    }

    pub fn k(self) -> usize {
        self.k
    }

    /// `5k + 6`
    pub fn order(self) -> usize {
        5 * self.k + 6
    }

    /// `6k + 5`: the `w` path, four edges inside each spoke and two attachments.
    pub fn size(self) -> usize {
        6 * self.k + 5
    }
}

pub fn spoke_label(i: usize, j: usize) -> String {
    format!("v_{i}_{j}")
}

/// Builds `B(k)`. Vertex order: `w0..w5`, then spokes `i = 1..k`, each `j = 1..5`.
pub fn build_bunch(p: BunchParams) -> Graph {
    let mut b = GraphBuilder::new();
    let w: Vec<_> = (0..6).map(|j| b.add_vertex(format!("w{j}"))).collect();
    for pair in w.windows(2) {
        b.add_edge(pair[0], pair[1]).expect("simple edge");
    }
    for i in 1..=p.k {
        let spoke: Vec<_> = (1..=5).map(|j| b.add_vertex(spoke_label(i, j))).collect();
        for pair in spoke.windows(2) {
            b.add_edge(pair[0], pair[1]).expect("simple edge");
        }
        b.add_edge(w[0], spoke[0]).expect("simple edge");
        b.add_edge(w[5], spoke[4]).expect("simple edge");
    }
    finish(b)
}

/// Parameters `(k, m, z)` of the lily family; `z = 0` is the plain `L(k, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LilyParams {
    k: usize,
    m: usize,
    z: i64,
}

/// Smallest admissible `k` for `m` blocks: `⌈(m − 3)/(m − 6)⌉`.
pub fn lily_min_k(m: usize) -> Option<usize> {
    (m >= 7).then(|| (m - 3).div_ceil(m - 6))
}

impl LilyParams {
    pub fn new(k: usize, m: usize, z: i64) -> Result<Self, ConstructionError> {
        let Some(min_k) = lily_min_k(m) else {
            return Err(ConstructionError::InvalidParams(format!("lily needs m >= 7, got m = {m}")));
        };
        if k < min_k {
            return Err(ConstructionError::InvalidParams(format!(
                "k >= {min_k} required for m = {m}, got k = {k}"
            )));
        }
        if k.checked_mul(m).and_then(|km| km.checked_mul(2)).is_none_or(|x| x > 1 << 40) {
            return Err(ConstructionError::InvalidParams(format!("k = {k}, m = {m} is too large")));
        }
        Ok(LilyParams { k, m, z })
    }

    pub fn k(self) -> usize {
        self.k
    }

    pub fn m(self) -> usize {
        self.m
    }

    pub fn z(self) -> i64 {
        self.z
    }

    /// `N = km − 6k − m + 3 + z`, the value `t_{G'}(u0) − |V'|` the tail must realize.
    pub fn tail_target(self) -> Option<i64> {
        let (k, m) = (self.k as i64, self.m as i64);
        (k * m - 6 * k - m + 3).checked_add(self.z)
    }

    pub fn tail(self) -> Result<TailParams, ConstructionError> {
        lily_tail_params(self)
    }
}

impl fmt::Display for LilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}, m={}, z={}", self.k, self.m, self.z)
    }
}

/// Tail path length `d` and pendant position `t` realizing target `N`.
///
/// Invariants: `(d+1)(d−2)/2 ≤ N < (d+2)(d−1)/2` and `t = N − (d+1)(d−2)/2`,
/// hence `0 ≤ t < d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TailParams {
    pub d: u64,
    pub t: u64,
    pub target: i64,
}

/// `(d+1)(d−2)/2`: `t(u0) − |V'|` for a bare tail path of length `d` whose
/// pendant hangs at `u0`.
fn tail_floor(d: u64) -> u64 {
    debug_assert!(d >= 2);
    (d + 1) * (d - 2) / 2
}

/// Solves for the tail of a lily with target `N`.
///
/// `d = ⌊(√(8N + 9) + 1)/2⌋`, computed with an integer square root and then
/// nudged until the bracketing inequality holds.
pub fn tail_for_target(target: i64) -> Result<TailParams, ConstructionError> {
    if target < 0 {
        return Err(ConstructionError::Infeasible { target });
    }
    let n = target as u64;
    let radicand = n
        .checked_mul(8)
        .and_then(|x| x.checked_add(9))
        .ok_or_else(|| ConstructionError::InvalidParams(format!("tail target {target} too large")))?;
    let mut d = radicand.sqrt().div_ceil(2);
    while d > 2 && tail_floor(d) > n {
        d -= 1;
    }
    while tail_floor(d + 1) <= n {
        d += 1;
    }
    let t = n - tail_floor(d);
    debug_assert!(t < d);
    Ok(TailParams { d, t, target })
}

pub fn lily_tail_params(p: LilyParams) -> Result<TailParams, ConstructionError> {
    let target =
        p.tail_target().ok_or_else(|| ConstructionError::InvalidParams(format!("z = {} overflows", p.z)))?;
    tail_for_target(target)
}

pub fn first_layer_label(i: usize, j: usize) -> String {
    format!("v1_{i}_{j}")
}

pub fn second_layer_label(i: usize, j: usize) -> String {
    format!("v2_{i}_{j}")
}

pub fn sink_label(i: usize) -> String {
    format!("v_{i}")
}

/// Builds `L(k, m)`; `p.z` must be zero. See [`build_lily_general`].
pub fn build_lily(p: LilyParams) -> Result<Graph, ConstructionError> {
    if p.z != 0 {
        return Err(ConstructionError::InvalidParams(format!(
            "plain lily has z = 0, got z = {}; use the general construction",
            p.z
        )));
    }
    build_lily_general(p)
}

/// Builds `L'(k, m, z)`: every first-layer vertex `v` has `W(G) − W(G − v) = z`.
///
/// Vertex order: `u0`; for each block `i = 1..m` the first layer
/// `v1_i_1..v1_i_k`, the second layer `v2_i_1..v2_i_k` and the sink `v_i`;
/// then `u1..ud`; then `u_prime` (attached to `u_t`, which is `u0` when `t = 0`).
pub fn build_lily_general(p: LilyParams) -> Result<Graph, ConstructionError> {
    let tail = lily_tail_params(p)?;
    let (k, m) = (p.k, p.m);
    let mut b = GraphBuilder::new();
    let hub = b.add_vertex("u0");
    let mut first_layer = Vec::with_capacity(m);
    for i in 1..=m {
        let ones: Vec<_> = (1..=k).map(|j| b.add_vertex(first_layer_label(i, j))).collect();
        let twos: Vec<_> = (1..=k).map(|j| b.add_vertex(second_layer_label(i, j))).collect();
        let sink = b.add_vertex(sink_label(i));
        for (&one, &two) in ones.iter().zip(&twos) {
            b.add_edge(hub, one).expect("simple edge");
            b.add_edge(one, two).expect("simple edge");
            b.add_edge(two, sink).expect("simple edge");
        }
        first_layer.push(ones);
    }
    for (a, part) in first_layer.iter().enumerate() {
        for other in &first_layer[a + 1..] {
            for &x in part {
                for &y in other {
                    b.add_edge(x, y).expect("simple edge");
                }
            }
        }
    }
    let mut tail_path = vec![hub];
    for s in 1..=tail.d {
        let next = b.add_vertex(format!("u{s}"));
        b.add_edge(*tail_path.last().unwrap(), next).expect("simple edge");
        tail_path.push(next);
    }
    let pendant = b.add_vertex("u_prime");
    b.add_edge(tail_path[tail.t as usize], pendant).expect("simple edge");
    Ok(finish(b))
}

/// `C12` with four chords; 8 of its 12 vertices are good.
pub fn build_chorded_cycle_12() -> Graph {
    let mut b = GraphBuilder::new();
    let v: Vec<_> = (1..=12).map(|i| b.add_vertex(format!("v{i}"))).collect();
    for i in 0..12 {
        b.add_edge(v[i], v[(i + 1) % 12]).expect("simple edge");
    }
    for (a, c) in [(1, 3), (4, 6), (7, 9), (10, 12)] {
        b.add_edge(v[a - 1], v[c - 1]).expect("simple edge");
    }
    finish(b)
}

/// One failed check of a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub vertex: Option<VertexId>,
    pub label: Option<String>,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.check)?;
        if let Some(v) = self.vertex {
            write!(f, " (vertex {v}")?;
            if let Some(l) = &self.label {
                write!(f, " = {l}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Result of checking one member of a family against its claimed statistics.
#[derive(Clone, Debug)]
pub struct Verification<P> {
    pub params: P,
    pub graph6: String,
    pub report: Option<Report>,
    pub failures: Vec<Failure>,
}

impl<P> Verification<P> {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Checker<'g> {
    graph: &'g Graph,
    failures: Vec<Failure>,
}

impl<'g> Checker<'g> {
    fn new(graph: &'g Graph) -> Self {
        Checker { graph, failures: Vec::new() }
    }

    fn expect(&mut self, ok: bool, check: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(Failure { check: check(), vertex: None, label: None });
        }
    }

    fn at(&mut self, v: VertexId, check: String) {
        self.failures.push(Failure { check, vertex: Some(v), label: self.graph.label(v).map(str::to_owned) });
    }

    /// Records every vertex in the symmetric difference of `actual` and `claimed`.
    fn same_set(&mut self, what: &str, actual: &[VertexId], claimed: &BTreeSet<VertexId>) {
        let actual: BTreeSet<_> = actual.iter().copied().collect();
        for &v in actual.difference(claimed) {
            self.at(v, format!("unexpected vertex in {what}"));
        }
        for &v in claimed.difference(&actual) {
            self.at(v, format!("missing vertex from {what}"));
        }
    }
}

fn analysis_failure(e: AnalysisError) -> Failure {
    Failure { check: format!("analysis failed: {e}"), vertex: None, label: None }
}

fn labeled(g: &Graph, labels: impl IntoIterator<Item = String>) -> BTreeSet<VertexId> {
    labels
        .into_iter()
        .map(|l| g.vertex_by_label(&l).unwrap_or_else(|| panic!("generator emits label {l}")))
        .collect()
}

/// Checks `B(k)` against its claimed statistics: order `5k + 6`, size
/// `6k + 5`, good set exactly the spoke ends `v_i_1, v_i_5`, `t(v_1_1) = 20k + 10`
/// and good proportion `2k/(5k + 6)`.
pub fn verify_bunch(p: BunchParams) -> Verification<BunchParams> {
    let g = build_bunch(p);
    let k = p.k;
    let mut c = Checker::new(&g);
    c.expect(g.order() == p.order(), || format!("order {} != 5k+6 = {}", g.order(), p.order()));
    c.expect(g.size() == p.size(), || format!("size {} != 6k+5 = {}", g.size(), p.size()));

    let report = match analyze::<i64>(&g) {
        Ok(r) => r,
        Err(e) => {
            return Verification {
                params: p,
                graph6: emit_graph6(&g),
                report: None,
                failures: vec![analysis_failure(e)],
            }
        }
    };
    let claimed = labeled(&g, (1..=k).flat_map(|i| [spoke_label(i, 1), spoke_label(i, 5)]));
    c.same_set("good set", &report.good_vertices(), &claimed);

    let v11 = g.vertex_by_label(&spoke_label(1, 1)).expect("v_1_1");
    let t = report.vertices[v11.index()].transmission;
    let expected_t = 20 * k as i64 + 10;
    c.expect(t == expected_t, || format!("t(v_1_1) = {t} != 20k+10 = {expected_t}"));

    let expected = Ratio::new(2 * k as u64, 5 * k as u64 + 6);
    let got = report.good_proportion;
    c.expect(got == expected, || format!("proportion {got} != 2k/(5k+6) = {expected}"));

    let failures = c.failures;
    Verification { params: p, graph6: emit_graph6(&g), report: Some(report), failures }
}

/// Verifies a batch of `k` values in parallel; output order follows input order.
pub fn verify_bunch_theorem(ks: &[usize]) -> Result<Vec<Verification<BunchParams>>, ConstructionError> {
    let params = ks.iter().map(|&k| BunchParams::new(k)).collect::<Result<Vec<_>, _>>()?;
    Ok(params.into_par_iter().map(verify_bunch).collect())
}

/// Checks `L'(k, m, z)`: order `2km + m + 2 + d`, the transmission of `v1_1_1`,
/// that the vertices with `Δ = z` are exactly the `km` first-layer vertices,
/// and that their proportion is `km/(2km + m + 2 + d)`.
pub fn verify_lily(p: LilyParams) -> Result<Verification<LilyParams>, ConstructionError> {
    let tail = lily_tail_params(p)?;
    let g = build_lily_general(p)?;
    let (k, m) = (p.k, p.m);
    let d = tail.d as usize;
    let mut c = Checker::new(&g);

    let expected_order = 2 * k * m + m + 2 + d;
    c.expect(g.order() == expected_order, || format!("order {} != 2km+m+2+d = {expected_order}", g.order()));
    let hub_degree = k * m + 1 + usize::from(tail.t == 0);
    let u0 = g.vertex_by_label("u0").expect("u0");
    c.expect(g.degree(u0) == hub_degree, || format!("degree(u0) = {} != {hub_degree}", g.degree(u0)));
    let core_edges = g
        .edges()
        .filter(|&(a, b)| {
            let (la, lb) = (g.label(a).unwrap_or(""), g.label(b).unwrap_or(""));
            la.starts_with("v1_") && lb.starts_with("v1_")
        })
        .count();
    c.expect(core_edges == k * k * m * (m - 1) / 2, || {
        format!("first layer has {core_edges} edges, expected k²·m(m−1)/2")
    });

    let report: AnalysisReport<i64> = match analyze(&g) {
        Ok(r) => r,
        Err(e) => {
            return Ok(Verification {
                params: p,
                graph6: emit_graph6(&g),
                report: None,
                failures: vec![analysis_failure(e)],
            })
        }
    };

    // t(v1_1_1) = 3km + 2k + 3m − 5 + t_{G'}(u0) + |V'| with t_{G'}(u0) − |V'| = N, |V'| = d + 2
    let v111 = g.vertex_by_label(&first_layer_label(1, 1)).expect("v1_1_1");
    let (ki, mi) = (k as i64, m as i64);
    let expected_t = 3 * ki * mi + 2 * ki + 3 * mi - 5 + tail.target + 2 * (d as i64 + 2);
    let t = report.vertices[v111.index()].transmission;
    c.expect(t == expected_t, || format!("t(v1_1_1) = {t} != {expected_t}"));

    let claimed = labeled(&g, (1..=m).flat_map(|i| (1..=k).map(move |j| first_layer_label(i, j))));
    let hits = report.vertices_with_delta(p.z);
    c.same_set(&format!("Δ = {} preimage", p.z), &hits, &claimed);

    let expected = Ratio::new((k * m) as u64, expected_order as u64);
    let got: Proportion = Ratio::new(hits.len() as u64, g.order() as u64);
    c.expect(got == expected, || format!("Δ = {} proportion {got} != {expected}", p.z));
    if p.z == 0 {
        let good = report.good_proportion;
        c.expect(good == expected, || format!("good proportion {good} != {expected}"));
    }

    let failures = c.failures;
    Ok(Verification { params: p, graph6: emit_graph6(&g), report: Some(report), failures })
}

/// Verifies a batch of lily parameters in parallel; output order follows input order.
pub fn verify_lily_theorem(
    cases: &[(usize, usize, i64)],
) -> Result<Vec<Verification<LilyParams>>, ConstructionError> {
    let params = cases.iter().map(|&(k, m, z)| LilyParams::new(k, m, z)).collect::<Result<Vec<_>, _>>()?;
    params.into_par_iter().map(verify_lily).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{delta_v, good_vertices, transmission, Deletion};

    #[test]
    fn basic_families() {
        assert_eq!(build_cycle(11).unwrap().order(), 11);
        assert_eq!(build_path(1).unwrap().order(), 1);
        assert_eq!(build_complete(3).unwrap(), build_cycle(3).unwrap());
        assert!(matches!(build_cycle(2), Err(ConstructionError::TooSmall { .. })));
        assert!(build_path(0).is_err());
        assert!(build_complete(0).is_err());
    }

    #[test]
    fn bunch_shape() {
        let g = build_bunch(BunchParams::new(2).unwrap());
        assert_eq!((g.order(), g.size()), (16, 17));
        assert_eq!(g.degree(g.vertex_by_label("w0").unwrap()), 3);
        assert_eq!(
            BunchParams::new(1),
            Err(ConstructionError::InvalidParams("bunch needs k >= 2, got k = 1".into()))
        );
    }

    #[test]
    fn bunch_single_spoke_is_c11() {
        // dropping every spoke but one leaves an 11-cycle
        let g = build_bunch(BunchParams::new(3).unwrap());
        let mut h = g.clone();
        for label in (2..=3).flat_map(|i| (1..=5).map(move |j| spoke_label(i, j))) {
            let v = h.vertex_by_label(&label).unwrap();
            h = h.remove_vertex(v).unwrap().0;
        }
        assert_eq!(h.order(), 11);
        assert_eq!(h.size(), 11);
        assert!(h.is_connected());
        assert!(h.vertices().all(|v| h.degree(v) == 2));
    }

    #[test]
    fn bunch_good_set_k3() {
        let g = build_bunch(BunchParams::new(3).unwrap());
        let good: Vec<_> =
            good_vertices(&g).unwrap().into_iter().map(|v| g.label(v).unwrap().to_owned()).collect();
        assert_eq!(good, ["v_1_1", "v_1_5", "v_2_1", "v_2_5", "v_3_1", "v_3_5"]);
        let v11 = g.vertex_by_label("v_1_1").unwrap();
        assert_eq!(transmission::<i64>(&g, v11), Ok(70));
    }

    #[test]
    fn lily_params_validation() {
        assert_eq!(lily_min_k(7), Some(4));
        assert_eq!(lily_min_k(8), Some(3));
        assert_eq!(lily_min_k(9), Some(2));
        assert_eq!(lily_min_k(6), None);
        assert_eq!(
            LilyParams::new(2, 7, 0),
            Err(ConstructionError::InvalidParams("k >= 4 required for m = 7, got k = 2".into()))
        );
        assert!(LilyParams::new(4, 6, 0).is_err());
    }

    #[test]
    fn tail_examples() {
        let tail = |k, m, z| lily_tail_params(LilyParams::new(k, m, z).unwrap());
        assert_eq!(tail(4, 7, 0), Ok(TailParams { d: 2, t: 0, target: 0 }));
        assert_eq!(tail(10, 7, 0), Ok(TailParams { d: 4, t: 1, target: 6 }));
        assert_eq!(tail(3, 8, 0), Ok(TailParams { d: 2, t: 1, target: 1 }));
        // N = 9 sits exactly on the bracket boundary (d+2)(d-1)/2 for d = 4
        assert_eq!(tail(10, 7, 3), Ok(TailParams { d: 5, t: 0, target: 9 }));
        assert_eq!(tail(10, 7, -6), Ok(TailParams { d: 2, t: 0, target: 0 }));
        assert_eq!(tail(4, 7, -1), Err(ConstructionError::Infeasible { target: -1 }));
    }

    #[test]
    fn lily_shape() {
        let p = LilyParams::new(4, 7, 0).unwrap();
        let g = build_lily(p).unwrap();
        assert_eq!(g.order(), 67);
        assert!(g.is_fully_labeled());
        // t = 0: pendant hangs off u0
        let u0 = g.vertex_by_label("u0").unwrap();
        assert_eq!(g.degree(u0), 4 * 7 + 2);
        assert!(g.has_edge(u0, g.vertex_by_label("u_prime").unwrap()));
        assert!(build_lily(LilyParams::new(4, 7, 1).unwrap()).is_err());
        assert_eq!(build_lily(p).unwrap(), build_lily_general(p).unwrap());
    }

    #[test]
    fn lily_first_layer_delta_matches_z() {
        for z in [-6, 0, 3] {
            let g = build_lily_general(LilyParams::new(10, 7, z).unwrap()).unwrap();
            for label in ["v1_1_1", "v1_4_7", "v1_7_10"] {
                let v = g.vertex_by_label(label).unwrap();
                assert_eq!(delta_v::<i64>(&g, v), Ok(Deletion::Delta(z)), "{label}, z = {z}");
            }
        }
    }

    #[test]
    fn chorded_cycle_shape() {
        let g = build_chorded_cycle_12();
        assert_eq!((g.order(), g.size()), (12, 16));
        let mut degrees: Vec<_> = g.vertices().map(|v| g.degree(v)).collect();
        degrees.sort();
        assert_eq!(degrees, [2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]);
        let good = good_vertices(&g).unwrap();
        assert_eq!(good.len(), 8);
        assert!(good.iter().all(|&v| g.degree(v) == 3));
    }

    #[test]
    fn verify_small_cases() {
        let runs = verify_bunch_theorem(&[2, 3]).unwrap();
        assert!(runs.iter().all(Verification::passed), "{:?}", runs[0].failures);
        assert_eq!(runs[0].report.as_ref().unwrap().good_proportion, Ratio::new(1, 4));
        let runs = verify_lily_theorem(&[(4, 7, 0), (2, 9, 0)]).unwrap();
        for run in &runs {
            assert!(run.passed(), "{}: {:?}", run.params, run.failures);
        }
        // 2km + m + 2 + d = 36 + 9 + 2 + 2
        assert_eq!(runs[1].report.as_ref().unwrap().order, 49);
        assert_eq!(runs[1].report.as_ref().unwrap().good_count, 18);
        assert!(verify_lily_theorem(&[(2, 7, 0)]).is_err());
    }
}
