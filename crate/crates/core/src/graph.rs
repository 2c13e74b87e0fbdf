//! Immutable simple undirected graphs with exact BFS distances.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of a vertex, contiguous in `[0, n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId(index)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    OutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("label {label:?} is used by more than one vertex")]
    DuplicateLabel { label: String },
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

/// Shortest-path distances from one source; `None` marks an unreachable vertex.
pub type Distances = Vec<Option<u32>>;

/// Simple undirected graph with sorted adjacency lists and optional role labels.
///
/// Graphs are immutable once built. Use [`Graph::from_edge_list`] for plain
/// fixtures and [`GraphBuilder`] when vertices carry labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<VertexId>>,
    labels: Vec<Option<String>>,
    size: usize,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); n], labels: vec![None; n], size: 0 }
    }

    /// Builds a graph from an explicit edge list. Duplicate edges are rejected
    /// in either orientation so the result is always simple.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::OutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adjacency[u].push(VertexId(v));
            adjacency[v].push(VertexId(u));
        }
        Self::from_adjacency(adjacency, vec![None; n])
    }

    fn from_adjacency(
        mut adjacency: Vec<Vec<VertexId>>,
        labels: Vec<Option<String>>,
    ) -> Result<Self, GraphError> {
        let mut twice_size = 0;
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(pair) = list.windows(2).find(|p| p[0] == p[1]) {
                let v = pair[0].0;
                return Err(GraphError::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            twice_size += list.len();
        }
        let mut seen = std::collections::HashSet::new();
        for label in labels.iter().flatten() {
            if !seen.insert(label.as_str()) {
                return Err(GraphError::DuplicateLabel { label: label.clone() });
            }
        }
        let graph = Graph { adjacency, labels, size: twice_size / 2 };
        debug_assert!(graph.is_simple());
        Ok(graph)
    }

    fn is_simple(&self) -> bool {
        self.adjacency.iter().enumerate().all(|(u, list)| {
            list.windows(2).all(|p| p[0] < p[1])
                && list.iter().all(|&v| v.0 != u && v.0 < self.order() && self.has_edge(v, VertexId(u)))
        })
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.order()).map(VertexId)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v.0 < self.order() {
            Ok(())
        } else {
            Err(GraphError::OutOfRange { vertex: v.0, order: self.order() })
        }
    }

    /// Sorted neighbors of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v.0]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency.get(u.0).is_some_and(|list| list.binary_search(&v).is_ok())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |v| v.0 > u).map(move |&v| (VertexId(u), v)))
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.get(v.0).and_then(|l| l.as_deref())
    }

    /// Looks a vertex up by its role label.
    pub fn vertex_by_label(&self, label: &str) -> Option<VertexId> {
        self.labels.iter().position(|l| l.as_deref() == Some(label)).map(VertexId)
    }

    /// `(vertex, label)` for every labeled vertex.
    pub fn labels(&self) -> impl Iterator<Item = (VertexId, &str)> + '_ {
        self.labels.iter().enumerate().filter_map(|(i, l)| l.as_deref().map(|l| (VertexId(i), l)))
    }

    pub fn is_fully_labeled(&self) -> bool {
        self.labels.iter().all(Option::is_some)
    }

    /// Same vertex count and edge set, ignoring labels.
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.adjacency == other.adjacency
    }

    /// Deletes `v`, returning `G - v` together with the order-preserving
    /// reindexing of the surviving vertices. Labels follow their vertices.
    pub fn remove_vertex(&self, v: VertexId) -> Result<(Graph, VertexMap), GraphError> {
        self.check_vertex(v)?;
        let map = VertexMap::deleting(self.order(), v);
        let mut adjacency = Vec::with_capacity(self.order() - 1);
        let mut labels = Vec::with_capacity(self.order() - 1);
        for u in self.vertices().filter(|&u| u != v) {
            adjacency.push(self.neighbors(u).iter().filter_map(|&w| map.get(w)).collect());
            labels.push(self.labels[u.0].clone());
        }
        let removed = Graph { adjacency, labels, size: self.size - self.degree(v) };
        debug_assert!(removed.is_simple());
        Ok((removed, map))
    }

    /// Exact unweighted distances from `source`.
    pub fn bfs_distances(&self, source: VertexId) -> Result<Distances, GraphError> {
        self.check_vertex(source)?;
        let mut scratch = BfsScratch::new(self.order());
        scratch.run(self, source.0, None);
        Ok(scratch.distances())
    }

    /// All-pairs distances via one BFS per vertex.
    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.order();
        let mut entries = Vec::with_capacity(n * n);
        let mut scratch = BfsScratch::new(n);
        for s in 0..n {
            scratch.run(self, s, None);
            entries.extend(scratch.dist.iter().map(|&d| finite(d)));
        }
        DistanceMatrix { n, entries }
    }

    /// True iff one BFS from vertex 0 reaches everything. K0 and K1 count as connected.
    pub fn is_connected(&self) -> bool {
        if self.order() <= 1 {
            return true;
        }
        let mut scratch = BfsScratch::new(self.order());
        scratch.run(self, 0, None).reached == self.order()
    }
}

/// Order-preserving reindexing produced by [`Graph::remove_vertex`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    removed: VertexId,
    order: usize,
}

impl VertexMap {
    fn deleting(order: usize, removed: VertexId) -> Self {
        VertexMap { removed, order }
    }

    pub fn removed(&self) -> VertexId {
        self.removed
    }

    /// New index of an old vertex, `None` for the deleted one.
    pub fn get(&self, old: VertexId) -> Option<VertexId> {
        match old.0.cmp(&self.removed.0) {
            _ if old.0 >= self.order => None,
            std::cmp::Ordering::Less => Some(old),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(VertexId(old.0 - 1)),
        }
    }

    /// Old index of a vertex of the reduced graph.
    pub fn original(&self, new: VertexId) -> Option<VertexId> {
        if new.0 + 1 >= self.order {
            return None;
        }
        Some(if new.0 < self.removed.0 { new } else { VertexId(new.0 + 1) })
    }
}

/// Dense matrix of exact shortest-path distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Option<u32>>,
}

impl DistanceMatrix {
    /// Wraps precomputed entries in row-major order.
    pub fn from_rows(n: usize, entries: Vec<Option<u32>>) -> Self {
        assert_eq!(entries.len(), n * n, "distance matrix must be n x n");
        DistanceMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: VertexId, v: VertexId) -> Option<u32> {
        self.entries[u.0 * self.n + v.0]
    }

    pub fn row(&self, u: VertexId) -> &[Option<u32>] {
        &self.entries[u.0 * self.n..(u.0 + 1) * self.n]
    }

    pub fn all_finite(&self) -> bool {
        self.entries.iter().all(Option::is_some)
    }
}

const UNREACHED: u32 = u32::MAX;

#[inline]
fn finite(d: u32) -> Option<u32> {
    (d != UNREACHED).then_some(d)
}

pub(crate) struct BfsOutcome {
    pub reached: usize,
    pub distance_sum: u64,
}

/// Reusable BFS buffers. The sentinel never leaves this type.
pub(crate) struct BfsScratch {
    dist: Vec<u32>,
    queue: Vec<usize>,
}

impl BfsScratch {
    pub fn new(n: usize) -> Self {
        BfsScratch { dist: vec![UNREACHED; n], queue: Vec::with_capacity(n) }
    }

    /// BFS from `source` in the graph with `excluded` (if any) deleted.
    pub fn run(&mut self, g: &Graph, source: usize, excluded: Option<usize>) -> BfsOutcome {
        self.dist.fill(UNREACHED);
        self.queue.clear();
        if let Some(x) = excluded {
            // never enqueued, never relaxed
            self.dist[x] = 0;
        }
        self.dist[source] = 0;
        self.queue.push(source);
        let mut head = 0;
        let mut distance_sum = 0u64;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let next = self.dist[u] + 1;
            for &w in &g.adjacency[u] {
                if self.dist[w.0] == UNREACHED {
                    self.dist[w.0] = next;
                    distance_sum += u64::from(next);
                    self.queue.push(w.0);
                }
            }
        }
        if let Some(x) = excluded {
            self.dist[x] = UNREACHED;
        }
        BfsOutcome { reached: self.queue.len(), distance_sum }
    }

    #[inline]
    pub fn dist(&self, v: usize) -> Option<u32> {
        finite(self.dist[v])
    }

    pub fn distances(&self) -> Distances {
        self.dist.iter().map(|&d| finite(d)).collect()
    }
}

/// Incremental construction of labeled graphs.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    adjacency: Vec<Vec<VertexId>>,
    labels: Vec<Option<String>>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> VertexId {
        self.adjacency.push(Vec::new());
        self.labels.push(Some(label.into()));
        VertexId(self.adjacency.len() - 1)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        let n = self.adjacency.len();
        for x in [u, v] {
            if x.0 >= n {
                return Err(GraphError::OutOfRange { vertex: x.0, order: n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u.0 });
        }
        self.adjacency[u.0].push(v);
        self.adjacency[v.0].push(u);
        Ok(())
    }

    pub fn build(self) -> Result<Graph, GraphError> {
        Graph::from_adjacency(self.adjacency, self.labels)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!((k2.order(), k2.size()), (2, 1));
        assert!(k2.has_edge(VertexId(1), VertexId(0)));

        let c11 = cycle(11);
        assert_eq!(c11.order(), 11);
        assert!(c11.vertices().all(|v| c11.degree(v) == 2));
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(Graph::from_edge_list(3, &[(0, 3)]), Err(GraphError::OutOfRange { vertex: 3, order: 3 }));
        assert_eq!(Graph::from_edge_list(3, &[(2, 2)]), Err(GraphError::SelfLoop { vertex: 2 }));
    }

    #[test]
    fn remove_vertex_cases() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let (g, map) = p3.remove_vertex(VertexId(1)).unwrap();
        assert_eq!((g.order(), g.size()), (2, 0));
        assert_eq!(map.get(VertexId(2)), Some(VertexId(1)));
        assert_eq!(map.get(VertexId(1)), None);
        assert_eq!(map.original(VertexId(1)), Some(VertexId(2)));

        let p10 = Graph::from_edge_list(10, &(0..9).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap();
        for v in 0..11 {
            let (g, _) = cycle(11).remove_vertex(VertexId(v)).unwrap();
            let mut degrees: Vec<_> = g.vertices().map(|u| g.degree(u)).collect();
            degrees.sort();
            assert_eq!(g.size(), 9);
            assert!(g.is_connected());
            assert_eq!(degrees, [1, 1, 2, 2, 2, 2, 2, 2, 2, 2]);
            if v == 10 {
                assert!(g.same_adjacency(&p10));
            }
        }

        let (k3, _) = complete(4).remove_vertex(VertexId(0)).unwrap();
        assert_eq!(k3, complete(3));
        assert!(complete(4).remove_vertex(VertexId(4)).is_err());
    }

    #[test]
    fn remove_vertex_carries_labels() {
        let mut b = GraphBuilder::new();
        let a = b.add_vertex("a");
        let m = b.add_vertex("m");
        let z = b.add_vertex("z");
        b.add_edge(a, m).unwrap();
        b.add_edge(m, z).unwrap();
        let g = b.build().unwrap();
        let (h, _) = g.remove_vertex(m).unwrap();
        assert_eq!(h.label(VertexId(1)), Some("z"));
        assert_eq!(h.vertex_by_label("a"), Some(VertexId(0)));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let mut b = GraphBuilder::new();
        b.add_vertex("x");
        b.add_vertex("x");
        assert!(matches!(b.build(), Err(GraphError::DuplicateLabel { .. })));
    }

    #[test]
    fn bfs_examples() {
        let d: Vec<_> = cycle(11).bfs_distances(VertexId(0)).unwrap();
        let expect: Vec<_> = [0, 1, 2, 3, 4, 5, 5, 4, 3, 2, 1].iter().map(|&x| Some(x)).collect();
        assert_eq!(d, expect);

        assert_eq!(
            complete(5).bfs_distances(VertexId(2)).unwrap(),
            vec![Some(1), Some(1), Some(0), Some(1), Some(1)]
        );

        let two_edges = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.bfs_distances(VertexId(0)).unwrap(), vec![Some(0), Some(1), None, None]);
        assert!(two_edges.bfs_distances(VertexId(4)).is_err());
    }

    #[test]
    fn all_pairs_examples() {
        let c4 = cycle(4).all_pairs_distances();
        let twos = (0..4)
            .flat_map(|u| (0..4).map(move |v| (u, v)))
            .filter(|&(u, v)| c4.get(VertexId(u), VertexId(v)) == Some(2))
            .count();
        assert_eq!(twos, 4);

        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4.all_pairs_distances().get(VertexId(0), VertexId(3)), Some(3));

        let k1 = Graph::empty(1).all_pairs_distances();
        assert_eq!(k1, DistanceMatrix::from_rows(1, vec![Some(0)]));
    }

    #[test]
    fn connectivity() {
        assert!(cycle(11).is_connected());
        assert!(!Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap().is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());
        assert!(!Graph::empty(2).is_connected());
    }

    #[test]
    fn excluded_vertex_bfs() {
        let c5 = cycle(5);
        let mut scratch = BfsScratch::new(5);
        let out = scratch.run(&c5, 0, Some(1));
        assert_eq!(out.reached, 4);
        assert_eq!(out.distance_sum, 1 + 2 + 3);
        assert_eq!(scratch.dist(1), None);
        assert_eq!(scratch.dist(2), Some(3));
    }
}
