//! Oracles shared by the integration suites. Nothing here calls the BFS code
//! under test.

#![allow(dead_code)]

use rand::Rng;
use wienerlab::{Graph, VertexId};

/// Floyd–Warshall over the edge set, `None` for unreachable pairs.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<Option<u32>>> {
    let n = g.order();
    let mut d = vec![vec![None; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = Some(0);
    }
    for (u, v) in g.edges() {
        d[u.index()][v.index()] = Some(1);
        d[v.index()][u.index()] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            let Some(ik) = d[i][k] else { continue };
            for j in 0..n {
                if let Some(kj) = d[k][j] {
                    if d[i][j].is_none_or(|ij| ik + kj < ij) {
                        d[i][j] = Some(ik + kj);
                    }
                }
            }
        }
    }
    d
}

/// Floyd–Warshall on `g` with `v` deleted, indexed by the original vertex ids.
pub fn floyd_warshall_without(g: &Graph, v: VertexId) -> Vec<Vec<Option<u32>>> {
    let edges: Vec<_> =
        g.edges().filter(|&(a, b)| a != v && b != v).map(|(a, b)| (a.index(), b.index())).collect();
    let mut d = floyd_warshall(&Graph::from_edge_list(g.order(), &edges).unwrap());
    for row in d.iter_mut() {
        row[v.index()] = None;
    }
    d[v.index()].iter_mut().for_each(|x| *x = None);
    d
}

/// Wiener index of the subgraph avoiding `skip`; `None` if it is disconnected.
pub fn oracle_wiener(d: &[Vec<Option<u32>>], skip: Option<usize>) -> Option<i64> {
    let n = d.len();
    let mut total = 0i64;
    for u in (0..n).filter(|&u| Some(u) != skip) {
        for w in (u + 1..n).filter(|&w| Some(w) != skip) {
            total += i64::from(d[u][w]?);
        }
    }
    Some(total)
}

/// `Δ_v` by the definition, on Floyd–Warshall distances. `None` = disconnects.
pub fn oracle_delta(g: &Graph, v: VertexId) -> Option<i64> {
    if g.order() == 1 {
        return None;
    }
    let full = oracle_wiener(&floyd_warshall(g), None).expect("connected input");
    let reduced = oracle_wiener(&floyd_warshall_without(g, v), Some(v.index()))?;
    Some(full - reduced)
}

/// Smallest `d >= 2` with `N < (d+2)(d-1)/2`, by walking up from 2.
pub fn linear_scan_tail(target: u64) -> (u64, u64) {
    let mut d = 2u64;
    while (d + 2) * (d - 1) / 2 <= target {
        d += 1;
    }
    (d, target - (d + 1) * (d - 2) / 2)
}

/// Random connected graph: a random recursive tree plus each remaining pair
/// with probability `p`.
pub fn random_connected(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for v in 1..n {
        for u in 0..v {
            if !edges.contains(&(u, v)) && rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    // shuffle vertex names so trees are not always rooted at 0
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let edges: Vec<_> = edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Random graph without a connectivity guarantee.
pub fn random_gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> =
        (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}
