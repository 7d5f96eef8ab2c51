//! Test corpora: all small connected graphs, named graphs and seeded random
//! connected graphs.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::tree::prufer_decode;

/// Environment variable holding the seed for randomized corpora.
pub const SEED_VAR: &str = "GEODEX_SEED";
const DEFAULT_SEED: u64 = 0x5eed_c0de;

/// Seed from `GEODEX_SEED`, falling back to a fixed default.
pub fn seed() -> u64 {
    std::env::var(SEED_VAR)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Largest order served by [`connected_graphs`].
pub const MAX_CONNECTED_ORDER: usize = 7;

fn pair_bit(u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    // column-major upper triangle
    v * (v - 1) / 2 + u
}

fn word(g: &Graph, perm: &[usize]) -> u64 {
    g.edges()
        .fold(0u64, |w, (u, v)| w | 1u64 << pair_bit(perm[u], perm[v]))
}

/// Smallest adjacency word over all relabelings that sort vertices by
/// (degree, sorted neighbor degrees). Equal for isomorphic graphs.
pub fn canonical_word(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= 11, "canonical_word is exponential; small graphs only");
    let signature = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|&u| g.degree(u)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| signature(v));
    // cells: runs of equal signature, assigned to consecutive target slots
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match cells.last_mut() {
            Some(cell) if signature(cell[0]) == signature(v) => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut perm = vec![0usize; n];
    let mut best = u64::MAX;
    fn assign(
        g: &Graph,
        cells: &mut [Vec<usize>],
        cell: usize,
        slot: usize,
        perm: &mut [usize],
        best: &mut u64,
    ) {
        if cell == cells.len() {
            *best = (*best).min(word(g, perm));
            return;
        }
        let len = cells[cell].len();
        permute(g, cells, cell, slot, 0, len, perm, best);
    }
    #[allow(clippy::too_many_arguments)]
    fn permute(
        g: &Graph,
        cells: &mut [Vec<usize>],
        cell: usize,
        slot: usize,
        k: usize,
        len: usize,
        perm: &mut [usize],
        best: &mut u64,
    ) {
        if k == len {
            for (i, &v) in cells[cell].iter().enumerate() {
                perm[v] = slot + i;
            }
            assign(g, cells, cell + 1, slot + len, perm, best);
            return;
        }
        for i in k..len {
            cells[cell].swap(k, i);
            permute(g, cells, cell, slot, k + 1, len, perm, best);
            cells[cell].swap(k, i);
        }
    }
    assign(g, &mut cells, 0, 0, &mut perm, &mut best);
    best
}

/// Every connected graph on `n` vertices up to isomorphism (`n <= 7`),
/// ordered by canonical word. Built by attaching a new vertex to every
/// non-empty neighbor set of each connected graph on `n - 1` vertices; every
/// connected graph has a vertex whose removal leaves it connected.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_CONNECTED_ORDER).contains(&n));
    let mut level = vec![Graph::empty(1)];
    for m in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 1u32..(1 << (m - 1)) {
                let edges = g
                    .edges()
                    .chain((0..m - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, m - 1)))
                    .collect::<Vec<_>>();
                let h = Graph::from_edges(m, edges).expect("valid extension");
                let w = canonical_word(&h);
                if seen.insert(w) {
                    next.push((w, h));
                }
            }
        }
        next.sort_by_key(|(w, _)| *w);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    level
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path")
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).expect("K_ab")
}

pub fn wheel(rim: usize) -> Graph {
    let edges = (0..rim).flat_map(|i| [(0, 1 + i), (1 + i, 1 + (i + 1) % rim)]);
    Graph::from_edges(rim + 1, edges).expect("wheel")
}

/// The standard outer-5-cycle / inner-pentagram drawing.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("petersen")
}

pub fn cube() -> Graph {
    let edges = (0..8usize).flat_map(|u| (0..3).map(move |b| (u, u ^ (1 << b)))).filter(|(u, v)| u < v);
    Graph::from_edges(8, edges).expect("cube")
}

pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges).expect("grid")
}

/// Named connected graphs on at most 12 vertices.
pub fn named_graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in [1, 2, 5, 8, 12] {
        out.push((format!("P{n}"), path(n)));
    }
    for n in [3, 4, 5, 6, 7, 9, 12] {
        out.push((format!("C{n}"), cycle(n)));
    }
    for n in [2, 4, 6] {
        out.push((format!("K{n}"), Graph::complete(n)));
    }
    out.push(("K1,5".into(), complete_bipartite(1, 5)));
    out.push(("K2,3".into(), complete_bipartite(2, 3)));
    out.push(("K3,3".into(), complete_bipartite(3, 3)));
    out.push(("K3,4".into(), complete_bipartite(3, 4)));
    out.push(("W5".into(), wheel(5)));
    out.push(("W8".into(), wheel(8)));
    out.push(("Petersen".into(), petersen()));
    out.push(("Q3".into(), cube()));
    out.push(("Grid3x3".into(), grid(3, 3)));
    out.push(("Grid3x4".into(), grid(3, 4)));
    out
}

/// A uniformly random labeled spanning tree plus each remaining pair with
/// probability `extra`.
pub fn random_connected<R: Rng>(n: usize, extra: f64, rng: &mut R) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let tree = prufer_decode(&code).expect("in-range code");
    let mut edges: Vec<(usize, usize)> = tree.graph().edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.graph().has_edge(u, v) && rng.random_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid random graph")
}

/// Disconnected graphs: every multiset of at least two connected graphs
/// from [`connected_graphs`] with total order at most `max_n` (`<= 8`).
pub fn disconnected_graphs(max_n: usize) -> Vec<Graph> {
    assert!(max_n <= 8);
    let pieces: Vec<Graph> = (1..=max_n.min(MAX_CONNECTED_ORDER))
        .flat_map(connected_graphs)
        .collect();
    let mut out = Vec::new();
    // non-decreasing piece indices give multisets
    fn go(pieces: &[Graph], from: usize, acc: &Graph, count: usize, max_n: usize, out: &mut Vec<Graph>) {
        if count >= 2 {
            out.push(acc.clone());
        }
        for (i, p) in pieces.iter().enumerate().skip(from) {
            if acc.order() + p.order() <= max_n {
                go(pieces, i, &acc.disjoint_union(p), count + 1, max_n, out);
            }
        }
    }
    go(&pieces, 0, &Graph::empty(0), 0, max_n, &mut out);
    out
}
