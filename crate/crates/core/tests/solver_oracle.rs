//! Both solvers against a naive definition-level oracle.

use geodex::corpus::{self, connected_graphs, named_graphs};
use geodex::{convexity_number_bnb, convexity_number_exhaustive, DistanceMatrix, Graph, VertexSet};

/// Floyd-Warshall distances, independent of the BFS in `DistanceMatrix`.
fn floyd(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Largest proper convex subset by scanning every subset.
fn naive_con(g: &Graph) -> (usize, u64) {
    let n = g.order();
    let d = floyd(g);
    let convex = |s: u64| {
        (0..n).filter(|&u| s >> u & 1 == 1).all(|u| {
            (0..n).filter(|&v| s >> v & 1 == 1).all(|v| {
                (0..n).all(|w| d[u][w] + d[w][v] != d[u][v] || s >> w & 1 == 1)
            })
        })
    };
    let full = (1u64 << n) - 1;
    let mut best: Option<(usize, u64)> = None;
    for s in 0..full {
        if convex(s) {
            let k = s.count_ones() as usize;
            // largest size, then smallest word
            if best.is_none_or(|(bk, _)| k > bk) {
                best = Some((k, s));
            }
        }
    }
    best.expect("empty set is convex")
}

fn check(g: &Graph, label: &str) {
    let dm = DistanceMatrix::new(g).unwrap();
    let (value, word) = naive_con(g);
    let e = convexity_number_exhaustive(&dm).unwrap();
    let b = convexity_number_bnb(&dm).unwrap();
    assert_eq!(e.value, value, "{label}: exhaustive");
    assert_eq!(b.value, value, "{label}: bnb");
    assert_eq!(e.witness, VertexSet::from_bits(word), "{label}: exhaustive witness");
    assert_eq!(b.witness, e.witness, "{label}: bnb witness");
}

#[test]
fn all_connected_graphs_up_to_six() {
    for n in 1..=6 {
        for (i, g) in connected_graphs(n).iter().enumerate() {
            check(g, &format!("connected n={n} #{i}"));
        }
    }
}

#[test]
fn prisms_of_small_graphs() {
    for n in 1..=5 {
        for (i, g) in connected_graphs(n).iter().enumerate() {
            check(&g.complementary_prism().unwrap(), &format!("prism n={n} #{i}"));
        }
    }
    check(&corpus::cycle(5).complementary_prism().unwrap(), "petersen");
}

#[test]
fn named_graphs_small() {
    for (name, g) in named_graphs() {
        if g.order() <= 12 {
            check(&g, &name);
        }
    }
}

#[test]
fn frozen_values() {
    // values computed by `naive_con` above
    let value = |g: &Graph| convexity_number_exhaustive(&DistanceMatrix::new(g).unwrap()).unwrap().value;
    assert_eq!(value(&Graph::complete(4)), 3);
    assert_eq!(value(&Graph::empty(1)), 0);
    let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    assert_eq!(value(&star.complementary_prism().unwrap()), 7);
    assert_eq!(value(&corpus::path(4).complementary_prism().unwrap()), 5);
    assert_eq!(value(&corpus::petersen()), 5);
    assert_eq!(naive_con(&corpus::petersen()).0, 5);
}
