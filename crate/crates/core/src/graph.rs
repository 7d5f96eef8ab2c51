//! Simple undirected graphs, complements and complementary prisms.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Whether a graph is an ordinary graph or a complementary prism built from
/// a base graph on `base` vertices.
///
/// In a prism, vertices `0..base` are the original side and `v + base` is the
/// mirror of `v` on the complement side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Plain,
    Prism { base: usize },
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    kind: GraphKind,
}

/// Maximum degree, the degree sequence and the degree-one vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub degrees: Vec<usize>,
    pub pendants: Vec<usize>,
}

impl Graph {
    /// Builds a plain graph. Duplicate edges collapse; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph {
            adj,
            kind: GraphKind::Plain,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            kind: GraphKind::Plain,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Graph {
            adj,
            kind: GraphKind::Plain,
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Open neighborhood as a bit set. Panics past 64 vertices.
    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        self.adj[v].iter().copied().collect()
    }

    /// Closed neighborhood `N[v]` as a bit set.
    pub fn closed_neighbor_set(&self, v: usize) -> VertexSet {
        self.neighbor_set(v) | VertexSet::singleton(v)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.order() })
        }
    }

    /// Mirror of a base vertex in a prism (`v + base`), or of a mirror back
    /// to its base vertex. `None` for plain graphs.
    pub fn mirror(&self, v: usize) -> Option<usize> {
        match self.kind {
            GraphKind::Plain => None,
            GraphKind::Prism { base } if v < base => Some(v + base),
            GraphKind::Prism { base } => Some(v - base),
        }
    }

    pub fn complement(&self) -> Result<Graph> {
        if self.kind != GraphKind::Plain {
            return Err(Error::PrismComplement);
        }
        let n = self.order();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Ok(Graph {
            adj,
            kind: GraphKind::Plain,
        })
    }

    /// The complementary prism: this graph, its complement shifted by `n`,
    /// and the matching `v -- v + n`.
    pub fn complementary_prism(&self) -> Result<Graph> {
        if self.kind != GraphKind::Plain {
            return Err(Error::NotPlain);
        }
        let n = self.order();
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        let mut adj = vec![Vec::new(); 2 * n];
        for u in 0..n {
            let mut side: Vec<usize> = self.adj[u].clone();
            side.push(u + n);
            adj[u] = side;

            let mut mirror = vec![u];
            mirror.extend((0..n).filter(|&v| v != u && !self.has_edge(u, v)).map(|v| v + n));
            mirror.sort_unstable();
            adj[u + n] = mirror;
        }
        Ok(Graph {
            adj,
            kind: GraphKind::Prism { base: n },
        })
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        DegreeStats {
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            pendants: (0..self.order()).filter(|&v| degrees[v] == 1).collect(),
            degrees,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of degree-one neighbors of `x`.
    pub fn pendant_neighbor_count(&self, x: usize) -> Result<usize> {
        self.check_vertex(x)?;
        Ok(self.adj[x].iter().filter(|&&y| self.degree(y) == 1).count())
    }

    /// `max { deg(y) : y != x }`, degrees taken in this graph (not in the
    /// graph with `x` deleted).
    pub fn max_degree_excluding(&self, x: usize) -> Result<usize> {
        if self.order() < 2 {
            return Err(Error::TooSmall {
                n: self.order(),
                min: 2,
            });
        }
        self.check_vertex(x)?;
        Ok((0..self.order())
            .filter(|&y| y != x)
            .map(|y| self.degree(y))
            .max()
            .unwrap_or(0))
    }

    /// True iff the closed neighborhood of `v` induces a clique.
    pub fn is_extreme(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        let ns = &self.adj[v];
        Ok(ns
            .iter()
            .enumerate()
            .all(|(i, &a)| ns[i + 1..].iter().all(|&b| self.has_edge(a, b))))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Disjoint union, `other` relabelled after this graph's vertices.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + n, v + n)))
            .collect::<Vec<_>>();
        Graph::from_edges(n + other.order(), edges).expect("union of valid graphs")
    }

    /// Applies `perm` (old vertex -> new vertex) to a plain graph.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let edges = self.edges().map(|(u, v)| (perm[u], perm[v])).collect::<Vec<_>>();
        Graph::from_edges(self.order(), edges).expect("relabelling keeps the graph simple")
    }
}
