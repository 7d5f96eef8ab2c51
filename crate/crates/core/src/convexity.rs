//! Geodesic intervals, convex hulls and convexity tests.

use crate::error::{Error, Result};
use crate::metric::DistanceMatrix;
use crate::vertex_set::VertexSet;

/// Precomputed interval masks `I[u, v]` for every ordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalTable {
    n: usize,
    masks: Vec<VertexSet>,
}

impl IntervalTable {
    pub fn new(dm: &DistanceMatrix) -> Result<Self> {
        let n = dm.order();
        if n > VertexSet::CAPACITY {
            return Err(Error::TooLarge {
                n,
                max: VertexSet::CAPACITY,
            });
        }
        let mut masks = vec![VertexSet::empty(); n * n];
        for u in 0..n {
            for v in u..n {
                let m = dm.interval(u, v);
                masks[u * n + v] = m;
                masks[v * n + u] = m;
            }
        }
        Ok(IntervalTable { n, masks })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        self.masks[u * self.n + v]
    }

    /// Union of the intervals over all pairs from `s` (including `u == v`).
    pub fn interval_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::empty();
        for u in s {
            let row = &self.masks[u * self.n..(u + 1) * self.n];
            for v in s {
                if v < u {
                    continue;
                }
                out |= row[v];
            }
        }
        out
    }

    pub fn is_convex(&self, s: VertexSet) -> bool {
        for u in s {
            let row = &self.masks[u * self.n..(u + 1) * self.n];
            for v in s {
                if v > u && !row[v].is_subset(s) {
                    return false;
                }
            }
        }
        true
    }

    /// Smallest convex superset of `s`.
    pub fn closure(&self, s: VertexSet) -> VertexSet {
        self.grow(VertexSet::empty(), s)
    }

    /// Closure of `convex ∪ {v}` where `convex` is already convex.
    pub fn extend(&self, convex: VertexSet, v: usize) -> VertexSet {
        debug_assert!(self.is_convex(convex));
        self.grow(convex, VertexSet::singleton(v))
    }

    pub fn is_hull_set(&self, s: VertexSet) -> bool {
        self.closure(s) == self.all()
    }

    // Worklist fixpoint. `done` is a convex set whose pairs need no further
    // work; each vertex of the result is processed at most once, so the loop
    // runs at most n times.
    fn grow(&self, mut done: VertexSet, pending: VertexSet) -> VertexSet {
        let mut result = done | pending;
        let mut pending = pending - done;
        let mut steps = 0;
        while let Some(x) = pending.first() {
            pending.remove(x);
            steps += 1;
            assert!(steps <= self.n, "closure exceeded {} steps", self.n);
            let row = &self.masks[x * self.n..(x + 1) * self.n];
            for y in done {
                let fresh = row[y] - result;
                result |= fresh;
                pending |= fresh;
            }
            done.insert(x);
        }
        result
    }
}
