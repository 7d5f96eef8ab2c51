//! Exact convexity numbers.
//!
//! Both solvers return the largest proper convex set; among several of the
//! same size the one with the numerically smallest membership word wins, so
//! the two agree on witnesses as well as values.

use std::time::{Duration, Instant};

use crate::convexity::IntervalTable;
use crate::error::{Error, Result};
use crate::metric::DistanceMatrix;
use crate::vertex_set::VertexSet;

/// Largest vertex count the exact solvers accept.
pub const MAX_SOLVER_ORDER: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverKind {
    Exhaustive,
    BranchAndBound,
}

/// A maximum proper convex set and how hard it was to find.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityResult {
    pub value: usize,
    pub witness: VertexSet,
    /// Candidate sets (exhaustive) or search nodes (branch and bound).
    pub explored: u64,
    pub elapsed: Duration,
}

fn checked_table(dm: &DistanceMatrix) -> Result<IntervalTable> {
    let n = dm.order();
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    if n > MAX_SOLVER_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_SOLVER_ORDER,
        });
    }
    IntervalTable::new(dm)
}

pub fn convexity_number(dm: &DistanceMatrix, kind: SolverKind) -> Result<ConvexityResult> {
    match kind {
        SolverKind::Exhaustive => convexity_number_exhaustive(dm),
        SolverKind::BranchAndBound => convexity_number_bnb(dm),
    }
}

/// Scans subsets by decreasing size, and by increasing membership word
/// within a size, returning the first proper convex one.
pub fn convexity_number_exhaustive(dm: &DistanceMatrix) -> Result<ConvexityResult> {
    let start = Instant::now();
    let table = checked_table(dm)?;
    let n = table.order();

    // hull_partner[u]: vertices v such that {u, v} is a hull set. A proper
    // convex set never holds such a pair.
    let mut hull_partner = vec![VertexSet::empty(); n];
    for u in 0..n {
        for v in u + 1..n {
            if table.is_hull_set(VertexSet::from_iter([u, v])) {
                hull_partner[u].insert(v);
                hull_partner[v].insert(u);
            }
        }
    }

    let mut explored = 0u64;
    for k in (0..n).rev() {
        for bits in Combinations::new(n, k) {
            let s = VertexSet::from_bits(bits);
            explored += 1;
            if s.iter().any(|u| hull_partner[u].intersects(s)) {
                continue;
            }
            if table.is_convex(s) {
                return Ok(ConvexityResult {
                    value: k,
                    witness: s,
                    explored,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    unreachable!("the empty set is always convex")
}

/// Branch and bound over convex sets.
///
/// Every proper convex set misses a smallest vertex `i`; search `i` looks
/// only at convex sets containing `0..i` and avoiding `i`. Within a search
/// the state is a convex set `c` plus a set `banned` of vertices the final
/// set must avoid; branching takes the lowest open vertex and either adds it
/// (re-closing `c`) or bans it.
pub fn convexity_number_bnb(dm: &DistanceMatrix) -> Result<ConvexityResult> {
    let start = Instant::now();
    let table = checked_table(dm)?;
    let n = table.order();
    let mut search = Bnb {
        table: &table,
        all: table.all(),
        best: VertexSet::empty(),
        explored: 0,
    };
    let mut prefix = VertexSet::empty();
    for i in 0..n {
        let base = table.closure(prefix);
        if !base.contains(i) {
            search.run(base, VertexSet::singleton(i));
        }
        prefix.insert(i);
    }
    Ok(ConvexityResult {
        value: search.best.len(),
        witness: search.best,
        explored: search.explored,
        elapsed: start.elapsed(),
    })
}

struct Bnb<'a> {
    table: &'a IntervalTable,
    all: VertexSet,
    best: VertexSet,
    explored: u64,
}

impl Bnb<'_> {
    fn better(&self, s: VertexSet) -> bool {
        s.len() > self.best.len() || (s.len() == self.best.len() && s < self.best)
    }

    fn run(&mut self, c: VertexSet, mut banned: VertexSet) {
        self.explored += 1;
        if self.better(c) {
            self.best = c;
        }

        // Drop open vertices whose addition would pull in a banned one.
        let mut open = self.all - c - banned;
        let mut first: Option<(usize, VertexSet)> = None;
        for u in open {
            let grown = self.table.extend(c, u);
            if grown.intersects(banned) {
                open.remove(u);
                banned.insert(u);
            } else if first.is_none() {
                first = Some((u, grown));
            }
        }

        let bound = c | open;
        if !self.better(bound) {
            return;
        }
        let Some((u, grown)) = first else {
            return;
        };
        self.run(grown, banned);
        banned.insert(u);
        self.run(c, banned);
    }
}

/// All `k`-subsets of `0..n` as bit words in increasing numeric order.
#[derive(Debug, Clone)]
pub struct Combinations {
    next: Option<u64>,
    limit: u64,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(n < 64 && k <= n);
        Combinations {
            next: Some((1u64 << k) - 1),
            limit: 1u64 << n,
        }
    }
}

impl Iterator for Combinations {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur >= self.limit {
            self.next = None;
            return None;
        }
        self.next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let low = cur & cur.wrapping_neg();
            let ripple = cur + low;
            Some(ripple | (((cur ^ ripple) >> 2) / low))
        };
        Some(cur)
    }
}
