//! All-pairs hop distances and the scalars derived from them.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Hop distances of a connected graph, with eccentricities, radius,
/// diameter, center and periphery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
    ecc: Vec<u32>,
    radius: u32,
    diameter: u32,
}

impl DistanceMatrix {
    /// One BFS per vertex. Refuses disconnected graphs, naming a vertex from
    /// each of two different components.
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        let mut dist = vec![u32::MAX; n * n];
        let mut queue = VecDeque::with_capacity(n);
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.clear();
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = row[u];
                for &v in g.neighbors(u) {
                    if row[v] == u32::MAX {
                        row[v] = du + 1;
                        queue.push_back(v);
                    }
                }
            }
            if let Some(t) = row.iter().position(|&d| d == u32::MAX) {
                return Err(Error::Disconnected(s, t));
            }
        }
        let ecc: Vec<u32> = (0..n)
            .map(|u| dist[u * n..(u + 1) * n].iter().copied().max().unwrap_or(0))
            .collect();
        let radius = ecc.iter().copied().min().unwrap_or(0);
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        Ok(DistanceMatrix {
            n,
            dist,
            ecc,
            radius,
            diameter,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.ecc[v]
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    /// Vertices of minimum eccentricity.
    pub fn center(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.ecc[v] == self.radius).collect()
    }

    /// Vertices of maximum eccentricity.
    pub fn periphery(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.ecc[v] == self.diameter).collect()
    }

    /// Vertices on some shortest `u`-`v` path. Panics past 64 vertices.
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        let duv = self.get(u, v);
        (0..self.n)
            .filter(|&w| self.get(u, w) + self.get(w, v) == duv)
            .collect()
    }
}
