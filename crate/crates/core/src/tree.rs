//! Trees with cached metric data, Prüfer codes and named families.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::DistanceMatrix;

/// A tree with the statistics the prism formulas need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeSpec {
    graph: Graph,
    prufer: Option<Vec<usize>>,
    diameter: usize,
    max_degree: usize,
    center: Vec<usize>,
    pendant_counts: Vec<usize>,
}

impl TreeSpec {
    /// Checks the tree certificate (connected, `n - 1` edges) and caches
    /// diameter, maximum degree, center and pendant-neighbor counts.
    pub fn from_graph(graph: Graph) -> Result<Self> {
        let n = graph.order();
        if n == 0 {
            return Err(Error::NotATree("no vertices".into()));
        }
        if graph.size() != n - 1 {
            return Err(Error::NotATree(format!("{} edges on {n} vertices", graph.size())));
        }
        let dm = DistanceMatrix::new(&graph)
            .map_err(|e| Error::NotATree(e.to_string()))?;
        let pendant_counts = (0..n)
            .map(|v| graph.pendant_neighbor_count(v).expect("vertex in range"))
            .collect();
        Ok(TreeSpec {
            diameter: dm.diameter() as usize,
            max_degree: graph.max_degree(),
            center: dm.center(),
            pendant_counts,
            prufer: None,
            graph,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_graph(Graph::from_edges(n, edges.iter().copied())?)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn prufer(&self) -> Option<&[usize]> {
        self.prufer.as_deref()
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// One vertex for even diameter, two adjacent ones for odd.
    pub fn center(&self) -> &[usize] {
        &self.center
    }

    /// The unique central vertex, when the diameter is even.
    pub fn unique_center(&self) -> Option<usize> {
        match self.center[..] {
            [c] => Some(c),
            _ => None,
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.graph.degree(v)
    }

    /// `e(v)`: number of degree-one neighbors.
    pub fn pendant_count(&self, v: usize) -> usize {
        self.pendant_counts[v]
    }

    pub fn is_pendant(&self, v: usize) -> bool {
        self.graph.degree(v) == 1
    }

    /// Prüfer code of this labeled tree (`n >= 2`).
    pub fn prufer_encode(&self) -> Result<Vec<usize>> {
        prufer_encode(&self.graph)
    }

    pub fn classify(&self) -> Result<TreeClass> {
        let n = self.order();
        if n < 3 {
            return Err(Error::TooSmall { n, min: 3 });
        }
        let diameter = match self.diameter {
            2 => DiamClass::Two,
            3 => DiamClass::Three,
            4 => DiamClass::Four,
            _ => DiamClass::FiveOrMore,
        };
        let center = match diameter {
            DiamClass::Two | DiamClass::Four => self.unique_center(),
            _ => None,
        };
        let center_stats = center.map(|c| CenterStats {
            vertex: c,
            degree: self.degree(c),
            pendants: self.pendant_count(c),
            max_degree_elsewhere: self
                .graph
                .max_degree_excluding(c)
                .expect("n >= 3"),
        });
        Ok(TreeClass {
            order: n,
            diameter,
            max_degree: self.max_degree,
            center: center_stats,
        })
    }
}

/// Diameter bucket selecting a branch of the prism formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiamClass {
    Two,
    Three,
    Four,
    FiveOrMore,
}

impl std::fmt::Display for DiamClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DiamClass::Two => "2",
            DiamClass::Three => "3",
            DiamClass::Four => "4",
            DiamClass::FiveOrMore => ">=5",
        })
    }
}

/// Statistics of the unique central vertex of an even-diameter tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CenterStats {
    pub vertex: usize,
    pub degree: usize,
    pub pendants: usize,
    /// Largest degree (in the tree) over all other vertices.
    pub max_degree_elsewhere: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeClass {
    pub order: usize,
    pub diameter: DiamClass,
    pub max_degree: usize,
    /// Present exactly when the diameter is 2 or 4.
    pub center: Option<CenterStats>,
}

/// Decodes a Prüfer code into the labeled tree on `code.len() + 2`
/// vertices.
pub fn prufer_decode(code: &[usize]) -> Result<TreeSpec> {
    let n = code.len() + 2;
    if let Some(&bad) = code.iter().find(|&&x| x >= n) {
        return Err(Error::InvalidPrufer(format!("entry {bad} out of range 0..{n}")));
    }
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    let mut spec = TreeSpec::from_graph(Graph::from_edges(n, edges)?)?;
    spec.prufer = Some(code.to_vec());
    Ok(spec)
}

/// Prüfer code of a labeled tree on at least two vertices.
pub fn prufer_encode(g: &Graph) -> Result<Vec<usize>> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidPrufer(format!("trees on {n} vertices have no code")));
    }
    if g.size() != n - 1 || !g.is_connected() {
        return Err(Error::NotATree("not connected with n - 1 edges".into()));
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut code = Vec::with_capacity(n - 2);
    for _ in 0..n - 2 {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        removed[leaf] = true;
        let parent = *g
            .neighbors(leaf)
            .iter()
            .find(|&&p| !removed[p])
            .expect("leaf has one live neighbor");
        code.push(parent);
        degree[parent] -= 1;
        if degree[parent] == 1 {
            leaves.insert(parent);
        }
    }
    Ok(code)
}

/// Named tree families with a fixed labeling: hubs and spines come first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeFamily {
    /// `0 - 1 - .. - (n-1)`.
    Path(usize),
    /// Hub 0 with leaves `1..=leaves`.
    Star(usize),
    /// Adjacent centers 0 and 1 carrying `a` and `b` leaves.
    DoubleStar(usize, usize),
    /// Hub 0 with `legs` paths of `leg_len` vertices each, labeled leg by
    /// leg from the hub outwards.
    Spider { legs: usize, leg_len: usize },
    /// Hub 0 with `legs` children `1..=legs`, each child carrying
    /// `pendants` leaves.
    BushySpider { legs: usize, pendants: usize },
    /// Spine `0..leaf_counts.len()` as a path, spine vertex `i` carrying
    /// `leaf_counts[i]` leaves.
    Caterpillar(Vec<usize>),
}

pub fn named_family(family: &TreeFamily) -> Result<TreeSpec> {
    let mut edges = Vec::new();
    let n = match *family {
        TreeFamily::Path(n) => {
            if n == 0 {
                return Err(Error::InvalidFamily("path needs at least one vertex".into()));
            }
            edges.extend((1..n).map(|v| (v - 1, v)));
            n
        }
        TreeFamily::Star(leaves) => {
            edges.extend((1..=leaves).map(|v| (0, v)));
            leaves + 1
        }
        TreeFamily::DoubleStar(a, b) => {
            edges.push((0, 1));
            edges.extend((0..a).map(|i| (0, 2 + i)));
            edges.extend((0..b).map(|i| (1, 2 + a + i)));
            2 + a + b
        }
        TreeFamily::Spider { legs, leg_len } => {
            if legs > 0 && leg_len == 0 {
                return Err(Error::InvalidFamily("spider legs need positive length".into()));
            }
            for l in 0..legs {
                let first = 1 + l * leg_len;
                edges.push((0, first));
                edges.extend((1..leg_len).map(|j| (first + j - 1, first + j)));
            }
            1 + legs * leg_len
        }
        TreeFamily::BushySpider { legs, pendants } => {
            for l in 0..legs {
                let child = 1 + l;
                edges.push((0, child));
                let base = 1 + legs + l * pendants;
                edges.extend((0..pendants).map(|j| (child, base + j)));
            }
            1 + legs + legs * pendants
        }
        TreeFamily::Caterpillar(ref counts) => {
            if counts.is_empty() {
                return Err(Error::InvalidFamily("caterpillar needs a spine".into()));
            }
            let spine = counts.len();
            edges.extend((1..spine).map(|v| (v - 1, v)));
            let mut next = spine;
            for (i, &c) in counts.iter().enumerate() {
                edges.extend((next..next + c).map(|leaf| (i, leaf)));
                next += c;
            }
            next
        }
    };
    TreeSpec::from_graph(Graph::from_edges(n, edges)?)
}
