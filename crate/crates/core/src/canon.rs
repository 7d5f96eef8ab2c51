//! AHU canonical codes for free trees and enumeration of non-isomorphic
//! trees.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tree::TreeSpec;

/// Largest order accepted by [`enumerate_free_trees`].
pub const MAX_ENUM_ORDER: usize = 12;

/// A non-isomorphic tree representative with its canonical code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalTree {
    pub code: String,
    pub tree: TreeSpec,
}

struct Rooted {
    size: usize,
    code: String,
}

// Children of each vertex in canonical order, filled by `encode`.
struct Encoder<'a> {
    g: &'a Graph,
    children: Vec<Vec<usize>>,
}

impl Encoder<'_> {
    fn encode(&mut self, v: usize, parent: Option<usize>) -> Rooted {
        let mut kids: Vec<(Rooted, usize)> = self
            .g
            .neighbors(v)
            .iter()
            .filter(|&&c| Some(c) != parent)
            .map(|&c| (self.encode(c, Some(v)), c))
            .collect::<Vec<_>>();
        kids.sort_by(|(a, _), (b, _)| (a.size, &a.code).cmp(&(b.size, &b.code)));
        let mut code = String::with_capacity(2 * (kids.iter().map(|(k, _)| k.size).sum::<usize>() + 1));
        code.push('(');
        for (k, _) in &kids {
            code.push_str(&k.code);
        }
        code.push(')');
        self.children[v] = kids.iter().map(|&(_, c)| c).collect();
        Rooted {
            size: 1 + kids.iter().map(|(k, _)| k.size).sum::<usize>(),
            code,
        }
    }
}

fn tree_center(g: &Graph) -> Vec<usize> {
    // peel leaves layer by layer
    let n = g.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &p in g.neighbors(leaf) {
                if degree[p] > 1 {
                    degree[p] -= 1;
                    if degree[p] == 1 {
                        next.push(p);
                    }
                }
            }
            degree[leaf] = 0;
        }
        layer = next;
    }
    let mut c = layer;
    c.sort_unstable();
    c
}

/// Canonical code and canonical vertex order (roots first, then breadth
/// first with children in code order).
fn canonical(g: &Graph) -> (String, Vec<usize>) {
    let mut enc = Encoder {
        g,
        children: vec![Vec::new(); g.order()],
    };
    let roots = match tree_center(g)[..] {
        [] => return (String::new(), Vec::new()),
        [c] => {
            let code = enc.encode(c, None).code;
            (code, vec![c])
        }
        [a, b] => {
            let ca = enc.encode(a, Some(b)).code;
            let cb = enc.encode(b, Some(a)).code;
            let ab = format!("{ca}{cb}");
            let ba = format!("{cb}{ca}");
            if ab <= ba {
                (ab, vec![a, b])
            } else {
                (ba, vec![b, a])
            }
        }
        _ => unreachable!("a tree has one or two central vertices"),
    };
    let (code, roots) = roots;
    let mut order = Vec::with_capacity(g.order());
    let mut queue: VecDeque<usize> = roots.iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        order.push(v);
        queue.extend(enc.children[v].iter().copied());
    }
    (code, order)
}

/// AHU code of a free tree, rooted at its center (or at the central edge,
/// taking the smaller of the two orientations). Children are ordered by
/// `(subtree size, code)`. Two trees share a code iff they are isomorphic.
pub fn canonical_code(t: &TreeSpec) -> String {
    canonical(t.graph()).0
}

/// Relabels `t` into canonical vertex order, so isomorphic trees map to the
/// identical labeled tree.
pub fn canonical_form(t: &TreeSpec) -> CanonicalTree {
    let (code, order) = canonical(t.graph());
    let mut perm = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let tree = TreeSpec::from_graph(t.graph().relabel(&perm)).expect("relabelled tree");
    CanonicalTree { code, tree }
}

/// One representative per isomorphism class of trees on `n` vertices,
/// sorted by canonical code.
///
/// Grows the classes of order `n - 1` by a leaf at every vertex and keeps
/// one tree per canonical code.
pub fn enumerate_free_trees(n: usize) -> Result<Vec<CanonicalTree>> {
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    if n > MAX_ENUM_ORDER {
        return Err(Error::TooLarge {
            n,
            max: MAX_ENUM_ORDER,
        });
    }
    let k1 = canonical_form(&TreeSpec::from_graph(Graph::empty(1))?);
    let mut level = vec![k1];
    for m in 2..=n {
        let mut next: BTreeMap<String, CanonicalTree> = BTreeMap::new();
        for ct in &level {
            let g = ct.tree.graph();
            for v in 0..m - 1 {
                let edges = g.edges().chain([(v, m - 1)]).collect::<Vec<_>>();
                let grown = TreeSpec::from_graph(Graph::from_edges(m, edges)?)?;
                let code = canonical_code(&grown);
                next.entry(code).or_insert_with(|| canonical_form(&grown));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}
