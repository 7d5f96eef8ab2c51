//! Closed-form convexity numbers for complementary prisms of trees, the
//! convex sets that realize their lower bounds, and executable checks of
//! the hull containments the formulas rest on.
//!
//! Prism coordinates throughout: tree vertex `v` is `v`, its mirror on the
//! complement side is `v + n`.

use crate::convexity::IntervalTable;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::DistanceMatrix;
use crate::tree::{DiamClass, TreeSpec};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    DiamAtLeast5,
    /// Diameter 4, central vertex below the maximum degree.
    Diam4CenterBelowMax,
    /// Diameter 4, central vertex of maximum degree.
    Diam4CenterAtMax,
    Diam3,
    Diam2,
    Disconnected,
}

impl std::fmt::Display for CaseTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CaseTag::DiamAtLeast5 => "diam>=5",
            CaseTag::Diam4CenterBelowMax => "diam4-lt",
            CaseTag::Diam4CenterAtMax => "diam4-eq",
            CaseTag::Diam3 => "diam3",
            CaseTag::Diam2 => "diam2",
            CaseTag::Disconnected => "disconnected",
        })
    }
}

/// Where a lower-bound term comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TermSource {
    /// `n`: the order bound for base graphs of diameter other than 3.
    Order,
    /// `2Δ + 1`: closed star at `at` plus the mirrors of its leaves.
    StarClique { at: usize },
    /// `n - deg(at) + 2e(at) + 1`: see [`pendant_star_witness`].
    PendantStar { at: usize },
    /// `2n - k` for a base graph whose complement is disconnected.
    DisconnectedComplement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Term {
    pub source: TermSource,
    pub value: usize,
}

/// Prediction for `con` of a tree's complementary prism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaVerdict {
    pub case: CaseTag,
    pub predicted: usize,
    /// Each term is a certified lower bound; `predicted` is their maximum.
    pub terms: Vec<Term>,
}

fn first_of_degree(t: &TreeSpec, d: usize, skip: Option<usize>) -> usize {
    (0..t.order())
        .find(|&v| Some(v) != skip && t.degree(v) == d)
        .expect("degree is attained")
}

/// Closed-form `con(T T̄)` for a tree on at least three vertices,
/// dispatching on the diameter.
pub fn predict_prism_convexity(t: &TreeSpec) -> Result<FormulaVerdict> {
    let class = t.classify()?;
    let n = class.order;
    let delta = class.max_degree;
    let x = first_of_degree(t, delta, None);
    let (case, terms) = match class.diameter {
        DiamClass::FiveOrMore => (
            CaseTag::DiamAtLeast5,
            vec![
                Term {
                    source: TermSource::Order,
                    value: n,
                },
                Term {
                    source: TermSource::StarClique { at: x },
                    value: 2 * delta + 1,
                },
            ],
        ),
        DiamClass::Four => {
            let c = class.center.expect("diameter 4 has a unique center");
            if c.degree < delta {
                (
                    CaseTag::Diam4CenterBelowMax,
                    vec![Term {
                        source: TermSource::PendantStar { at: x },
                        value: n + delta - 1,
                    }],
                )
            } else {
                let u = first_of_degree(t, c.max_degree_elsewhere, Some(c.vertex));
                (
                    CaseTag::Diam4CenterAtMax,
                    vec![
                        Term {
                            source: TermSource::PendantStar { at: u },
                            value: n + c.max_degree_elsewhere - 1,
                        },
                        Term {
                            source: TermSource::StarClique { at: x },
                            value: 2 * delta + 1,
                        },
                        Term {
                            source: TermSource::PendantStar { at: c.vertex },
                            // n + 2e - Δ + 1 >= 1 since e <= Δ
                            value: n + 2 * c.pendants + 1 - delta,
                        },
                    ],
                )
            }
        }
        DiamClass::Three => {
            let hub = *t
                .center()
                .iter()
                .find(|&&c| t.degree(c) == delta)
                .expect("a maximum-degree vertex is central when the diameter is 3");
            (
                CaseTag::Diam3,
                vec![Term {
                    source: TermSource::PendantStar { at: hub },
                    value: n + delta - 1,
                }],
            )
        }
        DiamClass::Two => (
            CaseTag::Diam2,
            vec![Term {
                source: TermSource::DisconnectedComplement,
                value: 2 * n - 1,
            }],
        ),
    };
    let predicted = terms.iter().map(|t| t.value).max().expect("at least one term");
    Ok(FormulaVerdict {
        case,
        predicted,
        terms,
    })
}

/// `con(G Ḡ) = 2n - k` for disconnected `g`, `k` the smallest component
/// order.
pub fn predict_disconnected_prism(g: &Graph) -> Result<usize> {
    let comps = g.components();
    if comps.len() < 2 {
        return Err(Error::Connected);
    }
    let k = comps.iter().map(Vec::len).min().expect("two components");
    Ok(2 * g.order() - k)
}

/// Star-clique set built on `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarCliqueWitness {
    pub set: VertexSet,
    /// Whether `x` has maximum degree; only then is `|set| = 2Δ + 1`.
    pub at_max_degree: bool,
}

/// `N[x]` together with the mirrors of `N(x)`: the closed star is convex,
/// the mirrored leaves form a clique on the complement side, and every
/// mixed geodesic stays inside. At a maximum-degree vertex it has
/// `2Δ + 1` vertices.
pub fn star_clique_witness(t: &TreeSpec, x: usize) -> Result<StarCliqueWitness> {
    let g = t.graph();
    g.check_vertex(x)?;
    check_prism_capacity(t)?;
    let n = t.order();
    let mirrors: VertexSet = g.neighbors(x).iter().map(|&v| v + n).collect();
    Ok(StarCliqueWitness {
        set: g.closed_neighbor_set(x) | mirrors,
        at_max_degree: t.degree(x) == t.max_degree(),
    })
}

/// For a tree of diameter at most 4 and a non-pendant `w`, with `B` the
/// non-pendant neighbors of `w`: `(N[w] \ B) ∪ (V(T̄) \ B̄)`, of size
/// `n - deg(w) + 2e(w) + 1`.
///
/// When `B` is empty (the hub of a star) this is the whole prism.
pub fn pendant_star_witness(t: &TreeSpec, w: usize) -> Result<VertexSet> {
    let g = t.graph();
    g.check_vertex(w)?;
    if t.diameter() > 4 {
        return Err(Error::DiameterTooLarge(t.diameter()));
    }
    if g.degree(w) <= 1 {
        return Err(Error::PendantVertex(w));
    }
    check_prism_capacity(t)?;
    let n = t.order();
    let inner: VertexSet = g
        .neighbors(w)
        .iter()
        .copied()
        .filter(|&v| g.degree(v) > 1)
        .collect();
    let inner_mirrors = VertexSet::from_bits(inner.bits() << n);
    let mirror_side = VertexSet::from_bits(VertexSet::full(n).bits() << n);
    Ok((g.closed_neighbor_set(w) - inner) | (mirror_side - inner_mirrors))
}

fn check_prism_capacity(t: &TreeSpec) -> Result<()> {
    let n = 2 * t.order();
    if n > VertexSet::CAPACITY {
        Err(Error::TooLarge {
            n,
            max: VertexSet::CAPACITY,
        })
    } else {
        Ok(())
    }
}

/// A tree's complementary prism with its interval table.
#[derive(Debug, Clone)]
pub struct TreePrism<'a> {
    pub tree: &'a TreeSpec,
    pub prism: Graph,
    pub distances: DistanceMatrix,
    pub intervals: IntervalTable,
}

impl<'a> TreePrism<'a> {
    pub fn new(tree: &'a TreeSpec) -> Result<Self> {
        check_prism_capacity(tree)?;
        let prism = tree.graph().complementary_prism()?;
        let distances = DistanceMatrix::new(&prism)?;
        let intervals = IntervalTable::new(&distances)?;
        Ok(TreePrism {
            tree,
            prism,
            distances,
            intervals,
        })
    }

    pub fn base_order(&self) -> usize {
        self.tree.order()
    }

    pub fn mirror(&self, v: usize) -> usize {
        v + self.base_order()
    }

    pub fn tree_side(&self) -> VertexSet {
        VertexSet::full(self.base_order())
    }

    pub fn mirror_side(&self) -> VertexSet {
        self.intervals.all() - self.tree_side()
    }

    pub fn mirrors<I: IntoIterator<Item = usize>>(&self, vs: I) -> VertexSet {
        vs.into_iter().map(|v| self.mirror(v)).collect()
    }
}

/// Hull containments checked over every eligible vertex tuple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HullLemma {
    /// The complement side plus any tree vertex is a hull set.
    ComplementPlusVertex,
    /// Two tree vertices at tree distance 3 form a hull set (diameter >= 3).
    DistanceThreePair,
    /// The mirrors of adjacent vertices hull the complement side
    /// (diameter >= 6).
    AdjacentMirrorPair,
    /// The mirrors of a peripheral vertex and its neighbor hull the
    /// complement side (diameter 5).
    PeripheralMirrorPair,
    /// The mirrors of a path `u - v - w` hull the complement side
    /// (diameter 5).
    MirrorPathTriple,
    /// The mirrors of the center `x` and two of its neighbors, the first
    /// non-pendant, hull the complement side (diameter 4).
    CentralMirrorTriple,
}

impl HullLemma {
    pub const ALL: [HullLemma; 6] = [
        HullLemma::ComplementPlusVertex,
        HullLemma::DistanceThreePair,
        HullLemma::AdjacentMirrorPair,
        HullLemma::PeripheralMirrorPair,
        HullLemma::MirrorPathTriple,
        HullLemma::CentralMirrorTriple,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HullLemma::ComplementPlusVertex => "complement-plus-vertex",
            HullLemma::DistanceThreePair => "distance-three-pair",
            HullLemma::AdjacentMirrorPair => "adjacent-mirror-pair",
            HullLemma::PeripheralMirrorPair => "peripheral-mirror-pair",
            HullLemma::MirrorPathTriple => "mirror-path-triple",
            HullLemma::CentralMirrorTriple => "central-mirror-triple",
        }
    }

    fn applies(self, diameter: usize) -> bool {
        match self {
            HullLemma::ComplementPlusVertex => true,
            HullLemma::DistanceThreePair => diameter >= 3,
            HullLemma::AdjacentMirrorPair => diameter >= 6,
            HullLemma::PeripheralMirrorPair | HullLemma::MirrorPathTriple => diameter == 5,
            HullLemma::CentralMirrorTriple => diameter == 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullCheck {
    pub lemma: HullLemma,
    pub applicable: bool,
    pub checked: usize,
    /// Tree-vertex tuples whose containment failed.
    pub failures: Vec<Vec<usize>>,
}

/// Runs every hull containment whose diameter condition `t` meets; the
/// others come back with `applicable = false`.
pub fn hull_checks(t: &TreeSpec) -> Result<Vec<HullCheck>> {
    let view = TreePrism::new(t)?;
    let g = t.graph();
    let n = t.order();
    let diameter = t.diameter();
    let tree_dm = DistanceMatrix::new(g)?;
    let all = view.intervals.all();
    let mirror_side = view.mirror_side();
    let cl = |s: VertexSet| view.intervals.closure(s);

    let mut out = Vec::new();
    for lemma in HullLemma::ALL {
        let applicable = lemma.applies(diameter);
        let mut tuples: Vec<Vec<usize>> = Vec::new();
        let mut holds: Vec<bool> = Vec::new();
        if applicable {
            match lemma {
                HullLemma::ComplementPlusVertex => {
                    for u in 0..n {
                        tuples.push(vec![u]);
                        holds.push(cl(mirror_side | VertexSet::singleton(u)) == all);
                    }
                }
                HullLemma::DistanceThreePair => {
                    for u in 0..n {
                        for v in u + 1..n {
                            if tree_dm.get(u, v) == 3 {
                                tuples.push(vec![u, v]);
                                holds.push(cl(VertexSet::from_iter([u, v])) == all);
                            }
                        }
                    }
                }
                HullLemma::AdjacentMirrorPair => {
                    for (u, v) in g.edges() {
                        tuples.push(vec![u, v]);
                        holds.push(mirror_side.is_subset(cl(view.mirrors([u, v]))));
                    }
                }
                HullLemma::PeripheralMirrorPair => {
                    for u in tree_dm.periphery() {
                        for &v in g.neighbors(u) {
                            tuples.push(vec![u, v]);
                            holds.push(mirror_side.is_subset(cl(view.mirrors([u, v]))));
                        }
                    }
                }
                HullLemma::MirrorPathTriple => {
                    for v in 0..n {
                        let ns = g.neighbors(v);
                        for (i, &u) in ns.iter().enumerate() {
                            for &w in &ns[i + 1..] {
                                tuples.push(vec![u, v, w]);
                                holds.push(mirror_side.is_subset(cl(view.mirrors([u, v, w]))));
                            }
                        }
                    }
                }
                HullLemma::CentralMirrorTriple => {
                    for x in tree_dm.center() {
                        for &u in g.neighbors(x) {
                            if g.degree(u) < 2 {
                                continue;
                            }
                            for &v in g.neighbors(x) {
                                if v == u {
                                    continue;
                                }
                                tuples.push(vec![u, v, x]);
                                holds.push(mirror_side.is_subset(cl(view.mirrors([u, v, x]))));
                            }
                        }
                    }
                }
            }
        }
        out.push(HullCheck {
            lemma,
            applicable,
            checked: tuples.len(),
            failures: tuples
                .into_iter()
                .zip(holds)
                .filter(|(_, ok)| !ok)
                .map(|(tuple, _)| tuple)
                .collect(),
        });
    }
    Ok(out)
}

/// Counts of checked instances and failures.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
}

impl Tally {
    pub fn record(&mut self, ok: bool) {
        self.checked += 1;
        self.failed += usize::from(!ok);
    }

    pub fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.failed += other.failed;
    }
}

/// Propagation along tree paths: whenever the hull of `S` contains `v1`
/// and the mirrors of `v2, .., vk` for a path `v1 .. vk`, it contains `vk`.
///
/// Every `S` with at most `max_seed` prism vertices is tried against every
/// tree path; only instances meeting the premise are counted.
pub fn path_propagation_check(t: &TreeSpec, max_seed: usize) -> Result<Tally> {
    let view = TreePrism::new(t)?;
    let g = t.graph();
    let n = t.order();

    // mirror_path[a * n + b]: mirrors of the path from a to b, minus a
    let mut mirror_path = vec![VertexSet::empty(); n * n];
    for a in 0..n {
        let mut parent = vec![usize::MAX; n];
        parent[a] = a;
        let mut stack = vec![a];
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    stack.push(v);
                }
            }
        }
        for b in 0..n {
            let mut m = VertexSet::empty();
            let mut cur = b;
            while cur != a {
                m.insert(view.mirror(cur));
                cur = parent[cur];
            }
            mirror_path[a * n + b] = m;
        }
    }

    let total = 2 * n;
    let mut tally = Tally::default();
    for k in 0..=max_seed.min(total) {
        for bits in crate::solver::Combinations::new(total, k) {
            let hull = view.intervals.closure(VertexSet::from_bits(bits));
            for a in 0..n {
                if !hull.contains(a) {
                    continue;
                }
                for b in 0..n {
                    if b != a && mirror_path[a * n + b].is_subset(hull) {
                        tally.record(hull.contains(b));
                    }
                }
            }
        }
    }
    Ok(tally)
}

/// Outcome of building one witness set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessCheck {
    pub at: usize,
    pub convex: bool,
    pub size: usize,
    pub expected_size: usize,
    pub proper: bool,
}

impl WitnessCheck {
    pub fn holds(&self) -> bool {
        self.convex && self.size == self.expected_size
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WitnessReport {
    pub star_clique: Vec<WitnessCheck>,
    pub pendant_star: Vec<WitnessCheck>,
}

/// Builds the star-clique set at every maximum-degree vertex and, for
/// diameter at most 4, the pendant-star set at the center (diameter 4), at
/// maximum-degree non-central vertices (diameter 4) and at every
/// non-pendant vertex (diameter at most 3).
pub fn witness_checks(t: &TreeSpec) -> Result<WitnessReport> {
    let view = TreePrism::new(t)?;
    let all = view.intervals.all();
    let n = t.order();
    let check = |at: usize, set: VertexSet, expected_size: usize| WitnessCheck {
        at,
        convex: view.intervals.is_convex(set),
        size: set.len(),
        expected_size,
        proper: set != all,
    };

    let mut report = WitnessReport::default();
    let delta = t.max_degree();
    for x in (0..n).filter(|&x| t.degree(x) == delta) {
        let w = star_clique_witness(t, x)?;
        report.star_clique.push(check(x, w.set, 2 * delta + 1));
    }

    let sites: Vec<usize> = match t.diameter() {
        0..=3 => (0..n).filter(|&w| t.degree(w) >= 2).collect(),
        4 => {
            let c = t.unique_center().expect("diameter 4 has a unique center");
            let delta_else = t.graph().max_degree_excluding(c)?;
            std::iter::once(c)
                .chain((0..n).filter(|&w| w != c && t.degree(w) == delta_else && delta_else >= 2))
                .collect()
        }
        _ => Vec::new(),
    };
    for w in sites {
        let set = pendant_star_witness(t, w)?;
        let expected = n + 2 * t.pendant_count(w) + 1 - t.degree(w);
        report.pendant_star.push(check(w, set, expected));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{named_family, TreeFamily};

    fn fam(f: TreeFamily) -> TreeSpec {
        named_family(&f).unwrap()
    }

    #[test]
    fn formula_examples() {
        let p6 = predict_prism_convexity(&fam(TreeFamily::Path(6))).unwrap();
        assert_eq!((p6.case, p6.predicted), (CaseTag::DiamAtLeast5, 6));

        let bushy = predict_prism_convexity(&fam(TreeFamily::BushySpider { legs: 3, pendants: 2 })).unwrap();
        assert_eq!(bushy.case, CaseTag::Diam4CenterAtMax);
        assert_eq!(bushy.terms.iter().map(|t| t.value).collect::<Vec<_>>(), vec![12, 7, 8]);
        assert_eq!(bushy.predicted, 12);

        let star = predict_prism_convexity(&fam(TreeFamily::Star(4))).unwrap();
        assert_eq!((star.case, star.predicted), (CaseTag::Diam2, 9));

        let p4 = predict_prism_convexity(&fam(TreeFamily::Path(4))).unwrap();
        assert_eq!((p4.case, p4.predicted), (CaseTag::Diam3, 5));

        let lt = predict_prism_convexity(&fam(TreeFamily::Caterpillar(vec![1, 0, 3]))).unwrap();
        assert_eq!((lt.case, lt.predicted), (CaseTag::Diam4CenterBelowMax, 10));
        let caterpillar = fam(TreeFamily::Caterpillar(vec![1, 3, 1]));
        assert_eq!(caterpillar.diameter(), 4);
        let v = predict_prism_convexity(&caterpillar).unwrap();
        assert_eq!(v.case, CaseTag::Diam4CenterAtMax);

        assert!(predict_prism_convexity(&fam(TreeFamily::Path(2))).is_err());
    }

    #[test]
    fn disconnected_formula() {
        assert_eq!(predict_disconnected_prism(&Graph::empty(2)), Ok(3));
        let k1k2 = Graph::from_edges(3, [(1, 2)]).unwrap();
        assert_eq!(predict_disconnected_prism(&k1k2), Ok(5));
        let k2k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(predict_disconnected_prism(&k2k2), Ok(6));
        assert_eq!(predict_disconnected_prism(&Graph::complete(3)), Err(Error::Connected));
    }

    #[test]
    fn star_clique_examples() {
        for (t, x, size) in [
            (fam(TreeFamily::Star(3)), 0, 7),
            (fam(TreeFamily::Path(4)), 1, 5),
            (fam(TreeFamily::Path(6)), 2, 5),
        ] {
            let w = star_clique_witness(&t, x).unwrap();
            assert!(w.at_max_degree);
            assert_eq!(w.set.len(), size);
            assert!(TreePrism::new(&t).unwrap().intervals.is_convex(w.set));
        }
        let leaf = star_clique_witness(&fam(TreeFamily::Star(3)), 1).unwrap();
        assert!(!leaf.at_max_degree);
    }

    #[test]
    fn pendant_star_examples() {
        let ds = fam(TreeFamily::DoubleStar(2, 3));
        let h = pendant_star_witness(&ds, 1).unwrap();
        assert_eq!(h.len(), 10);
        assert!(TreePrism::new(&ds).unwrap().intervals.is_convex(h));

        let star = fam(TreeFamily::Star(3));
        let h = pendant_star_witness(&star, 0).unwrap();
        assert_eq!(h.len(), 8);
        assert_eq!(h, VertexSet::full(8));

        let bushy = fam(TreeFamily::BushySpider { legs: 3, pendants: 2 });
        let h = pendant_star_witness(&bushy, 1).unwrap();
        assert_eq!(h.len(), 12);
        assert!(TreePrism::new(&bushy).unwrap().intervals.is_convex(h));

        assert_eq!(pendant_star_witness(&star, 1), Err(Error::PendantVertex(1)));
        assert_eq!(
            pendant_star_witness(&fam(TreeFamily::Path(6)), 2),
            Err(Error::DiameterTooLarge(5))
        );
    }

    #[test]
    fn hull_check_examples() {
        let by = |t: &TreeSpec, l: HullLemma| {
            hull_checks(t).unwrap().into_iter().find(|c| c.lemma == l).unwrap()
        };
        let p7 = fam(TreeFamily::Path(7));
        let c = by(&p7, HullLemma::AdjacentMirrorPair);
        assert!(c.applicable && c.checked == 6 && c.failures.is_empty());
        let c = by(&p7, HullLemma::CentralMirrorTriple);
        assert!(!c.applicable && c.checked == 0);

        let p6 = fam(TreeFamily::Path(6));
        let c = by(&p6, HullLemma::PeripheralMirrorPair);
        assert_eq!((c.checked, c.failures.len()), (2, 0));

        let spider = fam(TreeFamily::Spider { legs: 3, leg_len: 2 });
        let c = by(&spider, HullLemma::CentralMirrorTriple);
        assert_eq!((c.checked, c.failures.len()), (6, 0));

        let p4 = fam(TreeFamily::Path(4));
        let c = by(&p4, HullLemma::DistanceThreePair);
        assert_eq!((c.checked, c.failures.len()), (1, 0));
    }

    #[test]
    fn path_propagation_on_small_trees() {
        let t = path_propagation_check(&fam(TreeFamily::Spider { legs: 2, leg_len: 2 }), 3).unwrap();
        assert!(t.checked > 0);
        assert_eq!(t.failed, 0);
    }

    #[test]
    fn witness_report_flags_only_star_hubs_as_improper() {
        let r = witness_checks(&fam(TreeFamily::Star(3))).unwrap();
        assert!(r.pendant_star.iter().all(|c| c.holds() && !c.proper));
        let r = witness_checks(&fam(TreeFamily::DoubleStar(2, 1))).unwrap();
        assert!(r.pendant_star.iter().all(|c| c.holds() && c.proper));
        assert_eq!(r.pendant_star.len(), 2);
    }
}
