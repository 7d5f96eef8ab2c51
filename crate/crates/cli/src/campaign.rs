use std::time::Instant;

use anyhow::{bail, Context, Result};
use geodex::oracle::{self, HullLemma, Tally, TreePrism};
use geodex::{convexity_number_bnb, convexity_number_exhaustive, enumerate_free_trees, predict_prism_convexity, CanonicalTree};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SolverChoice {
    Exhaustive,
    Bnb,
    Both,
}

/// One tree of a verification campaign.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub n: usize,
    pub code: String,
    pub diam: String,
    pub delta: usize,
    pub predicted: usize,
    pub exact: usize,
    #[serde(rename = "match")]
    pub matches: bool,
    pub nodes: u64,
    pub elapsed_ms: f64,
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .context("building worker pool")
}

fn corpus(min_n: usize, max_n: usize) -> Result<Vec<CanonicalTree>> {
    let mut trees = Vec::new();
    for n in min_n..=max_n {
        trees.extend(enumerate_free_trees(n)?);
    }
    Ok(trees)
}

fn verify_one(t: &CanonicalTree, solver: SolverChoice) -> Result<VerificationRecord> {
    let start = Instant::now();
    let verdict = predict_prism_convexity(&t.tree)?;
    let class = t.tree.classify()?;
    let view = TreePrism::new(&t.tree)?;
    let (exact, nodes) = match solver {
        SolverChoice::Exhaustive => {
            let r = convexity_number_exhaustive(&view.distances)?;
            (r.value, r.explored)
        }
        SolverChoice::Bnb => {
            let r = convexity_number_bnb(&view.distances)?;
            (r.value, r.explored)
        }
        SolverChoice::Both => {
            let e = convexity_number_exhaustive(&view.distances)?;
            let b = convexity_number_bnb(&view.distances)?;
            if e.value != b.value {
                bail!("solvers disagree on tree {}: exhaustive {} vs bnb {}", t.code, e.value, b.value);
            }
            (e.value, e.explored + b.explored)
        }
    };
    Ok(VerificationRecord {
        n: t.tree.order(),
        code: t.code.clone(),
        diam: class.diameter.to_string(),
        delta: class.max_degree,
        predicted: verdict.predicted,
        exact,
        matches: verdict.predicted == exact,
        nodes,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Predicted against exact values for every tree with `3..=max_n` vertices,
/// in enumeration order whatever the worker count.
pub fn verify_trees(max_n: usize, solver: SolverChoice, jobs: usize) -> Result<Vec<VerificationRecord>> {
    let trees = corpus(3, max_n)?;
    pool(jobs)?.install(|| trees.par_iter().map(|t| verify_one(t, solver)).collect())
}

/// Pass counts for one named check of the lemma suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaLine {
    pub check: String,
    pub checked: usize,
    pub failed: usize,
}

pub const PROPAGATION: &str = "path-propagation";
pub const STAR_CLIQUE: &str = "star-clique-witness";
pub const PENDANT_STAR: &str = "pendant-star-witness";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaLedger {
    pub trees: usize,
    pub lines: Vec<LemmaLine>,
}

impl LemmaLedger {
    pub fn failures(&self) -> usize {
        self.lines.iter().map(|l| l.failed).sum()
    }

    pub fn line(&self, check: &str) -> Option<&LemmaLine> {
        self.lines.iter().find(|l| l.check == check)
    }
}

#[derive(Default)]
struct TreeTallies {
    hull: [Tally; 6],
    propagation: Tally,
    star_clique: Tally,
    pendant_star: Tally,
}

fn lemmas_one(t: &CanonicalTree) -> Result<TreeTallies> {
    let mut out = TreeTallies::default();
    for (slot, check) in out.hull.iter_mut().zip(oracle::hull_checks(&t.tree)?) {
        slot.checked += check.checked;
        slot.failed += check.failures.len();
    }
    out.propagation = oracle::path_propagation_check(&t.tree, 3)?;
    let witnesses = oracle::witness_checks(&t.tree)?;
    for c in &witnesses.star_clique {
        out.star_clique.record(c.holds());
    }
    for c in &witnesses.pendant_star {
        out.pendant_star.record(c.holds());
    }
    Ok(out)
}

/// Every hull containment, path propagation and witness check over all trees
/// with `3..=max_n` vertices.
pub fn lemma_suite(max_n: usize, jobs: usize) -> Result<LemmaLedger> {
    let trees = corpus(3, max_n)?;
    let per_tree: Vec<TreeTallies> = pool(jobs)?.install(|| trees.par_iter().map(lemmas_one).collect::<Result<_>>())?;
    let mut total = TreeTallies::default();
    for t in per_tree {
        for (a, b) in total.hull.iter_mut().zip(t.hull) {
            a.merge(b);
        }
        total.propagation.merge(t.propagation);
        total.star_clique.merge(t.star_clique);
        total.pendant_star.merge(t.pendant_star);
    }
    let mut lines: Vec<LemmaLine> = HullLemma::ALL
        .iter()
        .zip(total.hull)
        .map(|(l, t)| LemmaLine {
            check: l.name().to_string(),
            checked: t.checked,
            failed: t.failed,
        })
        .collect();
    for (name, t) in [
        (PROPAGATION, total.propagation),
        (STAR_CLIQUE, total.star_clique),
        (PENDANT_STAR, total.pendant_star),
    ] {
        lines.push(LemmaLine {
            check: name.to_string(),
            checked: t.checked,
            failed: t.failed,
        });
    }
    Ok(LemmaLedger {
        trees: trees.len(),
        lines,
    })
}
