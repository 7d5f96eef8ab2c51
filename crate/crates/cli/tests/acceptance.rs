//! End-to-end acceptance run. Prints one PASS/FAIL line per check and exits
//! non-zero if any check fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use geodex::corpus::{self, connected_graphs, named_graphs, random_connected};
use geodex::oracle::{hull_checks, witness_checks};
use geodex::{
    convexity_number_bnb, convexity_number_exhaustive, enumerate_free_trees, predict_disconnected_prism,
    prufer_decode, DistanceMatrix, Graph, IntervalTable, VertexSet,
};
use geodex_cli::campaign::{verify_trees, SolverChoice};
use rand::Rng;

type Outcome = Result<String, String>;
type Check = (&'static str, fn() -> Outcome);

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_geodex"))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn trees(lo: usize, hi: usize) -> Vec<geodex::CanonicalTree> {
    (lo..=hi).flat_map(|n| enumerate_free_trees(n).unwrap()).collect()
}

fn table(g: &Graph) -> IntervalTable {
    IntervalTable::new(&DistanceMatrix::new(g).unwrap()).unwrap()
}

fn tree_campaign() -> Outcome {
    let start = Instant::now();
    let records = verify_trees(9, SolverChoice::Exhaustive, 1).map_err(|e| e.to_string())?;
    let single = start.elapsed();
    let bad: Vec<_> = records.iter().filter(|r| !r.matches).map(|r| r.code.clone()).collect();
    ensure(records.len() == 93, || format!("{} trees, expected 93", records.len()))?;
    ensure(bad.is_empty(), || format!("mismatches: {bad:?}"))?;
    ensure(single <= Duration::from_secs(15 * 60), || format!("single worker took {single:?}"))?;

    let run = |jobs: &str| {
        let start = Instant::now();
        let out = bin()
            .args(["verify-trees", "9", "--no-timing", "--jobs", jobs])
            .output()
            .expect("run binary");
        (out, start.elapsed())
    };
    let (one, _) = run("1");
    let (eight, parallel) = run("8");
    ensure(one.status.success() && eight.status.success(), || "binary reported a mismatch".into())?;
    ensure(one.stdout == eight.stdout, || "output differs between 1 and 8 workers".into())?;
    ensure(parallel <= Duration::from_secs(3 * 60), || format!("8 workers took {parallel:?}"))?;
    let text = String::from_utf8_lossy(&eight.stdout);
    ensure(text.ends_with("# trees=93 mismatches=0\n"), || format!("summary: {text}"))?;
    Ok(format!(
        "93 trees on 3..=9 vertices, 0 mismatches ({:.1} ms single, {:.1} ms via binary with 8 jobs)",
        single.as_secs_f64() * 1e3,
        parallel.as_secs_f64() * 1e3
    ))
}

/// Petersen as the Kneser graph on 2-subsets of a 5-set, built independently
/// of the library's own construction.
fn kneser_petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let mut edges = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, edges).unwrap()
}

fn isomorphic(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map.push(w);
                used[w] = true;
                if extend(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
        }
        false
    }
    g.order() == h.order()
        && g.size() == h.size()
        && extend(g, h, &mut Vec::new(), &mut vec![false; h.order()])
}

fn petersen_prism() -> Outcome {
    let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
    let out = bin().args(["prism", "-"]).stdin_from(&geodex::io::write_edge_list(&c5))?;
    let p = geodex::io::parse_edge_list(&out).map_err(|e| e.to_string())?;
    let dm = DistanceMatrix::new(&p).map_err(|e| e.to_string())?;
    ensure(p.order() == 10 && p.size() == 15, || format!("{} vertices, {} edges", p.order(), p.size()))?;
    ensure((0..10).all(|v| p.degree(v) == 3), || "not 3-regular".into())?;
    ensure(p.girth() == Some(5), || format!("girth {:?}", p.girth()))?;
    ensure(dm.diameter() == 2, || format!("diameter {}", dm.diameter()))?;
    ensure(isomorphic(&p, &kneser_petersen()), || "not isomorphic to Petersen".into())?;
    Ok("prism of C5 from the binary: 10 vertices, 15 edges, 3-regular, girth 5, diameter 2, Petersen".into())
}

trait StdinFrom {
    fn stdin_from(&mut self, input: &str) -> Result<String, String>;
}

impl StdinFrom for Command {
    fn stdin_from(&mut self, input: &str) -> Result<String, String> {
        use std::io::Write;
        use std::process::Stdio;
        let mut child = self
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .map_err(|e| e.to_string())?;
        child.stdin.take().unwrap().write_all(input.as_bytes()).map_err(|e| e.to_string())?;
        let out = child.wait_with_output().map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
        Ok(String::from_utf8_lossy(&out.stdout).into_owned())
    }
}

fn disconnected_spot_checks() -> Outcome {
    // k is the order of the smallest component
    let cases = [
        ("2K1", 2, Vec::<(usize, usize)>::new(), 1),
        ("K1+K2", 3, vec![(1, 2)], 1),
        ("K2+K2", 4, vec![(0, 1), (2, 3)], 2),
        ("K1+P3", 4, vec![(1, 2), (2, 3)], 1),
        ("3K1", 3, vec![], 1),
    ];
    let mut seen = Vec::new();
    for (name, n, edges, k) in cases {
        let g = Graph::from_edges(n, edges).unwrap();
        let smallest = g.components().iter().map(Vec::len).min().unwrap();
        ensure(smallest == k, || format!("{name}: smallest component has {smallest} vertices"))?;
        let prism = g.complementary_prism().unwrap();
        let exact = convexity_number_exhaustive(&DistanceMatrix::new(&prism).unwrap()).unwrap().value;
        let predicted = predict_disconnected_prism(&g).map_err(|e| e.to_string())?;
        ensure(exact == 2 * n - k && predicted == exact, || {
            format!("{name}: exact {exact}, predicted {predicted}, expected {}", 2 * n - k)
        })?;
        seen.push(format!("{name}={exact}"));
    }
    Ok(format!("exhaustive values match 2n-k: {}", seen.join(" ")))
}

fn order_lower_bound() -> Outcome {
    let mut checked = 0;
    for t in trees(3, 9) {
        if t.tree.diameter() == 3 {
            continue;
        }
        let prism = t.tree.graph().complementary_prism().unwrap();
        let con = convexity_number_exhaustive(&DistanceMatrix::new(&prism).unwrap()).unwrap().value;
        ensure(con >= t.tree.order(), || format!("{}: con {con} < n", t.code))?;
        checked += 1;
    }
    Ok(format!("{checked} trees on 3..=9 vertices with diameter other than 3 have con >= n"))
}

fn witness_sets() -> Outcome {
    let (mut star, mut pendant, mut centers) = (0, 0, 0);
    for t in trees(3, 8) {
        let report = witness_checks(&t.tree).map_err(|e| e.to_string())?;
        ensure(!report.star_clique.is_empty(), || format!("{}: no star-clique site", t.code))?;
        for c in report.star_clique.iter().chain(&report.pendant_star) {
            ensure(c.holds(), || format!("{}: witness at {} failed: {c:?}", t.code, c.at))?;
        }
        let d = t.tree.diameter();
        if d <= 3 {
            let inner = (0..t.tree.order()).filter(|&w| t.tree.degree(w) >= 2).count();
            ensure(report.pendant_star.len() == inner, || format!("{}: missed non-pendant sites", t.code))?;
        }
        if d == 4 {
            let c = t.tree.unique_center().unwrap();
            ensure(report.pendant_star.iter().any(|w| w.at == c), || format!("{}: center not checked", t.code))?;
            centers += 1;
        }
        star += report.star_clique.len();
        pendant += report.pendant_star.len();
    }
    Ok(format!(
        "{star} star-clique and {pendant} pendant-star witnesses convex with the stated sizes ({centers} diameter-4 centers)"
    ))
}

fn hull_containments() -> Outcome {
    let mut totals = [0usize; 6];
    for t in trees(3, 8) {
        for (i, check) in hull_checks(&t.tree).map_err(|e| e.to_string())?.into_iter().enumerate() {
            ensure(check.failures.is_empty(), || {
                format!("{}: {} failed on {:?}", t.code, check.lemma.name(), check.failures)
            })?;
            totals[i] += check.checked;
        }
    }
    ensure(totals.iter().all(|&c| c > 0), || format!("some containment never exercised: {totals:?}"))?;
    Ok(format!("all six hull containments hold on every eligible tuple, counts {totals:?}"))
}

fn closure_laws() -> Outcome {
    let mut rng = corpus::rng(corpus::seed());
    let mut samples = 0;
    while samples < 1200 {
        let n = rng.random_range(1..=12);
        let g = random_connected(n, rng.random_range(0.0..0.5), &mut rng);
        let t = table(&g);
        let s = VertexSet::from_bits(rng.random::<u64>()) & t.all();
        let more = s | (VertexSet::from_bits(rng.random::<u64>()) & t.all());
        let cl = t.closure(s);
        ensure(s.is_subset(cl), || format!("not extensive on {s}"))?;
        ensure(cl.is_subset(t.closure(more)), || format!("not monotone on {s} <= {more}"))?;
        ensure(t.closure(cl) == cl, || format!("not idempotent on {s}"))?;
        samples += 1;
    }

    let mut graphs = 0;
    for n in 1..=7 {
        for g in connected_graphs(n) {
            let t = table(&g);
            let convex: Vec<VertexSet> = (0..1u64 << n)
                .map(VertexSet::from_bits)
                .filter(|&s| t.is_convex(s))
                .collect();
            for bits in 0..1u64 << n {
                let s = VertexSet::from_bits(bits);
                let smallest = convex
                    .iter()
                    .filter(|c| s.is_subset(**c))
                    .fold(t.all(), |acc, &c| acc & c);
                ensure(t.closure(s) == smallest, || format!("closure of {s} is not the smallest convex superset"))?;
            }
            graphs += 1;
        }
    }
    Ok(format!(
        "{samples} sampled (graph, set) pairs satisfy the closure laws; smallest-superset certified on {graphs} connected graphs"
    ))
}

fn solvers_agree() -> Outcome {
    let agree = |g: &Graph, what: &str| -> Result<(), String> {
        let dm = DistanceMatrix::new(g).unwrap();
        let e = convexity_number_exhaustive(&dm).unwrap();
        let b = convexity_number_bnb(&dm).unwrap();
        ensure(e.value == b.value, || format!("{what}: exhaustive {} vs bnb {}", e.value, b.value))
    };

    let mut bases: Vec<(String, Graph)> = trees(1, 10)
        .into_iter()
        .map(|t| (format!("tree {}", t.code), t.tree.graph().clone()))
        .collect();
    bases.extend((1..=5).flat_map(connected_graphs).map(|g| ("small graph".to_string(), g)));
    bases.extend(named_graphs().into_iter().filter(|(_, g)| g.order() <= 10));
    for (name, g) in &bases {
        agree(&g.complementary_prism().unwrap(), &format!("prism of {name}"))?;
    }

    let mut plain: Vec<(String, Graph)> = (1..=6)
        .flat_map(connected_graphs)
        .map(|g| ("small graph".to_string(), g))
        .collect();
    plain.extend(trees(1, 12).into_iter().map(|t| (format!("tree {}", t.code), t.tree.graph().clone())));
    plain.extend(named_graphs());
    let mut rng = corpus::rng(corpus::seed() ^ 8);
    for _ in 0..200 {
        let n = rng.random_range(7..=12);
        plain.push(("random".into(), random_connected(n, rng.random_range(0.0..0.4), &mut rng)));
    }
    for (name, g) in &plain {
        agree(g, name)?;
    }
    Ok(format!("exhaustive and bnb agree on {} prisms and {} plain graphs", bases.len(), plain.len()))
}

fn prufer_counts() -> Outcome {
    let mut counts = Vec::new();
    for (n, want) in [(4, 16), (5, 125)] {
        let mut seen = BTreeSet::new();
        let mut code = vec![0usize; n - 2];
        loop {
            let t = prufer_decode(&code).map_err(|e| e.to_string())?;
            ensure(t.prufer_encode().ok().as_deref() == Some(&code[..]), || format!("round trip failed on {code:?}"))?;
            seen.insert(t.graph().edges().collect::<Vec<_>>());
            // odometer over [n]^(n-2)
            let Some(i) = code.iter().rposition(|&d| d + 1 < n) else { break };
            code[i] += 1;
            code[i + 1..].iter_mut().for_each(|d| *d = 0);
        }
        ensure(seen.len() == want, || format!("n={n}: {} distinct trees, expected {want}", seen.len()))?;
        counts.push(format!("n={n}: {}", seen.len()));
    }
    Ok(format!("distinct labeled trees from all codes, {}", counts.join(", ")))
}

fn main() {
    let checks: [Check; 9] = [
        ("tree-campaign", tree_campaign),
        ("petersen-prism", petersen_prism),
        ("disconnected-bases", disconnected_spot_checks),
        ("order-lower-bound", order_lower_bound),
        ("witness-sets", witness_sets),
        ("hull-containments", hull_containments),
        ("closure-laws", closure_laws),
        ("solver-agreement", solvers_agree),
        ("prufer-cayley", prufer_counts),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        match check() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name}: {why}");
            }
        }
    }
    println!("{} of {} acceptance checks passed", checks.len() - failed, checks.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
