//! TSV and JSON-lines rendering. Timing lives only in `elapsed_ms` fields,
//! which `timing = false` drops.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::campaign::{LemmaLedger, VerificationRecord};

fn ms(v: f64) -> String {
    format!("{v:.3}")
}

pub fn records_tsv(records: &[VerificationRecord], timing: bool) -> String {
    let mut out = String::from("#n\tcode\tdiam\tdelta\tpredicted\texact\tmatch\tnodes");
    out.push_str(if timing { "\telapsed_ms\n" } else { "\n" });
    for r in records {
        let _ = write!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.n, r.code, r.diam, r.delta, r.predicted, r.exact, r.matches, r.nodes
        );
        if timing {
            let _ = write!(out, "\t{}", ms(r.elapsed_ms));
        }
        out.push('\n');
    }
    out
}

pub fn records_json(records: &[VerificationRecord], timing: bool) -> String {
    let mut out = String::new();
    for r in records {
        let mut v = serde_json::to_value(r).expect("record serializes");
        if !timing {
            v.as_object_mut().expect("object").remove("elapsed_ms");
        }
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

pub fn mismatches(records: &[VerificationRecord]) -> usize {
    records.iter().filter(|r| !r.matches).count()
}

pub fn summary(records: &[VerificationRecord], elapsed_ms: f64, timing: bool, as_json: bool) -> String {
    let trees = records.len();
    let bad = mismatches(records);
    if as_json {
        let mut v = json!({ "trees": trees, "mismatches": bad });
        if timing {
            v["elapsed_ms"] = Value::from((elapsed_ms * 1e3).round() / 1e3);
        }
        format!("{v}\n")
    } else if timing {
        format!("# trees={trees} mismatches={bad} elapsed_ms={}\n", ms(elapsed_ms))
    } else {
        format!("# trees={trees} mismatches={bad}\n")
    }
}

pub fn lemma_tsv(ledger: &LemmaLedger) -> String {
    let mut out = String::from("#check\tchecked\tfailed\n");
    for l in &ledger.lines {
        let _ = writeln!(out, "{}\t{}\t{}", l.check, l.checked, l.failed);
    }
    let _ = writeln!(out, "# trees={} failures={}", ledger.trees, ledger.failures());
    out
}

pub fn lemma_json(ledger: &LemmaLedger) -> String {
    let mut out = String::new();
    for l in &ledger.lines {
        out.push_str(&serde_json::to_string(l).expect("line serializes"));
        out.push('\n');
    }
    let _ = writeln!(out, "{}", json!({ "trees": ledger.trees, "failures": ledger.failures() }));
    out
}
