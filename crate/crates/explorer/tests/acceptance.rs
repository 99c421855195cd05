//! One PASS/FAIL line per acceptance criterion.
//!
//! Run with `cargo test -p ladder-explorer --test acceptance -- --nocapture`.

use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use ladder_core::Modulus;
use ladder_explorer::*;

const GOLDEN_LIMIT: Duration = Duration::from_secs(1);
const EQUIVALENCE_LIMIT: Duration = Duration::from_secs(120);
const CRYSTAL_LIMIT: Duration = Duration::from_secs(60);

fn m(ell: usize) -> Modulus {
    Modulus::new(ell).unwrap()
}

struct Criterion {
    label: &'static str,
    ok: bool,
    detail: String,
}

fn timed<F: FnOnce() -> Vec<VerificationReport>>(limit: Option<Duration>, run: F) -> (bool, String) {
    let start = Instant::now();
    let reports = run();
    let elapsed = start.elapsed();
    let mut ok = reports.iter().all(VerificationReport::passed);
    let mut detail: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
    if let Some(limit) = limit {
        if elapsed > limit {
            ok = false;
            detail.push(format!("took {elapsed:.2?}, limit {limit:?}"));
        }
    }
    detail.push(format!("elapsed {elapsed:.2?}"));
    (ok, detail.join("\n    "))
}

fn determinism() -> (bool, String) {
    let dir = tempfile::tempdir().unwrap();
    let mut notes = Vec::new();
    let mut ok = true;
    for model in ["classical", "ladder"] {
        let mut runs = Vec::new();
        for attempt in 0..2 {
            let dot = dir.path().join(format!("{model}-{attempt}.dot"));
            let out = Command::new(env!("CARGO_BIN_EXE_ladder"))
                .args(["crystal", "build", "--ell", "3", "--depth", "8", "--model", model, "--dot"])
                .arg(&dot)
                .output()
                .unwrap();
            ok &= out.status.success();
            runs.push((out.stdout, fs::read(&dot).unwrap()));
        }
        let same_json = runs[0].0 == runs[1].0;
        let same_dot = runs[0].1 == runs[1].1;
        ok &= same_json && same_dot && !runs[0].0.is_empty() && !runs[0].1.is_empty();
        notes.push(format!("{model}: json identical {same_json}, dot identical {same_dot}"));
    }
    (ok, notes.join("; "))
}

#[test]
fn acceptance() {
    let mut results = Vec::new();
    let mut push = |label, (ok, detail): (bool, String)| results.push(Criterion { label, ok, detail });

    push("1 golden examples", timed(Some(GOLDEN_LIMIT), || vec![golden_suite()]));
    push(
        "2 equivalence oracles",
        timed(Some(EQUIVALENCE_LIMIT), || {
            [3, 4, 5].map(|ell| equivalence_suite(m(ell), 18).unwrap()).to_vec()
        }),
    );
    push(
        "3 regularization suite",
        timed(None, || [2, 3, 4, 5].map(|ell| regularization_suite(m(ell), 16)).to_vec()),
    );
    for (label, ell, depth) in [
        ("4 crystal suite ell=3", 3, 12),
        ("4 crystal suite ell=4", 4, 10),
        ("4 crystal suite ell=5", 5, 10),
    ] {
        push(label, timed(Some(CRYSTAL_LIMIT), || vec![crystal_suite(m(ell), depth).unwrap()]));
    }
    push("5 mullineux suite", timed(None, || vec![mullineux_suite(m(3), 14).unwrap()]));
    push("6 determinism", determinism());

    for c in &results {
        println!("{} {}\n    {}", if c.ok { "PASS" } else { "FAIL" }, c.label, c.detail);
    }
    let failed: Vec<&str> = results.iter().filter(|c| !c.ok).map(|c| c.label).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
