//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use hurwitz_core::verify::{self, CriterionReport, VerifyConfig};

fn show(r: &CriterionReport, secs: f64) {
    println!("{r} [{secs:.2}s]");
    for n in &r.notes {
        println!("    note: {n}");
    }
    for f in &r.failures {
        println!("    fail: {f}");
    }
    if r.failed > r.failures.len() {
        println!("    … {} more", r.failed - r.failures.len());
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed().as_secs_f64())
}

fn main() -> ExitCode {
    let cfg = VerifyConfig::default();
    let mut reports = Vec::new();

    let (r, t) = timed(verify::completed_cycles);
    if t >= 1.0 {
        println!("    note: completed-cycle table took {t:.2}s, over the 1s budget");
    }
    reports.push((r, t));
    let ((master, cells), t) = timed(|| verify::master_equivalence(&cfg));
    reports.push((master, t));
    reports.push(timed(|| verify::engine_agreement(&cfg)));
    reports.push(timed(|| verify::bernoulli_constant(&cfg)));
    reports.push(timed(|| verify::frobenius(&cfg)));
    reports.push(timed(|| verify::characters(&cfg)));
    let (r, t) = timed(|| verify::decomposition(&cfg));
    if t >= 10.0 {
        println!("    note: decomposition took {t:.2}s, over the 10s budget");
    }
    reports.push((r, t));
    reports.push(timed(|| verify::classical_anchor(&cfg)));
    reports.push(timed(verify::polynomiality));
    reports.push(timed(|| verify::parity_vanishing(&cells)));

    println!();
    for (r, t) in &reports {
        show(r, *t);
    }
    let failed: Vec<&str> = reports
        .iter()
        .filter(|(r, _)| !r.passed())
        .map(|(r, _)| r.id.as_str())
        .collect();
    println!();
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", reports.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {}", failed.join(", "));
        ExitCode::FAILURE
    }
}
