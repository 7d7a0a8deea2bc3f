//! One line per acceptance criterion. Runs as a plain binary so the lines
//! show up in `cargo test` output; exits nonzero if any criterion fails.

mod support;

use std::process::ExitCode;

use coxalg::cases::CaseName;
use coxalg::driver::{run_case, CaseConfig};
use coxalg::report::{Report, Status};

use support::props::{CASES, SUITES};

/// Every listed item is present and passes.
fn require(report: &Report, ids: &[&str], bad: &mut Vec<String>) {
    for id in ids {
        match report.item(id) {
            Some(i) if i.status == Status::Pass => {}
            Some(i) => bad.push(format!("{}:{id} {} ({})", report.case, i.status.name(), i.detail)),
            None => bad.push(format!("{}:{id} missing", report.case)),
        }
    }
}

fn line(n: usize, title: &str, bad: &[String], note: &str) -> bool {
    let ok = bad.is_empty();
    let detail = if ok { note.to_string() } else { bad.join("; ") };
    println!("criterion {n} {:<4} {title}{}{detail}", if ok { "PASS" } else { "FAIL" }, if detail.is_empty() { "" } else { ": " });
    ok
}

fn main() -> ExitCode {
    let config = CaseConfig::default();
    let run = |n| run_case(n, &config).expect("valid default configuration");
    let (s3, d8, g4) = (run(CaseName::S3), run(CaseName::D8Wreath), run(CaseName::G4));
    let all = [&s3, &d8, &g4];
    let mut ok = true;

    let mut bad = Vec::new();
    all.iter().for_each(|r| require(r, &["group/facts"], &mut bad));
    ok &= line(1, "group facts", &bad, "");

    let mut bad = Vec::new();
    all.iter().for_each(|r| require(r, &["tables/generation"], &mut bad));
    ok &= line(2, "generating tables", &bad, "bounds 6, 4, 6");

    let mut bad = Vec::new();
    all.iter().for_each(|r| require(r, &["valuations/congruence", "synthesis/generators"], &mut bad));
    ok &= line(3, "valuations and synthesized generators", &bad, "");

    let mut bad = Vec::new();
    all.iter().for_each(|r| require(r, &["index/class-group"], &mut bad));
    ok &= line(4, "class group index", &bad, "");

    let mut bad = Vec::new();
    let per_class = |t: &str| ["powers-vs-intersection", "intersection-generators", "preimage-of-intersection", "bounded"].map(|s| format!("lifting/{t}/{s}"));
    require(&s3, &per_class("t").each_ref().map(String::as_str), &mut bad);
    for t in ["t0", "t2"] {
        require(&d8, &per_class(t).each_ref().map(String::as_str), &mut bad);
    }
    require(&d8, &["lifting/three-planes", "lifting/joint/bounded"], &mut bad);
    ok &= line(5, "lifting identities", &bad, "d <= 3; the unbounded condition is reported as SKIP");

    let mut bad = Vec::new();
    require(&d8, &["embedding/kernel"], &mut bad);
    ok &= line(6, "embedding ideal", &bad, "with phi02 sign normalized to the relations");

    let mut bad = Vec::new();
    let minors: Vec<String> = (1..=6).map(|k| format!("git/minors/{k}")).collect();
    require(&d8, &["git/supports", "git/isotropy"], &mut bad);
    require(&d8, &minors.iter().map(String::as_str).collect::<Vec<_>>(), &mut bad);
    ok &= line(7, "semistability, isotropy and smoothness minors", &bad, "extra support {w02,u2} covered on Spec R");

    let mut bad = Vec::new();
    require(
        &d8,
        &["fiber/components", "fiber/stable", "fiber/plane-quadric", "toric/binomial-coordinates", "toric/dual-hilbert-basis", "toric/ideal", "toric/faces", "toric/quotient-fan"],
        &mut bad,
    );
    ok &= line(8, "central fiber and toric component", &bad, "computed fan is F4; printed rays differ");

    let mut bad = Vec::new();
    for (name, suite) in SUITES {
        if let Err(e) = suite() {
            bad.push(format!("{name}: {e}"));
        }
    }
    ok &= line(9, "property suites", &bad, &format!("{} suites x {CASES} cases", SUITES.len()));

    for r in all {
        println!("  {}: {} pass, {} fail, {} skip, {} resource", r.case, r.count(Status::Pass), r.count(Status::Fail), r.count(Status::Skip), r.count(Status::Resource));
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
