//! Runs every acceptance criterion, printing one PASS/FAIL line each, and
//! fails when any criterion fails.

use sepgraph_cli::repro::{criterion_count, run_selected};

fn main() {
    let results = run_selected(&[]);
    assert_eq!(results.len(), criterion_count());
    println!("acceptance criteria");
    for r in &results {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status} [{:.2} s] {}: {}", r.id, r.elapsed.as_secs_f64(), r.title, r.detail);
    }
    let failed: Vec<u32> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!("{}/{} criteria passed", results.len() - failed.len(), results.len());
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
