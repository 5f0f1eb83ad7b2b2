//! Acceptance run at full scale: one PASS/FAIL/SKIP line per criterion.
//! Exits nonzero if any criterion fails.

use extremal_core::verify::{run_check, Scale, Status, CHECKS};

const SEED: u64 = 42;

fn main() {
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    println!("acceptance: scale=full seed={SEED}");
    let mut failed = Vec::new();
    for &(id, _, _) in CHECKS.iter().filter(|c| only.is_empty() || only.contains(&c.0)) {
        let result = run_check(id, Scale::Full, SEED);
        println!("{result} ({:.2}s)", result.seconds);
        if result.status == Status::Fail {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
