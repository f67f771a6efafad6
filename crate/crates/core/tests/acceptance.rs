//! Runs every acceptance criterion and prints one line per criterion. Built
//! without the libtest harness so the lines show up in `cargo test` output.

use std::process::ExitCode;

use freeprob::verify::{run_criterion, VerifyConfig};

fn main() -> ExitCode {
    let config = VerifyConfig::default();
    let mut failed = Vec::new();
    for id in 1..=11 {
        let report = run_criterion(id, &config);
        println!("{report}");
        if !report.passed() {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
