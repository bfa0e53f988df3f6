//! End-to-end acceptance run: one PASS/FAIL line per check, nonzero exit if
//! any check fails or exceeds its time budget.

use std::process::ExitCode;

use eqrank_core::oracle::suite::run_all;

fn main() -> ExitCode {
    let outcomes = run_all();
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed: Vec<usize> = outcomes.iter().filter(|o| !o.ok()).map(|o| o.id).collect();
    if failed.is_empty() {
        println!("acceptance: {}/{} checks passed", outcomes.len(), outcomes.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed checks {failed:?}");
        ExitCode::FAILURE
    }
}
