//! Every derived constant compared with the reference values, as the `paper-check` command does.

use quartic_squares::cli::paper_ledger;

fn main() {
    let ledger = paper_ledger();
    for check in &ledger.checks {
        println!("{check}");
    }
    println!("all hard checks passed: {}", ledger.passed());
}
