//! Runs every anchored scenario and prints the Markdown report.

use atomlab::report::{verify_paper, DEFAULT_DEPTH};
use atomlab::monoid::DEFAULT_BUDGET;

pub fn run_example() -> atomlab::Result<()> {
    let report = verify_paper(DEFAULT_DEPTH, DEFAULT_BUDGET, None);
    print!("{}", report.to_markdown());
    assert!(report.all_passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> atomlab::Result<()> {
    run_example()
}
