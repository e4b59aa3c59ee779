//! Runs part of the check suite and prints one line per check.
//! Usage: cargo run --release --example verify -- [TAG]

use andreev::verify::{run_verification_suite, VerifyOptions};

fn main() {
    let filter = std::env::args().nth(1).or_else(|| Some("symfunc".into()));
    let report = run_verification_suite(&VerifyOptions { filter, perturb_hook: None });
    for c in &report.checks {
        let mark = if c.passed { "ok  " } else { "FAIL" };
        println!("{mark} {:<36} error {:.2e} (tol {:.0e})  {}", c.name, c.error, c.tolerance, c.detail);
    }
    std::process::exit(i32::from(!report.passed));
}
