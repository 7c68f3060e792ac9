//! Runs every acceptance criterion at full scale and prints one line each.
//! Built without the libtest harness so the table shows even when all pass.

use charseq::verify::{run_all, Scale};

fn main() {
    let reports = run_all(Scale::Full);
    for r in &reports {
        println!(
            "{} criterion {:>2} {:<40} {} cases, {} failed",
            if r.passed() { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.cases,
            r.failed
        );
        for f in &r.failures {
            println!("       {f}");
        }
    }
    let failed: Vec<u32> = reports.iter().filter(|r| !r.passed()).map(|r| r.id).collect();
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
