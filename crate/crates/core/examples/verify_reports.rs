//! Runs every reproducible check and prints the reports.
//!
//!     cargo run --release --example verify_reports [-- --full]

use projtri::search::SearchOptions;
use projtri::verify::{verify_all, SearchLevel};

fn main() {
    let level = if std::env::args().any(|a| a == "--full") { SearchLevel::Full } else { SearchLevel::Quick };
    let reports = verify_all(level, &SearchOptions::default());
    for r in &reports {
        print!("{}", r.to_text());
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} reports, {failed} failed", reports.len());
    std::process::exit(i32::from(failed > 0));
}
