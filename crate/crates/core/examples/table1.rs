//! Full literature-table comparison; pass a directory to also write CSV and JSON.

use std::path::PathBuf;

use hyperbolical::bench::{run_table1, BenchConfig};

fn main() {
    let report = run_table1(&BenchConfig::default()).expect("table run");
    print!("{}", report.render());
    let violations = report.violations();
    println!("{} tolerance violations", violations.len());
    for v in violations.iter().take(10) {
        println!("  {v}");
    }

    // Same analytic column with c0 taken at gamma = 1.
    let unit = BenchConfig {
        gamma: Some(1.0),
        ..BenchConfig::default()
    };
    let alt = run_table1(&unit).expect("table run");
    println!("max |analytic - present| with gamma = 1: {:.3e}", alt.summary.max_analytic_deviation);

    if let Some(dir) = std::env::args().nth(1).map(PathBuf::from) {
        let (csv, json) = report.write_files(&dir).expect("write reports");
        println!("wrote {} and {}", csv.display(), json.display());
    }
}
