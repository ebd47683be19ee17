//! Dump a normalized radial wavefunction to CSV plus a JSON sidecar.
//!
//! ```text
//! cargo run --example wavefunction -- 3p out.csv
//! ```

use std::path::PathBuf;

use hyperbolical::bench::{dump_wavefunction, parse_state_label};
use hyperbolical::{ApproxConstants, PotentialParams};

fn main() {
    let mut args = std::env::args().skip(1);
    let label = parse_state_label(&args.next().unwrap_or_else(|| "3p".into())).expect("state label");
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join(format!("{label}.csv")));
    let p = PotentialParams::atomic(10.0, 0.1, 0.1).unwrap();
    let side = dump_wavefunction(&label, &p, &ApproxConstants::published(), &out).expect("dump");
    println!("{}", serde_json::to_string_pretty(&side).unwrap());
    println!("samples in {}", out.display());
}
