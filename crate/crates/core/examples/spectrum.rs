//! Closed-form bound spectrum for one parameter set.
//!
//! ```text
//! cargo run --example spectrum -- [D] [alpha] [sigma0]
//! ```

use hyperbolical::bench::StateLabel;
use hyperbolical::spectrum::bound_levels;
use hyperbolical::{ApproxConstants, PotentialParams};

fn main() {
    let args: Vec<f64> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let d = args.first().copied().unwrap_or(10.0);
    let alpha = args.get(1).copied().unwrap_or(0.1);
    let sigma0 = args.get(2).copied().unwrap_or(0.1);
    let p = PotentialParams::atomic(d, alpha, sigma0).expect("valid parameters");
    let c = ApproxConstants::published();

    println!("D = {d}, alpha = {alpha}, sigma0 = {sigma0}, threshold {:.5}", p.asymptote());
    println!("{:<5} {:>10} {:>10} {:>10}", "state", "E", "beta", "delta");
    for l in 0..5 {
        for lvl in bound_levels(&p, l, &c).into_iter().take(4) {
            let label = StateLabel::from_state(lvl.state).unwrap();
            println!("{:<5} {:>10.5} {:>10.5} {:>10.5}", label.text, lvl.energy, lvl.beta, lvl.delta);
        }
    }
}
