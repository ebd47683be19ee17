//! Closed-form normalization sum against quadrature.

use hyperbolical::bench::{normalization_audit, parse_state_label};
use hyperbolical::{ApproxConstants, PotentialParams};

fn main() {
    let c = ApproxConstants::published();
    let labels: Vec<_> = ["2p", "3p", "4p"].into_iter().map(|s| parse_state_label(s).unwrap()).collect();
    println!("{:<5} {:>5} {:>6} {:>10} {:>14} {:>14} {:>10}", "state", "alpha", "sigma0", "beta", "N quadrature", "N printed", "sum/exact");
    for sigma0 in [0.1, 0.2] {
        for alpha in [0.1, 0.15, 0.2] {
            let p = PotentialParams::atomic(10.0, alpha, sigma0).unwrap();
            for r in normalization_audit(&p, &c, &labels).unwrap() {
                println!(
                    "{:<5} {:>5} {:>6} {:>10.5} {:>14.6e} {:>14.6e} {:>10.4}",
                    r.state, r.alpha, r.sigma0, r.beta, r.n_quadrature, r.n_printed_sum, r.sum_over_exact
                );
            }
        }
    }
}
