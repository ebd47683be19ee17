//! Approximation constants and the quality of the shifted centrifugal term.

use hyperbolical::potential::{approx_relative_error, gamma_for_shift, solve_approx_constants, PUBLISHED_C0};
use hyperbolical::ApproxConstants;

fn main() {
    let c = ApproxConstants::published();
    println!("gamma = {}  c0 = {}", c.gamma, c.c0);
    println!("residuals: value {:e}, slope {:e}", c.residual_first, c.residual_second);

    match solve_approx_constants(1e-12) {
        Ok(s) => println!("slope-condition root: gamma = {}", s.gamma),
        Err(e) => println!("slope-condition root: {e}"),
    }
    println!("gamma recovered from c0: {}", gamma_for_shift(PUBLISHED_C0, 1e-14).unwrap());

    let unit = ApproxConstants::from_gamma(1.0).unwrap();
    println!("gamma = 1 gives c0 = {}", unit.c0);

    // Fixed physical radii around the alpha = 0.2 expansion point.
    let r_ref = c.expansion_radius(0.2);
    println!("\nrelative error of 4a^2 [c0 + v + v^2] against 1/r^2");
    println!("{:>6} {:>12} {:>12}", "alpha", format!("r={:.3}", 0.8 * r_ref), format!("r={:.3}", 1.2 * r_ref));
    for alpha in [0.2, 0.1, 0.05, 0.01] {
        let e = |f: f64| approx_relative_error(alpha, c.c0, f * r_ref).unwrap();
        println!("{alpha:>6} {:>12.3e} {:>12.3e}", e(0.8), e(1.2));
    }
}
