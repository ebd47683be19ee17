//! Numerov shooting against the closed form, with a grid-halving check.

use hyperbolical::bench::parse_state_label;
use hyperbolical::oracle::{find_level, solve_state, ShootingConfig};
use hyperbolical::spectrum::energy_level;
use hyperbolical::{ApproxConstants, PotentialParams};

fn main() {
    let p = PotentialParams::atomic(10.0, 0.1, 0.1).unwrap();
    let c = ApproxConstants::published();
    println!("{:<5} {:>12} {:>12} {:>10} {:>10}", "state", "numeric", "analytic", "err %", "halving");
    for text in ["2p", "3p", "3d", "4f", "5g", "6g"] {
        let s = parse_state_label(text).unwrap().state();
        let num = solve_state(&p, s, ShootingConfig::DEFAULT_N_GRID).unwrap();
        let cfg = ShootingConfig {
            energy_tol: 1e-12,
            ..ShootingConfig::auto(&p, s.l, num.energy, ShootingConfig::DEFAULT_N_GRID).unwrap()
        };
        let coarse = find_level(&p, s, &cfg).unwrap().energy;
        let fine = find_level(&p, s, &cfg.refined()).unwrap().energy;
        let ana = energy_level(&p, s, &c).energy;
        println!(
            "{text:<5} {:>12.7} {:>12.7} {:>10.5} {:>10.1e}",
            num.energy,
            ana,
            100.0 * (ana - num.energy).abs() / num.energy,
            (fine - coarse).abs()
        );
    }

    // sigma0 = 1 is purely repulsive: the bracket holds no level.
    let repulsive = p.with_sigma0(1.0).unwrap();
    let s = parse_state_label("2p").unwrap().state();
    match solve_state(&repulsive, s, ShootingConfig::DEFAULT_N_GRID) {
        Ok(l) => println!("sigma0 = 1: E = {}", l.energy),
        Err(e) => println!("sigma0 = 1: {e}"),
    }
}
