use approx::assert_relative_eq;
use proptest::prelude::*;

use hyperbolical::bench::{parse_state_label, StateLabel};
use hyperbolical::jacobi::{jacobi_eval, JacobiParams};
use hyperbolical::potential::{centrifugal_approx, potential_value, shift_for_gamma};
use hyperbolical::spectrum::{beta_from_energy, energy_level, s_wave_energy, sigma1_energy};
use hyperbolical::{ApproxConstants, PotentialParams, QuantumState};

fn physics() -> impl Strategy<Value = PotentialParams> {
    (1.0..=20.0_f64, 0.05..=0.3_f64, 1..=10_u32)
        .prop_map(|(d, a, s)| PotentialParams::atomic(d, a, s as f64 / 10.0).unwrap())
}

/// Finite-sum form of `P_n^(a,b)` in `z = (1 - x)/2`, with the sum of
/// absolute terms as a conditioning scale.
fn jacobi_expanded(a: f64, b: f64, n: u32, x: f64) -> (f64, f64) {
    let z = 0.5 * (1.0 - x);
    let nf = n as f64;
    let falling = |v: f64, k: u32| (0..k).map(|i| v - i as f64).product::<f64>();
    let binom = |k: u32| (0..k).map(|i| (n - i) as f64 / (i + 1) as f64).product::<f64>();
    let fact: f64 = (1..=n).map(|i| i as f64).product();
    let (mut sum, mut mag) = (0.0, 0.0);
    for k in 0..=n {
        let t = binom(k) * falling(nf + a, k) * falling(nf + b, n - k) * z.powi((n - k) as i32) * (1.0 - z).powi(k as i32);
        sum += if (n - k) % 2 == 0 { t } else { -t };
        mag += t.abs();
    }
    (sum / fact, mag / fact)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn l0_reduces_to_s_wave(p in physics(), n in 0..5_u32) {
        let c = ApproxConstants::published();
        let a = energy_level(&p, QuantumState::new(n, 0), &c);
        let b = s_wave_energy(&p, n);
        prop_assert!((a.energy - b.energy).abs() <= 1e-12 * b.energy.abs().max(1.0));
        prop_assert!((a.beta - b.beta).abs() <= 1e-12 * b.beta.abs().max(1.0));
    }

    #[test]
    fn sigma_one_reduces(p in physics(), n in 0..5_u32, l in 0..5_u32) {
        let c = ApproxConstants::published();
        let p = p.with_sigma0(1.0).unwrap();
        let s = QuantumState::new(n, l);
        let a = energy_level(&p, s, &c);
        let b = sigma1_energy(&p, s, &c).unwrap();
        prop_assert!((a.energy - b.energy).abs() <= 1e-12 * b.energy.abs().max(1.0));
        prop_assert!(!b.is_bound);
    }

    #[test]
    fn beta_round_trips_through_energy(p in physics(), n in 0..4_u32, l in 1..5_u32) {
        let c = ApproxConstants::published();
        let s = QuantumState::new(n, l);
        let lvl = energy_level(&p, s, &c);
        prop_assume!(lvl.is_bound);
        let beta = beta_from_energy(&p, s, &c, lvl.energy);
        prop_assert!((beta - lvl.beta.abs()).abs() <= 1e-8 * lvl.beta.abs().max(1.0));
    }

    #[test]
    fn bound_levels_rise_with_n(p in physics(), l in 0..5_u32) {
        let c = ApproxConstants::published();
        let mut prev = f64::NEG_INFINITY;
        for n in 0..6 {
            let lvl = energy_level(&p, QuantumState::new(n, l), &c);
            if !lvl.is_bound {
                break;
            }
            prop_assert!(lvl.energy > prev);
            prev = lvl.energy;
        }
    }

    #[test]
    fn centrifugal_is_shift_plus_csch_squared(alpha in 0.01..0.5_f64, r in 0.01..50.0_f64, c0 in 0.0..0.1_f64) {
        let got = centrifugal_approx(alpha, c0, r).unwrap();
        let want = 4.0 * alpha * alpha * c0 + (alpha / (alpha * r).sinh()).powi(2);
        assert_relative_eq!(got, want, max_relative = 1e-12);
    }

    #[test]
    fn shift_lies_below_one_twelfth(gamma in 0.05..2.0_f64) {
        let c0 = shift_for_gamma(gamma);
        prop_assert!(c0 > 0.0 && c0 < 1.0 / 12.0 + 1e-12);
    }

    #[test]
    fn potential_vanishes_once_and_tends_to_threshold(p in physics(), r in 0.01..200.0_f64) {
        prop_assert!(potential_value(&p, r).unwrap() >= 0.0);
        let zero = p.sigma0.atanh() / p.alpha;
        if p.sigma0 < 1.0 {
            prop_assert!(potential_value(&p, zero).unwrap() <= 1e-12 * p.d);
            prop_assert!(potential_value(&p, zero + 1.0).unwrap() < p.asymptote());
        }
        let far = potential_value(&p, 60.0 / p.alpha).unwrap();
        prop_assert!((far - p.asymptote()).abs() <= 1e-9 * p.d);
    }

    #[test]
    fn jacobi_matches_expansion(a in -0.9..30.0_f64, b in -0.9..30.0_f64, x in -1.0..=1.0_f64, n in 0..=6_u32) {
        let got = jacobi_eval(JacobiParams::new(a, b, n).unwrap(), x).unwrap();
        let (want, mag) = jacobi_expanded(a, b, n, x);
        prop_assert!((got - want).abs() <= 1e-9 * want.abs().max(1e-6 * mag));
    }

    #[test]
    fn jacobi_at_one_is_binomial(a in -0.9..30.0_f64, b in -0.9..30.0_f64, n in 0..=8_u32) {
        let got = jacobi_eval(JacobiParams::new(a, b, n).unwrap(), 1.0).unwrap();
        let want: f64 = (1..=n).map(|k| (a + k as f64) / k as f64).product();
        assert_relative_eq!(got, want, max_relative = 1e-12);
    }

    #[test]
    fn jacobi_reflection(a in -0.9..10.0_f64, b in -0.9..10.0_f64, x in -1.0..=1.0_f64, n in 0..=6_u32) {
        let lhs = jacobi_eval(JacobiParams::new(a, b, n).unwrap(), -x).unwrap();
        let rhs = jacobi_eval(JacobiParams::new(b, a, n).unwrap(), x).unwrap();
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let (_, mag) = jacobi_expanded(a, b, n, -x);
        prop_assert!((lhs - sign * rhs).abs() <= 1e-10 * mag.max(1.0));
    }

    #[test]
    fn labels_round_trip(n in 0..6_u32, l in 0..5_u32) {
        let label = StateLabel::from_state(QuantumState::new(n, l)).unwrap();
        let back = parse_state_label(&label.to_string()).unwrap();
        prop_assert_eq!(back.state(), QuantumState::new(n, l));
    }
}
