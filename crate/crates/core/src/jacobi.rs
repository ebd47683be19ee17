//! Jacobi polynomials `P_n^(a,b)(x)` for real indices, by the three-term
//! recurrence in the degree.

use crate::error::{Error, Result};

const X_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiParams {
    pub a: f64,
    pub b: f64,
    pub n: u32,
}

impl JacobiParams {
    pub fn new(a: f64, b: f64, n: u32) -> Result<Self> {
        if !(a > -1.0 && b > -1.0) {
            return Err(Error::InvalidParameter(format!(
                "Jacobi indices must exceed -1, got a={a}, b={b}"
            )));
        }
        Ok(Self { a, b, n })
    }
}

/// Evaluates `P_n^(a,b)(x)` on `[-1, 1]`.
pub fn jacobi_eval(jp: JacobiParams, x: f64) -> Result<f64> {
    if !(-1.0 - X_SLACK..=1.0 + X_SLACK).contains(&x) {
        return Err(Error::Domain(format!("Jacobi argument {x} outside [-1, 1]")));
    }
    Ok(jacobi_unchecked(jp.a, jp.b, jp.n, x.clamp(-1.0, 1.0)))
}

pub(crate) fn jacobi_unchecked(a: f64, b: f64, n: u32, x: f64) -> f64 {
    let p0 = 1.0;
    if n == 0 {
        return p0;
    }
    let p1 = (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    if n == 1 {
        return p1;
    }

    let ab = a + b;
    let (mut prev, mut curr) = (p0, p1);
    for k in 2..=n {
        let k = k as f64;
        let c = 2.0 * k + ab;
        let a1 = 2.0 * k * (k + ab) * (c - 2.0);
        let a2 = (c - 1.0) * (a * a - b * b);
        let a3 = (c - 2.0) * (c - 1.0) * c;
        let a4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * c;
        let next = ((a2 + a3 * x) * curr - a4 * prev) / a1;
        prev = curr;
        curr = next;
    }
    curr
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn low_degree_closed_forms() {
        for &(a, b, x) in &[(0.0, 0.0, 0.3), (33.1, 9.4, -0.7), (-0.5, 2.2, 1.0)] {
            let jp0 = JacobiParams::new(a, b, 0).unwrap();
            let jp1 = JacobiParams::new(a, b, 1).unwrap();
            assert_eq!(jacobi_eval(jp0, x).unwrap(), 1.0);
            assert_eq!(jacobi_eval(jp1, x).unwrap(), (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0);
        }
    }

    #[test]
    fn legendre_special_case() {
        // P_3 = (5x³ - 3x)/2
        let jp = JacobiParams::new(0.0, 0.0, 3).unwrap();
        for &x in &[-0.9, -0.2, 0.4, 1.0] {
            let expected = 0.5 * (5.0 * x * x * x - 3.0 * x);
            assert_relative_eq!(jacobi_eval(jp, x).unwrap(), expected, epsilon = 1e-14);
        }
    }

    #[test]
    fn endpoint_value() {
        // P_n^(a,b)(1) = Γ(n+a+1) / (n! Γ(a+1))
        let (a, b) = (2.5, 1.25);
        let jp = JacobiParams::new(a, b, 4).unwrap();
        let expected = (a + 4.0) * (a + 3.0) * (a + 2.0) * (a + 1.0) / 24.0;
        assert_relative_eq!(jacobi_eval(jp, 1.0).unwrap(), expected, max_relative = 1e-13);
    }

    #[test]
    fn domain_checks() {
        let jp = JacobiParams::new(1.0, 1.0, 2).unwrap();
        assert!(jacobi_eval(jp, 1.0 + 1e-13).is_ok());
        assert!(matches!(jacobi_eval(jp, 1.1), Err(Error::Domain(_))));
        assert!(jacobi_eval(jp, f64::NAN).is_err());
        assert!(JacobiParams::new(-1.0, 0.0, 1).is_err());
    }
}
