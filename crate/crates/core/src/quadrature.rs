//! Composite Gauss–Legendre quadrature on an arbitrary panel partition.

use std::num::NonZeroUsize;

use gauss_quad::GaussLegendre;

/// Fixed-order Gauss–Legendre rule applied panel by panel.
pub struct CompositeRule {
    rule: GaussLegendre,
    order: usize,
}

impl CompositeRule {
    pub fn new(order: usize) -> Self {
        let order = order.max(1);
        Self {
            rule: GaussLegendre::new(NonZeroUsize::new(order).expect("order >= 1")),
            order,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Integrates `f` over `[edges[0], edges[last]]`, one rule per panel.
    pub fn integrate_panels<F: FnMut(f64) -> f64>(&self, edges: &[f64], mut f: F) -> f64 {
        edges
            .windows(2)
            .map(|w| self.rule.integrate(w[0], w[1], &mut f))
            .sum()
    }
}

/// Panel edges that are geometric on `[r_min, r_switch]` and uniform on
/// `[r_switch, r_max]`; the two parts get half the panels each.
pub fn hybrid_edges(r_min: f64, r_switch: f64, r_max: f64, panels: usize) -> Vec<f64> {
    let panels = panels.max(2);
    let geo = panels / 2;
    let uni = panels - geo;
    let mut edges = Vec::with_capacity(panels + 2);
    edges.push(0.0);
    let ratio = (r_switch / r_min).powf(1.0 / geo as f64);
    let mut r = r_min;
    for _ in 0..geo {
        edges.push(r);
        r *= ratio;
    }
    let h = (r_max - r_switch) / uni as f64;
    for i in 0..=uni {
        edges.push(r_switch + i as f64 * h);
    }
    edges
}

/// Composite trapezoid rule on ordered samples.
pub fn trapezoid(samples: &[(f64, f64)]) -> f64 {
    samples
        .windows(2)
        .map(|w| 0.5 * (w[1].0 - w[0].0) * (w[1].1 + w[0].1))
        .sum()
}
