//! Gauss–Legendre rules and composite quadrature over rectangles.
//!
//! All integrands in this crate are smooth inside each panel, so tensor-product
//! Gauss–Legendre converges spectrally. Rules are cached by node count because
//! the same small orders are requested for every cell.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// A Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// Legendre polynomial `P_n` and its derivative at `x`.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

impl GaussLegendre {
    /// Builds the `n`-point rule via Newton iteration on the Legendre roots.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let half = n.div_ceil(2);
        for i in 0..half {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            let (_, dp) = legendre(n, x);
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = x;
            nodes[n - 1 - i] = -x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Nodes and weights mapped to `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        self.nodes
            .iter()
            .zip(self.weights.iter())
            .map(move |(&t, &w)| (mid + half * t, w * half))
    }

    pub fn integrate<F: Fn(f64) -> f64>(&self, a: f64, b: f64, f: F) -> f64 {
        self.mapped(a, b).map(|(x, w)| w * f(x)).sum()
    }
}

static RULE_CACHE: Lazy<Mutex<HashMap<usize, Arc<GaussLegendre>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Shared rule of the given order.
pub fn cached_rule(n: usize) -> Arc<GaussLegendre> {
    let mut cache = RULE_CACHE.lock().unwrap();
    cache
        .entry(n)
        .or_insert_with(|| Arc::new(GaussLegendre::new(n)))
        .clone()
}

/// Quadrature parameters shared by the error metrics and the `I`-norm table.
///
/// `nodes_per_cell_axis` is the Gauss–Legendre order used per axis on each
/// partition cell; `global_lattice` is the number of composite panels per axis
/// for whole-domain integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub nodes_per_cell_axis: usize,
    pub global_lattice: usize,
}

impl QuadratureSpec {
    pub fn new(nodes_per_cell_axis: usize, global_lattice: usize) -> Result<Self> {
        if nodes_per_cell_axis < 2 {
            return Err(Error::InvalidQuadrature(format!(
                "nodes_per_cell_axis must be >= 2, got {nodes_per_cell_axis}"
            )));
        }
        if global_lattice < 1 {
            return Err(Error::InvalidQuadrature(
                "global_lattice must be >= 1".into(),
            ));
        }
        Ok(QuadratureSpec {
            nodes_per_cell_axis,
            global_lattice,
        })
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            nodes_per_cell_axis: 12,
            global_lattice: 16,
        }
    }
}

/// Tensor-product integral of `f` over a rectangle with a single panel.
pub fn integrate_rect<F: Fn(f64, f64) -> f64>(
    rule: &GaussLegendre,
    x0: f64,
    y0: f64,
    w: f64,
    h: f64,
    f: F,
) -> f64 {
    let mut sum = 0.0;
    for (y, wy) in rule.mapped(y0, y0 + h) {
        for (x, wx) in rule.mapped(x0, x0 + w) {
            sum += wx * wy * f(x, y);
        }
    }
    sum
}

/// Composite integral of `f` over the unit square, `global_lattice` panels per
/// axis, `nodes_per_cell_axis` Gauss nodes per panel per axis.
pub fn integrate_unit_square<F: Fn(f64, f64) -> f64>(spec: &QuadratureSpec, f: F) -> f64 {
    let rule = cached_rule(spec.nodes_per_cell_axis);
    let m = spec.global_lattice;
    let side = 1.0 / m as f64;
    let mut sum = 0.0;
    for j in 0..m {
        for i in 0..m {
            sum += integrate_rect(&rule, i as f64 * side, j as f64 * side, side, side, &f);
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_nodes_integrate_polynomials_exactly() {
        let rule = GaussLegendre::new(6);
        // degree 11 is exact for a 6-point rule
        let exact = 1.0 / 12.0;
        let got = rule.integrate(0.0, 1.0, |x| x.powi(11));
        assert!((got - exact).abs() < 1e-14, "got {got}");
    }

    #[test]
    fn weights_sum_to_interval_length() {
        for n in [2usize, 5, 12, 33] {
            let rule = GaussLegendre::new(n);
            let s: f64 = rule.mapped(0.0, 3.0).map(|(_, w)| w).sum();
            assert!((s - 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn composite_matches_known_integral() {
        let spec = QuadratureSpec::default();
        let got = integrate_unit_square(&spec, |x, y| (x * y).sin());
        // oracle: high-order single-panel rule
        let rule = GaussLegendre::new(60);
        let want = integrate_rect(&rule, 0.0, 0.0, 1.0, 1.0, |x, y| (x * y).sin());
        assert!((got - want).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_spec() {
        assert!(QuadratureSpec::new(1, 4).is_err());
        assert!(QuadratureSpec::new(4, 0).is_err());
    }
}
