//! Dirichlet solver for the Laplace equation on an axis-aligned rectangular
//! cell with boundary data given by the trace of a scalar field.
//!
//! The solution is represented as the corner-interpolating bilinear function
//! plus four one-sided sine/sinh series, one per edge with zero data on the
//! other three. Each term is exactly harmonic, so the only approximation is
//! the sine-series truncation of the corner-corrected edge traces.
//!
//! For a pure quadratic with constant Laplacian the interpolation defect is an
//! exact multiple of the torsion function:
//!
//! ```
//! use harmonic_splines::functions::registry_get;
//! use harmonic_splines::green_kernel::{torsion_i, SeriesTruncation, UnitSquarePoint};
//! use harmonic_splines::harmonic_solver::{solve_cell, Rect};
//!
//! let f = registry_get("quadratic")?; // x² + y², Δf = 4
//! let cell = Rect::new(0.0, 0.0, 1.0, 1.0)?;
//! let sol = solve_cell(&f, cell, &SeriesTruncation::new(128, 0.0)?)?;
//!
//! // u(f) - f = 4·I on the unit cell, since Δ(f - u) = 4 and ΔI = -1
//! let trunc = SeriesTruncation::new(256, 0.0)?;
//! let defect = sol.eval(0.3, 0.6)? - f.value(0.3, 0.6);
//! let torsion = torsion_i(UnitSquarePoint::new(0.3, 0.6)?, &trunc)?;
//! assert!((defect - 4.0 * torsion).abs() < 1e-6);
//! # Ok::<(), harmonic_splines::Error>(())
//! ```

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::functions::ScalarField;
use crate::green_kernel::SeriesTruncation;
use crate::quadrature::cached_rule;

/// An axis-aligned rectangle (partition cell or intermediate block).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub w: f64,
    pub h: f64,
}

impl Rect {
    pub fn new(x0: f64, y0: f64, w: f64, h: f64) -> Result<Self> {
        if !(w > 0.0 && h > 0.0) {
            return Err(Error::DegenerateCell { w, h });
        }
        Ok(Rect { x0, y0, w, h })
    }

    pub fn area(&self) -> f64 {
        self.w * self.h
    }

    /// Closed-rectangle membership with a small absolute slack.
    pub fn contains(&self, x: f64, y: f64) -> bool {
        let eps = 1e-9 * (1.0 + self.w.max(self.h));
        x >= self.x0 - eps
            && x <= self.x0 + self.w + eps
            && y >= self.y0 - eps
            && y <= self.y0 + self.h + eps
    }
}

/// Restrictions of a field to the four edges of a cell, each parameterized by
/// arc fraction `t ∈ [0, 1]`.
pub struct BoundaryTrace {
    pub bottom: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub top: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub left: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    pub right: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl BoundaryTrace {
    pub fn from_field(f: &ScalarField, cell: &Rect) -> Self {
        let f_b = f.clone();
        let f_t = f.clone();
        let f_l = f.clone();
        let f_r = f.clone();
        let Rect { x0, y0, w, h } = *cell;
        BoundaryTrace {
            bottom: Box::new(move |t| f_b.value(x0 + t * w, y0)),
            top: Box::new(move |t| f_t.value(x0 + t * w, y0 + h)),
            left: Box::new(move |t| f_l.value(x0, y0 + t * h)),
            right: Box::new(move |t| f_r.value(x0 + w, y0 + t * h)),
        }
    }

    /// Checks that adjacent edges agree at the shared corners.
    fn corner_gap(&self) -> f64 {
        let gaps = [
            ((self.bottom)(0.0) - (self.left)(0.0)).abs(),
            ((self.bottom)(1.0) - (self.right)(0.0)).abs(),
            ((self.top)(0.0) - (self.left)(1.0)).abs(),
            ((self.top)(1.0) - (self.right)(1.0)).abs(),
        ];
        gaps.into_iter().fold(0.0, f64::max)
    }
}

/// Corner-bilinear part plus four per-edge sine series.
///
/// Corner order: `[c00, c10, c01, c11]` (bottom-left, bottom-right, top-left,
/// top-right). Edge order of the series: bottom, top, left, right.
#[derive(Debug, Clone)]
pub struct HarmonicCellSolution {
    cell: Rect,
    corners: [f64; 4],
    edge_series: [Vec<f64>; 4],
    trunc: SeriesTruncation,
}

/// Sine coefficients `b_k = 2 ∫₀¹ g(t) sin(kπt) dt` of a corner-corrected edge
/// trace, by composite Gauss–Legendre with at least `4·max_mode` nodes.
fn sine_coefficients<F: Fn(f64) -> f64>(g: F, max_mode: usize) -> Vec<f64> {
    let nodes_per_panel = 16;
    let panels = (4 * max_mode).div_ceil(nodes_per_panel).max(1);
    let rule = cached_rule(nodes_per_panel);
    let mut coeffs = vec![0.0; max_mode];
    let width = 1.0 / panels as f64;
    for p in 0..panels {
        for (t, wt) in rule.mapped(p as f64 * width, (p + 1) as f64 * width) {
            let gv = g(t);
            if gv == 0.0 {
                continue;
            }
            let theta = PI * t;
            let (s1, c1) = theta.sin_cos();
            let two_cos = 2.0 * c1;
            let mut prev = 0.0;
            let mut cur = s1;
            for c in coeffs.iter_mut() {
                *c += 2.0 * wt * gv * cur;
                let nxt = two_cos * cur - prev;
                prev = cur;
                cur = nxt;
            }
        }
    }
    coeffs
}

/// Sum of one edge series at relative position `along ∈ [0,1]` on the edge
/// axis and `depth ∈ [0,1]` away from the data edge; `rho` is the aspect ratio
/// of the transverse to the longitudinal side.
///
/// Mode `k` carries the profile `sinh(kπ·rho·(1-depth)) / sinh(kπ·rho)`,
/// evaluated through decaying exponentials.
fn edge_series_sum(coeffs: &[f64], along: f64, depth: f64, rho: f64) -> f64 {
    if coeffs.is_empty() {
        return 0.0;
    }
    let q_damp = (-PI * rho * depth).exp();
    let q_ref = (-2.0 * PI * rho * (1.0 - depth)).exp();
    let q_full = (-2.0 * PI * rho).exp();
    let theta = PI * along;
    let (s1, c1) = theta.sin_cos();
    let two_cos = 2.0 * c1;
    let mut prev = 0.0;
    let mut cur = s1;
    let mut pd = q_damp;
    let mut pr = q_ref;
    let mut pf = q_full;
    let mut sum = 0.0;
    for &b in coeffs {
        let profile = pd * (1.0 - pr) / (1.0 - pf);
        sum += b * cur * profile;
        let nxt = two_cos * cur - prev;
        prev = cur;
        cur = nxt;
        pd *= q_damp;
        pr *= q_ref;
        pf *= q_full;
    }
    sum
}

/// Solves the Dirichlet problem on `cell` with boundary data `f|∂cell`.
pub fn solve_cell(
    f: &ScalarField,
    cell: Rect,
    trunc: &SeriesTruncation,
) -> Result<HarmonicCellSolution> {
    solve_cell_trace(&BoundaryTrace::from_field(f, &cell), cell, trunc)
}

/// Solves from an explicit boundary trace. The four edges must agree at the
/// shared corners to within 1e-12 (relative to the corner magnitude).
pub fn solve_cell_trace(
    trace: &BoundaryTrace,
    cell: Rect,
    trunc: &SeriesTruncation,
) -> Result<HarmonicCellSolution> {
    if !(cell.w > 0.0 && cell.h > 0.0) {
        return Err(Error::DegenerateCell {
            w: cell.w,
            h: cell.h,
        });
    }
    let c00 = (trace.bottom)(0.0);
    let c10 = (trace.bottom)(1.0);
    let c01 = (trace.top)(0.0);
    let c11 = (trace.top)(1.0);
    let scale = 1.0 + c00.abs().max(c10.abs()).max(c01.abs()).max(c11.abs());
    let gap = trace.corner_gap();
    if gap > 1e-12 * scale {
        return Err(Error::CornerMismatch(gap));
    }

    let bilinear = move |xi: f64, eta: f64| {
        c00 * (1.0 - xi) * (1.0 - eta)
            + c10 * xi * (1.0 - eta)
            + c01 * (1.0 - xi) * eta
            + c11 * xi * eta
    };

    let m = trunc.max_mode();
    let bottom = sine_coefficients(|t| (trace.bottom)(t) - bilinear(t, 0.0), m);
    let top = sine_coefficients(|t| (trace.top)(t) - bilinear(t, 1.0), m);
    let left = sine_coefficients(|t| (trace.left)(t) - bilinear(0.0, t), m);
    let right = sine_coefficients(|t| (trace.right)(t) - bilinear(1.0, t), m);

    Ok(HarmonicCellSolution {
        cell,
        corners: [c00, c10, c01, c11],
        edge_series: [bottom, top, left, right],
        trunc: *trunc,
    })
}

impl HarmonicCellSolution {
    pub fn cell(&self) -> &Rect {
        &self.cell
    }

    pub fn corners(&self) -> &[f64; 4] {
        &self.corners
    }

    pub fn truncation(&self) -> &SeriesTruncation {
        &self.trunc
    }

    /// Series value at a point of the closed cell.
    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        if !self.cell.contains(x, y) {
            return Err(Error::OutOfCell(x, y));
        }
        let xi = ((x - self.cell.x0) / self.cell.w).clamp(0.0, 1.0);
        let eta = ((y - self.cell.y0) / self.cell.h).clamp(0.0, 1.0);
        let [c00, c10, c01, c11] = self.corners;
        let mut value = c00 * (1.0 - xi) * (1.0 - eta)
            + c10 * xi * (1.0 - eta)
            + c01 * (1.0 - xi) * eta
            + c11 * xi * eta;
        let rho_v = self.cell.h / self.cell.w;
        let rho_h = self.cell.w / self.cell.h;
        value += edge_series_sum(&self.edge_series[0], xi, eta, rho_v);
        value += edge_series_sum(&self.edge_series[1], xi, 1.0 - eta, rho_v);
        value += edge_series_sum(&self.edge_series[2], eta, xi, rho_h);
        value += edge_series_sum(&self.edge_series[3], eta, 1.0 - xi, rho_h);
        Ok(value)
    }

    pub fn eval_many(&self, points: &[(f64, f64)]) -> Result<Vec<f64>> {
        points.iter().map(|&(x, y)| self.eval(x, y)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::registry_get;
    use crate::green_kernel::{torsion_i, UnitSquarePoint};

    fn trunc(m: usize) -> SeriesTruncation {
        SeriesTruncation::new(m, 1e-12).unwrap()
    }

    #[test]
    fn rejects_degenerate_cells() {
        assert!(Rect::new(0.0, 0.0, 0.0, 1.0).is_err());
        assert!(Rect::new(0.0, 0.0, 1.0, -0.5).is_err());
    }

    #[test]
    fn harmonic_field_is_reproduced_exactly() {
        let f = registry_get("harmonic").unwrap();
        let cell = Rect::new(0.2, 0.3, 0.5, 0.25).unwrap();
        let sol = solve_cell(&f, cell, &trunc(48)).unwrap();
        for &(x, y) in &[(0.3, 0.4), (0.45, 0.35), (0.6, 0.5), (0.25, 0.52)] {
            let got = sol.eval(x, y).unwrap();
            assert!((got - f.value(x, y)).abs() < 1e-9, "at ({x}, {y}): {got}");
        }
    }

    #[test]
    fn constant_data_gives_constant_solution() {
        let cell = Rect::new(0.1, 0.1, 0.4, 0.7).unwrap();
        let trace = BoundaryTrace {
            bottom: Box::new(|_| 3.25),
            top: Box::new(|_| 3.25),
            left: Box::new(|_| 3.25),
            right: Box::new(|_| 3.25),
        };
        let sol = solve_cell_trace(&trace, cell, &trunc(32)).unwrap();
        for &(x, y) in &[(0.15, 0.2), (0.3, 0.5), (0.49, 0.79)] {
            assert!((sol.eval(x, y).unwrap() - 3.25).abs() < 1e-13);
        }
    }

    #[test]
    fn quadratic_defect_is_four_times_the_torsion_function() {
        // identity on the unit cell: u(Q) - Q = 4·I for Q = x²+y², since
        // Δ(Q - u) = 4 with zero boundary values and ΔI = -1
        let f = registry_get("quadratic").unwrap();
        let cell = Rect::new(0.0, 0.0, 1.0, 1.0).unwrap();
        let sol = solve_cell(&f, cell, &trunc(128)).unwrap();
        let it = SeriesTruncation::new(256, 0.0).unwrap();
        for &(x, y) in &[(0.5, 0.5), (0.25, 0.7), (0.8, 0.15), (0.33, 0.41)] {
            let defect = sol.eval(x, y).unwrap() - f.value(x, y);
            let oracle = 4.0 * torsion_i(UnitSquarePoint::new(x, y).unwrap(), &it).unwrap();
            assert!(
                (defect - oracle).abs() < 1e-6,
                "at ({x}, {y}): {defect} vs {oracle}"
            );
        }
    }

    #[test]
    fn corners_are_interpolated_exactly() {
        let f = registry_get("quartic").unwrap();
        let cell = Rect::new(0.25, 0.5, 0.5, 0.25).unwrap();
        let sol = solve_cell(&f, cell, &trunc(16)).unwrap();
        for &(x, y) in &[(0.25, 0.5), (0.75, 0.5), (0.25, 0.75), (0.75, 0.75)] {
            assert_eq!(sol.eval(x, y).unwrap(), f.value(x, y));
        }
    }

    #[test]
    fn edge_midpoints_match_the_trace() {
        let f = registry_get("bump").unwrap();
        let cell = Rect::new(0.25, 0.25, 0.5, 0.5).unwrap();
        let sol = solve_cell(&f, cell, &trunc(64)).unwrap();
        for &(x, y) in &[(0.5, 0.25), (0.5, 0.75), (0.25, 0.5), (0.75, 0.5)] {
            let got = sol.eval(x, y).unwrap();
            assert!((got - f.value(x, y)).abs() < 1e-8, "at ({x}, {y}): {got}");
        }
    }

    #[test]
    fn eval_many_matches_eval() {
        let f = registry_get("quadratic").unwrap();
        let cell = Rect::new(0.0, 0.0, 0.5, 0.5).unwrap();
        let sol = solve_cell(&f, cell, &trunc(32)).unwrap();
        assert!(sol.eval_many(&[]).unwrap().is_empty());
        let single = sol.eval_many(&[(0.2, 0.3)]).unwrap();
        assert_eq!(single, vec![sol.eval(0.2, 0.3).unwrap()]);
        let rule = cached_rule(4);
        let lattice: Vec<(f64, f64)> = rule
            .mapped(0.0, 0.5)
            .flat_map(|(x, _)| rule.mapped(0.0, 0.5).map(move |(y, _)| (x, y)))
            .collect();
        let harmonic = registry_get("harmonic").unwrap();
        let hsol = solve_cell(&harmonic, cell, &trunc(48)).unwrap();
        for (v, &(x, y)) in hsol.eval_many(&lattice).unwrap().iter().zip(&lattice) {
            assert!((v - harmonic.value(x, y)).abs() < 1e-9);
        }
    }

    #[test]
    fn out_of_cell_evaluation_errors() {
        let f = registry_get("quadratic").unwrap();
        let cell = Rect::new(0.0, 0.0, 0.5, 0.5).unwrap();
        let sol = solve_cell(&f, cell, &trunc(8)).unwrap();
        assert!(matches!(sol.eval(0.9, 0.1), Err(Error::OutOfCell(_, _))));
    }

    #[test]
    fn corner_mismatch_is_rejected() {
        let cell = Rect::new(0.0, 0.0, 1.0, 1.0).unwrap();
        let trace = BoundaryTrace {
            bottom: Box::new(|_| 0.0),
            top: Box::new(|_| 0.0),
            left: Box::new(|_| 0.0),
            right: Box::new(|t| t), // right(0) = 0 ok, right(1) = 1 vs top(1) = 0
        };
        assert!(matches!(
            solve_cell_trace(&trace, cell, &trunc(8)),
            Err(Error::CornerMismatch(_))
        ));
    }

    #[test]
    fn maximum_principle_on_a_solved_cell() {
        let f = registry_get("bump").unwrap();
        let cell = Rect::new(0.1, 0.2, 0.45, 0.3).unwrap();
        let sol = solve_cell(&f, cell, &trunc(48)).unwrap();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..=400 {
            let t = i as f64 / 400.0;
            for v in [
                f.value(cell.x0 + t * cell.w, cell.y0),
                f.value(cell.x0 + t * cell.w, cell.y0 + cell.h),
                f.value(cell.x0, cell.y0 + t * cell.h),
                f.value(cell.x0 + cell.w, cell.y0 + t * cell.h),
            ] {
                lo = lo.min(v);
                hi = hi.max(v);
            }
        }
        for i in 1..10 {
            for j in 1..10 {
                let x = cell.x0 + cell.w * i as f64 / 10.0;
                let y = cell.y0 + cell.h * j as f64 / 10.0;
                let v = sol.eval(x, y).unwrap();
                assert!(v >= lo - 1e-7 && v <= hi + 1e-7, "{v} outside [{lo}, {hi}]");
            }
        }
    }

    #[test]
    fn solver_is_linear_in_the_data() {
        let f = registry_get("quartic").unwrap();
        let g = registry_get("bump").unwrap();
        let (a, b) = (1.7, -0.6);
        let fg = {
            let (fa, ga) = (f.clone(), g.clone());
            let (fb, gb) = (f.clone(), g.clone());
            let (fc, gc) = (f.clone(), g.clone());
            ScalarField::from_closures(
                "combo",
                false,
                std::sync::Arc::new(move |x, y| a * fa.value(x, y) + b * ga.value(x, y)),
                std::sync::Arc::new(move |x, y| a * fb.laplacian(x, y) + b * gb.laplacian(x, y)),
                std::sync::Arc::new(move |x, y| {
                    let (p, q, r) = fc.second_partials(x, y);
                    let (s, t, u) = gc.second_partials(x, y);
                    (a * p + b * s, a * q + b * t, a * r + b * u)
                }),
            )
        };
        let cell = Rect::new(0.3, 0.1, 0.35, 0.55).unwrap();
        let tr = trunc(48);
        let sol_f = solve_cell(&f, cell, &tr).unwrap();
        let sol_g = solve_cell(&g, cell, &tr).unwrap();
        let sol_fg = solve_cell(&fg, cell, &tr).unwrap();
        for &(x, y) in &[(0.4, 0.3), (0.5, 0.2), (0.62, 0.6)] {
            let combo = a * sol_f.eval(x, y).unwrap() + b * sol_g.eval(x, y).unwrap();
            let direct = sol_fg.eval(x, y).unwrap();
            assert!((combo - direct).abs() < 1e-10);
        }
    }

    #[test]
    fn discrete_harmonicity_improves_under_richardson() {
        let f = registry_get("quartic").unwrap();
        let cell = Rect::new(0.2, 0.2, 0.6, 0.6).unwrap();
        let sol = solve_cell(&f, cell, &trunc(64)).unwrap();
        let lap = |h: f64| {
            let (x, y) = (0.5, 0.5);
            (sol.eval(x + h, y).unwrap()
                + sol.eval(x - h, y).unwrap()
                + sol.eval(x, y + h).unwrap()
                + sol.eval(x, y - h).unwrap()
                - 4.0 * sol.eval(x, y).unwrap())
                / (h * h)
        };
        let coarse = lap(1e-2).abs();
        let fine = lap(5e-3).abs();
        // O(h²): halving h should cut the defect by about 4
        assert!(fine < coarse / 2.0 + 1e-9, "coarse {coarse}, fine {fine}");
        assert!(fine < 1e-3, "fine {fine}");
    }

    #[test]
    fn scale_covariance_of_the_solution() {
        // solving f(α·) on Ω matches solving f on αΩ composed with scaling
        let alpha = 2.0;
        let f = registry_get("quartic").unwrap();
        let f_scaled = {
            let inner = f.clone();
            let l = f.clone();
            let s = f.clone();
            ScalarField::from_closures(
                "scaled",
                false,
                std::sync::Arc::new(move |x, y| inner.value(alpha * x, alpha * y)),
                std::sync::Arc::new(move |x, y| alpha * alpha * l.laplacian(alpha * x, alpha * y)),
                std::sync::Arc::new(move |x, y| {
                    let (p, q, r) = s.second_partials(alpha * x, alpha * y);
                    (alpha * alpha * p, alpha * alpha * q, alpha * alpha * r)
                }),
            )
        };
        let tr = trunc(48);
        let small = Rect::new(0.1, 0.1, 0.2, 0.3).unwrap();
        let big = Rect::new(0.2, 0.2, 0.4, 0.6).unwrap();
        let sol_small = solve_cell(&f_scaled, small, &tr).unwrap();
        let sol_big = solve_cell(&f, big, &tr).unwrap();
        for &(x, y) in &[(0.15, 0.2), (0.22, 0.33), (0.28, 0.12)] {
            let a = sol_small.eval(x, y).unwrap();
            let b = sol_big.eval(alpha * x, alpha * y).unwrap();
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
    }
}
