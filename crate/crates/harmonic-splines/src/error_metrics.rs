//! `L_p` error of the fitted spline, the Laplacian quasi-norm, and the sharp
//! asymptotic constant, plus the closed-form local error for pure quadratics.
//!
//! With a constant Laplacian the identity `N·‖f - s‖_p = 4‖I‖_p` is exact at
//! every budget, not only in the limit:
//!
//! ```
//! use harmonic_splines::error_metrics::{lp_error, norm_i_reference};
//! use harmonic_splines::functions::registry_get;
//! use harmonic_splines::green_kernel::SeriesTruncation;
//! use harmonic_splines::partition::uniform_partition;
//! use harmonic_splines::quadrature::QuadratureSpec;
//! use harmonic_splines::spline::fit;
//!
//! let f = registry_get("quadratic")?;
//! let model = fit(&f, uniform_partition(100)?, &SeriesTruncation::new(64, 0.0)?)?;
//! let err = lp_error(&f, &model, 2.0, &QuadratureSpec::default())?;
//! let want = 4.0 * norm_i_reference(2.0)? / 100.0;
//! assert!(((err.total_p_norm - want) / want).abs() < 1e-3);
//! # Ok::<(), harmonic_splines::Error>(())
//! ```

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::functions::ScalarField;
use crate::green_kernel::{self, SeriesTruncation};
use crate::quadrature::{self, QuadratureSpec};
use crate::spline::SplineModel;

/// Truncation used for the cached `‖I‖_p` constants. Much finer than the
/// per-cell default: the constant is computed once per norm index.
fn constant_truncation() -> SeriesTruncation {
    SeriesTruncation::new(512, 0.0).expect("static parameters")
}

fn constant_quadrature() -> QuadratureSpec {
    QuadratureSpec::new(12, 32).expect("static parameters")
}

/// `‖I‖_{L_p}` at reference accuracy (cached).
pub fn norm_i_reference(p: f64) -> Result<f64> {
    green_kernel::norm_i(p, &constant_truncation(), &constant_quadrature())
}

/// Measured `L_p` error with its per-block decomposition.
#[derive(Debug, Clone)]
pub struct ErrorBreakdown {
    pub total_p_norm: f64,
    /// p-th-power contribution of every block, aligned with the block list.
    pub per_block_contrib: Vec<f64>,
    pub p: f64,
}

/// `‖f - s‖_{L_p(I²)}` by per-cell tensor Gauss–Legendre quadrature.
pub fn lp_error(
    f: &ScalarField,
    model: &SplineModel,
    p: f64,
    quad: &QuadratureSpec,
) -> Result<ErrorBreakdown> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidP(p));
    }
    let rule = quadrature::cached_rule(quad.nodes_per_cell_axis);
    let partition = model.partition();
    let per_block_contrib: Vec<f64> = partition
        .blocks
        .par_iter()
        .enumerate()
        .map(|(b, block)| {
            let offset = partition.block_offset(b);
            block
                .cells
                .iter()
                .enumerate()
                .map(|(c, cell)| {
                    let sol = &model.solutions()[offset + c];
                    let r = cell.rect;
                    quadrature::integrate_rect(&rule, r.x0, r.y0, r.w, r.h, |x, y| {
                        let defect = f.value(x, y)
                            - sol.eval(x, y).expect("quadrature node inside its cell");
                        defect.abs().powf(p)
                    })
                })
                .sum()
        })
        .collect();
    let total: f64 = per_block_contrib.iter().sum();
    Ok(ErrorBreakdown {
        total_p_norm: total.powf(1.0 / p),
        per_block_contrib,
        p,
    })
}

/// Closed-form local error `2|A+B| |Ω|^{1+1/p} ‖I‖_p` of interpolating
/// `Q = Ax₁² + Bx₂²` by its harmonic interpolant on a square cell.
pub fn lemma3_error(a: f64, b: f64, cell_area: f64, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidP(p));
    }
    assert!(cell_area > 0.0, "cell_area must be positive");
    if a + b == 0.0 {
        return Ok(0.0);
    }
    Ok(2.0 * (a + b).abs() * cell_area.powf(1.0 + 1.0 / p) * norm_i_reference(p)?)
}

/// `‖Δf‖_{L_q(I²)}` with `q = p/(p+1) ∈ [1/2, 1)`.
pub fn laplacian_quasinorm(f: &ScalarField, p: f64, quad: &QuadratureSpec) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidP(p));
    }
    let q = p / (p + 1.0);
    let integral = quadrature::integrate_unit_square(quad, |x, y| f.laplacian(x, y).abs().powf(q));
    Ok(integral.powf(1.0 / q))
}

/// The limiting constant `‖I‖_p · ‖Δf‖_{p/(p+1)}` that `N·error` approaches.
pub fn asymptotic_constant(f: &ScalarField, p: f64) -> Result<f64> {
    Ok(norm_i_reference(p)? * laplacian_quasinorm(f, p, &constant_quadrature())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::registry_get;
    use crate::partition::uniform_partition;
    use crate::spline::fit;

    #[test]
    fn harmonic_field_has_negligible_error() {
        let f = registry_get("harmonic").unwrap();
        let model = fit(
            &f,
            uniform_partition(16).unwrap(),
            &SeriesTruncation::new(64, 1e-12).unwrap(),
        )
        .unwrap();
        let err = lp_error(&f, &model, 2.0, &QuadratureSpec::default()).unwrap();
        assert!(err.total_p_norm < 1e-8, "error {}", err.total_p_norm);
    }

    #[test]
    fn quadratic_uniform_error_matches_the_closed_form() {
        // N equal cells of area 1/N: ‖f - s‖_p = 4‖I‖_p / N
        let f = registry_get("quadratic").unwrap();
        let n = 64;
        let model = fit(
            &f,
            uniform_partition(n).unwrap(),
            &SeriesTruncation::new(96, 1e-13).unwrap(),
        )
        .unwrap();
        for p in [1.0, 2.0] {
            let err = lp_error(&f, &model, p, &QuadratureSpec::default()).unwrap();
            let want = 4.0 * norm_i_reference(p).unwrap() / n as f64;
            let rel = (err.total_p_norm - want).abs() / want;
            assert!(rel < 1e-4, "p = {p}: rel {rel}");
        }
    }

    #[test]
    fn per_cell_power_error_identity_for_pure_quadratics() {
        // every cell contributes M^p |Ω|^{p+1} ‖I‖_p^p with M = |Δf|
        let f = registry_get("quadratic").unwrap();
        let n = 16usize;
        let model = fit(
            &f,
            uniform_partition(n).unwrap(),
            &SeriesTruncation::new(128, 0.0).unwrap(),
        )
        .unwrap();
        let area = 1.0 / n as f64;
        for p in [1.0, 2.0] {
            let err = lp_error(&f, &model, p, &QuadratureSpec::new(16, 16).unwrap()).unwrap();
            let per_cell = err.total_p_norm.powf(p) / n as f64;
            let want = 4.0f64.powf(p) * area.powf(p + 1.0) * norm_i_reference(p).unwrap().powf(p);
            let rel = (per_cell - want).abs() / want;
            assert!(rel < 1e-5, "p = {p}: rel {rel}");
        }
    }

    #[test]
    fn per_block_contributions_sum_to_the_total_power() {
        let f = registry_get("quartic").unwrap();
        let model = fit(
            &f,
            uniform_partition(25).unwrap(),
            &SeriesTruncation::new(32, 1e-12).unwrap(),
        )
        .unwrap();
        let err = lp_error(&f, &model, 2.0, &QuadratureSpec::default()).unwrap();
        let sum: f64 = err.per_block_contrib.iter().sum();
        let total_pow = err.total_p_norm.powf(err.p);
        assert!((sum - total_pow).abs() <= 1e-10 * sum.max(1e-300));
    }

    #[test]
    fn quadrature_self_convergence() {
        let f = registry_get("quartic").unwrap();
        let model = fit(
            &f,
            uniform_partition(16).unwrap(),
            &SeriesTruncation::new(48, 1e-12).unwrap(),
        )
        .unwrap();
        let coarse = lp_error(&f, &model, 2.0, &QuadratureSpec::new(8, 16).unwrap()).unwrap();
        let fine = lp_error(&f, &model, 2.0, &QuadratureSpec::new(16, 16).unwrap()).unwrap();
        let rel = (coarse.total_p_norm - fine.total_p_norm).abs() / fine.total_p_norm;
        assert!(rel < 1e-6, "rel {rel}");
    }

    #[test]
    fn lemma3_closed_form_values() {
        assert_eq!(lemma3_error(1.0, -1.0, 0.3, 2.0).unwrap(), 0.0);
        let unit = lemma3_error(1.0, 1.0, 1.0, 2.0).unwrap();
        assert!((unit - 4.0 * norm_i_reference(2.0).unwrap()).abs() < 1e-14);
        let quarter = lemma3_error(1.0, 1.0, 0.25, 1.0).unwrap();
        assert!((quarter - 4.0 * 0.0625 * norm_i_reference(1.0).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn quasinorm_of_constant_laplacians() {
        let quad = QuadratureSpec::default();
        let f = registry_get("quadratic").unwrap();
        for p in [1.0, 2.0, 5.0] {
            let got = laplacian_quasinorm(&f, p, &quad).unwrap();
            assert!((got - 4.0).abs() < 1e-12, "p = {p}: {got}");
        }
        let k = registry_get("klim").unwrap();
        assert!((laplacian_quasinorm(&k, 2.0, &quad).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quasinorm_of_quartic_matches_dense_midpoint_oracle() {
        let f = registry_get("quartic").unwrap();
        let got = laplacian_quasinorm(&f, 2.0, &QuadratureSpec::new(12, 32).unwrap()).unwrap();
        let q = 2.0 / 3.0;
        let m = 2001usize;
        let h = 1.0 / m as f64;
        let mut sum = 0.0;
        for j in 0..m {
            for i in 0..m {
                let x = (i as f64 + 0.5) * h;
                let y = (j as f64 + 0.5) * h;
                sum += (12.0 * (x * x + y * y)).powf(q) * h * h;
            }
        }
        let want = sum.powf(1.0 / q);
        assert!((got - want).abs() < 1e-5, "got {got}, want {want}");
    }

    #[test]
    fn asymptotic_constant_values() {
        let harmonic = registry_get("harmonic").unwrap();
        assert_eq!(asymptotic_constant(&harmonic, 2.0).unwrap(), 0.0);
        let quadratic = registry_get("quadratic").unwrap();
        let got = asymptotic_constant(&quadratic, 2.0).unwrap();
        assert!((got - 4.0 * norm_i_reference(2.0).unwrap()).abs() < 1e-10);
        let klim = registry_get("klim").unwrap();
        let got = asymptotic_constant(&klim, 1.0).unwrap();
        assert!((got - norm_i_reference(1.0).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn invalid_p_is_rejected() {
        let f = registry_get("quadratic").unwrap();
        let quad = QuadratureSpec::default();
        assert!(matches!(
            laplacian_quasinorm(&f, 0.9, &quad),
            Err(Error::InvalidP(_))
        ));
        assert!(lemma3_error(1.0, 1.0, 1.0, 0.5).is_err());
    }
}
