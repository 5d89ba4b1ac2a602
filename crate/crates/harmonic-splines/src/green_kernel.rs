//! Green's function of the Dirichlet Laplacian on the unit square, the torsion
//! function `I(x) = ∫ G(x;v) dv`, and its `L_p` norms.
//!
//! The production series for `G` is the single sum over `x₁`-modes with a
//! sinh profile in `x₂`; the doubly-indexed eigenfunction series converges only
//! algebraically near the diagonal and is kept as a test oracle. The torsion
//! function uses the classical odd-mode series with a cosh profile. All sinh
//! and cosh ratios are evaluated through decaying exponentials so no mode
//! overflows.
//!
//! ```
//! use harmonic_splines::green_kernel::{norm_i, torsion_i, SeriesTruncation, UnitSquarePoint};
//! use harmonic_splines::quadrature::QuadratureSpec;
//!
//! let trunc = SeriesTruncation::new(128, 0.0)?;
//! let center = torsion_i(UnitSquarePoint::new(0.5, 0.5)?, &trunc)?;
//! assert!((center - 0.07367).abs() < 5e-5);
//!
//! let norm_1 = norm_i(1.0, &trunc, &QuadratureSpec::default())?;
//! assert!((norm_1 - 0.03514).abs() < 5e-5);
//! # Ok::<(), harmonic_splines::Error>(())
//! ```

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::Mutex;

use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::quadrature::{self, QuadratureSpec};

/// Truncation parameters for the spectral series used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTruncation {
    max_mode: usize,
    tail_tol: f64,
}

impl SeriesTruncation {
    pub fn new(max_mode: usize, tail_tol: f64) -> Result<Self> {
        if max_mode < 1 {
            return Err(Error::InvalidTruncation("max_mode must be >= 1".into()));
        }
        if tail_tol.is_nan() || tail_tol < 0.0 {
            return Err(Error::InvalidTruncation(format!(
                "tail_tol must be >= 0, got {tail_tol}"
            )));
        }
        Ok(SeriesTruncation { max_mode, tail_tol })
    }

    pub fn max_mode(&self) -> usize {
        self.max_mode
    }

    pub fn tail_tol(&self) -> f64 {
        self.tail_tol
    }
}

impl Default for SeriesTruncation {
    fn default() -> Self {
        SeriesTruncation {
            max_mode: 64,
            tail_tol: 1e-10,
        }
    }
}

/// A point of the closed unit square.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSquarePoint {
    x1: f64,
    x2: f64,
}

impl UnitSquarePoint {
    pub fn new(x1: f64, x2: f64) -> Result<Self> {
        let eps = 1e-12;
        if !(x1 >= -eps && x1 <= 1.0 + eps && x2 >= -eps && x2 <= 1.0 + eps) {
            return Err(Error::OutOfDomain(x1, x2));
        }
        Ok(UnitSquarePoint {
            x1: x1.clamp(0.0, 1.0),
            x2: x2.clamp(0.0, 1.0),
        })
    }

    pub fn x1(&self) -> f64 {
        self.x1
    }

    pub fn x2(&self) -> f64 {
        self.x2
    }
}

/// Sine recurrence: yields `sin(kθ)` for k = 1, 2, ...
struct SinSeq {
    prev: f64,
    cur: f64,
    two_cos: f64,
}

impl SinSeq {
    fn new(theta: f64) -> Self {
        SinSeq {
            prev: 0.0,
            cur: theta.sin(),
            two_cos: 2.0 * theta.cos(),
        }
    }

    #[inline]
    fn next(&mut self) -> f64 {
        let out = self.cur;
        let nxt = self.two_cos * self.cur - self.prev;
        self.prev = self.cur;
        self.cur = nxt;
        out
    }
}

/// `G_{I²}(x; v)` for an interior `x` and a `v` in the closed square.
///
/// Mode `k` contributes `2 sin(kπx₁) sin(kπv₁) sinh(kπy₍) sinh(kπ(1-y₎)) /
/// (kπ sinh(kπ))` with `y₍ ≤ y₎` the ordered second coordinates; the form is
/// symmetric in `(x, v)` by construction and vanishes for boundary `v`.
pub fn green_unit_square(
    x: UnitSquarePoint,
    v: UnitSquarePoint,
    trunc: &SeriesTruncation,
) -> Result<f64> {
    if !(x.x1 > 0.0 && x.x1 < 1.0 && x.x2 > 0.0 && x.x2 < 1.0) {
        return Err(Error::OutOfDomain(x.x1, x.x2));
    }
    let dx = x.x1 - v.x1;
    let dy = x.x2 - v.x2;
    if (dx * dx + dy * dy).sqrt() < 1e-6 {
        return Err(Error::CoincidentPoints);
    }
    let (y_lo, y_hi) = if x.x2 <= v.x2 {
        (x.x2, v.x2)
    } else {
        (v.x2, x.x2)
    };
    let delta = y_hi - y_lo;
    let q_delta = (-PI * delta).exp();
    let q_lo = (-2.0 * PI * y_lo).exp();
    let q_hi = (-2.0 * PI * (1.0 - y_hi)).exp();
    let q_full = (-2.0 * PI).exp();

    let mut sin_x = SinSeq::new(PI * x.x1);
    let mut sin_v = SinSeq::new(PI * v.x1);
    let mut pd = q_delta;
    let mut plo = q_lo;
    let mut phi = q_hi;
    let mut pf = q_full;

    let mut sum = 0.0;
    for k in 1..=trunc.max_mode {
        let kf = k as f64;
        let profile = pd * (1.0 - plo) * (1.0 - phi) / (1.0 - pf);
        sum += sin_x.next() * sin_v.next() * profile / (kf * PI);
        if delta > 0.0 {
            // geometric tail bound on the remaining modes
            let tail = pd * q_delta / ((kf + 1.0) * PI * (1.0 - q_delta));
            if tail < trunc.tail_tol {
                break;
            }
        }
        pd *= q_delta;
        plo *= q_lo;
        phi *= q_hi;
        pf *= q_full;
    }
    Ok(sum)
}

/// The torsion function `I(x)`: solution of `ΔI = -1` with zero boundary data.
///
/// Odd-mode series `Σ 4 sin(kπx₁) / (k³π³) · [1 - cosh(kπ(x₂-½))/cosh(kπ/2)]`.
pub fn torsion_i(x: UnitSquarePoint, trunc: &SeriesTruncation) -> Result<f64> {
    let mut sum = 0.0;
    let mut k = 1usize;
    while k <= trunc.max_mode {
        let kf = k as f64;
        let a = kf * PI;
        let coeff = 4.0 / (a * a * a);
        if coeff < trunc.tail_tol {
            break;
        }
        let ratio = ((-a * x.x2).exp() + (-a * (1.0 - x.x2)).exp()) / (1.0 + (-a).exp());
        sum += coeff * (a * x.x1).sin() * (1.0 - ratio);
        k += 2;
    }
    Ok(sum)
}

/// Cache key: (bit pattern of p, max mode, quadrature order, subdivisions).
type NormKey = (u64, usize, usize, usize);

static NORM_CACHE: Lazy<Mutex<HashMap<NormKey, f64>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// `‖I‖_{L_p(I²)}` by composite Gauss–Legendre quadrature of `I^p`.
///
/// Values are cached per `(p, truncation, quadrature)` since the constant is
/// reused by every report row.
pub fn norm_i(p: f64, trunc: &SeriesTruncation, quad: &QuadratureSpec) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidP(p));
    }
    let key = (
        p.to_bits(),
        trunc.max_mode,
        quad.nodes_per_cell_axis,
        quad.global_lattice,
    );
    if let Some(&v) = NORM_CACHE.lock().unwrap().get(&key) {
        return Ok(v);
    }
    let integral = quadrature::integrate_unit_square(quad, |x, y| {
        let pt = UnitSquarePoint::new(x, y).expect("quadrature node inside the square");
        torsion_i(pt, trunc)
            .expect("torsion series is total on the closed square")
            .powf(p)
    });
    let value = integral.powf(1.0 / p);
    NORM_CACHE.lock().unwrap().insert(key, value);
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> UnitSquarePoint {
        UnitSquarePoint::new(x, y).unwrap()
    }

    /// Double eigenfunction series for `I`, the oracle for the production path.
    fn torsion_double_series(x: f64, y: f64, modes: usize) -> f64 {
        let mut sum = 0.0;
        let mut m = 1usize;
        while m <= modes {
            let mut n = 1usize;
            while n <= modes {
                let (mf, nf) = (m as f64, n as f64);
                sum += 16.0 * (mf * PI * x).sin() * (nf * PI * y).sin()
                    / (mf * nf * PI.powi(4) * (mf * mf + nf * nf));
                n += 2;
            }
            m += 2;
        }
        sum
    }

    /// Closed double series for `∫ I = ‖I‖₁`.
    fn torsion_integral_series(modes: usize) -> f64 {
        let mut sum = 0.0;
        let mut m = 1usize;
        while m <= modes {
            let mut n = 1usize;
            while n <= modes {
                let (mf, nf) = (m as f64, n as f64);
                sum += 64.0 / (mf * mf * nf * nf * PI.powi(6) * (mf * mf + nf * nf));
                n += 2;
            }
            m += 2;
        }
        sum
    }

    #[test]
    fn green_vanishes_for_boundary_source() {
        let trunc = SeriesTruncation::default();
        let g = green_unit_square(pt(0.5, 0.5), pt(0.5, 1.0), &trunc).unwrap();
        assert_eq!(g, 0.0);
        let g = green_unit_square(pt(0.5, 0.5), pt(0.0, 0.3), &trunc).unwrap();
        assert_eq!(g, 0.0);
    }

    #[test]
    fn green_is_symmetric_under_argument_swap() {
        let trunc = SeriesTruncation::default();
        let a = green_unit_square(pt(0.25, 0.5), pt(0.75, 0.5), &trunc).unwrap();
        let b = green_unit_square(pt(0.75, 0.5), pt(0.25, 0.5), &trunc).unwrap();
        assert!((a - b).abs() <= 2.0 * trunc.tail_tol());
    }

    #[test]
    fn green_rejects_coincident_points() {
        let trunc = SeriesTruncation::default();
        let err = green_unit_square(pt(0.5, 0.5), pt(0.5, 0.5), &trunc);
        assert!(matches!(err, Err(Error::CoincidentPoints)));
    }

    #[test]
    fn green_rejects_exterior_evaluation_point() {
        assert!(UnitSquarePoint::new(1.5, 0.5).is_err());
        let trunc = SeriesTruncation::default();
        // boundary x is not strictly interior
        let err = green_unit_square(pt(0.0, 0.5), pt(0.5, 0.5), &trunc);
        assert!(matches!(err, Err(Error::OutOfDomain(_, _))));
    }

    #[test]
    fn green_nonnegative_on_interior_lattice() {
        let trunc = SeriesTruncation::default();
        for i in 1..5 {
            for j in 1..5 {
                for k in 1..5 {
                    for l in 1..5 {
                        let x = pt(i as f64 / 5.0, j as f64 / 5.0);
                        let v = pt(k as f64 / 5.0 + 0.013, l as f64 / 5.0 + 0.007);
                        let g = green_unit_square(x, v, &trunc).unwrap();
                        assert!(g >= -trunc.tail_tol(), "G = {g} at {x:?}, {v:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn green_matches_eigenfunction_series_away_from_diagonal() {
        let trunc = SeriesTruncation::new(128, 1e-14).unwrap();
        let g = green_unit_square(pt(0.3, 0.3), pt(0.7, 0.7), &trunc).unwrap();
        let mut oracle = 0.0;
        for m in 1..=400usize {
            for n in 1..=400usize {
                let (mf, nf) = (m as f64, n as f64);
                oracle += 4.0
                    * (mf * PI * 0.3).sin()
                    * (nf * PI * 0.3).sin()
                    * (mf * PI * 0.7).sin()
                    * (nf * PI * 0.7).sin()
                    / (PI * PI * (mf * mf + nf * nf));
            }
        }
        assert!((g - oracle).abs() < 5e-4, "g = {g}, oracle = {oracle}");
    }

    #[test]
    fn torsion_vanishes_on_the_boundary() {
        let trunc = SeriesTruncation::default();
        assert_eq!(torsion_i(pt(0.0, 0.37), &trunc).unwrap(), 0.0);
        let top = torsion_i(pt(0.4, 1.0), &trunc).unwrap();
        assert!(top.abs() < 1e-12);
    }

    #[test]
    fn torsion_center_value_matches_double_series_oracle() {
        let trunc = SeriesTruncation::new(256, 0.0).unwrap();
        let got = torsion_i(pt(0.5, 0.5), &trunc).unwrap();
        let want = torsion_double_series(0.5, 0.5, 801);
        assert!((got - want).abs() < 1e-5, "got {got}, want {want}");
        assert!((got - 0.07367).abs() < 5e-5, "got {got}");
    }

    #[test]
    fn torsion_respects_square_symmetries() {
        let trunc = SeriesTruncation::default();
        let a = torsion_i(pt(0.3, 0.2), &trunc).unwrap();
        let b = torsion_i(pt(0.7, 0.2), &trunc).unwrap();
        let c = torsion_i(pt(0.3, 0.8), &trunc).unwrap();
        assert!((a - b).abs() < 1e-12);
        assert!((a - c).abs() < 1e-12);
    }

    #[test]
    fn norm_one_matches_closed_series() {
        let trunc = SeriesTruncation::new(256, 0.0).unwrap();
        let quad = QuadratureSpec::default();
        let got = norm_i(1.0, &trunc, &quad).unwrap();
        let want = torsion_integral_series(2001);
        assert!((got - want).abs() < 1e-6, "got {got}, want {want}");
        assert!((got - 0.03514).abs() < 5e-5, "got {got}");
    }

    #[test]
    fn norm_two_is_stable_under_mode_doubling() {
        let quad = QuadratureSpec::default();
        let a = norm_i(2.0, &SeriesTruncation::new(100, 0.0).unwrap(), &quad).unwrap();
        let b = norm_i(2.0, &SeriesTruncation::new(200, 0.0).unwrap(), &quad).unwrap();
        assert!((a - b).abs() < 1e-6, "a = {a}, b = {b}");
    }

    #[test]
    fn norms_bounded_by_center_value() {
        let trunc = SeriesTruncation::default();
        let quad = QuadratureSpec::default();
        let sup = torsion_i(pt(0.5, 0.5), &trunc).unwrap();
        for p in [1.0, 1.5, 2.0, 4.0] {
            let n = norm_i(p, &trunc, &quad).unwrap();
            assert!(n <= sup + 1e-9, "p = {p}: {n} > {sup}");
            assert!(n > 0.0);
        }
    }

    #[test]
    fn norm_rejects_small_p() {
        let trunc = SeriesTruncation::default();
        let quad = QuadratureSpec::default();
        assert!(matches!(
            norm_i(0.5, &trunc, &quad),
            Err(Error::InvalidP(_))
        ));
    }
}
