//! Registry of analytic test fields with exact derivatives, plus ingestion of
//! gridded scalar data.
//!
//! Every consumer of the crate works against [`ScalarField`]: a value closure,
//! an exact Laplacian closure, and the three second partials. Registry entries
//! carry analytic derivatives; gridded data falls back to bicubic patches with
//! stencil-based derivatives.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};

type ValueFn = dyn Fn(f64, f64) -> f64 + Send + Sync;
type SecondFn = dyn Fn(f64, f64) -> (f64, f64, f64) + Send + Sync;

/// A bivariate `C²` field on the closed unit square.
#[derive(Clone)]
pub struct ScalarField {
    name: String,
    known_asymptotic_constant: bool,
    value: Arc<ValueFn>,
    laplacian: Arc<ValueFn>,
    second: Arc<SecondFn>,
}

impl std::fmt::Debug for ScalarField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ScalarField")
            .field("name", &self.name)
            .finish()
    }
}

impl ScalarField {
    pub fn from_closures(
        name: impl Into<String>,
        known_asymptotic_constant: bool,
        value: Arc<ValueFn>,
        laplacian: Arc<ValueFn>,
        second: Arc<SecondFn>,
    ) -> Self {
        ScalarField {
            name: name.into(),
            known_asymptotic_constant,
            value,
            laplacian,
            second,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// True when the limiting constant of this field is known in closed form.
    pub fn known_asymptotic_constant(&self) -> bool {
        self.known_asymptotic_constant
    }

    #[inline]
    pub fn value(&self, x: f64, y: f64) -> f64 {
        (self.value)(x, y)
    }

    #[inline]
    pub fn laplacian(&self, x: f64, y: f64) -> f64 {
        (self.laplacian)(x, y)
    }

    /// `(f_xx, f_yy, f_xy)` at the point.
    #[inline]
    pub fn second_partials(&self, x: f64, y: f64) -> (f64, f64, f64) {
        (self.second)(x, y)
    }
}

/// Number of retained modes of the `klim` boundary-layer series.
///
/// The coefficients decay like `1/(2k+1)³`, so 200 modes leave a tail below
/// 1e-8 away from the horizontal boundary.
const KLIM_MODES: usize = 200;

/// The boundary-layer part of the `klim` field and the quantities derived from
/// it. Writing `f = x(1-x)/2 - Σ c_k r_k(y) sin(α_k x)` keeps the square-wave
/// part of `f_xx` exact and leaves only geometrically decaying mode sums.
fn klim_parts(x: f64, y: f64) -> (f64, f64, f64) {
    // returns (series value, Σ r_k sin / (2k+1), Σ ĉ_k cos / (2k+1))
    let ey = (-PI * y).exp();
    let e1y = (-PI * (1.0 - y)).exp();
    let (ey2, e1y2) = (ey * ey, e1y * e1y);

    // sin(α_k x), cos(α_k x) for α_k = (2k+1)π via angle addition with step 2πx
    let theta = PI * x;
    let (mut s, mut c) = theta.sin_cos();
    let (step_s, step_c) = (2.0 * theta).sin_cos();

    // e^{-α_k y} = ey * ey2^k, and likewise for (1 - y)
    let mut py = ey;
    let mut p1y = e1y;
    let mut pfull = (-PI).exp();
    let pfull_step = (-2.0 * PI).exp();

    let mut val = 0.0;
    let mut rsum = 0.0;
    let mut csum = 0.0;
    for k in 0..KLIM_MODES {
        let odd = (2 * k + 1) as f64;
        let denom = 1.0 - pfull * pfull;
        // r_k = [sinh(α y) + sinh(α(1-y))]/sinh(α)
        let r = (p1y * (1.0 - py * py) + py * (1.0 - p1y * p1y)) / denom;
        // ĉ_k = [cosh(α y) - cosh(α(1-y))]/sinh(α)
        let ch = (p1y * (1.0 + py * py) - py * (1.0 + p1y * p1y)) / denom;
        let c_k = 1.0 / (odd * odd * odd * PI * PI);
        val += c_k * r * s;
        rsum += r * s / odd;
        csum += ch * c / odd;

        let ns = step_c * s + step_s * c;
        let nc = step_c * c - step_s * s;
        s = ns;
        c = nc;
        py *= ey2;
        p1y *= e1y2;
        pfull *= pfull_step;
    }
    (val, rsum, csum)
}

/// Fetches a registry field by name.
///
/// Registered fields: `quadratic` (x²+y², Δf = 4), `harmonic` (x²−y², Δf = 0),
/// `klim` (the series with Δf = −1 and unbounded mixed derivative at the
/// origin), `quartic` (x⁴+y⁴), and `bump` (a Gaussian with sign-changing Δf).
pub fn registry_get(name: &str) -> Result<ScalarField> {
    match name {
        "quadratic" => Ok(ScalarField::from_closures(
            "quadratic",
            true,
            Arc::new(|x, y| x * x + y * y),
            Arc::new(|_, _| 4.0),
            Arc::new(|_, _| (2.0, 2.0, 0.0)),
        )),
        "harmonic" => Ok(ScalarField::from_closures(
            "harmonic",
            true,
            Arc::new(|x, y| x * x - y * y),
            Arc::new(|_, _| 0.0),
            Arc::new(|_, _| (2.0, -2.0, 0.0)),
        )),
        "quartic" => Ok(ScalarField::from_closures(
            "quartic",
            false,
            Arc::new(|x, y| x.powi(4) + y.powi(4)),
            Arc::new(|x, y| 12.0 * (x * x + y * y)),
            Arc::new(|x, y| (12.0 * x * x, 12.0 * y * y, 0.0)),
        )),
        "bump" => Ok(ScalarField::from_closures(
            "bump",
            false,
            Arc::new(|x, y| {
                let (u, v) = (x - 0.5, y - 0.5);
                (-8.0 * (u * u + v * v)).exp()
            }),
            Arc::new(|x, y| {
                let (u, v) = (x - 0.5, y - 0.5);
                let e = (-8.0 * (u * u + v * v)).exp();
                e * (256.0 * (u * u + v * v) - 32.0)
            }),
            Arc::new(|x, y| {
                let (u, v) = (x - 0.5, y - 0.5);
                let e = (-8.0 * (u * u + v * v)).exp();
                (
                    e * (256.0 * u * u - 16.0),
                    e * (256.0 * v * v - 16.0),
                    e * 256.0 * u * v,
                )
            }),
        )),
        "klim" => Ok(ScalarField::from_closures(
            "klim",
            true,
            Arc::new(|x, y| {
                let (series, _, _) = klim_parts(x, y);
                0.5 * x * (1.0 - x) - (4.0 / PI) * series
            }),
            Arc::new(|_, _| -1.0),
            Arc::new(|x, y| {
                let (_, rsum, csum) = klim_parts(x, y);
                let fxx = -1.0 + (4.0 / PI) * rsum;
                let fyy = -(4.0 / PI) * rsum;
                let fxy = -(4.0 / PI) * csum;
                (fxx, fyy, fxy)
            }),
        )),
        other => Err(Error::UnknownField(other.to_string())),
    }
}

/// Lattice sampler behind [`modulus_estimate`]; build once, query many deltas.
///
/// Holds the three second partials on a 101×101 lattice and maximizes
/// `|g(x) - g(x')|` over axis-aligned and diagonal displacements up to the
/// requested step. The estimate is a lower bound of the true modulus and is
/// nondecreasing in delta by construction.
pub struct ModulusSampler {
    n: usize,
    grids: [Vec<f64>; 3],
}

impl ModulusSampler {
    pub fn new(f: &ScalarField) -> Self {
        let n = 101;
        let mut gxx = vec![0.0; n * n];
        let mut gyy = vec![0.0; n * n];
        let mut gxy = vec![0.0; n * n];
        for j in 0..n {
            for i in 0..n {
                let (x, y) = (i as f64 / (n - 1) as f64, j as f64 / (n - 1) as f64);
                let (a, b, c) = f.second_partials(x, y);
                gxx[j * n + i] = a;
                gyy[j * n + i] = b;
                gxy[j * n + i] = c;
            }
        }
        ModulusSampler {
            n,
            grids: [gxx, gyy, gxy],
        }
    }

    pub fn estimate(&self, delta: f64) -> Result<f64> {
        if !(delta > 0.0 && delta <= 1.0) {
            return Err(Error::InvalidDelta(delta));
        }
        let n = self.n;
        let steps = ((delta * (n - 1) as f64) + 1e-9).floor() as usize;
        let steps = steps.min(n - 1);
        let mut best: f64 = 0.0;
        for g in &self.grids {
            for s in 1..=steps {
                for j in 0..n {
                    for i in 0..n {
                        let here = g[j * n + i];
                        if i + s < n {
                            best = best.max((g[j * n + i + s] - here).abs());
                        }
                        if j + s < n {
                            best = best.max((g[(j + s) * n + i] - here).abs());
                        }
                        if i + s < n && j + s < n {
                            best = best.max((g[(j + s) * n + i + s] - here).abs());
                        }
                        if i + s < n && j >= s {
                            best = best.max((g[(j - s) * n + i + s] - here).abs());
                        }
                    }
                }
            }
        }
        Ok(best)
    }
}

/// Sampled estimate of `ω(δ) = max{ω(f_xx,δ), ω(f_yy,δ), ω(f_xy,δ)}`.
pub fn modulus_estimate(f: &ScalarField, delta: f64) -> Result<f64> {
    ModulusSampler::new(f).estimate(delta)
}

/// An `n×n` uniform sample of a field on the closed unit square, interpolated
/// with Catmull–Rom bicubic patches.
#[derive(Debug, Clone)]
pub struct GriddedField {
    n: usize,
    values: Vec<f64>,
}

fn catmull_weights(u: f64) -> [f64; 4] {
    let u2 = u * u;
    let u3 = u2 * u;
    [
        0.5 * (-u3 + 2.0 * u2 - u),
        0.5 * (3.0 * u3 - 5.0 * u2 + 2.0),
        0.5 * (-3.0 * u3 + 4.0 * u2 + u),
        0.5 * (u3 - u2),
    ]
}

fn catmull_weights_d1(u: f64) -> [f64; 4] {
    let u2 = u * u;
    [
        0.5 * (-3.0 * u2 + 4.0 * u - 1.0),
        0.5 * (9.0 * u2 - 10.0 * u),
        0.5 * (-9.0 * u2 + 8.0 * u + 1.0),
        0.5 * (3.0 * u2 - 2.0 * u),
    ]
}

fn catmull_weights_d2(u: f64) -> [f64; 4] {
    [
        0.5 * (-6.0 * u + 4.0),
        0.5 * (18.0 * u - 10.0),
        0.5 * (-18.0 * u + 8.0),
        0.5 * (6.0 * u - 2.0),
    ]
}

impl GriddedField {
    pub fn new(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if n < 5 {
            return Err(Error::InvalidGrid(format!(
                "need at least 5x5 samples, got {n} rows"
            )));
        }
        let mut values = Vec::with_capacity(n * n);
        for (j, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGrid(format!(
                    "row {j} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &v in row {
                if !v.is_finite() {
                    return Err(Error::InvalidGrid(format!("non-finite value in row {j}")));
                }
                values.push(v);
            }
        }
        Ok(GriddedField { n, values })
    }

    /// Sample with quadratic ghost extrapolation outside the grid.
    fn sample(&self, i: isize, j: isize) -> f64 {
        let n = self.n as isize;
        let get = |i: isize, j: isize| self.values[(j * n + i) as usize];
        let reflect = |t: isize| -> (isize, bool) {
            if t < 0 {
                (0, true)
            } else if t >= n {
                (n - 1, true)
            } else {
                (t, false)
            }
        };
        let (ci, ei) = reflect(i);
        let (cj, ej) = reflect(j);
        if !ei && !ej {
            return get(ci, cj);
        }
        // one-axis quadratic extrapolation, applied per overrun axis
        let extrap_i = |i: isize, j: isize| -> f64 {
            if i < 0 {
                3.0 * get(0, j) - 3.0 * get(1, j) + get(2, j)
            } else if i >= n {
                3.0 * get(n - 1, j) - 3.0 * get(n - 2, j) + get(n - 3, j)
            } else {
                get(i, j)
            }
        };
        if !ej {
            extrap_i(i, cj)
        } else if j < 0 {
            3.0 * extrap_i(i, 0) - 3.0 * extrap_i(i, 1) + extrap_i(i, 2)
        } else {
            3.0 * extrap_i(i, n - 1) - 3.0 * extrap_i(i, n - 2) + extrap_i(i, n - 3)
        }
    }

    fn patch(&self, x: f64, y: f64) -> (isize, isize, f64, f64) {
        let h = 1.0 / (self.n - 1) as f64;
        let fx = (x / h).floor().clamp(0.0, (self.n - 2) as f64);
        let fy = (y / h).floor().clamp(0.0, (self.n - 2) as f64);
        (fx as isize, fy as isize, x / h - fx, y / h - fy)
    }

    fn tensor(&self, x: f64, y: f64, wx: fn(f64) -> [f64; 4], wy: fn(f64) -> [f64; 4]) -> f64 {
        let (i0, j0, u, v) = self.patch(x, y);
        let wu = wx(u);
        let wv = wy(v);
        let mut sum = 0.0;
        for (dj, &wj) in wv.iter().enumerate() {
            let mut row = 0.0;
            for (di, &wi) in wu.iter().enumerate() {
                row += wi * self.sample(i0 + di as isize - 1, j0 + dj as isize - 1);
            }
            sum += wj * row;
        }
        sum
    }

    pub fn value(&self, x: f64, y: f64) -> f64 {
        self.tensor(x, y, catmull_weights, catmull_weights)
    }

    pub fn second_partials(&self, x: f64, y: f64) -> (f64, f64, f64) {
        let h = 1.0 / (self.n - 1) as f64;
        let fxx = self.tensor(x, y, catmull_weights_d2, catmull_weights) / (h * h);
        let fyy = self.tensor(x, y, catmull_weights, catmull_weights_d2) / (h * h);
        let fxy = self.tensor(x, y, catmull_weights_d1, catmull_weights_d1) / (h * h);
        (fxx, fyy, fxy)
    }
}

/// Wraps an `n×n` row-major sample grid as a [`ScalarField`].
pub fn load_grid(rows: &[Vec<f64>]) -> Result<ScalarField> {
    let grid = Arc::new(GriddedField::new(rows)?);
    let g1 = grid.clone();
    let g2 = grid.clone();
    let g3 = grid;
    Ok(ScalarField::from_closures(
        "grid",
        false,
        Arc::new(move |x, y| g1.value(x, y)),
        Arc::new(move |x, y| {
            let (fxx, fyy, _) = g2.second_partials(x, y);
            fxx + fyy
        }),
        Arc::new(move |x, y| g3.second_partials(x, y)),
    ))
}

/// Parses the plain-text grid format: optional `# n=<int>` header, then `n`
/// rows of `n` reals separated by whitespace or commas.
pub fn parse_grid(text: &str) -> Result<Vec<Vec<f64>>> {
    let mut declared: Option<usize> = None;
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(nstr) = rest.strip_prefix("n=") {
                declared = Some(nstr.trim().parse().map_err(|_| {
                    Error::InvalidGrid(format!("bad size header on line {}", lineno + 1))
                })?);
            }
            continue;
        }
        let row: Vec<f64> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<f64>().map_err(|_| {
                    Error::InvalidGrid(format!("bad number `{t}` on line {}", lineno + 1))
                })
            })
            .collect::<Result<_>>()?;
        rows.push(row);
    }
    if let Some(n) = declared {
        if rows.len() != n {
            return Err(Error::InvalidGrid(format!(
                "header declares n={n} but found {} rows",
                rows.len()
            )));
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fd_laplacian(f: &ScalarField, x: f64, y: f64, h: f64) -> f64 {
        (f.value(x + h, y) + f.value(x - h, y) + f.value(x, y + h) + f.value(x, y - h)
            - 4.0 * f.value(x, y))
            / (h * h)
    }

    #[test]
    fn quadratic_has_constant_laplacian() {
        let f = registry_get("quadratic").unwrap();
        assert_eq!(f.laplacian(0.3, 0.9), 4.0);
        let (fxx, fyy, fxy) = f.second_partials(0.1, 0.2);
        assert_eq!((fxx, fyy, fxy), (2.0, 2.0, 0.0));
    }

    #[test]
    fn harmonic_laplacian_is_zero() {
        let f = registry_get("harmonic").unwrap();
        assert_eq!(f.laplacian(0.42, 0.17), 0.0);
    }

    #[test]
    fn unknown_name_errors() {
        assert!(matches!(registry_get("nope"), Err(Error::UnknownField(_))));
    }

    #[test]
    fn klim_fd_laplacian_is_minus_one_in_the_interior() {
        let f = registry_get("klim").unwrap();
        let h = 1e-4;
        for &(x, y) in &[
            (0.5, 0.5),
            (0.3, 0.4),
            (0.7, 0.25),
            (0.2, 0.8),
            (0.55, 0.33),
        ] {
            let lap = fd_laplacian(&f, x, y, h);
            assert!((lap + 1.0).abs() < 1e-6, "Δf = {lap} at ({x}, {y})");
        }
    }

    #[test]
    fn klim_second_partials_sum_to_laplacian() {
        let f = registry_get("klim").unwrap();
        for &(x, y) in &[(0.5, 0.5), (0.2, 0.7), (0.9, 0.1)] {
            let (fxx, fyy, _) = f.second_partials(x, y);
            assert!((fxx + fyy + 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn registry_fd_laplacian_matches_exact() {
        let mut rng_state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            rng_state ^= rng_state << 13;
            rng_state ^= rng_state >> 7;
            rng_state ^= rng_state << 17;
            (rng_state >> 11) as f64 / (1u64 << 53) as f64
        };
        for name in ["quadratic", "harmonic", "quartic", "bump", "klim"] {
            let f = registry_get(name).unwrap();
            for _ in 0..100 {
                let x = 0.2 + 0.6 * next();
                let y = 0.2 + 0.6 * next();
                let lap = fd_laplacian(&f, x, y, 1e-4);
                assert!(
                    (lap - f.laplacian(x, y)).abs() < 1e-5,
                    "{name} at ({x}, {y}): fd {lap} vs exact {}",
                    f.laplacian(x, y)
                );
            }
        }
    }

    #[test]
    fn modulus_is_zero_for_constant_second_derivatives() {
        let f = registry_get("quadratic").unwrap();
        assert_eq!(modulus_estimate(&f, 0.3).unwrap(), 0.0);
    }

    #[test]
    fn modulus_of_quartic_sees_the_witness_pair() {
        let f = registry_get("quartic").unwrap();
        let est = modulus_estimate(&f, 0.1).unwrap();
        // f_xx = 12x²: |12·1² − 12·0.9²| = 2.28 on the x-axis
        assert!(est >= 2.28 - 1e-9, "estimate {est}");
    }

    #[test]
    fn modulus_is_monotone_in_delta() {
        for name in ["quadratic", "harmonic", "quartic", "bump", "klim"] {
            let f = registry_get(name).unwrap();
            let sampler = ModulusSampler::new(&f);
            let small = sampler.estimate(0.05).unwrap();
            let large = sampler.estimate(0.1).unwrap();
            assert!(small <= large + 1e-12, "{name}: {small} > {large}");
        }
    }

    #[test]
    fn modulus_rejects_bad_delta() {
        let f = registry_get("quadratic").unwrap();
        assert!(matches!(
            modulus_estimate(&f, 0.0),
            Err(Error::InvalidDelta(_))
        ));
    }

    #[test]
    fn grid_from_quadratic_recovers_laplacian() {
        let n = 33;
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|j| {
                (0..n)
                    .map(|i| {
                        let (x, y) = (i as f64 / (n - 1) as f64, j as f64 / (n - 1) as f64);
                        x * x + y * y
                    })
                    .collect()
            })
            .collect();
        let f = load_grid(&rows).unwrap();
        assert!((f.laplacian(0.5, 0.5) - 4.0).abs() < 1e-6);
        assert!((f.value(0.5, 0.5) - 0.5).abs() < 1e-9);
    }

    #[test]
    fn constant_grid_has_zero_laplacian() {
        let rows = vec![vec![7.25; 9]; 9];
        let f = load_grid(&rows).unwrap();
        assert!(f.laplacian(0.37, 0.61).abs() < 1e-9);
        assert!((f.value(0.123, 0.456) - 7.25).abs() < 1e-12);
    }

    #[test]
    fn grid_reproduces_samples_at_nodes() {
        let n = 9;
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|j| (0..n).map(|i| ((i * 7 + j * 3) % 11) as f64).collect())
            .collect();
        let f = load_grid(&rows).unwrap();
        for (j, row) in rows.iter().enumerate() {
            for (i, &sample) in row.iter().enumerate() {
                let (x, y) = (i as f64 / (n - 1) as f64, j as f64 / (n - 1) as f64);
                assert!((f.value(x, y) - sample).abs() < 1e-10, "node ({i}, {j})");
            }
        }
    }

    #[test]
    fn grid_rejects_bad_input() {
        assert!(load_grid(&vec![vec![0.0; 3]; 3]).is_err());
        let mut rows = vec![vec![0.0; 6]; 6];
        rows[2] = vec![0.0; 5];
        assert!(load_grid(&rows).is_err());
        let mut rows = vec![vec![0.0; 6]; 6];
        rows[1][1] = f64::NAN;
        assert!(load_grid(&rows).is_err());
    }

    #[test]
    fn parses_text_grid_with_header() {
        let text = "# n=5\n0 1 2 3 4\n1 2 3 4 5\n2 3 4 5 6\n3 4 5 6 7\n4 5 6 7 8\n";
        let rows = parse_grid(text).unwrap();
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[4][4], 8.0);
        let csv = "0,1,2,3,4\n1,2,3,4,5\n2,3,4,5,6\n3,4,5,6,7\n4,5,6,7,8\n";
        assert_eq!(parse_grid(csv).unwrap(), rows);
    }
}
