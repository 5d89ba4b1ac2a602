//! Shared test oracle: a 5-point finite-difference Dirichlet Poisson solver on
//! an axis-aligned square, diagonalized by discrete sine transforms. Solves
//! -Δu = b with zero boundary data; a discrete point source turns it into a
//! Green's-function oracle. Test-only; deliberately independent of the series
//! code under test.

#![allow(dead_code)]

use std::f64::consts::PI;

/// Solution on an (n+1)×(n+1) node grid over `[ox, ox+side] × [oy, oy+side]`.
pub struct PoissonGrid {
    n: usize,
    origin: (f64, f64),
    side: f64,
    /// interior node values, row-major, (n-1)×(n-1)
    interior: Vec<f64>,
}

impl PoissonGrid {
    pub fn h(&self) -> f64 {
        self.side / self.n as f64
    }

    /// Value at grid node (i, j), 0..=n each; boundary nodes are zero.
    pub fn node(&self, i: usize, j: usize) -> f64 {
        assert!(i <= self.n && j <= self.n);
        if i == 0 || j == 0 || i == self.n || j == self.n {
            0.0
        } else {
            self.interior[(j - 1) * (self.n - 1) + (i - 1)]
        }
    }

    /// Bilinear interpolation at a point of the closed square.
    pub fn value(&self, x: f64, y: f64) -> f64 {
        let fx = (x - self.origin.0) / self.h();
        let fy = (y - self.origin.1) / self.h();
        assert!(fx >= -1e-9 && fx <= self.n as f64 + 1e-9, "x out of domain");
        assert!(fy >= -1e-9 && fy <= self.n as f64 + 1e-9, "y out of domain");
        let i = (fx.floor() as usize).min(self.n - 1);
        let j = (fy.floor() as usize).min(self.n - 1);
        let (tx, ty) = (fx - i as f64, fy - j as f64);
        self.node(i, j) * (1.0 - tx) * (1.0 - ty)
            + self.node(i + 1, j) * tx * (1.0 - ty)
            + self.node(i, j + 1) * (1.0 - tx) * ty
            + self.node(i + 1, j + 1) * tx * ty
    }
}

/// `C = A·B` for dense row-major square matrices of order `m`.
fn matmul(a: &[f64], b: &[f64], m: usize) -> Vec<f64> {
    let mut c = vec![0.0; m * m];
    for i in 0..m {
        for k in 0..m {
            let aik = a[i * m + k];
            if aik == 0.0 {
                continue;
            }
            let brow = &b[k * m..(k + 1) * m];
            let crow = &mut c[i * m..(i + 1) * m];
            for j in 0..m {
                crow[j] += aik * brow[j];
            }
        }
    }
    c
}

/// Solves `-Δu = b`, `u = 0` on the boundary of the square, by sine-transform
/// diagonalization of the 5-point stencil.
pub fn solve_poisson(
    n: usize,
    origin: (f64, f64),
    side: f64,
    rhs: impl Fn(f64, f64) -> f64,
) -> PoissonGrid {
    assert!(n >= 2 && side > 0.0);
    let m = n - 1;
    let h = side / n as f64;
    let mut b = vec![0.0; m * m];
    for j in 1..n {
        for i in 1..n {
            let x = origin.0 + i as f64 * h;
            let y = origin.1 + j as f64 * h;
            b[(j - 1) * m + (i - 1)] = rhs(x, y);
        }
    }
    // sine matrix S[k][i] = sin((k+1)(i+1)π/n); S·S = (n/2)·Id
    let mut s = vec![0.0; m * m];
    for k in 0..m {
        for i in 0..m {
            s[k * m + i] = ((k + 1) as f64 * (i + 1) as f64 * PI / n as f64).sin();
        }
    }
    // spectrum of the 5-point -Δ: λ_k + λ_l with λ_k = 4 sin²(kπ/2n) / h²
    let lambda: Vec<f64> = (1..n)
        .map(|k| {
            let t = (k as f64 * PI / (2.0 * n as f64)).sin();
            4.0 * t * t / (h * h)
        })
        .collect();
    let mut hat = matmul(&s, &matmul(&b, &s, m), m);
    for l in 0..m {
        for k in 0..m {
            hat[l * m + k] /= lambda[k] + lambda[l];
        }
    }
    let mut u = matmul(&s, &matmul(&hat, &s, m), m);
    let scale = (2.0 / n as f64) * (2.0 / n as f64);
    for v in &mut u {
        *v *= scale;
    }
    PoissonGrid {
        n,
        origin,
        side,
        interior: u,
    }
}

/// Finite-difference Green's function of the square with the source snapped to
/// the nearest interior node (discrete delta of weight `1/h²` there).
pub fn fd_green(n: usize, origin: (f64, f64), side: f64, source: (f64, f64)) -> PoissonGrid {
    let h = side / n as f64;
    let si = ((source.0 - origin.0) / h).round() as usize;
    let sj = ((source.1 - origin.1) / h).round() as usize;
    assert!(
        si >= 1 && si < n && sj >= 1 && sj < n,
        "source must be interior"
    );
    assert!(
        (origin.0 + si as f64 * h - source.0).abs() < 1e-9 * side
            && (origin.1 + sj as f64 * h - source.1).abs() < 1e-9 * side,
        "source must lie on a grid node for an unambiguous oracle"
    );
    solve_poisson(n, origin, side, |x, y| {
        let on_node = ((x - source.0).abs() < 0.5 * h) && ((y - source.1).abs() < 0.5 * h);
        if on_node {
            1.0 / (h * h)
        } else {
            0.0
        }
    })
}
