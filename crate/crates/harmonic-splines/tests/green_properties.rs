//! Green's-function and torsion-function checks against an independent
//! finite-difference Poisson oracle, plus randomized structural properties.

mod common;

use common::{fd_green, solve_poisson};
use harmonic_splines::green_kernel::{
    green_unit_square, torsion_i, SeriesTruncation, UnitSquarePoint,
};
use proptest::prelude::*;

const FD_N: usize = 512;

fn pt(x: f64, y: f64) -> UnitSquarePoint {
    UnitSquarePoint::new(x, y).unwrap()
}

fn series_trunc() -> SeriesTruncation {
    SeriesTruncation::new(256, 1e-14).unwrap()
}

#[test]
fn green_matches_finite_difference_oracle() {
    let oracle = fd_green(FD_N, (0.0, 0.0), 1.0, (0.25, 0.25));
    let trunc = series_trunc();
    for &(x, y) in &[(0.5, 0.5), (0.75, 0.5), (0.5, 0.125), (0.375, 0.625)] {
        let g = green_unit_square(pt(x, y), pt(0.25, 0.25), &trunc).unwrap();
        let fd = oracle.value(x, y);
        assert!((g - fd).abs() < 1e-4, "at ({x}, {y}): series {g}, fd {fd}");
    }
}

#[test]
fn torsion_solves_the_unit_load_problem() {
    // I is the solution of -Δu = 1 with zero boundary data
    let oracle = solve_poisson(FD_N, (0.0, 0.0), 1.0, |_, _| 1.0);
    let trunc = series_trunc();
    for &(x, y) in &[(0.5, 0.5), (0.25, 0.75), (0.125, 0.125), (0.875, 0.375)] {
        let i = torsion_i(pt(x, y), &trunc).unwrap();
        let fd = oracle.value(x, y);
        assert!((i - fd).abs() < 1e-5, "at ({x}, {y}): series {i}, fd {fd}");
    }
}

#[test]
fn scaling_identity_against_scaled_oracles() {
    // G_{αΩ}(x; v) = G_Ω(x/α; v/α) for the square [0, α]²
    let trunc = series_trunc();
    for &alpha in &[0.5, 2.0] {
        let v = (0.25 * alpha, 0.5 * alpha);
        let oracle = fd_green(FD_N, (0.0, 0.0), alpha, v);
        for &(ux, uy) in &[(0.5, 0.25), (0.625, 0.75), (0.375, 0.375)] {
            let (x, y) = (ux * alpha, uy * alpha);
            let g = green_unit_square(pt(ux, uy), pt(0.25, 0.5), &trunc).unwrap();
            let fd = oracle.value(x, y);
            assert!(
                (g - fd).abs() < 1e-4,
                "alpha {alpha} at ({x}, {y}): unit-square series {g}, fd {fd}"
            );
        }
    }
}

#[test]
fn translation_identity_against_shifted_oracles() {
    // G_{Ω+d}(x; v) = G_Ω(x-d; v-d)
    let trunc = series_trunc();
    for &(dx, dy) in &[(0.3, 0.0), (0.1, 0.7)] {
        let v = (0.25 + dx, 0.5 + dy);
        let oracle = fd_green(FD_N, (dx, dy), 1.0, v);
        for &(ux, uy) in &[(0.5, 0.25), (0.625, 0.75), (0.375, 0.375)] {
            let g = green_unit_square(pt(ux, uy), pt(0.25, 0.5), &trunc).unwrap();
            let fd = oracle.value(ux + dx, uy + dy);
            assert!(
                (g - fd).abs() < 1e-4,
                "shift ({dx}, {dy}) at ({ux}, {uy}): series {g}, fd {fd}"
            );
        }
    }
}

#[test]
fn oracle_reproduces_a_product_sine_eigenfunction() {
    // -Δ sin(πx)sin(2πy) = 5π² sin(πx)sin(2πy); sanity for the oracle itself
    use std::f64::consts::PI;
    let grid = solve_poisson(256, (0.0, 0.0), 1.0, |x, y| {
        5.0 * PI * PI * (PI * x).sin() * (2.0 * PI * y).sin()
    });
    for &(x, y) in &[(0.25, 0.125), (0.5, 0.375), (0.75, 0.625)] {
        let want = (PI * x).sin() * (2.0 * PI * y).sin();
        assert!((grid.value(x, y) - want).abs() < 1e-4, "at ({x}, {y})");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn green_symmetry_random_pairs(
        x1 in 0.05f64..0.95, x2 in 0.05f64..0.95,
        v1 in 0.05f64..0.95, v2 in 0.05f64..0.95,
    ) {
        prop_assume!(((x1 - v1).powi(2) + (x2 - v2).powi(2)).sqrt() > 1e-3);
        let trunc = SeriesTruncation::new(128, 1e-13).unwrap();
        let a = green_unit_square(pt(x1, x2), pt(v1, v2), &trunc).unwrap();
        let b = green_unit_square(pt(v1, v2), pt(x1, x2), &trunc).unwrap();
        prop_assert!((a - b).abs() < 1e-10, "a {a}, b {b}");
        prop_assert!(a > -1e-10, "negative Green value {a}");
    }

    #[test]
    fn torsion_diagonal_symmetry_random(x in 0.0f64..1.0, y in 0.0f64..1.0) {
        // the swap x ↔ y is not a symmetry of the truncated single-sum form,
        // so agreement is only up to the series tail
        let trunc = SeriesTruncation::new(512, 0.0).unwrap();
        let a = torsion_i(pt(x, y), &trunc).unwrap();
        let b = torsion_i(pt(y, x), &trunc).unwrap();
        prop_assert!((a - b).abs() < 1e-7, "a {a}, b {b}");
        prop_assert!(a >= -1e-8);
    }
}
