//! End-to-end acceptance checks for the full pipeline: closed-form local
//! errors, exact constant-Laplacian rates, the variable-Laplacian limit, and
//! the structural guarantees of the partition builder. Each check prints one
//! summary line; run with `--nocapture` to see them on success.

mod common;

use common::fd_green;
use harmonic_splines::error_metrics::{
    asymptotic_constant, lemma3_error, lp_error, norm_i_reference,
};
use harmonic_splines::functions::{registry_get, ScalarField};
use harmonic_splines::green_kernel::{green_unit_square, SeriesTruncation, UnitSquarePoint};
use harmonic_splines::harmonic_solver::{solve_cell, HarmonicCellSolution, Rect};
use harmonic_splines::partition::{
    allocate, allocation_objective, build_partition, uniform_partition, Block, Partition,
    PartitionOptions,
};
use harmonic_splines::quadrature::{cached_rule, integrate_rect, QuadratureSpec};
use harmonic_splines::spline::fit;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::sync::Arc;

fn verdict(idx: usize, name: &str, pass: bool, detail: &str) {
    println!(
        "criterion {idx} ({name}): {} [{detail}]",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {idx} ({name}): {detail}");
}

fn pt(x: f64, y: f64) -> UnitSquarePoint {
    UnitSquarePoint::new(x, y).unwrap()
}

/// `‖f - s‖_{L_p}` over one cell by an 8×8 composite 12-point rule, finer than
/// the production quadrature so it can serve as the measurement side.
fn cell_lp_defect(f: &ScalarField, sol: &HarmonicCellSolution, r: Rect, p: f64) -> f64 {
    let rule = cached_rule(12);
    let sub = 8usize;
    let (dw, dh) = (r.w / sub as f64, r.h / sub as f64);
    let mut total = 0.0;
    for j in 0..sub {
        for i in 0..sub {
            total += integrate_rect(
                &rule,
                r.x0 + i as f64 * dw,
                r.y0 + j as f64 * dh,
                dw,
                dh,
                |x, y| {
                    let d = f.value(x, y) - sol.eval(x, y).unwrap();
                    d.abs().powf(p)
                },
            );
        }
    }
    total.powf(1.0 / p)
}

#[test]
fn criterion_1_local_error_closed_form() {
    let mut rng = StdRng::seed_from_u64(0x1A2B3C4D);
    let trunc = SeriesTruncation::new(384, 0.0).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let a: f64 = rng.gen_range(-2.0..2.0);
        let mut b: f64 = rng.gen_range(-2.0..2.0);
        while (a + b).abs() < 0.2 {
            b = rng.gen_range(-2.0..2.0);
        }
        let w = rng.gen_range(0.1..0.5);
        let x0 = rng.gen_range(0.0..1.0 - w);
        let y0 = rng.gen_range(0.0..1.0 - w);
        let field = ScalarField::from_closures(
            "axis-quadratic",
            false,
            Arc::new(move |x, y| a * x * x + b * y * y),
            Arc::new(move |_, _| 2.0 * (a + b)),
            Arc::new(move |_, _| (2.0 * a, 2.0 * b, 0.0)),
        );
        let cell = Rect::new(x0, y0, w, w).unwrap();
        let sol = solve_cell(&field, cell, &trunc).unwrap();
        for p in [1.0, 2.0] {
            let measured = cell_lp_defect(&field, &sol, cell, p);
            let want = lemma3_error(a, b, w * w, p).unwrap();
            worst = worst.max((measured - want).abs() / want);
        }
    }
    verdict(
        1,
        "local error vs closed form",
        worst <= 1e-5,
        &format!("worst relative gap {worst:.3e}, bound 1e-5"),
    );
}

#[test]
fn criterion_2_constant_laplacian_exact_rate() {
    let f = registry_get("quadratic").unwrap();
    let trunc = SeriesTruncation::new(128, 0.0).unwrap();
    let want_scale = 4.0 * norm_i_reference(2.0).unwrap();
    let mut worst = 0.0f64;
    for n in [100usize, 400, 1600] {
        let model = fit(&f, uniform_partition(n).unwrap(), &trunc).unwrap();
        let err = lp_error(&f, &model, 2.0, &QuadratureSpec::default()).unwrap();
        let want = want_scale / n as f64;
        worst = worst.max((err.total_p_norm - want).abs() / want);
    }
    verdict(
        2,
        "N·error = 4‖I‖₂ for constant Laplacian",
        worst <= 1e-3,
        &format!("worst relative gap {worst:.3e}, bound 1e-3"),
    );
}

#[test]
fn criterion_3_variable_laplacian_limit() {
    let f = registry_get("quartic").unwrap();
    let constant = asymptotic_constant(&f, 2.0).unwrap();
    let trunc = SeriesTruncation::new(48, 1e-12).unwrap();
    let budgets = [256usize, 1024, 4096, 16384, 65536];
    let mut ratios = Vec::new();
    for &n in &budgets {
        let m = (n as f64).powf(0.25).ceil() as usize;
        let opts = PartitionOptions {
            forced_m: Some(m),
            ..Default::default()
        };
        let part = build_partition(&f, n, 2.0, &opts).unwrap();
        let model = fit(&f, part, &trunc).unwrap();
        let err = lp_error(&f, &model, 2.0, &QuadratureSpec::default()).unwrap();
        ratios.push(n as f64 * err.total_p_norm / constant);
    }
    let d: Vec<f64> = ratios.iter().map(|r| (r - 1.0).abs()).collect();
    let monotone = d[2] > d[3] && d[3] > d[4];
    let in_band = ratios[4] >= 0.9 && ratios[4] <= 1.1;
    verdict(
        3,
        "N·error/constant approaches 1",
        monotone && in_band,
        &format!("ratios {ratios:?}"),
    );
}

#[test]
fn criterion_4_harmonic_exactness() {
    let f = registry_get("harmonic").unwrap();
    let fine = SeriesTruncation::new(256, 0.0).unwrap();
    let coarse = SeriesTruncation::new(96, 0.0).unwrap();
    let adaptive = |n: usize, m: usize| {
        build_partition(
            &f,
            n,
            2.0,
            &PartitionOptions {
                forced_m: Some(m),
                ..Default::default()
            },
        )
        .unwrap()
    };
    let cases: Vec<(Partition, SeriesTruncation)> = vec![
        (uniform_partition(400).unwrap(), fine),
        (adaptive(500, 3), fine),
        (uniform_partition(2500).unwrap(), coarse),
        (adaptive(10_000, 10), coarse),
    ];
    let mut worst = 0.0f64;
    for (part, trunc) in cases {
        let model = fit(&f, part, &trunc).unwrap();
        for j in 0..=100 {
            for i in 0..=100 {
                let (x, y) = (i as f64 / 100.0, j as f64 / 100.0);
                worst = worst.max((model.evaluate(x, y).unwrap() - f.value(x, y)).abs());
            }
        }
    }
    verdict(
        4,
        "harmonic field reproduced",
        worst <= 1e-8,
        &format!("sup over 101² lattices {worst:.3e}, bound 1e-8"),
    );
}

#[test]
fn criterion_5_series_field_unit_laplacian() {
    let f = registry_get("klim").unwrap();
    let h = 4e-4;
    let mut worst = 0.0f64;
    for j in 0..10 {
        for i in 0..10 {
            let x = 0.3 + 0.4 * (i as f64 + 0.5) / 10.0;
            let y = 0.3 + 0.4 * (j as f64 + 0.5) / 10.0;
            let lap =
                (f.value(x + h, y) + f.value(x - h, y) + f.value(x, y + h) + f.value(x, y - h)
                    - 4.0 * f.value(x, y))
                    / (h * h);
            worst = worst.max((lap + 1.0).abs());
        }
    }
    let constant = asymptotic_constant(&f, 1.0).unwrap();
    let norm_gap = (constant - norm_i_reference(1.0).unwrap()).abs();
    verdict(
        5,
        "boundary-layer field has Δf = -1",
        worst <= 1e-6 && norm_gap <= 1e-10,
        &format!("worst FD gap {worst:.3e} (bound 1e-6), constant gap {norm_gap:.3e}"),
    );
}

#[test]
fn criterion_6_green_function_suite() {
    let trunc = SeriesTruncation::new(256, 1e-14).unwrap();
    let mut worst = 0.0f64;

    // symmetry and nonnegativity on an interior lattice
    for i in 1..5 {
        for j in 1..5 {
            let x = pt(i as f64 / 5.0, j as f64 / 5.0);
            let v = pt(0.31, 0.67);
            let g = green_unit_square(x, v, &trunc).unwrap();
            let g_swapped = green_unit_square(v, x, &trunc).unwrap();
            worst = worst.max((g - g_swapped).abs());
            worst = worst.max((-g).max(0.0));
        }
    }
    // boundary vanishing
    for &(bx, by) in &[(0.0, 0.4), (1.0, 0.6), (0.7, 0.0), (0.2, 1.0)] {
        worst = worst.max(
            green_unit_square(pt(0.5, 0.5), pt(bx, by), &trunc)
                .unwrap()
                .abs(),
        );
    }
    // direct finite-difference comparison on the unit square
    let oracle = fd_green(512, (0.0, 0.0), 1.0, (0.25, 0.25));
    for &(x, y) in &[(0.5, 0.5), (0.75, 0.5), (0.375, 0.625)] {
        let g = green_unit_square(pt(x, y), pt(0.25, 0.25), &trunc).unwrap();
        worst = worst.max((g - oracle.value(x, y)).abs());
    }
    // scaling: G_{αΩ}(x; v) = G_Ω(x/α; v/α)
    for &alpha in &[0.5, 2.0] {
        let scaled = fd_green(512, (0.0, 0.0), alpha, (0.25 * alpha, 0.5 * alpha));
        for &(ux, uy) in &[(0.5, 0.25), (0.625, 0.75)] {
            let g = green_unit_square(pt(ux, uy), pt(0.25, 0.5), &trunc).unwrap();
            worst = worst.max((g - scaled.value(ux * alpha, uy * alpha)).abs());
        }
    }
    // translation: G_{Ω+d}(x; v) = G_Ω(x-d; v-d)
    for &(dx, dy) in &[(0.3, 0.0), (0.1, 0.7)] {
        let shifted = fd_green(512, (dx, dy), 1.0, (0.25 + dx, 0.5 + dy));
        for &(ux, uy) in &[(0.5, 0.25), (0.625, 0.75)] {
            let g = green_unit_square(pt(ux, uy), pt(0.25, 0.5), &trunc).unwrap();
            worst = worst.max((g - shifted.value(ux + dx, uy + dy)).abs());
        }
    }
    verdict(
        6,
        "Green's function properties",
        worst <= 1e-4,
        &format!("worst absolute gap {worst:.3e}, bound 1e-4"),
    );
}

fn audit_partition(part: &Partition, n: usize, label: &str) -> Option<String> {
    // tiling: areas sum to 1 and every cell owns its own center
    let area: f64 = part.cells().map(|c| c.rect.area()).sum();
    if (area - 1.0).abs() > 1e-12 {
        return Some(format!("{label}: tiled area {area}"));
    }
    let mut flat = 0usize;
    for (b, block) in part.blocks.iter().enumerate() {
        for (c, cell) in block.cells.iter().enumerate() {
            let r = cell.rect;
            let found = part.locate(r.x0 + 0.5 * r.w, r.y0 + 0.5 * r.h).unwrap();
            if found != (b, c) {
                return Some(format!("{label}: cell {flat} does not own its center"));
            }
            flat += 1;
        }
    }
    // budget: Σ ñ_l² = N
    let total = part.n_tilde_total();
    if (total - n as f64).abs() > 1e-9 * n as f64 {
        return Some(format!("{label}: Σñ² = {total} vs N = {n}"));
    }
    // per-block sandwich n_l ≤ ñ_l < n_l + 1, with n_l floored at one square
    for b in &part.blocks {
        let nf = b.n_squares as f64;
        if !(nf <= b.n_tilde.max(1.0) + 1e-9 && b.n_tilde < nf + 1.0 + 1e-9) {
            return Some(format!(
                "{label}: block budget {} vs count {}",
                b.n_tilde, nf
            ));
        }
    }
    // double inequality on Σ (n_l + 1)²
    let bound = part.element_bound_total() as f64;
    let (nf, mf) = (n as f64, part.m as f64);
    if bound < nf - 2.0 * mf * nf.sqrt() - 1e-9
        || bound > nf + 2.0 * mf * nf.sqrt() + mf * mf + 1e-9
    {
        return Some(format!("{label}: element bound {bound} outside envelope"));
    }
    None
}

#[test]
fn criterion_7_partition_audits() {
    let mut failures = Vec::new();
    for (name, n, m, p) in [
        ("quartic", 2048usize, Some(6usize), 2.0),
        ("quartic", 65_536, Some(16), 2.0),
        ("bump", 1000, Some(4), 1.0),
        ("bump", 16_384, None, 1.0),
        ("klim", 640, Some(3), 2.0),
        ("quadratic", 900, None, 2.0),
    ] {
        let f = registry_get(name).unwrap();
        let opts = PartitionOptions {
            forced_m: m,
            ..Default::default()
        };
        let part = build_partition(&f, n, p, &opts).unwrap();
        if let Some(msg) = audit_partition(&part, n, &format!("{name}/{n}")) {
            failures.push(msg);
        }
    }
    // boundary rectangles become negligible as the budget grows at fixed m
    let f = registry_get("quartic").unwrap();
    let opts = PartitionOptions {
        forced_m: Some(4),
        ..Default::default()
    };
    let small = build_partition(&f, 10_000, 2.0, &opts).unwrap();
    let large = build_partition(&f, 1_000_000, 2.0, &opts).unwrap();
    if large.rectangle_fraction() >= small.rectangle_fraction() {
        failures.push(format!(
            "rectangle fraction did not decrease: {} -> {}",
            small.rectangle_fraction(),
            large.rectangle_fraction()
        ));
    }
    verdict(
        7,
        "partition structural audits",
        failures.is_empty(),
        &format!("{} audits failed {failures:?}", failures.len()),
    );
}

#[test]
fn criterion_8_allocation_optimality() {
    // three synthetic blocks with very different local Laplacian sizes
    let m_values = [5.0f64, 1.0, 0.2];
    let n = 300usize;
    let p = 2.0;
    let mut blocks: Vec<Block> = m_values
        .iter()
        .enumerate()
        .map(|(i, &mv)| Block {
            rect: Rect::new(i as f64 / 3.0, 0.0, 1.0 / 3.0, 1.0 / 3.0).unwrap(),
            center: (i as f64 / 3.0 + 1.0 / 6.0, 1.0 / 6.0),
            m_value: mv,
            n_tilde: 0.0,
            n_squares: 0,
            cells: Vec::new(),
        })
        .collect();
    allocate(&mut blocks, n, p, 1e-12).unwrap();
    let optimal: Vec<f64> = blocks.iter().map(|b| b.n_tilde).collect();
    let best = allocation_objective(&m_values, &optimal, p, 1);
    let mut rng = StdRng::seed_from_u64(0x5EED);
    let mut strict = true;
    let mut closest = f64::INFINITY;
    for _ in 0..100 {
        let raw = [
            rng.gen_range(1e-3..1.0f64),
            rng.gen_range(1e-3..1.0f64),
            rng.gen_range(1e-3..1.0f64),
        ];
        let s: f64 = raw.iter().sum();
        // feasible point on the simplex Σ ñ² = N
        let cand: Vec<f64> = raw.iter().map(|r| (n as f64 * r / s).sqrt()).collect();
        let value = allocation_objective(&m_values, &cand, p, 1);
        closest = closest.min(value - best);
        if value <= best {
            strict = false;
        }
    }
    verdict(
        8,
        "allocation beats random feasible points",
        strict,
        &format!("smallest margin over optimum {closest:.3e}"),
    );
}

#[test]
fn criterion_9_adaptive_beats_uniform() {
    let f = registry_get("bump").unwrap();
    let n = 16_384usize;
    let trunc = SeriesTruncation::new(32, 1e-10).unwrap();
    let opts = PartitionOptions {
        forced_m: Some((n as f64).powf(0.25).ceil() as usize),
        ..Default::default()
    };
    let adaptive = fit(&f, build_partition(&f, n, 1.0, &opts).unwrap(), &trunc).unwrap();
    let uniform = fit(&f, uniform_partition(n).unwrap(), &trunc).unwrap();
    let quad = QuadratureSpec::default();
    let ea = lp_error(&f, &adaptive, 1.0, &quad).unwrap().total_p_norm;
    let eu = lp_error(&f, &uniform, 1.0, &quad).unwrap().total_p_norm;
    verdict(
        9,
        "adaptive beats uniform in L₁",
        ea < eu,
        &format!("adaptive {ea:.6e} vs uniform {eu:.6e}"),
    );
}
