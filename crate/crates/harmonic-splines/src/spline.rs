//! Assembly and evaluation of the global harmonic spline: one Dirichlet cell
//! solution per partition cell, continuous on the closed square because every
//! cell interpolates the field on its whole boundary.

use std::io::Write;

use rayon::prelude::*;

use crate::error::Result;
use crate::functions::ScalarField;
use crate::green_kernel::SeriesTruncation;
use crate::harmonic_solver::{solve_cell, HarmonicCellSolution};
use crate::partition::Partition;

/// The fitted spline: solutions aligned with the partition's flattened cell
/// list (block by block, in mesh order).
#[derive(Debug, Clone)]
pub struct SplineModel {
    partition: Partition,
    solutions: Vec<HarmonicCellSolution>,
    field_name: String,
    trunc: SeriesTruncation,
}

/// Solves every cell of the partition against the trace of `f`.
///
/// Cells decouple completely (each one is its own Dirichlet problem), so they
/// are solved in parallel.
pub fn fit(f: &ScalarField, partition: Partition, trunc: &SeriesTruncation) -> Result<SplineModel> {
    let cells: Vec<_> = partition.cells().map(|c| c.rect).collect();
    let solutions = cells
        .par_iter()
        .map(|&rect| solve_cell(f, rect, trunc))
        .collect::<Result<Vec<_>>>()?;
    Ok(SplineModel {
        partition,
        solutions,
        field_name: f.name().to_string(),
        trunc: *trunc,
    })
}

impl SplineModel {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn solutions(&self) -> &[HarmonicCellSolution] {
        &self.solutions
    }

    pub fn field_name(&self) -> &str {
        &self.field_name
    }

    pub fn truncation(&self) -> &SeriesTruncation {
        &self.trunc
    }

    /// Solution index of the cell owning `(x, y)` under the half-open rule.
    pub fn solution_index(&self, x: f64, y: f64) -> Result<usize> {
        let (block, cell) = self.partition.locate(x, y)?;
        Ok(self.partition.block_offset(block) + cell)
    }

    /// Spline value at a point of the closed unit square.
    pub fn evaluate(&self, x: f64, y: f64) -> Result<f64> {
        let idx = self.solution_index(x, y)?;
        self.solutions[idx].eval(x.clamp(0.0, 1.0), y.clamp(0.0, 1.0))
    }

    /// Row-major `r×r` lattice of spline values for external plotting, in the
    /// same plain-text format the grid loader accepts.
    pub fn dump_grid<W: Write>(&self, r: usize, out: &mut W) -> std::io::Result<()> {
        assert!(r >= 2);
        writeln!(out, "# n={r}")?;
        for j in 0..r {
            let y = j as f64 / (r - 1) as f64;
            let row: Vec<String> = (0..r)
                .map(|i| {
                    let x = i as f64 / (r - 1) as f64;
                    format!(
                        "{:.12e}",
                        self.evaluate(x, y).expect("lattice point inside")
                    )
                })
                .collect();
            writeln!(out, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::registry_get;
    use crate::green_kernel::{torsion_i, UnitSquarePoint};
    use crate::partition::{build_partition, uniform_partition, PartitionOptions};

    fn trunc(m: usize) -> SeriesTruncation {
        SeriesTruncation::new(m, 1e-12).unwrap()
    }

    #[test]
    fn harmonic_field_is_reproduced_on_any_partition() {
        let f = registry_get("harmonic").unwrap();
        let part = build_partition(
            &f,
            200,
            2.0,
            &PartitionOptions {
                forced_m: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        let model = fit(&f, part, &trunc(96)).unwrap();
        let mut worst: f64 = 0.0;
        for j in 0..=50 {
            for i in 0..=50 {
                let (x, y) = (i as f64 / 50.0, j as f64 / 50.0);
                worst = worst.max((model.evaluate(x, y).unwrap() - f.value(x, y)).abs());
            }
        }
        assert!(worst < 1e-8, "sup error {worst}");
    }

    #[test]
    fn quadratic_error_function_is_scaled_torsion() {
        // on each cell of a uniform 2×2 partition, s - f = 4·|Ω|·I(ξ)
        let f = registry_get("quadratic").unwrap();
        let part = uniform_partition(4).unwrap();
        let model = fit(&f, part, &trunc(128)).unwrap();
        let it = SeriesTruncation::new(256, 0.0).unwrap();
        for &(x, y) in &[(0.2, 0.3), (0.7, 0.6), (0.4, 0.9), (0.9, 0.1)] {
            let defect = model.evaluate(x, y).unwrap() - f.value(x, y);
            let xi = (2.0 * x).fract();
            let eta = (2.0 * y).fract();
            let oracle =
                4.0 * 0.25 * torsion_i(UnitSquarePoint::new(xi, eta).unwrap(), &it).unwrap();
            assert!(
                (defect - oracle).abs() < 1e-6,
                "at ({x}, {y}): {defect} vs {oracle}"
            );
        }
    }

    #[test]
    fn skeleton_interpolation_for_the_klim_field() {
        let f = registry_get("klim").unwrap();
        let part = uniform_partition(256).unwrap();
        let model = fit(&f, part, &trunc(48)).unwrap();
        let mut worst: f64 = 0.0;
        for cell in model.partition().cells() {
            let r = cell.rect;
            for s in 0..50 {
                let t = (s as f64 + 0.5) / 50.0;
                for (x, y) in [
                    (r.x0 + t * r.w, r.y0),
                    (r.x0 + t * r.w, r.y0 + r.h),
                    (r.x0, r.y0 + t * r.h),
                    (r.x0 + r.w, r.y0 + t * r.h),
                ] {
                    worst = worst.max((model.evaluate(x, y).unwrap() - f.value(x, y)).abs());
                }
            }
        }
        assert!(worst < 1e-6, "skeleton error {worst}");
    }

    #[test]
    fn boundary_and_shared_corners_interpolate() {
        let f = registry_get("quartic").unwrap();
        let part = uniform_partition(16).unwrap();
        let model = fit(&f, part, &trunc(64)).unwrap();
        // on-edge evaluation truncates the sine series of the trace residual,
        // so the tolerance here reflects the mode-64 tail, not roundoff
        for &(x, y) in &[(0.0, 0.3), (1.0, 0.7), (0.4, 0.0), (0.9, 1.0)] {
            let got = model.evaluate(x, y).unwrap();
            assert!((got - f.value(x, y)).abs() < 1e-4, "boundary ({x}, {y})");
        }
        // interior 4-cell corner
        let got = model.evaluate(0.5, 0.5).unwrap();
        assert!((got - f.value(0.5, 0.5)).abs() < 1e-10);
    }

    #[test]
    fn continuity_across_interior_edges() {
        let f = registry_get("bump").unwrap();
        let part = uniform_partition(16).unwrap();
        let model = fit(&f, part, &trunc(64)).unwrap();
        let mut state = 0xA5A5A5A5DEADD00Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        let mut worst: f64 = 0.0;
        for _ in 0..1000 {
            // random point on a random interior vertical edge
            let edge = 0.25 * (1.0 + (next() * 3.0).floor());
            let y = next();
            let (b_right, c_right) = model.partition().locate(edge, y).unwrap();
            let idx_right = model.partition().block_offset(b_right) + c_right;
            let (b_left, c_left) = model.partition().locate(edge - 1e-12, y).unwrap();
            let idx_left = model.partition().block_offset(b_left) + c_left;
            assert_ne!(idx_left, idx_right);
            let a = model.solutions()[idx_right].eval(edge, y).unwrap();
            let b = model.solutions()[idx_left].eval(edge, y).unwrap();
            worst = worst.max((a - b).abs());
        }
        assert!(worst < 1e-7, "edge mismatch {worst}");
    }

    #[test]
    fn per_cell_maximum_principle() {
        let f = registry_get("klim").unwrap();
        let part = uniform_partition(16).unwrap();
        let model = fit(&f, part, &trunc(48)).unwrap();
        for (cell, sol) in model.partition().cells().zip(model.solutions()) {
            let r = cell.rect;
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for s in 0..=100 {
                let t = s as f64 / 100.0;
                for v in [
                    f.value(r.x0 + t * r.w, r.y0),
                    f.value(r.x0 + t * r.w, r.y0 + r.h),
                    f.value(r.x0, r.y0 + t * r.h),
                    f.value(r.x0 + r.w, r.y0 + t * r.h),
                ] {
                    lo = lo.min(v);
                    hi = hi.max(v);
                }
            }
            let v = sol.eval(r.x0 + 0.4 * r.w, r.y0 + 0.6 * r.h).unwrap();
            assert!(v >= lo - 1e-7 && v <= hi + 1e-7);
        }
    }

    #[test]
    fn grid_dump_round_trips_through_the_loader() {
        let f = registry_get("quadratic").unwrap();
        let part = uniform_partition(4).unwrap();
        let model = fit(&f, part, &trunc(32)).unwrap();
        let mut buf = Vec::new();
        model.dump_grid(17, &mut buf).unwrap();
        let rows = crate::functions::parse_grid(&String::from_utf8(buf).unwrap()).unwrap();
        let g = crate::functions::load_grid(&rows).unwrap();
        let x = 8.0 / 16.0;
        assert!((g.value(x, x) - model.evaluate(x, x).unwrap()).abs() < 1e-9);
    }
}
