//! Two-stage construction of the adaptive partition: an intermediate grid of
//! equal blocks carrying the local Laplacian weight, a per-block cell budget
//! from the Lagrange-multiplier formula, and block meshing into squares plus
//! boundary rectangles.
//!
//! ```
//! use harmonic_splines::functions::registry_get;
//! use harmonic_splines::partition::{build_partition, PartitionOptions};
//!
//! let f = registry_get("quartic")?;
//! let opts = PartitionOptions { forced_m: Some(6), ..Default::default() };
//! let part = build_partition(&f, 2048, 2.0, &opts)?;
//!
//! // the continuous budgets always spend exactly N
//! assert!((part.n_tilde_total() - 2048.0).abs() < 1e-6);
//! // the cells tile the unit square
//! let area: f64 = part.cells().map(|c| c.rect.area()).sum();
//! assert!((area - 1.0).abs() < 1e-12);
//! # Ok::<(), harmonic_splines::Error>(())
//! ```

use std::io::Write;

use crate::error::{Error, Result};
use crate::functions::{ModulusSampler, ScalarField};
use crate::harmonic_solver::Rect;

/// Whether a cell is a full mesh square or a boundary-strip rectangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellKind {
    Square,
    Rectangle,
}

#[derive(Debug, Clone, Copy)]
pub struct Cell {
    pub rect: Rect,
    pub kind: CellKind,
}

/// One intermediate block: its square, Taylor point, Laplacian weight, real
/// and integer cell budgets, and the meshed cell list.
#[derive(Debug, Clone)]
pub struct Block {
    pub rect: Rect,
    pub center: (f64, f64),
    pub m_value: f64,
    pub n_tilde: f64,
    pub n_squares: usize,
    pub cells: Vec<Cell>,
}

/// The two-level partition: `m²` blocks tiling the unit square, each meshed
/// into `n_l²` squares plus at most `2n_l + 1` boundary rectangles.
#[derive(Debug, Clone)]
pub struct Partition {
    pub m: usize,
    pub blocks: Vec<Block>,
    pub total_cells: usize,
    /// Norm index used for the allocation; `None` for the uniform baseline.
    pub allocation_p: Option<f64>,
    pub n_target: usize,
    offsets: Vec<usize>,
}

/// Options for [`build_partition`].
#[derive(Debug, Clone, Copy)]
pub struct PartitionOptions {
    pub eps: f64,
    pub forced_m: Option<usize>,
    /// Override for the weight floor that guards against zero-Laplacian blocks.
    pub m_floor: Option<f64>,
}

impl Default for PartitionOptions {
    fn default() -> Self {
        PartitionOptions {
            eps: 0.1,
            forced_m: None,
            m_floor: None,
        }
    }
}

fn is_near_integer(x: f64) -> bool {
    (x - x.round()).abs() < 1e-9 * x.max(1.0)
}

/// Smallest `m` with `½ (1/m)² ω(1/(2m)) ≤ eps/N`, capped so that `m² ≤ N`.
pub fn choose_m(n: usize, eps: f64, f: &ScalarField) -> usize {
    assert!(n >= 1, "budget must be positive");
    assert!(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
    let cap = ((n as f64).sqrt().floor() as usize).max(1);
    let sampler = ModulusSampler::new(f);
    let threshold = eps / n as f64;
    for m in 1..cap {
        let mf = m as f64;
        let omega = sampler
            .estimate(1.0 / (2.0 * mf))
            .expect("delta in (0, 1/2]");
        if 0.5 * omega / (mf * mf) <= threshold {
            return m;
        }
    }
    cap
}

/// Per-block budgets `ñ_l² = N·w_l / Σ w_i` with `w = max(M, m_floor)^{p/(p+1)}`,
/// plus the induced integer square counts.
pub fn allocate(blocks: &mut [Block], n: usize, p: f64, m_floor: f64) -> Result<()> {
    if n < blocks.len() {
        return Err(Error::Budget {
            n,
            blocks: blocks.len(),
        });
    }
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidP(p));
    }
    assert!(m_floor > 0.0, "m_floor must be positive");
    let exponent = p / (p + 1.0);
    let weights: Vec<f64> = blocks
        .iter()
        .map(|b| b.m_value.max(m_floor).powf(exponent))
        .collect();
    let total: f64 = weights.iter().sum();
    for (block, w) in blocks.iter_mut().zip(&weights) {
        let n_tilde_sq = n as f64 * w / total;
        let n_tilde = n_tilde_sq.sqrt();
        block.n_tilde = n_tilde;
        block.n_squares = if is_near_integer(n_tilde) {
            n_tilde.round() as usize
        } else {
            (n_tilde.floor() as usize).max(1)
        };
    }
    Ok(())
}

/// Meshes one block: `n_l²` squares of side `1/(m·ñ_l)` anchored at the
/// lower-left corner, plus `2n_l + 1` boundary rectangles filling the top and
/// right strips when `ñ_l` is non-integral.
pub fn mesh_block(block: &Block, _m: usize) -> Vec<Cell> {
    let bs = block.rect.w;
    let n_tilde = block.n_tilde;
    let n = block.n_squares;
    // budgets below one square (possible when the m² ≤ N cap binds) collapse
    // to a single cell covering the block
    let integral = (is_near_integer(n_tilde) && n_tilde.round() as usize == n) || n_tilde <= 1.0;
    let side = if integral {
        bs / n as f64
    } else {
        bs / n_tilde
    };
    let (x0, y0) = (block.rect.x0, block.rect.y0);
    let mut cells = Vec::with_capacity(n * n + if integral { 0 } else { 2 * n + 1 });
    for j in 0..n {
        for i in 0..n {
            // make the outermost squares close the block exactly when integral
            let w = if integral && i == n - 1 {
                bs - (n - 1) as f64 * side
            } else {
                side
            };
            let h = if integral && j == n - 1 {
                bs - (n - 1) as f64 * side
            } else {
                side
            };
            cells.push(Cell {
                rect: Rect::new(x0 + i as f64 * side, y0 + j as f64 * side, w, h).unwrap(),
                kind: CellKind::Square,
            });
        }
    }
    if !integral {
        let used = n as f64 * side;
        let rem = bs - used;
        for j in 0..n {
            cells.push(Cell {
                rect: Rect::new(x0 + used, y0 + j as f64 * side, rem, side).unwrap(),
                kind: CellKind::Rectangle,
            });
        }
        for i in 0..n {
            cells.push(Cell {
                rect: Rect::new(x0 + i as f64 * side, y0 + used, side, rem).unwrap(),
                kind: CellKind::Rectangle,
            });
        }
        cells.push(Cell {
            rect: Rect::new(x0 + used, y0 + used, rem, rem).unwrap(),
            kind: CellKind::Rectangle,
        });
    }
    cells
}

fn assemble(
    m: usize,
    mut blocks: Vec<Block>,
    allocation_p: Option<f64>,
    n_target: usize,
) -> Partition {
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut total = 0usize;
    for block in blocks.iter_mut() {
        block.cells = mesh_block(block, m);
        offsets.push(total);
        total += block.cells.len();
    }
    Partition {
        m,
        blocks,
        total_cells: total,
        allocation_p,
        n_target,
        offsets,
    }
}

fn make_blocks(m: usize, f: Option<&ScalarField>) -> Vec<Block> {
    let side = 1.0 / m as f64;
    let mut blocks = Vec::with_capacity(m * m);
    for j in 0..m {
        for i in 0..m {
            let rect = Rect::new(i as f64 * side, j as f64 * side, side, side).unwrap();
            let center = (rect.x0 + 0.5 * side, rect.y0 + 0.5 * side);
            let m_value = f.map_or(0.0, |f| f.laplacian(center.0, center.1).abs());
            blocks.push(Block {
                rect,
                center,
                m_value,
                n_tilde: 0.0,
                n_squares: 0,
                cells: Vec::new(),
            });
        }
    }
    blocks
}

/// Builds the adaptive partition for budget `N` and norm index `p`.
pub fn build_partition(
    f: &ScalarField,
    n: usize,
    p: f64,
    opts: &PartitionOptions,
) -> Result<Partition> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidP(p));
    }
    let m = match opts.forced_m {
        Some(m) => m.max(1),
        None => choose_m(n, opts.eps, f),
    };
    let mut blocks = make_blocks(m, Some(f));
    let max_m = blocks.iter().map(|b| b.m_value).fold(0.0, f64::max);
    let floor = opts
        .m_floor
        .unwrap_or(if max_m > 0.0 { 1e-8 * max_m } else { 1e-12 });
    allocate(&mut blocks, n, p, floor)?;
    Ok(assemble(m, blocks, Some(p), n))
}

/// Uniform `√N × √N` baseline partition (requires `N` to be a perfect square).
pub fn uniform_partition(n: usize) -> Result<Partition> {
    let root = (n as f64).sqrt().round() as usize;
    if root * root != n {
        return Err(Error::NotPerfectSquare(n));
    }
    let mut blocks = make_blocks(1, None);
    blocks[0].n_tilde = root as f64;
    blocks[0].n_squares = root;
    Ok(assemble(1, blocks, None, n))
}

/// The allocation objective `Σ_l M_l^p / (m^{2(p+1)} ñ_l^{2p})`, up to the
/// constant `‖I‖_p^p` factor shared by every feasible allocation.
pub fn allocation_objective(m_values: &[f64], n_tildes: &[f64], p: f64, m: usize) -> f64 {
    let scale = (m as f64).powf(2.0 * (p + 1.0));
    m_values
        .iter()
        .zip(n_tildes)
        .map(|(&mv, &nt)| mv.powf(p) / (scale * nt.powf(2.0 * p)))
        .sum()
}

impl Partition {
    /// Cell index offset of a block into the flattened cell list.
    pub fn block_offset(&self, block: usize) -> usize {
        self.offsets[block]
    }

    pub fn cells(&self) -> impl Iterator<Item = &Cell> {
        self.blocks.iter().flat_map(|b| b.cells.iter())
    }

    pub fn rectangle_count(&self) -> usize {
        self.cells()
            .filter(|c| c.kind == CellKind::Rectangle)
            .count()
    }

    pub fn rectangle_fraction(&self) -> f64 {
        self.rectangle_count() as f64 / self.total_cells as f64
    }

    /// Sum of `ñ_l²` over all blocks (equals `N` by construction).
    pub fn n_tilde_total(&self) -> f64 {
        self.blocks.iter().map(|b| b.n_tilde * b.n_tilde).sum()
    }

    /// Sum of `(n_l + 1)²`, the element count the double inequality bounds.
    pub fn element_bound_total(&self) -> usize {
        self.blocks.iter().map(|b| (b.n_squares + 1).pow(2)).sum()
    }

    /// Locates the cell containing `(x, y)` under the half-open membership
    /// rule (cells own their bottom/left edges; the top/right domain boundary
    /// is closed). Returns `(block index, cell index within block)`.
    pub fn locate(&self, x: f64, y: f64) -> Result<(usize, usize)> {
        let eps = 1e-12;
        if !(x >= -eps && x <= 1.0 + eps && y >= -eps && y <= 1.0 + eps) {
            return Err(Error::OutOfDomain(x, y));
        }
        let x = x.clamp(0.0, 1.0);
        let y = y.clamp(0.0, 1.0);
        let m = self.m as f64;
        let bi = ((x * m).floor() as usize).min(self.m - 1);
        let bj = ((y * m).floor() as usize).min(self.m - 1);
        let block_idx = bj * self.m + bi;
        let block = &self.blocks[block_idx];
        let n = block.n_squares;
        let integral = is_near_integer(block.n_tilde) && block.n_tilde.round() as usize == n;
        let side = if integral {
            block.rect.w / n as f64
        } else {
            block.rect.w / block.n_tilde
        };
        let lx = x - block.rect.x0;
        let ly = y - block.rect.y0;
        let mut ci = (lx / side).floor() as usize;
        let mut cj = (ly / side).floor() as usize;
        if integral {
            ci = ci.min(n - 1);
            cj = cj.min(n - 1);
        } else {
            ci = ci.min(n);
            cj = cj.min(n);
        }
        let cell_idx = match (ci >= n, cj >= n) {
            (false, false) => cj * n + ci,
            (true, false) => n * n + cj,
            (false, true) => n * n + n + ci,
            (true, true) => n * n + 2 * n,
        };
        Ok((block_idx, cell_idx))
    }

    /// Writes the structured-text cell dump: one cell per line with block
    /// index, tag, origin, and side lengths.
    pub fn write_cells<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        for (b, block) in self.blocks.iter().enumerate() {
            for cell in &block.cells {
                let tag = match cell.kind {
                    CellKind::Square => "square",
                    CellKind::Rectangle => "rect",
                };
                writeln!(
                    out,
                    "{b} {tag} {:.12e} {:.12e} {:.12e} {:.12e}",
                    cell.rect.x0, cell.rect.y0, cell.rect.w, cell.rect.h
                )?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::registry_get;

    fn area_total(p: &Partition) -> f64 {
        p.cells().map(|c| c.rect.area()).sum()
    }

    #[test]
    fn quadratic_field_forces_m_one() {
        let f = registry_get("quadratic").unwrap();
        assert_eq!(choose_m(100, 0.5, &f), 1);
        assert_eq!(choose_m(1_000_000, 0.01, &f), 1);
    }

    #[test]
    fn choose_m_defines_a_minimum() {
        let f = registry_get("quartic").unwrap();
        let n = 10_000;
        let eps = 0.5;
        let m = choose_m(n, eps, &f);
        let sampler = ModulusSampler::new(&f);
        let check = |m: usize| {
            let mf = m as f64;
            0.5 * sampler.estimate(1.0 / (2.0 * mf)).unwrap() / (mf * mf) <= eps / n as f64
        };
        assert!(check(m), "inequality must hold at m = {m}");
        if m > 1 {
            assert!(!check(m - 1), "m - 1 = {} must fail", m - 1);
        }
    }

    #[test]
    fn choose_m_is_monotone_in_n() {
        let f = registry_get("quartic").unwrap();
        let a = choose_m(10_000, 0.5, &f);
        let b = choose_m(1_000_000, 0.5, &f);
        assert!(a <= b, "{a} > {b}");
    }

    #[test]
    fn constant_laplacian_allocates_uniformly() {
        let f = registry_get("quadratic").unwrap();
        let mut blocks = make_blocks(2, Some(&f));
        allocate(&mut blocks, 100, 2.0, 1e-12).unwrap();
        for b in &blocks {
            assert!((b.n_tilde - 5.0).abs() < 1e-12);
            assert_eq!(b.n_squares, 5);
        }
    }

    #[test]
    fn large_p_allocation_ratio_approaches_weight_ratio() {
        let f = registry_get("quadratic").unwrap();
        let mut blocks = make_blocks(1, Some(&f));
        blocks.push(blocks[0].clone());
        blocks[0].m_value = 16.0;
        blocks[1].m_value = 1.0;
        allocate(&mut blocks, 1000, 1e6, 1e-12).unwrap();
        let ratio = blocks[0].n_tilde.powi(2) / blocks[1].n_tilde.powi(2);
        assert!((ratio - 16.0).abs() < 0.01, "ratio {ratio}");
    }

    #[test]
    fn all_zero_weights_fall_back_to_uniform() {
        let f = registry_get("harmonic").unwrap();
        let mut blocks = make_blocks(3, Some(&f));
        allocate(&mut blocks, 900, 2.0, 1e-12).unwrap();
        for b in &blocks {
            assert!((b.n_tilde - 10.0).abs() < 1e-9);
        }
    }

    #[test]
    fn budget_smaller_than_block_count_errors() {
        let f = registry_get("quadratic").unwrap();
        let mut blocks = make_blocks(4, Some(&f));
        assert!(matches!(
            allocate(&mut blocks, 10, 2.0, 1e-12),
            Err(Error::Budget { .. })
        ));
    }

    #[test]
    fn integral_budget_meshes_to_squares_only() {
        let mut block = make_blocks(2, None).remove(0);
        block.n_tilde = 3.0;
        block.n_squares = 3;
        let cells = mesh_block(&block, 2);
        assert_eq!(cells.len(), 9);
        assert!(cells.iter().all(|c| c.kind == CellKind::Square));
        let area: f64 = cells.iter().map(|c| c.rect.area()).sum();
        assert!((area - 0.25).abs() < 1e-15);
        assert!((cells[0].rect.w - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn fractional_budget_adds_boundary_rectangles() {
        let mut block = make_blocks(2, None).remove(0);
        block.n_tilde = 3.5;
        block.n_squares = 3;
        let cells = mesh_block(&block, 2);
        let squares = cells.iter().filter(|c| c.kind == CellKind::Square).count();
        let rects = cells
            .iter()
            .filter(|c| c.kind == CellKind::Rectangle)
            .count();
        assert_eq!(squares, 9);
        assert_eq!(rects, 7);
        assert!((cells[0].rect.w - 1.0 / 7.0).abs() < 1e-15);
        let area: f64 = cells.iter().map(|c| c.rect.area()).sum();
        assert!((area - 0.25).abs() < 1e-15);
    }

    #[test]
    fn small_fractional_budget() {
        let mut block = make_blocks(1, None).remove(0);
        block.n_tilde = 1.2;
        block.n_squares = 1;
        let cells = mesh_block(&block, 1);
        assert_eq!(cells.len(), 4); // 1 square + 3 rectangles
        let area: f64 = cells.iter().map(|c| c.rect.area()).sum();
        assert!((area - 1.0).abs() < 1e-15);
    }

    #[test]
    fn quadratic_build_is_the_uniform_grid() {
        let f = registry_get("quadratic").unwrap();
        let p = build_partition(&f, 64, 2.0, &PartitionOptions::default()).unwrap();
        assert_eq!(p.m, 1);
        assert_eq!(p.total_cells, 64);
        assert_eq!(p.rectangle_count(), 0);
        let u = uniform_partition(64).unwrap();
        assert_eq!(u.total_cells, 64);
        for (a, b) in p.cells().zip(u.cells()) {
            assert!((a.rect.x0 - b.rect.x0).abs() < 1e-15);
            assert!((a.rect.w - b.rect.w).abs() < 1e-15);
        }
    }

    #[test]
    fn quartic_build_refines_where_laplacian_is_large() {
        let f = registry_get("quartic").unwrap();
        let opts = PartitionOptions {
            forced_m: Some(4),
            ..Default::default()
        };
        let p = build_partition(&f, 10_000, 2.0, &opts).unwrap();
        let max_area = |bx: usize, by: usize| -> f64 {
            let b = &p.blocks[by * p.m + bx];
            b.cells.iter().map(|c| c.rect.area()).fold(0.0, f64::max)
        };
        assert!(max_area(3, 3) < max_area(0, 0));
    }

    #[test]
    fn budget_normalization_holds() {
        for name in ["quartic", "bump", "klim"] {
            let f = registry_get(name).unwrap();
            let opts = PartitionOptions {
                forced_m: Some(5),
                ..Default::default()
            };
            let p = build_partition(&f, 3000, 1.0, &opts).unwrap();
            let total = p.n_tilde_total();
            assert!(
                (total - 3000.0).abs() < 1e-9 * 3000.0,
                "{name}: Σñ² = {total}"
            );
        }
    }

    #[test]
    fn tiling_and_membership_audit() {
        let f = registry_get("quartic").unwrap();
        let opts = PartitionOptions {
            forced_m: Some(3),
            ..Default::default()
        };
        let p = build_partition(&f, 500, 2.0, &opts).unwrap();
        assert!((area_total(&p) - 1.0).abs() < 1e-12);
        // membership: every sampled point falls in exactly one cell interior-
        // or-boundary, and locate() agrees with a brute-force half-open scan
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..500 {
            let (x, y) = (next(), next());
            let (b, c) = p.locate(x, y).unwrap();
            let cell = &p.blocks[b].cells[c];
            assert!(cell.rect.contains(x, y), "({x}, {y}) not in located cell");
            let mut owners = 0;
            for block in &p.blocks {
                for cell in &block.cells {
                    let r = &cell.rect;
                    let in_x = x >= r.x0 && (x < r.x0 + r.w || (r.x0 + r.w - 1.0).abs() < 1e-12);
                    let in_y = y >= r.y0 && (y < r.y0 + r.h || (r.y0 + r.h - 1.0).abs() < 1e-12);
                    if in_x && in_y {
                        owners += 1;
                    }
                }
            }
            assert_eq!(owners, 1, "point ({x}, {y}) owned by {owners} cells");
        }
    }

    #[test]
    fn def_n_sandwich_per_block() {
        let f = registry_get("bump").unwrap();
        let opts = PartitionOptions {
            forced_m: Some(4),
            ..Default::default()
        };
        let p = build_partition(&f, 2000, 2.0, &opts).unwrap();
        for b in &p.blocks {
            let n = b.n_squares as f64;
            assert!((b.n_tilde - 1.0).powi(2) < n * n + 1e-9);
            assert!(n * n <= b.n_tilde * b.n_tilde + 1e-9);
        }
    }

    #[test]
    fn element_count_double_inequality() {
        for (name, n, m) in [
            ("quartic", 4096usize, 8usize),
            ("bump", 1000, 4),
            ("klim", 640, 3),
        ] {
            let f = registry_get(name).unwrap();
            let opts = PartitionOptions {
                forced_m: Some(m),
                ..Default::default()
            };
            let p = build_partition(&f, n, 2.0, &opts).unwrap();
            let total = p.element_bound_total() as f64;
            let (nf, mf) = (n as f64, m as f64);
            assert!(total >= nf - 2.0 * mf * nf.sqrt() - 1e-9, "{name}: {total}");
            assert!(
                total <= nf + 2.0 * mf * nf.sqrt() + mf * mf + 1e-9,
                "{name}: {total}"
            );
        }
    }

    #[test]
    fn rectangle_fraction_decreases_with_n() {
        let f = registry_get("quartic").unwrap();
        let opts = PartitionOptions {
            forced_m: Some(4),
            ..Default::default()
        };
        let small = build_partition(&f, 10_000, 2.0, &opts).unwrap();
        let large = build_partition(&f, 1_000_000, 2.0, &opts).unwrap();
        assert!(
            small.rectangle_fraction() > large.rectangle_fraction(),
            "{} vs {}",
            small.rectangle_fraction(),
            large.rectangle_fraction()
        );
    }

    #[test]
    fn uniform_partition_requires_perfect_square() {
        assert!(uniform_partition(10).is_err());
        let p = uniform_partition(4).unwrap();
        assert_eq!(p.total_cells, 4);
        assert!((p.cells().next().unwrap().rect.w - 0.5).abs() < 1e-15);
        let p9 = uniform_partition(9).unwrap();
        assert!((area_total(&p9) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn optimal_allocation_beats_random_feasible_ones() {
        let m_values = [5.0f64, 1.0, 0.2];
        let n = 300.0;
        let p = 2.0;
        let exponent = p / (p + 1.0);
        let weights: Vec<f64> = m_values.iter().map(|m| m.powf(exponent)).collect();
        let total: f64 = weights.iter().sum();
        let optimal: Vec<f64> = weights.iter().map(|w| (n * w / total).sqrt()).collect();
        let best = allocation_objective(&m_values, &optimal, p, 1);
        let mut state = 0xDEADBEEFCAFEB0BAu64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..100 {
            // random feasible point on the simplex Σ ñ² = N
            let raw = [next() + 1e-3, next() + 1e-3, next() + 1e-3];
            let s: f64 = raw.iter().sum();
            let cand: Vec<f64> = raw.iter().map(|r| (n * r / s).sqrt()).collect();
            let value = allocation_objective(&m_values, &cand, p, 1);
            assert!(
                value > best - 1e-15,
                "random allocation beat the optimum: {value} < {best}"
            );
        }
    }

    #[test]
    fn cell_dump_format() {
        let p = uniform_partition(4).unwrap();
        let mut buf = Vec::new();
        p.write_cells(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("0 square "));
        assert_eq!(lines[0].split_whitespace().count(), 6);
    }
}
