//! Adaptive harmonic-spline approximation on the unit square.
//!
//! A harmonic spline is a continuous function that is harmonic inside every
//! cell of a box partition and matches the target function on all cell
//! boundaries. This crate builds the adaptive square-dominated partitions on
//! which that interpolation is asymptotically optimal, fits the spline by
//! solving one Dirichlet problem per cell, and measures the `L_p` error
//! against the sharp constant `‖I‖_p · ‖Δf‖_{p/(p+1)}`, where `I` is the
//! torsion function of the unit square.
//!
//! ```
//! use harmonic_splines::functions::registry_get;
//! use harmonic_splines::green_kernel::SeriesTruncation;
//! use harmonic_splines::partition::{build_partition, PartitionOptions};
//! use harmonic_splines::spline::fit;
//! use harmonic_splines::error_metrics::{asymptotic_constant, lp_error};
//! use harmonic_splines::quadrature::QuadratureSpec;
//!
//! let f = registry_get("quartic")?;
//! let part = build_partition(&f, 1024, 2.0, &PartitionOptions::default())?;
//! let model = fit(&f, part, &SeriesTruncation::default())?;
//! let err = lp_error(&f, &model, 2.0, &QuadratureSpec::default())?;
//! let constant = asymptotic_constant(&f, 2.0)?;
//! let ratio = 1024.0 * err.total_p_norm / constant;
//! assert!(ratio > 0.8 && ratio < 1.5, "N·error/constant = {ratio}");
//! # Ok::<(), harmonic_splines::Error>(())
//! ```

pub mod error;
pub mod error_metrics;
pub mod functions;
pub mod green_kernel;
pub mod harmonic_solver;
pub mod partition;
pub mod quadrature;
pub mod spline;

pub use error::{Error, Result};
pub use error_metrics::ErrorBreakdown;
pub use functions::ScalarField;
pub use green_kernel::{SeriesTruncation, UnitSquarePoint};
pub use harmonic_solver::{HarmonicCellSolution, Rect};
pub use partition::Partition;
pub use quadrature::QuadratureSpec;
pub use spline::SplineModel;
