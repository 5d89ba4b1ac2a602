//! Report assembly: CSV rows for the convergence sweep and a JSON provenance
//! block carrying every tolerance-bearing parameter. Output is byte-stable for
//! a fixed configuration: fixed-precision floats, no timestamps.

use std::io::Write;

use serde::Serialize;

use crate::config::ExperimentConfig;

#[derive(Debug, Clone)]
pub struct Row {
    pub variant: &'static str,
    pub p: f64,
    pub n_target: usize,
    pub total_cells: usize,
    pub m: usize,
    pub rectangle_count: usize,
    pub error: f64,
    pub constant: f64,
}

impl Row {
    pub fn n_error(&self) -> f64 {
        self.n_target as f64 * self.error
    }

    /// `N·error / constant`, or the sentinel `exact` when the constant
    /// vanishes (harmonic fields are reproduced up to series tolerance).
    pub fn ratio_field(&self) -> String {
        if self.constant.abs() < 1e-12 {
            "exact".to_string()
        } else {
            format!("{:.12e}", self.n_error() / self.constant)
        }
    }
}

pub const CSV_HEADER: &str =
    "variant,p,n_target,total_cells,m,rectangle_count,error,n_error,theorem1_constant,ratio";

pub fn write_csv<W: Write>(rows: &[Row], out: &mut W) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{:.12e},{},{},{},{},{:.12e},{:.12e},{:.12e},{}",
            r.variant,
            r.p,
            r.n_target,
            r.total_cells,
            r.m,
            r.rectangle_count,
            r.error,
            r.n_error(),
            r.constant,
            r.ratio_field()
        )?;
    }
    Ok(())
}

#[derive(Debug, Serialize)]
pub struct Provenance {
    pub field: String,
    pub m_rule: String,
    pub eps: f64,
    pub max_mode: usize,
    pub tail_tol: f64,
    pub nodes_per_cell_axis: usize,
    pub global_lattice: usize,
    pub p_list: Vec<f64>,
    pub n_list: Vec<usize>,
    pub compare_uniform: bool,
    pub config_hash: String,
}

impl Provenance {
    pub fn from_config(config: &ExperimentConfig, field_label: &str) -> Self {
        Provenance {
            field: field_label.to_string(),
            m_rule: config.m_rule_label(),
            eps: config.eps,
            max_mode: config.max_mode,
            tail_tol: config.tail_tol,
            nodes_per_cell_axis: config.nodes_per_cell_axis,
            global_lattice: config.global_lattice,
            p_list: config.p_list.clone(),
            n_list: config.n_list.clone(),
            compare_uniform: config.compare_uniform,
            config_hash: config.content_hash(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("provenance serializes")
    }
}
