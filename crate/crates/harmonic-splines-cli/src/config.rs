//! Experiment configuration: TOML file plus flag overrides, validation, and a
//! content hash so reports can be traced back to the exact settings.

use std::path::PathBuf;

use harmonic_splines::green_kernel::SeriesTruncation;
use harmonic_splines::quadrature::QuadratureSpec;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ExperimentConfig {
    /// Registry field name; mutually exclusive with `grid`.
    pub field: Option<String>,
    /// Plain-text grid file ingested as a bicubic field.
    pub grid: Option<PathBuf>,
    pub p_list: Vec<f64>,
    pub n_list: Vec<usize>,
    /// Slack for the modulus-based block count (only used with `auto_m`).
    pub eps: f64,
    /// Fixed block count per axis; overrides `gamma`.
    pub forced_m: Option<usize>,
    /// Exponent of the rule m = ceil(N^gamma); default 0.25.
    pub gamma: Option<f64>,
    /// Choose m from the sampled smoothness modulus instead of a rule.
    pub auto_m: bool,
    pub max_mode: usize,
    pub tail_tol: f64,
    pub nodes_per_cell_axis: usize,
    pub global_lattice: usize,
    pub output_dir: PathBuf,
    pub compare_uniform: bool,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            field: None,
            grid: None,
            p_list: vec![1.0, 2.0],
            n_list: vec![256, 1024, 4096],
            eps: 0.1,
            forced_m: None,
            gamma: None,
            auto_m: false,
            max_mode: 64,
            tail_tol: 1e-10,
            nodes_per_cell_axis: 12,
            global_lattice: 16,
            output_dir: PathBuf::from("reports"),
            compare_uniform: false,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), String> {
        if self.field.is_some() && self.grid.is_some() {
            return Err("specify either a field name or a grid file, not both".into());
        }
        if self.n_list.is_empty() {
            return Err("n_list must not be empty".into());
        }
        if !self.n_list.windows(2).all(|w| w[0] < w[1]) {
            return Err("n_list must be strictly increasing".into());
        }
        if self.p_list.is_empty() {
            return Err("p_list must not be empty".into());
        }
        if let Some(&p) = self.p_list.iter().find(|&&p| p.is_nan() || p < 1.0) {
            return Err(format!("every p must be >= 1, got {p}"));
        }
        if let Some(g) = self.gamma {
            if !(g > 0.0 && g < 0.5) {
                return Err(format!("gamma must lie in (0, 0.5), got {g}"));
            }
        }
        if !(self.eps > 0.0 && self.eps < 1.0) {
            return Err(format!("eps must lie in (0, 1), got {}", self.eps));
        }
        if self.max_mode < 1 {
            return Err("max_mode must be >= 1".into());
        }
        if self.nodes_per_cell_axis < 2 || self.global_lattice < 1 {
            return Err("quadrature parameters out of range".into());
        }
        Ok(())
    }

    /// Block count per axis for budget `n` under the configured rule.
    pub fn forced_m_for(&self, n: usize) -> Option<usize> {
        if self.auto_m {
            return None;
        }
        if let Some(m) = self.forced_m {
            return Some(m.max(1));
        }
        let gamma = self.gamma.unwrap_or(0.25);
        Some((n as f64).powf(gamma).ceil() as usize)
    }

    /// Human-readable form of the block-count rule, for provenance.
    pub fn m_rule_label(&self) -> String {
        if self.auto_m {
            "modulus".to_string()
        } else if let Some(m) = self.forced_m {
            format!("fixed {m}")
        } else {
            format!("ceil(N^{})", self.gamma.unwrap_or(0.25))
        }
    }

    pub fn truncation(&self) -> Result<SeriesTruncation, String> {
        SeriesTruncation::new(self.max_mode, self.tail_tol).map_err(|e| e.to_string())
    }

    pub fn quadrature(&self) -> Result<QuadratureSpec, String> {
        QuadratureSpec::new(self.nodes_per_cell_axis, self.global_lattice)
            .map_err(|e| e.to_string())
    }

    /// SHA-256 of the resolved configuration, hex-encoded.
    pub fn content_hash(&self) -> String {
        let canonical = serde_json::to_string(self).expect("config serializes");
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }
}

pub fn load_toml(path: &std::path::Path) -> Result<ExperimentConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    toml::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
}
