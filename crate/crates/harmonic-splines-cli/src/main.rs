//! Batch experiment runner for adaptive harmonic-spline approximation: sweeps
//! partition budgets, measures `N·error` against the limiting constant, and
//! writes machine-readable reports.

mod config;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use harmonic_splines::error_metrics::{asymptotic_constant, lp_error, norm_i_reference};
use harmonic_splines::functions::{load_grid, parse_grid, registry_get, ScalarField};
use harmonic_splines::partition::{
    build_partition, uniform_partition, Partition, PartitionOptions,
};
use harmonic_splines::spline::fit;

use config::ExperimentConfig;
use report::{Provenance, Row};

/// Environment variable limiting the rayon pool used for cell solves.
const WORKERS_ENV: &str = "HARMONIC_SPLINES_WORKERS";

#[derive(Parser)]
#[command(
    name = "harmonic-splines",
    about = "Harmonic-spline approximation experiments on the unit square",
    version
)]
struct Cli {
    /// TOML configuration file; flags below override its fields.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Registry field: quadratic, harmonic, quartic, bump, klim.
    #[arg(long, global = true)]
    field: Option<String>,

    /// Plain-text grid file to ingest instead of a registry field.
    #[arg(long, global = true)]
    grid: Option<PathBuf>,

    /// Norm indices p (repeatable).
    #[arg(long = "p", global = true)]
    p_list: Vec<f64>,

    /// Partition budgets N (repeatable).
    #[arg(long = "n", global = true)]
    n_list: Vec<usize>,

    #[arg(long, global = true)]
    eps: Option<f64>,

    /// Fixed block count per axis.
    #[arg(long, global = true)]
    forced_m: Option<usize>,

    /// Block-count exponent: m = ceil(N^gamma), gamma in (0, 0.5).
    #[arg(long, global = true)]
    gamma: Option<f64>,

    /// Derive the block count from the sampled smoothness modulus.
    #[arg(long, global = true)]
    auto_m: bool,

    /// Series truncation: retained modes per cell edge.
    #[arg(long, global = true)]
    max_mode: Option<usize>,

    #[arg(long, global = true)]
    tail_tol: Option<f64>,

    /// Gauss-Legendre nodes per cell axis for error quadrature.
    #[arg(long, global = true)]
    nodes: Option<usize>,

    /// Composite lattice per axis for global integrals.
    #[arg(long, global = true)]
    lattice: Option<usize>,

    #[arg(long, global = true)]
    output_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the budgets and report N·error against the limiting constant.
    Converge,
    /// Paired adaptive / uniform sweep (budgets must be perfect squares).
    Compare,
    /// Print the cell list of one adaptive partition.
    DumpPartition {
        /// Partition budget N.
        #[arg(long)]
        budget: usize,
        /// Norm index p steering the allocation.
        #[arg(long, default_value_t = 2.0)]
        norm: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit one spline and print it as a value lattice.
    DumpSpline {
        /// Partition budget N.
        #[arg(long)]
        budget: usize,
        /// Norm index p steering the allocation.
        #[arg(long, default_value_t = 2.0)]
        norm: f64,
        #[arg(long, default_value_t = 101)]
        resolution: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the torsion-function norms for the configured p list.
    Constants,
}

fn resolve_config(cli: &Cli) -> Result<ExperimentConfig, String> {
    let mut cfg = match &cli.config {
        Some(path) => config::load_toml(path)?,
        None => ExperimentConfig::default(),
    };
    if cli.field.is_some() {
        cfg.field = cli.field.clone();
        cfg.grid = None;
    }
    if cli.grid.is_some() {
        cfg.grid = cli.grid.clone();
        cfg.field = None;
    }
    if !cli.p_list.is_empty() {
        cfg.p_list = cli.p_list.clone();
    }
    if !cli.n_list.is_empty() {
        cfg.n_list = cli.n_list.clone();
    }
    if let Some(eps) = cli.eps {
        cfg.eps = eps;
    }
    if cli.forced_m.is_some() {
        cfg.forced_m = cli.forced_m;
    }
    if cli.gamma.is_some() {
        cfg.gamma = cli.gamma;
    }
    if cli.auto_m {
        cfg.auto_m = true;
    }
    if let Some(m) = cli.max_mode {
        cfg.max_mode = m;
    }
    if let Some(t) = cli.tail_tol {
        cfg.tail_tol = t;
    }
    if let Some(n) = cli.nodes {
        cfg.nodes_per_cell_axis = n;
    }
    if let Some(l) = cli.lattice {
        cfg.global_lattice = l;
    }
    if let Some(dir) = &cli.output_dir {
        cfg.output_dir = dir.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

fn resolve_field(cfg: &ExperimentConfig) -> Result<(ScalarField, String), String> {
    if let Some(path) = &cfg.grid {
        let text =
            fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let rows = parse_grid(&text).map_err(|e| e.to_string())?;
        let field = load_grid(&rows).map_err(|e| e.to_string())?;
        return Ok((field, format!("grid:{}", path.display())));
    }
    let name = cfg
        .field
        .as_deref()
        .ok_or_else(|| "no field selected; pass --field or --grid".to_string())?;
    let field = registry_get(name).map_err(|e| e.to_string())?;
    Ok((field, name.to_string()))
}

fn adaptive_partition(
    cfg: &ExperimentConfig,
    f: &ScalarField,
    n: usize,
    p: f64,
) -> Result<Partition, String> {
    let opts = PartitionOptions {
        eps: cfg.eps,
        forced_m: cfg.forced_m_for(n),
        m_floor: None,
    };
    build_partition(f, n, p, &opts).map_err(|e| e.to_string())
}

fn measure(
    cfg: &ExperimentConfig,
    f: &ScalarField,
    partition: Partition,
    p: f64,
    constant: f64,
    variant: &'static str,
) -> Result<Row, String> {
    let n_target = partition.n_target;
    let m = partition.m;
    let total_cells = partition.total_cells;
    let rectangle_count = partition.rectangle_count();
    let trunc = cfg.truncation()?;
    let model = fit(f, partition, &trunc).map_err(|e| e.to_string())?;
    let err = lp_error(f, &model, p, &cfg.quadrature()?).map_err(|e| e.to_string())?;
    Ok(Row {
        variant,
        p,
        n_target,
        total_cells,
        m,
        rectangle_count,
        error: err.total_p_norm,
        constant,
    })
}

fn write_outputs(
    cfg: &ExperimentConfig,
    rows: &[Row],
    field_label: &str,
    partitions: &[(f64, usize, Partition)],
    stem: &str,
) -> Result<(), String> {
    fs::create_dir_all(&cfg.output_dir)
        .map_err(|e| format!("cannot create {}: {e}", cfg.output_dir.display()))?;
    let mut csv = Vec::new();
    report::write_csv(rows, &mut csv).expect("vec write");
    let csv_path = cfg.output_dir.join(format!("{stem}.csv"));
    fs::write(&csv_path, &csv).map_err(|e| format!("cannot write {}: {e}", csv_path.display()))?;
    let prov = Provenance::from_config(cfg, field_label).to_json();
    let prov_path = cfg.output_dir.join(format!("{stem}_provenance.json"));
    fs::write(&prov_path, prov.as_bytes())
        .map_err(|e| format!("cannot write {}: {e}", prov_path.display()))?;
    for (p, n, partition) in partitions {
        let mut buf = Vec::new();
        partition.write_cells(&mut buf).expect("vec write");
        let path = cfg.output_dir.join(format!("partition_p{p}_n{n}.txt"));
        fs::write(&path, &buf).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    }
    print!("{}", String::from_utf8(csv).expect("csv is utf-8"));
    Ok(())
}

fn run_converge(cfg: &ExperimentConfig) -> Result<(), String> {
    let (f, label) = resolve_field(cfg)?;
    let mut rows = Vec::new();
    let mut partitions = Vec::new();
    for &p in &cfg.p_list {
        let constant = asymptotic_constant(&f, p).map_err(|e| e.to_string())?;
        for &n in &cfg.n_list {
            let partition = adaptive_partition(cfg, &f, n, p)?;
            partitions.push((p, n, partition.clone()));
            rows.push(measure(cfg, &f, partition, p, constant, "adaptive")?);
        }
    }
    write_outputs(cfg, &rows, &label, &partitions, "converge")
}

fn run_compare(cfg: &ExperimentConfig) -> Result<(), String> {
    for &n in &cfg.n_list {
        let root = (n as f64).sqrt().round() as usize;
        if root * root != n {
            return Err(format!("compare requires perfect-square budgets, got {n}"));
        }
    }
    let (f, label) = resolve_field(cfg)?;
    let mut rows = Vec::new();
    for &p in &cfg.p_list {
        let constant = asymptotic_constant(&f, p).map_err(|e| e.to_string())?;
        for &n in &cfg.n_list {
            let adaptive = adaptive_partition(cfg, &f, n, p)?;
            rows.push(measure(cfg, &f, adaptive, p, constant, "adaptive")?);
            let uniform = uniform_partition(n).map_err(|e| e.to_string())?;
            rows.push(measure(cfg, &f, uniform, p, constant, "uniform")?);
        }
    }
    write_outputs(cfg, &rows, &label, &[], "compare")
}

fn write_or_print(out: Option<&Path>, bytes: &[u8]) -> Result<(), String> {
    match out {
        Some(path) => {
            if let Some(dir) = path.parent() {
                if !dir.as_os_str().is_empty() {
                    fs::create_dir_all(dir).map_err(|e| e.to_string())?;
                }
            }
            fs::write(path, bytes).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{}", String::from_utf8_lossy(bytes));
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), String> {
    if let Ok(workers) = std::env::var(WORKERS_ENV) {
        let count: usize = workers
            .parse()
            .map_err(|_| format!("{WORKERS_ENV} must be a positive integer, got {workers:?}"))?;
        if count == 0 {
            return Err(format!("{WORKERS_ENV} must be a positive integer"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(count)
            .build_global()
            .map_err(|e| format!("cannot size worker pool: {e}"))?;
    }
    let cfg = resolve_config(cli)?;
    match &cli.command {
        Command::Converge => run_converge(&cfg),
        Command::Compare => run_compare(&cfg),
        Command::DumpPartition { budget, norm, out } => {
            let (f, _) = resolve_field(&cfg)?;
            let partition = adaptive_partition(&cfg, &f, *budget, *norm)?;
            let mut buf = Vec::new();
            partition.write_cells(&mut buf).expect("vec write");
            write_or_print(out.as_deref(), &buf)
        }
        Command::DumpSpline {
            budget,
            norm,
            resolution,
            out,
        } => {
            if *resolution < 2 {
                return Err("resolution must be at least 2".into());
            }
            let (f, _) = resolve_field(&cfg)?;
            let partition = adaptive_partition(&cfg, &f, *budget, *norm)?;
            let trunc = cfg.truncation()?;
            let model = fit(&f, partition, &trunc).map_err(|e| e.to_string())?;
            let mut buf = Vec::new();
            model.dump_grid(*resolution, &mut buf).expect("vec write");
            write_or_print(out.as_deref(), &buf)
        }
        Command::Constants => {
            println!("p,norm_i");
            for &p in &cfg.p_list {
                let v = norm_i_reference(p).map_err(|e| e.to_string())?;
                println!("{p:.12e},{v:.12e}");
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
