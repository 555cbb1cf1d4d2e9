//! Command-line interface: generate synthetic manifolds, embed point clouds,
//! run the two-stage validation pipeline, and sweep sensitivity grids.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use tdpm::dataset::{
    generate_plane, generate_s_curve, generate_swiss_roll, load_csv, write_data_csv,
    write_embedding_csv, write_params_csv, ManifoldSample, Seed,
};
use tdpm::pipeline::{
    isomap_report, mds_report, sensitivity_sweep, tdpm_embed, tdpm_then_isomap, EmbeddingReport,
    TdpmConfig,
};
use tdpm::{Error, SymmetrizeMode};

#[derive(Parser)]
#[command(
    name = "tdpm",
    about = "Tangent-distance preserving manifold embedding",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Manifold {
    Swissroll,
    Scurve,
    Plane,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Tdpm,
    Isomap,
    Mds,
}

#[derive(Clone, Copy, ValueEnum)]
enum Symmetrize {
    Mean,
    Min,
    Max,
}

impl From<Symmetrize> for SymmetrizeMode {
    fn from(s: Symmetrize) -> Self {
        match s {
            Symmetrize::Mean => SymmetrizeMode::Mean,
            Symmetrize::Min => SymmetrizeMode::Min,
            Symmetrize::Max => SymmetrizeMode::Max,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic manifold sample as CSV
    Generate {
        #[arg(long, value_enum)]
        manifold: Manifold,
        /// Number of points
        #[arg(long)]
        n: usize,
        /// RNG seed; identical seeds give byte-identical files
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV (one row per point, ambient coordinates)
        #[arg(long)]
        out: PathBuf,
        /// Also write the intrinsic parameters (for plot coloring)
        #[arg(long)]
        params_out: Option<PathBuf>,
    },
    /// Embed a point cloud from CSV
    Embed {
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long)]
        input: PathBuf,
        /// Neighbor count
        #[arg(long, default_value_t = 12)]
        k: usize,
        /// Embedding dimension
        #[arg(long, default_value_t = 2)]
        dim: usize,
        /// Tangent-space rank (tdpm only; defaults to --dim)
        #[arg(long)]
        tangent_dim: Option<usize>,
        /// How to symmetrize the tangent distance matrix (tdpm only)
        #[arg(long, value_enum, default_value = "mean")]
        symmetrize: Symmetrize,
        /// Neighbor count for isomap (defaults to --k)
        #[arg(long)]
        isomap_k: Option<usize>,
        /// On a disconnected graph, embed the largest component instead of
        /// failing (isomap only); dropped indices are reported on stderr
        #[arg(long)]
        largest_component: bool,
        #[arg(long)]
        out: PathBuf,
        /// Optional JSON report with spectrum and quality metrics
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Two-stage run: tdpm to an intermediate dimension, then isomap
    Pipeline {
        #[arg(long)]
        input: PathBuf,
        /// Intermediate embedding dimension of the first stage
        #[arg(long, default_value_t = 6)]
        h: usize,
        /// Neighbor count of the first stage
        #[arg(long, default_value_t = 12)]
        k: usize,
        /// Neighbor count of the isomap stage (defaults to --k)
        #[arg(long)]
        isomap_k: Option<usize>,
        /// Final embedding dimension
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Sensitivity grid over k and n
    Sweep {
        #[arg(long, value_enum)]
        manifold: SweepManifold,
        #[arg(long = "k-list", value_delimiter = ',', default_value = "8,10,12,14")]
        k_list: Vec<usize>,
        #[arg(long = "n-list", value_delimiter = ',', default_value = "100,400,700,1000")]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output directory (created if missing)
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepManifold {
    Swissroll,
    Scurve,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn write_report(path: &Path, report: serde_json::Value) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(&report).expect("report is valid JSON");
    text.push('\n');
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn report_json(
    method: &str,
    config: serde_json::Value,
    report: &EmbeddingReport,
    timing_ms: f64,
) -> serde_json::Value {
    serde_json::json!({
        "method": method,
        "config": config,
        "eigenvalues": report.embedding.eigenvalues(),
        "negative_mass": report.negative_mass,
        "normalized_stress": report.normalized_stress,
        "distance_correlation": report.distance_correlation,
        "timing_ms": timing_ms,
    })
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Generate {
            manifold,
            n,
            seed,
            out,
            params_out,
        } => {
            let sample = match manifold {
                Manifold::Swissroll => generate_swiss_roll(n, Seed(seed))?,
                Manifold::Scurve => generate_s_curve(n, Seed(seed))?,
                Manifold::Plane => generate_plane(n, Seed(seed))?,
            };
            write_data_csv(&out, &sample.data)?;
            if let Some(p) = params_out {
                write_params_csv(&p, &sample.params)?;
            }
            Ok(())
        }
        Command::Embed {
            method,
            input,
            k,
            dim,
            tangent_dim,
            symmetrize,
            isomap_k,
            largest_component,
            out,
            report,
        } => {
            let data = load_csv(&input)?;
            let start = Instant::now();
            let (name, config, result) = match method {
                Method::Tdpm => {
                    let config = TdpmConfig::new(k, dim)
                        .with_tangent_dim(tangent_dim.unwrap_or(dim))
                        .with_symmetrize_mode(symmetrize.into());
                    let json = serde_json::json!({
                        "k": config.k,
                        "dim": config.d,
                        "tangent_dim": config.tangent_dim,
                        "symmetrize": config.symmetrize_mode.as_str(),
                    });
                    ("tdpm", json, tdpm_embed(&data, &config)?)
                }
                Method::Isomap => {
                    let k_eff = isomap_k.unwrap_or(k);
                    let json = serde_json::json!({
                        "k": k_eff,
                        "dim": dim,
                        "largest_component": largest_component,
                    });
                    let (rep, kept) = isomap_report(&data, k_eff, dim, largest_component)?;
                    if let Some(kept) = kept {
                        let dropped: Vec<usize> =
                            (0..data.n_points()).filter(|i| !kept.contains(i)).collect();
                        eprintln!(
                            "restricted to largest component: kept {} of {} points; dropped indices {:?}",
                            kept.len(),
                            data.n_points(),
                            dropped
                        );
                    }
                    ("isomap", json, rep)
                }
                Method::Mds => {
                    let json = serde_json::json!({ "dim": dim });
                    ("mds", json, mds_report(&data, dim)?)
                }
            };
            let timing_ms = start.elapsed().as_secs_f64() * 1e3;
            write_embedding_csv(&out, &result.embedding, None)?;
            if let Some(path) = report {
                write_report(&path, report_json(name, config, &result, timing_ms))?;
            }
            Ok(())
        }
        Command::Pipeline {
            input,
            h,
            k,
            isomap_k,
            dim,
            out,
            report,
        } => {
            let data = load_csv(&input)?;
            let config = TdpmConfig::new(k, h);
            let k2 = isomap_k.unwrap_or(k);
            let start = Instant::now();
            let result = tdpm_then_isomap(&data, &config, k2, dim)?;
            let timing_ms = start.elapsed().as_secs_f64() * 1e3;
            write_embedding_csv(&out, &result.embedding, None)?;
            if let Some(path) = report {
                let json = serde_json::json!({
                    "h": h,
                    "k": k,
                    "isomap_k": k2,
                    "dim": dim,
                });
                write_report(&path, report_json("tdpm+isomap", json, &result, timing_ms))?;
            }
            Ok(())
        }
        Command::Sweep {
            manifold,
            k_list,
            n_list,
            dim,
            seed,
            out,
        } => {
            if k_list.is_empty() || n_list.is_empty() {
                return Err(Error::InvalidArgument(
                    "k-list and n-list must be non-empty".into(),
                ));
            }
            let n_max = *n_list.iter().max().expect("non-empty list");
            let sample = match manifold {
                SweepManifold::Swissroll => generate_swiss_roll(n_max, Seed(seed))?,
                SweepManifold::Scurve => generate_s_curve(n_max, Seed(seed))?,
            };
            std::fs::create_dir_all(&out).map_err(|source| Error::Io {
                path: out.clone(),
                source,
            })?;
            let table = sensitivity_sweep(&sample, &k_list, &n_list, dim);
            write_sweep_outputs(&out, &sample, &table)
        }
    }
}

fn write_sweep_outputs(
    dir: &Path,
    sample: &ManifoldSample,
    table: &tdpm::pipeline::SweepTable,
) -> Result<(), Error> {
    let mut summary =
        String::from("k,n,status,normalized_stress,distance_correlation,negative_mass,message\n");
    for cell in &table.cells {
        match &cell.result {
            Ok(report) => {
                writeln!(
                    summary,
                    "{},{},ok,{:.17e},{:.17e},{:.17e},",
                    cell.k,
                    cell.n,
                    report.normalized_stress,
                    report.distance_correlation,
                    report.negative_mass
                )
                .expect("write to String cannot fail");
                let path = dir.join(format!("embedding_k{}_n{}.csv", cell.k, cell.n));
                let params = sample.prefix(cell.n)?.params;
                write_embedding_csv(&path, &report.embedding, Some(&params))?;
            }
            Err(e) => {
                let message = e.to_string().replace(',', ";");
                writeln!(summary, "{},{},error,,,,{message}", cell.k, cell.n)
                    .expect("write to String cannot fail");
            }
        }
    }
    let summary_path = dir.join("summary.csv");
    std::fs::write(&summary_path, summary).map_err(|source| Error::Io {
        path: summary_path.clone(),
        source,
    })?;

    let mut adjacent = String::from("n,k_low,k_high,procrustes_error\n");
    for adj in &table.adjacent {
        writeln!(
            adjacent,
            "{},{},{},{:.17e}",
            adj.n, adj.k_low, adj.k_high, adj.error
        )
        .expect("write to String cannot fail");
    }
    let adjacent_path = dir.join("adjacent_procrustes.csv");
    std::fs::write(&adjacent_path, adjacent).map_err(|source| Error::Io {
        path: adjacent_path.clone(),
        source,
    })
}
