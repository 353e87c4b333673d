mod cache;
mod config;
mod error;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use satake_core::{Coweight, IntersectionDim, Satake};
use serde_json::json;

use config::{parse_coweight, Config, OutputFormat};
use error::CliError;
use render::{aligned, key, tsv};

/// Weight multiplicities, tensor products and orbit geometry for reductive
/// groups given by a root datum.
#[derive(Debug, Parser)]
#[command(name = "satake", version)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the Langlands dual root datum as JSON.
    Dual,
    /// Multiplicity of the weight ν in the irreducible of highest weight λ.
    Mult {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        nu: String,
    },
    /// Full weight table of the irreducible of highest weight λ.
    Table {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
    },
    /// Orbit and semi-infinite intersection dimensions for (λ, ν).
    Dims {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        nu: String,
    },
    /// Decompose V_λ ⊗ V_μ into irreducibles.
    Tensor {
        #[arg(allow_hyphen_values = true)]
        lambda: String,
        #[arg(allow_hyphen_values = true)]
        mu: String,
    },
    /// Objects, tensor products and cross-checks up to --height-bound.
    Report,
    /// Run the invariant suite up to --height-bound.
    Check,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("satake: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<String, CliError> {
    let cfg = &cli.config;
    let datum = cfg.load_datum()?;
    if let Command::Dual = cli.command {
        let mut s = datum.langlands_dual().to_json();
        s.push('\n');
        return Ok(s);
    }

    let engine = Satake::new(datum)?.with_weyl_cap(cfg.weyl_cap);
    let cache_path = if cfg.no_cache { None } else { cfg.cache.as_deref() };
    if let Some(path) = cache_path {
        match cache::load(path, engine.datum()) {
            cache::Loaded::Entries(entries) => engine.seed_partition_cache(entries),
            cache::Loaded::Missing => {}
            cache::Loaded::Rejected(why) => {
                eprintln!("satake: ignoring cache {}: {why}", path.display());
            }
        }
    }

    // An invariant failure still leaves valid cache entries behind; keep them.
    let result = dispatch(&engine, cfg, &cli.command);
    if let Some(path) = cache_path {
        if let Err(e) = cache::save(path, engine.datum(), engine.partition_cache_entries()) {
            eprintln!("satake: could not write cache {}: {e}", path.display());
        }
    }
    result
}

fn dispatch(engine: &Satake, cfg: &Config, command: &Command) -> Result<String, CliError> {
    let sys = engine.root_system();
    let cw = |s: &str| parse_coweight(sys, s);
    let dominant = |s: &str| -> Result<Coweight, CliError> {
        let v = cw(s)?;
        sys.require_dominant(&v)?;
        Ok(v)
    };
    let fmt = cfg.format;
    match command {
        Command::Dual => unreachable!("handled before the engine is built"),
        Command::Mult { lambda, nu } => {
            let (l, n) = (dominant(lambda)?, cw(nu)?);
            let m = engine.weight_multiplicity(&l, &n)?;
            Ok(match fmt {
                OutputFormat::Json => json_line(&json!({"lambda": l, "nu": n, "multiplicity": m})),
                OutputFormat::Tsv => tsv(&["lambda", "nu", "multiplicity"], &[vec![key(&l), key(&n), m.to_string()]]),
                OutputFormat::Text => format!("{m}\n"),
            })
        }
        Command::Table { lambda } => table(engine, fmt, &dominant(lambda)?),
        Command::Dims { lambda, nu } => {
            let (l, n) = (dominant(lambda)?, cw(nu)?);
            let orbit = engine.orbit_dim(&l)?;
            let s = engine.s_intersection_dim(&n, &l)?;
            let t = engine.t_intersection_dim(&n, &l)?;
            let count = engine.mv_cycle_count(&n, &l)?;
            let dim_json = |d: IntersectionDim| match d {
                IntersectionDim::Empty => json!("Empty"),
                IntersectionDim::Dim(x) => json!(x),
            };
            Ok(match fmt {
                OutputFormat::Json => json_line(&json!({
                    "lambda": l,
                    "nu": n,
                    "orbit_dim": orbit,
                    "s_intersection_dim": dim_json(s),
                    "t_intersection_dim": dim_json(t),
                    "mv_cycle_count": count,
                })),
                OutputFormat::Tsv => tsv(
                    &["lambda", "nu", "orbit_dim", "s_dim", "t_dim", "mv_cycle_count"],
                    &[vec![key(&l), key(&n), orbit.to_string(), s.to_string(), t.to_string(), count.to_string()]],
                ),
                OutputFormat::Text => format!(
                    "orbit_dim           {orbit}\ns_intersection_dim  {s}\nt_intersection_dim  {t}\nmv_cycle_count      {count}\n"
                ),
            })
        }
        Command::Tensor { lambda, mu } => {
            let (l, m) = (dominant(lambda)?, dominant(mu)?);
            let d = engine.tensor_decompose(&l, &m)?;
            Ok(match fmt {
                OutputFormat::Json => json_line(&json!({
                    "lambda": l,
                    "mu": m,
                    "decomposition": render::decomposition_json(&d),
                })),
                OutputFormat::Tsv | OutputFormat::Text => {
                    let rows: Vec<Vec<String>> = d.iter().map(|(k, v)| vec![key(k), v.to_string()]).collect();
                    if fmt == OutputFormat::Tsv {
                        tsv(&["nu", "multiplicity"], &rows)
                    } else {
                        aligned(&["nu", "multiplicity"], &rows)
                    }
                }
            })
        }
        Command::Report => {
            let report = engine.satake_report(cfg.height_bound)?;
            let out = match fmt {
                OutputFormat::Json => json_line(&render::report_json(&report)),
                OutputFormat::Tsv => render::report_tables(&report, true),
                OutputFormat::Text => render::report_tables(&report, false),
            };
            if let Some(bad) = report.checks.iter().find(|c| !c.passed) {
                print!("{out}");
                return Err(CliError::Invariant(format!(
                    "{}: {}",
                    bad.name,
                    bad.failure.as_deref().unwrap_or("failed")
                )));
            }
            Ok(out)
        }
        Command::Check => {
            let checks = engine.run_invariant_suite(cfg.height_bound)?;
            let passed = checks.iter().all(|c| c.passed);
            let out = match fmt {
                OutputFormat::Json => json_line(&json!({
                    "height_bound": cfg.height_bound,
                    "checks": checks,
                    "passed": passed,
                })),
                OutputFormat::Tsv => tsv(&["check", "status", "cases", "failure"], &render::check_rows(&checks)),
                OutputFormat::Text => aligned(&["check", "status", "cases", "failure"], &render::check_rows(&checks)),
            };
            if !passed {
                print!("{out}");
                let failures: Vec<String> = checks
                    .iter()
                    .filter(|c| !c.passed)
                    .map(|c| format!("{}: {}", c.name, c.failure.as_deref().unwrap_or("failed")))
                    .collect();
                return Err(CliError::Invariant(failures.join("; ")));
            }
            Ok(out)
        }
    }
}

fn table(engine: &Satake, fmt: OutputFormat, l: &Coweight) -> Result<String, CliError> {
    let t = engine.weight_table(l)?;
    let dim = engine.weyl_dimension(l)?;
    let total = t.total();
    let out = match fmt {
        OutputFormat::Json => {
            let weights: Vec<_> = t.iter().map(|(nu, m)| json!({"nu": nu, "multiplicity": m})).collect();
            json_line(&json!({
                "lambda": l,
                "weights": weights,
                "total": total,
                "weyl_dimension": render::dim_json(dim),
            }))
        }
        OutputFormat::Tsv | OutputFormat::Text => {
            let mut rows: Vec<Vec<String>> = t.iter().map(|(k, v)| vec![key(k), v.to_string()]).collect();
            rows.push(vec!["# total".into(), total.to_string()]);
            rows.push(vec!["# weyl_dimension".into(), dim.to_string()]);
            if fmt == OutputFormat::Tsv {
                tsv(&["nu", "multiplicity"], &rows)
            } else {
                aligned(&["nu", "multiplicity"], &rows)
            }
        }
    };
    if u128::from(total) != dim {
        print!("{out}");
        return Err(CliError::Invariant(format!(
            "sum rule: weights of {l} total {total}, Weyl dimension {dim}"
        )));
    }
    Ok(out)
}

fn json_line(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string(v).expect("values serialize");
    s.push('\n');
    s
}
