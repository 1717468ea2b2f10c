mod check;
mod config;
mod output;
mod store;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use hairycalc::engine::{build_block, compute_table_with};
use hairycalc::koszul::kq_dimension;
use hairycalc::oracles::{config_poincare, free_graded_lie_dims, tree_homology_oracle, whitehead_kernel_dim};
use hairycalc::{Error, Params};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use config::{resolve, Format, JobArgs, JobConfig, CACHE_ENV};
use store::BlockStore;

#[derive(Parser, Debug)]
#[command(name = "hairycalc", version, about = "Homology of colored hairy graph complexes and Koszul forest complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Homology tables for a grid of blocks.
    Homology {
        #[command(flatten)]
        job: JobArgs,
        /// Write the table here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run every consistency check on a grid.
    Check {
        #[command(flatten)]
        job: JobArgs,
    },
    /// Standalone oracle tables.
    Oracle {
        #[command(subcommand)]
        which: OracleCmd,
        #[arg(long, value_enum, global = true)]
        format: Option<Format>,
    },
}

#[derive(Subcommand, Debug)]
enum OracleCmd {
    /// Poincaré polynomial of the configuration space of k points in R^n.
    ConfigPoincare {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Dimension of the Whitehead kernel.
    Whitehead {
        #[arg(long, value_delimiter = ',')]
        m: Vec<i64>,
        #[arg(long)]
        d: i64,
    },
    /// Dimensions of a free graded Lie algebra.
    Lie {
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        degrees: Vec<i64>,
        #[arg(long)]
        max_weight: usize,
    },
    /// Degree and dimension of a piece of the Koszul dual module.
    Kq {
        #[arg(long, value_delimiter = ',')]
        m: Vec<i64>,
        #[arg(long, value_delimiter = ',')]
        s: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        k: Vec<usize>,
    },
    /// Predicted genus-zero homology for one hair vector.
    Tree {
        #[arg(long, value_delimiter = ',')]
        m: Vec<i64>,
        #[arg(long)]
        d: i64,
        #[arg(long, value_delimiter = ',')]
        s: Vec<usize>,
    },
}

enum Failure {
    Check(String),
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidInput(_) | Error::OutOfRange(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn setup(job: &JobArgs) -> Result<(JobConfig, Option<BlockStore>), Failure> {
    let env_cache = std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from);
    let cfg = resolve(job, env_cache).map_err(Failure::Usage)?;
    // a pool may already exist when called twice in one process
    let _ = rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build_global();
    let store = match &cfg.cache_dir {
        Some(dir) => Some(BlockStore::open(dir)?),
        None => None,
    };
    if !cfg.params().map_err(Failure::Usage)?.in_theorem_range() {
        eprintln!("warning: codimension d - max m = {} is at most 2 (below-theorem-range)", cfg.d - cfg.m.iter().max().unwrap_or(&0));
    }
    Ok((cfg, store))
}

fn homology(job: &JobArgs, output: Option<&PathBuf>) -> Result<(), Failure> {
    let (cfg, store) = setup(job)?;
    let spec = cfg.grid().map_err(Failure::Usage)?;
    let start = Instant::now();
    let table = compute_table_with(&spec, &cfg.rank_options(), |key, opts| match &store {
        Some(s) => s.provide(key, opts),
        None => build_block(key, opts),
    })?;
    let ms = start.elapsed().as_millis();
    let text = match cfg.format {
        Format::Json => output::homology_json(&cfg, &table, ms),
        Format::Csv => output::records_csv(&table.records()),
    };
    emit(&text, output)
}

fn check(job: &JobArgs) -> Result<(), Failure> {
    let (cfg, store) = setup(job)?;
    let report = check::run_checks(&cfg, store.as_ref())?;
    let text = match cfg.format {
        Format::Json => output::pretty(&serde_json::to_value(&report).expect("report serializes")),
        Format::Csv => output::rows_csv(
            &report
                .checks
                .iter()
                .map(|c| output::CheckRow {
                    check: c.name,
                    status: c.status,
                    items: c.items,
                    failures: c.failures.join(" | "),
                })
                .collect::<Vec<_>>(),
        ),
    };
    emit(&text, None)?;
    match report.first_failure() {
        Some(f) if !report.passed => Err(Failure::Check(f)),
        _ => Ok(()),
    }
}

fn big(v: &num_bigint::BigInt) -> Value {
    match v.to_u64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

fn oracle(which: &OracleCmd, format: Format) -> Result<(), Failure> {
    let rows: Vec<Value> = match which {
        OracleCmd::ConfigPoincare { k, n } => config_poincare(*k, *n)?
            .iter()
            .enumerate()
            .filter(|(_, c)| c.to_u64() != Some(0))
            .map(|(p, c)| json!({"power": p, "coefficient": big(c)}))
            .collect(),
        OracleCmd::Whitehead { m, d } => {
            let p = Params::new(m.clone(), *d)?;
            vec![json!({"kernel_dim": whitehead_kernel_dim(&p)?})]
        }
        OracleCmd::Lie { degrees, max_weight } => free_graded_lie_dims(degrees, *max_weight)?
            .iter()
            .map(|(w, n, dim)| json!({"weight": w, "degree": n, "dim": dim}))
            .collect(),
        OracleCmd::Kq { m, s, k } => {
            let (degree, dim) = kq_dimension(m, s, k)?;
            vec![json!({"degree": degree, "dim": big(&dim)})]
        }
        OracleCmd::Tree { m, d, s } => {
            let p = Params::new(m.clone(), *d)?;
            tree_homology_oracle(&p, s)?
                .iter()
                .map(|(w, n, dim)| json!({"s": w, "degree": n, "dim": dim}))
                .collect()
        }
    };
    let text = match format {
        Format::Json => output::pretty(&json!({ "records": rows })),
        Format::Csv => oracle_csv(&rows),
    };
    emit(&text, None)
}

fn oracle_csv(rows: &[Value]) -> String {
    let mut out = String::new();
    if let Some(Value::Object(first)) = rows.first() {
        out.push_str(&first.keys().cloned().collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    for r in rows {
        if let Value::Object(map) = r {
            let cells: Vec<String> = map
                .values()
                .map(|v| match v {
                    Value::Array(items) => items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";"),
                    Value::String(s) => s.clone(),
                    other => other.to_string(),
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Homology { job, output } => homology(job, output.as_ref()),
        Command::Check { job } => check(job),
        Command::Oracle { which, format } => oracle(which, format.unwrap_or(Format::Json)),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
