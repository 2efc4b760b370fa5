use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use nbgraphlets::report::{self, Counter, Format, RunConfig};

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Parser)]
#[command(name = "nbgraphlets", version)]
#[command(about = "Rooted subgraph and cycle counts through the non-backtracking matrix")]
struct Cli {
    /// Edge list, one `u v` pair per line
    #[arg(long)]
    input: PathBuf,
    /// Comma-separated counters: order3, order4, order5, k6, cycles, generic:<pattern-file>
    #[arg(long, value_delimiter = ',', required = true)]
    counts: Vec<String>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Cross-check every count against the brute-force oracle
    #[arg(long)]
    oracle_check: bool,
    /// Largest graph the oracle check runs on
    #[arg(long, default_value_t = 12)]
    max_oracle_n: usize,
    /// Report wall time per stage (makes output run-dependent)
    #[arg(long)]
    timings: bool,
    /// Output file; standard output when absent
    #[arg(long)]
    output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> nbgraphlets::Result<()> {
    let counters = cli
        .counts
        .iter()
        .map(|s| s.parse::<Counter>())
        .collect::<nbgraphlets::Result<Vec<_>>>()?;
    let config = RunConfig {
        input: cli.input,
        counters,
        format: match cli.format {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        },
        oracle_check: cli.oracle_check,
        max_oracle_n: cli.max_oracle_n,
        timings: cli.timings,
    };
    let report = report::run(&config)?;
    if config.oracle_check && report.verified == Some(false) {
        eprintln!(
            "warning: oracle check skipped, graph has {} vertices (limit {})",
            report.n, config.max_oracle_n
        );
    }
    let text = report.render(&config)?;
    match cli.output {
        Some(path) => std::fs::write(&path, text).map_err(|e| nbgraphlets::Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
