use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sso_core::benchmarks::{list_functions, BenchmarkId, DIMENSION};
use sso_core::harness::{
    parse_config, run_algorithm, run_campaign_with, write_trace, Algorithm, RunArgs,
};
use sso_core::{Error, Result};

#[derive(Parser)]
#[command(name = "sso", version, about = "Social spider optimization experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a campaign and write summary.csv, pvalues.csv and traces/
    Run(RunArgs),
    /// List the benchmark functions
    ListFunctions,
    /// Run one algorithm once and print its trace
    Single {
        #[arg(long)]
        function: BenchmarkId,
        #[arg(long)]
        algorithm: Algorithm,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        iterations: Option<String>,
        #[arg(long)]
        population: Option<String>,
        #[arg(long)]
        pf: Option<String>,
    },
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(command: Command) -> Result<()> {
    match command {
        Command::Run(args) => {
            let cfg = args.resolve()?;
            eprintln!(
                "campaign {}: {} functions x {} algorithms x {} runs -> {}",
                cfg.digest(),
                cfg.functions.len(),
                cfg.algorithms.len(),
                cfg.runs,
                cfg.output_dir.display()
            );
            let table = run_campaign_with(&cfg, |p| {
                eprintln!(
                    "[{}/{}] {} {} run {}: {:e}",
                    p.done, p.total, p.function, p.algorithm, p.run, p.best_fitness
                );
            })?;
            eprintln!(
                "wrote {} summary rows and {} p-values",
                table.rows.len(),
                table.p_values.len()
            );
        }
        Command::ListFunctions => {
            let mut out = io::stdout().lock();
            writeln!(out, "id,name,low,high,optimum,optimum_testable")?;
            for e in list_functions() {
                let (lo, hi) = e.id.domain();
                let opt = e.spec.optimum_value.map_or(String::new(), |v| v.to_string());
                writeln!(out, "{},{},{lo},{hi},{opt},{}", e.id, e.name, e.optimum_testable)?;
            }
        }
        Command::Single {
            function,
            algorithm,
            seed,
            iterations,
            population,
            pf,
        } => {
            let args = RunArgs {
                iterations,
                population,
                pf,
                seed: Some(seed.to_string()),
                ..RunArgs::default()
            };
            let cfg = parse_config(None, &args)?;
            let record = run_algorithm(algorithm, &function.objective(DIMENSION), &cfg, seed)?;
            let header = format!(
                "config={} base_seed={seed} function={function} algorithm={algorithm}",
                cfg.digest()
            );
            write_trace(&record, Some(&header), &mut io::stdout().lock())?;
        }
    }
    Ok(())
}
