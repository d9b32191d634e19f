use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fsle::CostModel;
use fsle_cli::commands::{
    cmd_compare, cmd_opcount, cmd_plot, cmd_solve, parse_weak_rule, MethodChoice, RunConfig,
};

#[derive(Parser)]
#[command(name = "fsle", about = "Solve n-by-n fuzzy systems of linear equations", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SolveArgs {
    /// Problem file (JSON)
    file: PathBuf,
    /// friedman | ezzati | embedding | embedding-triangular | auto
    #[arg(long, default_value = "auto")]
    method: String,
    #[arg(long, default_value_t = fsle::DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Number of z grid points for validation and export
    #[arg(long, default_value_t = fsle::DEFAULT_GRID_POINTS)]
    grid: usize,
    /// friedman | ezzati (defaults to the method's own rule)
    #[arg(long)]
    weak_rule: Option<String>,
    /// Directory for CSV/SVG output
    #[arg(long)]
    out: Option<PathBuf>,
}

impl SolveArgs {
    fn config(&self) -> anyhow::Result<RunConfig> {
        Ok(RunConfig {
            method: MethodChoice::parse(&self.method)?,
            tolerance: self.tolerance,
            grid_points: self.grid,
            weak_rule: self.weak_rule.as_deref().map(parse_weak_rule).transpose()?,
            out_dir: self.out.clone(),
        })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve a problem file and report the solution
    Solve(SolveArgs),
    /// Run all applicable methods and compare results and costs
    Compare(SolveArgs),
    /// Print the closed-form multiplication counts for given sizes
    Opcount {
        /// Comma-separated list of system sizes (each >= 2)
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        /// cubic | lu-thirds
        #[arg(long, default_value = "cubic")]
        model: String,
    },
    /// Solve and emit one membership-function SVG per component
    Plot(SolveArgs),
}

fn run() -> anyhow::Result<i32> {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve(args) => {
            let outcome = cmd_solve(&args.file, &args.config()?)?;
            print!("{}", outcome.rendered);
            Ok(outcome.exit_code)
        }
        Command::Compare(args) => {
            let outcome = cmd_compare(&args.file, &args.config()?)?;
            print!("{}", outcome.rendered);
            Ok(0)
        }
        Command::Opcount { n, model } => {
            let model = CostModel::parse(&model)
                .ok_or_else(|| anyhow::anyhow!("unknown cost model '{model}'"))?;
            print!("{}", cmd_opcount(&n, model)?);
            Ok(0)
        }
        Command::Plot(args) => {
            let outcome = cmd_plot(&args.file, &args.config()?)?;
            print!("{}", outcome.rendered);
            Ok(outcome.exit_code)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
