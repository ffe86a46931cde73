use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gvblocks::report::{object, to_json, to_text};
use gvblocks::{parse_config, run, CliError, Command};
use serde_json::Value;

#[derive(Parser)]
#[command(
    name = "gvblocks",
    version,
    about = "Conformal block dimensions and torus data for pointed ribbon categories"
)]
struct Cli {
    /// JSON config file
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Numerical tolerance (overrides the config)
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Print the report as JSON
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Group, form, verdicts, Mueger center and anomaly
    Inspect,
    /// Dimension of the space of blocks on a labeled surface
    Blocks {
        #[arg(long, allow_negative_numbers = true)]
        genus: i64,
        /// Boundary labels separated by `;`, coordinates by `,` (e.g. "1,0;0,1")
        #[arg(long)]
        labels: Option<String>,
        /// Also glue along every enumerated pants decomposition
        #[arg(long)]
        glued: bool,
    },
    /// S and T matrices with the modular relation residuals
    TorusRep,
    /// Discriminant group and form of a lattice config
    Lattice,
    /// Closed-surface dimensions for genus 1..=max-genus
    Verlinde {
        #[arg(long, default_value_t = 3)]
        max_genus: u32,
    },
}

fn execute(cli: &Cli) -> Result<Value, CliError> {
    let path = cli
        .config
        .as_ref()
        .ok_or_else(|| CliError::validation("cli.config", "--config PATH is required"))?;
    let config = parse_config(path)?;
    let command = match &cli.command {
        Sub::Inspect => Command::Inspect,
        Sub::Blocks {
            genus,
            labels,
            glued,
        } => Command::Blocks {
            genus: *genus,
            labels: labels.clone(),
            glued: *glued,
        },
        Sub::TorusRep => Command::TorusRep,
        Sub::Lattice => Command::Lattice,
        Sub::Verlinde { max_genus } => Command::Verlinde {
            max_genus: *max_genus,
        },
    };
    run(&command, &config, cli.tol)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(report) => {
            if cli.json {
                println!("{}", to_json(&report));
            } else {
                print!("{}", to_text(&report));
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if cli.json {
                let err = object([
                    ("code", Value::from(e.code.clone())),
                    ("message", Value::from(e.message.clone())),
                ]);
                println!("{}", to_json(&object([("error", err)])));
            }
            eprintln!("{e}");
            ExitCode::from(e.exit_code)
        }
    }
}
