use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use grayiso::{MapKind, Metric};
use grayiso_cli::commands::{analyze, map, verify};
use grayiso_cli::{CliError, Outcome};

#[derive(Parser)]
#[command(
    name = "grayiso",
    version,
    about = "Gray isometries and block codes over Z_{2^k}"
)]
struct Cli {
    /// Print the machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a map on a word, or print its full table with --all.
    Map {
        /// phi, phi-inv, psi or composed.
        map: String,
        /// Residues such as `7,6,1`, or a bit string such as `1001` for phi-inv.
        word: Option<String>,
        /// Exponent k of Z_{2^k} for psi and composed.
        #[arg(long, default_value_t = 3)]
        k: u32,
        #[arg(long)]
        all: bool,
    },
    /// Enumerate the code of a generator-matrix file and report its parameters.
    Analyze {
        matrix: PathBuf,
        /// Also analyze the image code under this map.
        #[arg(long)]
        image: Option<String>,
        #[arg(long, default_value_t = 3)]
        k: u32,
        /// Metric to report; repeatable. Defaults to every metric defined over the modulus.
        #[arg(long = "metric")]
        metrics: Vec<String>,
        /// Maximum number of information words to enumerate.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Run the built-in verification suite.
    Verify,
}

fn dispatch(command: Command) -> Result<Outcome, CliError> {
    match command {
        Command::Map {
            map: name,
            word,
            k,
            all,
        } => {
            let map = MapKind::from_name(&name, Some(k))?;
            map::run(map, word.as_deref(), all)
        }
        Command::Analyze {
            matrix,
            image,
            k,
            metrics,
            cap,
        } => {
            let options = analyze::AnalyzeOptions {
                matrix,
                image: image
                    .map(|name| MapKind::from_name(&name, Some(k)))
                    .transpose()?,
                metrics: metrics
                    .iter()
                    .map(|m| m.parse::<Metric>())
                    .collect::<Result<_, _>>()?,
                cap,
            };
            analyze::run(&options)
        }
        Command::Verify => Ok(verify::run()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = stdout.write_all(outcome.render(cli.json).as_bytes());
            ExitCode::from(outcome.exit_code as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
