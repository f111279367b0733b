use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use degentropy::commands::{self, CliError};
use degentropy::{Format, Outcome};
use degentropy_core::verify::SuiteGrid;

/// Degree-based graph entropy: exact extremal search, explicit
/// constructions and inequality verification.
#[derive(Parser)]
#[command(name = "degentropy", version)]
struct Cli {
    /// Output format: text, json or csv.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
    /// Digits after the decimal point.
    #[arg(long, global = true, env = "DEGENTROPY_PRECISION", default_value_t = 6,
          value_parser = clap::value_parser!(u8).range(0..=17))]
    precision: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Entropy and potentials of a graph read from an edge-list file.
    Entropy { file: PathBuf },
    /// Maximise h_c over all graphs with m edges.
    Search {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long)]
        c: u32,
        /// Common vertex count for the padded potential (default 2m).
        #[arg(long)]
        pad: Option<usize>,
        /// Evaluate every graphical sequence instead of majorization maxima.
        #[arg(long)]
        no_prune: bool,
    },
    /// Brute-force minimum-entropy connected graphs with n vertices and m edges.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Explicit minimum-entropy connected graphs with n vertices and m edges.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Compare construct against oracle for n in [2, n-max], m in [n-1, 2n-3].
    CrossValidate {
        #[arg(long)]
        n_max: usize,
    },
    /// Run the inequality verification suite.
    VerifyClaims {
        #[arg(long, default_value_t = 12)]
        b_max: u32,
        #[arg(long, default_value_t = 6)]
        c_max: u32,
        #[arg(long, default_value_t = 200)]
        m_max: u64,
    },
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let digits = usize::from(cli.precision);
    let output = match cli.command {
        Command::Entropy { file } => commands::cmd_entropy(&commands::read_graph(&file)?, digits),
        Command::Search {
            m,
            c,
            pad,
            no_prune,
        } => commands::cmd_search(m, c, pad, !no_prune, digits),
        Command::Oracle { n, m } => commands::cmd_oracle(n, m, digits),
        Command::Construct { n, m } => commands::cmd_construct(n, m, digits),
        Command::CrossValidate { n_max } => commands::cmd_cross_validate(n_max),
        Command::VerifyClaims {
            b_max,
            c_max,
            m_max,
        } => commands::cmd_verify_claims(
            SuiteGrid {
                b_max,
                c_max,
                m_max,
            },
            digits,
        ),
    }?;
    let rendered = output.render(cli.format).map_err(CliError::Render)?;
    std::io::stdout()
        .write_all(rendered.as_bytes())
        .map_err(|e| CliError::Render(e.to_string()))?;
    Ok(output.outcome)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
