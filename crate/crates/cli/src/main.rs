use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use knotorder::DEFAULT_BUDGET;
use knotorder_cli::{
    exit, parse_knot_table, parse_seifert_file, run_analyze, run_certify, run_family, run_ring_demo, run_table,
    CliError, CommandOutput, OutputFormat,
};

#[derive(Parser)]
#[command(name = "knotorder", version, about = "Concordance-order obstructions for knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and infinite-order verdict for a Seifert matrix.
    Analyze {
        /// Seifert-matrix file; standard input when omitted or `-`.
        #[arg(long)]
        seifert: Option<PathBuf>,
    },
    /// Enumerate metabolizers of d copies of a Z_p linking form and certify each.
    Certify {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        copies: usize,
        /// Upper bound on p^copies for the exhaustive search.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Verdicts for every knot in a CSV table.
    Table {
        /// Knot table; standard input when omitted or `-`.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// The twisted-double family built from primes congruent to 3 mod 4.
    Family {
        #[arg(long)]
        count: usize,
    },
    /// The p = 19 group-ring computation, end to end.
    RingDemo,
}

fn read_input(path: Option<&Path>) -> Result<String, String> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display())),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| format!("standard input: {e}"))?;
            Ok(s)
        }
    }
}

fn dispatch(cli: Cli) -> Result<CommandOutput, (String, i32)> {
    let format = match cli.format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    let fail = |e: CliError| (e.to_string(), e.exit_code());
    match cli.command {
        Command::Analyze { seifert } => {
            let text = read_input(seifert.as_deref()).map_err(|e| (e, exit::ERROR))?;
            let v = parse_seifert_file(&text).map_err(fail)?;
            run_analyze(&v, format).map_err(fail)
        }
        Command::Certify { prime, copies, budget } => run_certify(prime, copies, budget, format).map_err(fail),
        Command::Table { table } => {
            let text = read_input(table.as_deref()).map_err(|e| (e, exit::ERROR))?;
            let records = parse_knot_table(&text).map_err(fail)?;
            run_table(&records, format).map_err(fail)
        }
        Command::Family { count } => run_family(count, format).map_err(fail),
        Command::RingDemo => run_ring_demo(format).map_err(fail),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err((message, code)) => {
            eprintln!("error: {message}");
            ExitCode::from(code as u8)
        }
    }
}
