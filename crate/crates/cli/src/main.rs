use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use salemforge::rootloc::{DEFAULT_COHN_SCAN, DEFAULT_MR_ROUNDS};
use salemforge_cli::census::{write_census, CensusOptions, Format};
use salemforge_cli::{commands, init_workers, CliError, CliResult};

#[derive(Parser)]
#[command(name = "salemforge", version, about = "Exact growth functions of hyperbolic Coxeter groups")]
struct Cli {
    /// Miller-Rabin rounds for probable-prime tests.
    #[arg(long, global = true, default_value_t = DEFAULT_MR_ROUNDS)]
    mr_rounds: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Growth function of a Coxeter graph (file or built-in name).
    Growth { graph: String },
    /// Growth function and root data of the domino W_{l,m,n}.
    Domino {
        #[arg(long)]
        l: u64,
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
    },
    /// Sweep of all valid (l, m, n) with n <= N.
    Census {
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        skip_irreducibility: bool,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Salem / 2-Salem classification of a polynomial.
    Classify { poly: PathBuf },
    /// Factorization of a reciprocal polynomial.
    Factor { poly: PathBuf },
    /// Irreducibility witness by a prime value.
    Cohn {
        poly: PathBuf,
        /// Number of arguments tried from H + 2.
        #[arg(long, default_value_t = DEFAULT_COHN_SCAN)]
        scan: u64,
    },
    /// Signature, truncation and compactness of the simplex.
    GeometryVerify,
    /// Recomputes every reference value.
    VerifyPaper {
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn print_json(v: &serde_json::Value) -> CliResult<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> CliResult<()> {
    init_workers()?;
    match cli.command {
        Command::Growth { graph } => print_json(&commands::growth(&graph)?),
        Command::Domino { l, m, n } => print_json(&commands::domino(l, m, n)?),
        Command::Census { n_max, skip_irreducibility, format, out } => {
            let opts = CensusOptions { skip_irreducibility };
            match out {
                Some(path) => {
                    let file = File::create(&path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                    write_census(n_max, opts, format, BufWriter::new(file))?;
                }
                None => {
                    write_census(n_max, opts, format, io::stdout().lock())?;
                }
            }
            Ok(())
        }
        Command::Classify { poly } => print_json(&commands::classify(&poly)?),
        Command::Factor { poly } => print_json(&commands::factor(&poly)?),
        Command::Cohn { poly, scan } => print_json(&commands::cohn(&poly, scan, cli.mr_rounds)?),
        Command::GeometryVerify => {
            let (report, ok) = commands::geometry_verify()?;
            print_json(&report)?;
            if ok {
                Ok(())
            } else {
                Err(CliError::Check("geometry".into()))
            }
        }
        Command::VerifyPaper { report } => {
            let r = commands::verify_paper(cli.mr_rounds);
            for c in &r.checks {
                println!("{} [{:>2}] {:<24} {}", if c.passed { "PASS" } else { "FAIL" }, c.criterion, c.name, c.detail);
            }
            if let Some(path) = report {
                let file = File::create(&path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
                let mut w = BufWriter::new(file);
                serde_json::to_writer_pretty(&mut w, &r)?;
                writeln!(w)?;
                w.flush()?;
            }
            if r.passed {
                Ok(())
            } else {
                let names: Vec<&str> = r.failed().iter().map(|c| c.name).collect();
                Err(CliError::Check(names.join(", ")))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("salemforge: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
