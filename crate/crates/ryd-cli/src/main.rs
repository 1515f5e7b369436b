//! `ryd` — exact Schubert calculus on root-theoretic Young diagrams.
//!
//! Every subcommand reads one JSON document (`--input`, default stdin),
//! writes one result document (`--output`, default stdout), and exits 0.
//! Invalid input exits 1; an internal invariant violation — including any
//! `--check` cross-path mismatch — exits 2.  Identical invocations produce
//! byte-identical output.

mod commands;
mod error;
mod render;
mod selftest;
mod util;
mod wire;

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::BkPath;
use error::{CliError, Result};

#[derive(Parser)]
#[command(
    name = "ryd",
    version,
    about = "Exact Schubert calculus on root-theoretic Young diagrams",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Input document path, or `-` for stdin.
    #[arg(long, global = true, default_value = "-", value_name = "FILE")]
    input: String,
    /// Output path, or `-` for stdout.
    #[arg(long, global = true, default_value = "-", value_name = "FILE")]
    output: String,
    /// Recompute through an independent path and fail on any mismatch.
    #[arg(long, global = true)]
    check: bool,
    /// Largest n the exhaustive enumerations may touch.
    #[arg(long, global = true, value_name = "N")]
    max_n: Option<usize>,
    /// Worker threads for enumeration-heavy subcommands (deterministic
    /// merge; results never depend on this value).
    #[arg(long, global = true, default_value_t = 1, value_name = "W")]
    parallel: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Deformed-product expansion of a pair of flag classes.
    Bk {
        /// Coefficient route; `--check` forces `both`.
        #[arg(long, value_enum, default_value = "jdt")]
        path: BkPath,
    },
    /// Ordinary cup-product expansion of a pair of flag classes.
    Cup,
    /// One skew Littlewood–Richardson coefficient in an explicit box.
    Lr,
    /// Pieri expansion of a special class times a typed index.
    Pieri,
    /// Star product of two two-row diagram classes.
    Star,
    /// Translate a diagram to its classical index, or back.
    Translate,
    /// Walk every class of a domain.
    Enumerate {
        /// Emit only the number of classes.
        #[arg(long)]
        count: bool,
        /// Compact domain name — S_7^{1,3,5}, B_5^3, D_6^3, LG_4, OG_5 —
        /// instead of a JSON domain on input.
        domain: Option<String>,
    },
    /// ASCII picture of one class on its root poset.
    Render,
    /// Run the built-in verification suites.
    Selftest,
}

fn main() -> ExitCode {
    // a panic anywhere is an internal invariant violation
    match std::panic::catch_unwind(run) {
        Ok(code) => code,
        Err(_) => ExitCode::from(2),
    }
}

fn run() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                // usage problems are input errors
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn dispatch(cli: &Cli) -> Result<()> {
    if cli.parallel == 0 {
        return Err(CliError::Input("--parallel must be at least 1".into()));
    }
    let out = match &cli.command {
        Command::Bk { path } => commands::cmd_bk(&read_input(&cli.input)?, *path, cli.check)?,
        Command::Cup => commands::cmd_cup(&read_input(&cli.input)?, cli.check)?,
        Command::Lr => commands::cmd_lr(&read_input(&cli.input)?, cli.check)?,
        Command::Pieri => commands::cmd_pieri(&read_input(&cli.input)?, cli.check)?,
        Command::Star => commands::cmd_star(&read_input(&cli.input)?, cli.check)?,
        Command::Translate => commands::cmd_translate(&read_input(&cli.input)?, cli.check)?,
        Command::Enumerate { count, domain } => {
            let dom = match domain {
                Some(name) => commands::parse_domain_name(name)?,
                None => commands::parse_domain_json(&read_input(&cli.input)?)?,
            };
            commands::cmd_enumerate(dom, *count, cli.check, cli.max_n, cli.parallel)?
        }
        Command::Render => render::cmd_render(&read_input(&cli.input)?)?,
        Command::Selftest => {
            // the report is written even when suites fail
            let (report, all_pass) = selftest::cmd_selftest(cli.max_n, cli.parallel);
            write_output(&cli.output, &report)?;
            return if all_pass {
                Ok(())
            } else {
                Err(CliError::Invariant(
                    "verification suites failed (see report)".into(),
                ))
            };
        }
    };
    write_output(&cli.output, &out)
}

fn read_input(path: &str) -> Result<String> {
    let mut buf = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut buf)?;
    } else {
        buf = std::fs::read_to_string(path)?;
    }
    Ok(buf)
}

fn write_output(path: &str, content: &str) -> Result<()> {
    if path == "-" {
        let mut stdout = std::io::stdout().lock();
        stdout.write_all(content.as_bytes())?;
        stdout.flush()?;
    } else {
        std::fs::write(path, content)?;
    }
    Ok(())
}
