use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use doublealg::cli::run::RunOptions;
use doublealg::cli::{emit_report, parse_model, run, Command, Format};

/// Checks and builds Lie algebroids, bialgebroids, matched pairs and double
/// Lie algebroids described in a model file.
#[derive(Parser, Debug)]
#[command(name = "doublealg", version)]
struct Args {
    /// check | build | dualize | extract (`verify` = `check`)
    action: String,
    /// what to check or build, e.g. `double`, `bowtie`, `drinfeld`
    target: String,
    model: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// seed for the randomized part of the checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// record wall-clock time per check (makes reports non-reproducible)
    #[arg(long)]
    timings: bool,
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let command = match Command::parse(&args.action, &args.target) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("doublealg: {e}");
            return ExitCode::from(2);
        }
    };
    let input = match std::fs::read(&args.model) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("doublealg: {}: {e}", args.model.display());
            return ExitCode::from(2);
        }
    };
    let Ok(text) = std::str::from_utf8(&input) else {
        eprintln!("doublealg: {}: not UTF-8", args.model.display());
        return ExitCode::from(2);
    };
    let opts = RunOptions {
        seed: args.seed,
        timings: args.timings,
    };
    let report = parse_model(text).and_then(|m| run(&command, &m, &input, opts));
    match report {
        Ok(r) => {
            print!("{}", emit_report(&r, args.format));
            ExitCode::from(r.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("doublealg: {}: {e}", args.model.display());
            ExitCode::from(2)
        }
    }
}
