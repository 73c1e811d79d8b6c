use std::path::PathBuf;
use std::process::ExitCode;

use charp_cli::{run_paper_examples, run_session, Config, RunError};
use charp_core::{Budget, MonomialOrder};
use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Order {
    Grevlex,
    Lex,
}

/// Exact checks of Frobenius and tight closure statements in positive characteristic.
#[derive(Debug, Parser)]
#[command(name = "charp", version)]
struct Cli {
    /// Session file to run.
    #[arg(long, required_unless_present = "paper_examples")]
    input: Option<PathBuf>,
    /// Default Frobenius exponent bound.
    #[arg(long, default_value_t = 4)]
    emax: u32,
    /// Default stabilisation window.
    #[arg(long, default_value_t = 2)]
    window: usize,
    #[arg(long, value_enum, default_value_t = Order::Grevlex)]
    order: Order,
    /// Write the JSON report here.
    #[arg(long)]
    json_out: Option<PathBuf>,
    /// Recorded in the report; no check is randomised.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Evaluate checks in parallel.
    #[arg(long)]
    parallel: bool,
    /// Run the built-in example scenarios.
    #[arg(long)]
    paper_examples: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(spec) = std::env::var("CHARP_RESOURCE_BUDGET") {
        match Budget::parse(&spec) {
            Ok(b) => Budget::set_global(b),
            Err(e) => {
                eprintln!("CHARP_RESOURCE_BUDGET: {e}");
                return ExitCode::from(2);
            }
        }
    }
    let config = Config {
        emax: cli.emax,
        window: cli.window,
        order: match cli.order {
            Order::Grevlex => MonomialOrder::GrevLex,
            Order::Lex => MonomialOrder::Lex,
        },
        seed: cli.seed,
        parallel: cli.parallel,
    };
    let result = if cli.paper_examples {
        run_paper_examples(&config)
    } else {
        let path = cli.input.expect("clap enforces --input");
        match std::fs::read_to_string(&path) {
            Ok(text) => run_session(&text, &config),
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
    };
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(RunError::exit_code(&e) as u8);
        }
    };
    for line in report.summary_lines() {
        println!("{line}");
    }
    if let Some(out) = cli.json_out {
        if let Err(e) = std::fs::write(&out, report.to_json()) {
            eprintln!("{}: {e}", out.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(report.exit_code() as u8)
}
