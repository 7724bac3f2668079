use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qcoh::cli::{budget_from_env, run, Cli, OutputDocument};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let doc = match budget_from_env() {
        Ok(budget) => run(&cli, budget),
        Err(msg) => OutputDocument::usage_error("config", Default::default(), msg),
    };
    let out = if cli.json { doc.render_json() } else { doc.render_text() };
    let _ = std::io::stdout().write_all(out.as_bytes());
    ExitCode::from(doc.exit_code() as u8)
}
