use std::process::ExitCode;

use clap::Parser;
use superq_cli::output::render;
use superq_cli::{run, Command, RunConfig};

#[derive(Parser)]
#[command(name = "superq", version, about = "Exact checks for the quantum general linear supergroup")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    config: RunConfig,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run(&cli.command, &cli.config);
    let text = render(&outcome.report, cli.config.format);
    match &cli.config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(outcome.status.exit_code() as u8)
}
