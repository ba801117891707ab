use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use concordance_cli::{render, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (status, out, err) = render(&cli, run(&cli));
    print!("{out}");
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    ExitCode::from(status as u8)
}
