use std::process::ExitCode;

use clap::Parser;
use qca_lab_cli::{configure_threads, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(warning) = configure_threads() {
        eprintln!("warning: {warning}");
    }
    let code = run(cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code as u8)
}
