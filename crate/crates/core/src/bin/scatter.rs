use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use scatter_hecke::cli::{run, Cli};

fn main() -> ExitCode {
    let out = run(&Cli::parse());
    let _ = std::io::stdout().write_all(out.text.as_bytes());
    ExitCode::from(out.code as u8)
}
