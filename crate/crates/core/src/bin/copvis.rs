use clap::Parser;
use copvis::cli::{execute, Cli};
use std::io::Write;

fn main() {
    let cli = Cli::parse();
    let report = execute(&cli);
    if let Some(e) = &report.error {
        eprintln!("error: {e}");
    }
    let out = report.render(cli.format);
    let written = match &cli.output {
        Some(path) => std::fs::write(path, out),
        None => std::io::stdout().write_all(out.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
    std::process::exit(report.code);
}
