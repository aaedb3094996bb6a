use std::process::ExitCode;

use clap::Parser;
use polynormal_cli::{run, Cli, EXIT_ERROR};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    match run(cli) {
        Ok(report) => {
            if pretty {
                print!("{}", report.to_pretty());
            } else {
                println!("{}", report.to_json());
            }
            ExitCode::from(report.verdict.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
