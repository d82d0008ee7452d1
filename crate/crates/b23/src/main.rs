use b23::cli::Cli;
use b23::ExitStatus;
use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // status 2 is reserved for malformed containers
            return if e.use_stderr() {
                ExitCode::from(ExitStatus::Failure as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.run(&mut std::io::stdin().lock(), &mut std::io::stdout().lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("b23: {e}");
            ExitCode::from(e.exit_status() as u8)
        }
    }
}
