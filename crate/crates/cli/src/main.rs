use std::process::ExitCode;

fn main() -> ExitCode {
    exceptional_cli::cli::run(std::env::args_os())
}
