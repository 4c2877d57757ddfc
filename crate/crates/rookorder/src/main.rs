use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(rookorder::cli::run() as u8)
}
