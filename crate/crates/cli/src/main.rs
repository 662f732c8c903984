use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let (code, stdout, stderr) = homfly_cli::run_command(&argv);
    std::io::stdout().write_all(stdout.as_bytes()).ok();
    std::io::stderr().write_all(stderr.as_bytes()).ok();
    ExitCode::from(code as u8)
}
