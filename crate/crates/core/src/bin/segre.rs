use std::process::ExitCode;

use segre::problem::{execute, parse_problem, Invocation, OutputFormat};
use segre::Error;

fn fail(format: OutputFormat, err: &Error) -> ExitCode {
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::json!({ "error": { "code": err.code(), "message": err.to_string() } })
        ),
        OutputFormat::Text => eprintln!("error[{}]: {err}", err.code()),
    }
    ExitCode::from(err.exit_code() as u8)
}

fn main() -> ExitCode {
    let inv = match Invocation::from_args(std::env::args().skip(1)) {
        Ok(inv) => inv,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let text = match std::fs::read_to_string(&inv.file) {
        Ok(t) => t,
        Err(e) => {
            return fail(
                inv.format,
                &Error::InvalidArgument(format!("{}: {e}", inv.file.display())),
            )
        }
    };
    let problem = match parse_problem(&text) {
        Ok(p) => p,
        Err(e) => return fail(inv.format, &e),
    };
    match execute(&problem, &inv) {
        Ok(report) => {
            match inv.format {
                OutputFormat::Json => println!("{}", report.to_json()),
                OutputFormat::Text => print!("{}", report.to_text()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => fail(inv.format, &e),
    }
}
