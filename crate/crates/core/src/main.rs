use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, text) = nonassoc::cli::run(std::env::args_os().skip(1));
    if code >= 2 {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    ExitCode::from(code as u8)
}
