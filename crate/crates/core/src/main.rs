use std::io::Write;
use std::panic;
use std::process::ExitCode;

use matrix_torsion::cli::{self, EXIT_INTERNAL};

fn main() -> ExitCode {
    // internal consistency faults panic inside the library; report them
    // with their own status instead of the default 101
    let outcome = panic::catch_unwind(|| cli::run_args(std::env::args_os(), &mut std::io::stdin()));
    match outcome {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            std::io::stdout().flush().ok();
            ExitCode::from(out.status as u8)
        }
        Err(_) => ExitCode::from(EXIT_INTERNAL as u8),
    }
}
