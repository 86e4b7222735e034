use std::io::{stderr, stdout};
use std::process::exit;

fn main() {
    let code = fqlab::cli::run_with(
        std::env::args_os(),
        &mut stdout().lock(),
        &mut stderr().lock(),
    );
    exit(code);
}
