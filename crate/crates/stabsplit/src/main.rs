//! The `stabsplit` binary: entanglement analysis for stabilizer states.

use clap::Parser;
use stabsplit::cli::{Cli, run};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors; everything else is
            // an input problem and exits 1 (2 and 3 are reserved for oracle
            // limits and verification mismatches).
            let code = i32::from(e.use_stderr());
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(&cli) {
        Ok(output) => print!("{output}"),
        Err(e) => {
            eprintln!("stabsplit: {}", e.message);
            std::process::exit(e.code);
        }
    }
}
