// SPDX-License-Identifier: Apache-2.0

use std::process::ExitCode;

use clap::Parser;
use vistrace::cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let exit = run(cli, &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(exit.code())
}
