use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use hadwiger_cli::{run, usage_document, Cli, Exit};

fn main() -> ExitCode {
    let (doc, exit) = match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let command = std::env::args().nth(1);
            eprint!("{e}");
            (usage_document(&e, command.as_deref()), Exit::Usage)
        }
    };
    let _ = writeln!(std::io::stdout(), "{}", doc.to_json());
    ExitCode::from(exit.code())
}
