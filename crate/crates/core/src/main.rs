use std::io::{Read, Write};
use std::process::ExitCode;

use bettikit::cli::{resolve_digits, run, CliConfig, DIGITS_ENV};
use clap::Parser;

fn main() -> ExitCode {
    let mut config = CliConfig::parse();
    let env = std::env::var(DIGITS_ENV).ok();
    config.decimal_digits = Some(resolve_digits(config.decimal_digits, env.as_deref()));

    let mut input = Vec::new();
    if let Some(args) = config.command.input() {
        let read = match args.input.as_deref() {
            Some(p) if p.as_os_str() != "-" => std::fs::read(p).map(|b| input = b),
            _ => std::io::stdin().read_to_end(&mut input).map(|_| ()),
        };
        if let Err(e) = read {
            eprintln!("error: cannot read input: {e}");
            return ExitCode::from(1);
        }
    }

    let out = run(&config, &input);
    let _ = std::io::stdout().write_all(&out.stdout);
    let _ = std::io::stderr().write_all(&out.stderr);
    ExitCode::from(out.code as u8)
}
