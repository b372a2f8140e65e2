mod args;
mod cache;
mod commands;
mod report;

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::cache::Cache;
use crate::commands::{CliError, Ctx};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CACHE: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let mut ctx = Ctx {
        cache: Cache::new(cli.cache_dir.clone(), cli.strict_cache),
        fault: cli.inject_mu_fault.clone(),
        force: cli.force,
        timings: BTreeMap::new(),
    };
    let output = match commands::run(&cli.command, &mut ctx) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(match e {
                CliError::Usage(_) => EXIT_USAGE,
                CliError::Cache(_) => EXIT_CACHE,
            });
        }
    };
    if cli.timing {
        for (stage, ms) in &ctx.timings {
            eprintln!("timing: {stage} {ms:.1} ms");
        }
    }
    let passed = output.passed();
    let timing = cli.timing.then_some(ctx.timings);
    let command = cli.command.canonical(cli.inject_mu_fault.as_deref());
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let written = report::emit(&mut out, cli.format, command, cli.command.rank(), timing, output)
        .and_then(|()| out.flush());
    match written {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAIL)
        }
        _ if !passed => ExitCode::from(EXIT_FAIL),
        _ => ExitCode::SUCCESS,
    }
}
