// Copyright 2026 collisim contributors
// SPDX-License-Identifier: Apache-2.0

//! Library side of the `collisim` binary: argument layering, subcommands
//! and CSV output. [`run`] is the whole program minus `process::exit`.
//!
//! Exit codes: 0 success, 1 domain-fatal (or a failed `validate` check),
//! 2 usage.

pub mod args;
pub mod commands;
pub mod config;
pub mod grid;
pub mod output;
pub mod validate;

use std::collections::HashSet;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::parser::ValueSource;
use clap::{ArgMatches, CommandFactory, FromArgMatches};

use args::{Cli, Command};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FATAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable naming the default output directory.
pub const OUT_DIR_VAR: &str = "COLLISIM_OUT";

fn parse(argv: &[OsString]) -> Result<(Cli, ArgMatches), clap::Error> {
    let matches = Cli::command().try_get_matches_from(argv)?;
    let cli = Cli::from_arg_matches(&matches)?;
    Ok((cli, matches))
}

/// Re-parse with the config file (if any) layered under the flags.
fn resolve(argv: &[OsString]) -> Result<Cli, Result<clap::Error, String>> {
    let (cli, matches) = parse(argv).map_err(Ok)?;
    let Some(path) = cli.command.io().config.clone() else {
        return Ok(cli);
    };
    let (name, sub) = matches.subcommand().expect("subcommand is required");
    let entries = config::read_config(&path).map_err(Err)?;

    let command = Cli::command();
    let spec = command.find_subcommand(name).expect("known subcommand");
    let known: HashSet<String> = spec
        .get_arguments()
        .filter_map(|a| a.get_long().map(str::to_string))
        .filter(|l| l != "help")
        .collect();
    let given: HashSet<String> = spec
        .get_arguments()
        .filter(|a| sub.value_source(a.get_id().as_str()) == Some(ValueSource::CommandLine))
        .filter_map(|a| a.get_long().map(str::to_string))
        .collect();

    let layered = config::layered_argv(argv, &entries, &known, &given).map_err(Err)?;
    parse(&layered).map(|(cli, _)| cli).map_err(Ok)
}

fn destination(cmd: &Command) -> Option<PathBuf> {
    if let Some(p) = &cmd.io().out {
        return Some(p.clone());
    }
    std::env::var_os(OUT_DIR_VAR)
        .filter(|d| !d.is_empty())
        .map(|d| PathBuf::from(d).join(format!("{}.csv", cmd.name())))
}

fn emit(table: &output::Table, dest: Option<PathBuf>, stdout: &mut dyn Write) -> io::Result<()> {
    match dest {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            let mut w = BufWriter::new(File::create(&path)?);
            output::write_csv(table, &mut w).map_err(io::Error::other)?;
            w.flush()
        }
        None => output::write_csv(table, stdout).map_err(io::Error::other),
    }
}

/// Execute one invocation, writing CSV to `stdout` unless redirected.
pub fn run_with(argv: &[OsString], stdout: &mut dyn Write) -> i32 {
    let cli = match resolve(argv) {
        Ok(cli) => cli,
        Err(Ok(e)) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
        Err(Err(msg)) => {
            eprintln!("error: {msg}");
            return EXIT_USAGE;
        }
    };

    let cmd = &cli.command;
    let (table, fatal) = match cmd {
        Command::Validate(v) => match validate::run_checks(v.seed, v.draws) {
            Ok(checks) => {
                let failed: Vec<_> = checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
                let fatal = (!failed.is_empty()).then(|| format!("failed checks: {}", failed.join(", ")));
                (validate::table(&checks), fatal)
            }
            Err(e) => {
                eprintln!("error: {e}");
                return EXIT_FATAL;
            }
        },
        other => {
            let outcome = match other {
                Command::SingleStep(a) => commands::single_step(a),
                Command::TwoStep(a) => commands::two_step(a),
                Command::MarkovScan(a) => commands::markov_scan(a),
                Command::DeltaE(a) => commands::delta_e(a),
                Command::Ghz(a) => commands::ghz(a),
                Command::Validate(_) => unreachable!(),
            };
            (outcome.table, outcome.fatal)
        }
    };

    if let Err(e) = emit(&table, destination(cmd), stdout) {
        eprintln!("error: cannot write output: {e}");
        return EXIT_FATAL;
    }
    match fatal {
        Some(msg) => {
            eprintln!("error: {msg}");
            EXIT_FATAL
        }
        None => EXIT_OK,
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let argv: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    run_with(&argv, &mut lock)
}
