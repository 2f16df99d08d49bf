//! `cgt`: JSON front end to `cgt-core`.
//!
//! Every subcommand reads one JSON document (inline or `--in <file|->`) and
//! prints one JSON document with all numbers as decimal strings. Exit codes:
//! 0 success, 2 malformed input, 3 precondition violation.

mod commands;
mod io;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;

use commands::{affine::Affine, bruhat::Bruhat, cocycle::Cocycle, lin::Lin, sl2::Sl2};
use io::{finish, CliResult};

#[derive(Parser, Debug)]
#[command(name = "cgt", version, about = "Exact computational group theory for Z^n ⋊ SL_n(Z)")]
struct Cli {
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// SL_2(Z) elements and congruence subgroups.
    #[command(subcommand)]
    Sl2(Sl2),
    /// Z^2-valued cocycles.
    #[command(subcommand)]
    Cocycle(Cocycle),
    /// The affine group Z^n ⋊ SL_n(Z).
    #[command(subcommand)]
    Affine(Affine),
    /// Bruhat cells of GL_3(Q).
    #[command(subcommand)]
    Bruhat(Bruhat),
    /// Integer linear algebra.
    #[command(subcommand)]
    Lin(Lin),
}

fn dispatch(group: &Group) -> CliResult<Value> {
    match group {
        Group::Sl2(c) => commands::sl2::run(c),
        Group::Cocycle(c) => commands::cocycle::run(c),
        Group::Affine(c) => commands::affine::run(c),
        Group::Bruhat(c) => commands::bruhat::run(c),
        Group::Lin(c) => commands::lin::run(c),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(&cli.group) {
        Ok(v) => {
            println!("{}", finish(v));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("cgt: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
