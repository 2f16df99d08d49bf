use clap::Subcommand;
use serde_json::{json, Value};

use cgt_core::bruhat::{bruhat_decompose, cell_of, fact_check, Fact, FactParams};
use cgt_core::exact::RatMatrix;

use crate::io::{CliError, CliResult, Input};

#[derive(Subcommand, Debug)]
pub enum Bruhat {
    /// Factorization g = A p_σ B with A, B upper triangular.
    Decompose {
        #[command(flatten)]
        input: Input,
    },
    /// The σ with g in B p_σ B.
    Cell {
        #[command(flatten)]
        input: Input,
    },
    /// Check one of the four cell facts on a matrix, a grid or sampled words.
    FactCheck {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
        fact: u8,
        /// Exhaustive grid of entries p/q with |p|, q <= bound.
        #[arg(long, value_name = "BOUND", conflicts_with = "seed")]
        grid: Option<u32>,
        /// Seed for sampled words.
        #[arg(long)]
        seed: Option<u64>,
        /// Number of sampled words.
        #[arg(long, default_value_t = 1000, requires = "seed")]
        count: usize,
        /// Length of each sampled word.
        #[arg(long, default_value_t = 12, requires = "seed")]
        len: usize,
        #[command(flatten)]
        input: Input,
    },
}

pub fn run(cmd: &Bruhat) -> CliResult<Value> {
    match cmd {
        Bruhat::Decompose { input } => {
            let g: RatMatrix = input.parse()?;
            Ok(serde_json::to_value(bruhat_decompose(&g)?)?)
        }
        Bruhat::Cell { input } => {
            let g: RatMatrix = input.parse()?;
            Ok(json!({ "cell": cell_of(&g)? }))
        }
        Bruhat::FactCheck {
            fact,
            grid,
            seed,
            count,
            len,
            input,
        } => {
            let fact = Fact::from_id(*fact)?;
            let params = match (grid, seed, input.is_given()) {
                (Some(bound), None, false) => FactParams::Grid { bound: *bound },
                (None, Some(seed), false) => FactParams::Words {
                    count: *count,
                    len: *len,
                    seed: *seed,
                },
                (None, None, true) => FactParams::Matrix { g: input.parse()? },
                _ => {
                    return Err(CliError::malformed(
                        "fact-check takes exactly one of --grid, --seed or a matrix",
                    ))
                }
            };
            Ok(serde_json::to_value(fact_check(fact, &params)?)?)
        }
    }
}
