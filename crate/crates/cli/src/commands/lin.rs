use clap::Subcommand;
use serde::Deserialize;
use serde_json::{json, Value};

use cgt_core::affine::LatticeIndex;
use cgt_core::exact::json::{decimal_vec, vec_to_json};
use cgt_core::exact::{hnf, snf, solve_integer, IntMatrix, Integer};

use crate::io::{CliResult, Input};

#[derive(Subcommand, Debug)]
pub enum Lin {
    /// Hermite normal form of the lattice spanned by the rows.
    Hnf {
        #[command(flatten)]
        input: Input,
    },
    /// Smith normal form U M V = D.
    Snf {
        #[command(flatten)]
        input: Input,
    },
    /// Integer solution of M x = b: input `{"a": matrix, "b": vector}`.
    Solve {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Deserialize)]
struct SolveInput {
    a: IntMatrix,
    #[serde(with = "decimal_vec")]
    b: Vec<Integer>,
}

pub fn run(cmd: &Lin) -> CliResult<Value> {
    match cmd {
        Lin::Hnf { input } => {
            let m: IntMatrix = input.parse()?;
            let basis = hnf(m.cols(), &m.to_rows())?;
            let rows: Vec<Value> = basis.rows().iter().map(|r| vec_to_json(r)).collect();
            Ok(json!({ "basis": rows, "dim": basis.dim(), "rank": basis.rank(), "index": LatticeIndex::of(&basis) }))
        }
        Lin::Snf { input } => {
            let m: IntMatrix = input.parse()?;
            let f = snf(&m);
            Ok(json!({ "u": f.u, "d": f.d, "v": f.v, "diagonal": vec_to_json(&f.diagonal()), "rank": f.rank() }))
        }
        Lin::Solve { input } => {
            let s: SolveInput = input.parse()?;
            let x = solve_integer(&s.a, &s.b)?;
            Ok(json!({ "solvable": x.is_some(), "x": x.as_deref().map(vec_to_json::<Integer>) }))
        }
    }
}
