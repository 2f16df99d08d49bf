use clap::Subcommand;
use serde::Deserialize;
use serde_json::{json, Value};

use cgt_core::cocycle::{
    central_cocycle, coboundary_witness, cocycle_eval, finf_extend, finf_parity_condition, finf_relations,
    gamma1_cocycle, gamma1_obstruction, parity_domain, solve_full_coboundary, verify_relations, CocycleSpec,
    FinfWindow, Word,
};
use cgt_core::exact::json::{decimal, decimal_vec, vec_to_json};
use cgt_core::exact::{int, IntMatrix, Integer};

use crate::io::{from_value, CliError, CliResult, Input};

#[derive(Subcommand, Debug)]
pub enum Cocycle {
    /// Coboundary witness: input `[x, y]` = c(t) on SL_2(Z), or a cocycle spec.
    SolveCoboundary {
        #[command(flatten)]
        input: Input,
    },
    /// Value of a cocycle on a word: input `{"spec": ..., "word": [...]}`.
    Eval {
        #[command(flatten)]
        input: Input,
    },
    /// The Gamma_1(N) cocycle at a matrix.
    Gamma1 {
        #[arg(long)]
        level: u64,
        #[command(flatten)]
        input: Input,
    },
    /// Whether the Gamma_1(N) coboundary stays integral at a matrix.
    Obstruction {
        #[arg(long)]
        level: u64,
        #[command(flatten)]
        input: Input,
    },
    /// Central cocycle: input `{"c": [m, n], "g": matrix}`.
    Central {
        #[command(flatten)]
        input: Input,
    },
    /// Extension to b^n: input `{"n": n, "window": [[k, x, y], ...]}`.
    FinfExtend {
        /// Keep only window indices in `a..b` (inclusive).
        #[arg(long, value_name = "a..b")]
        window: Option<String>,
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Deserialize)]
struct EvalInput {
    spec: CocycleSpec,
    word: Word,
}

#[derive(Deserialize)]
struct CentralInput {
    #[serde(with = "decimal_vec")]
    c: Vec<Integer>,
    g: IntMatrix,
}

#[derive(Deserialize)]
struct FinfInput {
    #[serde(with = "decimal")]
    n: Integer,
    window: FinfWindow,
}

fn parse_range(s: &str) -> CliResult<(Integer, Integer)> {
    let bad = || CliError::malformed(format!("window '{s}' is not of the form a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((int(a), int(b)))
}

fn restrict(window: &FinfWindow, lo: &Integer, hi: &Integer) -> CliResult<FinfWindow> {
    let kept = window
        .indices()
        .filter(|k| *k >= lo && *k <= hi)
        .map(|k| (k.clone(), window.get(k).unwrap().clone()))
        .collect::<Vec<_>>();
    Ok(FinfWindow::new(kept)?)
}

pub fn run(cmd: &Cocycle) -> CliResult<Value> {
    match cmd {
        Cocycle::SolveCoboundary { input } => {
            let v = input.value()?;
            if v.is_array() {
                let c_t: Vec<Integer> = decimal_vec::deserialize(v)?;
                Ok(serde_json::to_value(solve_full_coboundary(&c_t)?)?)
            } else {
                let spec: CocycleSpec = from_value(v)?;
                let relations = verify_relations(&spec)?;
                let witness = coboundary_witness(&spec)?;
                Ok(json!({ "relations_hold": relations, "witness": witness }))
            }
        }
        Cocycle::Eval { input } => {
            let e: EvalInput = input.parse()?;
            let value = cocycle_eval(&e.spec, &e.word)?;
            let matrix = e.spec.word_matrix(&e.word)?;
            Ok(json!({ "value": vec_to_json(&value), "matrix": matrix }))
        }
        Cocycle::Gamma1 { level, input } => {
            let g: IntMatrix = input.parse()?;
            Ok(json!({ "value": vec_to_json(&gamma1_cocycle(*level, &g)?) }))
        }
        Cocycle::Obstruction { level, input } => {
            let s: IntMatrix = input.parse()?;
            Ok(json!({ "level": level, "integral": gamma1_obstruction(*level, &s)? }))
        }
        Cocycle::Central { input } => {
            let c: CentralInput = input.parse()?;
            let [m, n] = c.c.as_slice() else {
                return Err(CliError::malformed(format!("c has length {}, expected 2", c.c.len())));
            };
            let value = central_cocycle(m, n, &c.g)?;
            let case = parity_domain(m, n);
            Ok(json!({
                "value": value.as_deref().map(vec_to_json::<Integer>),
                "parity_case": case.id,
                "domain": case.description(),
                "in_domain": case.accepts(&c.g),
            }))
        }
        Cocycle::FinfExtend { window, input } => {
            let f: FinfInput = input.parse()?;
            let w = match window {
                Some(r) => {
                    let (lo, hi) = parse_range(r)?;
                    restrict(&f.window, &lo, &hi)?
                }
                None => f.window,
            };
            let relations = finf_relations(&f.n, &w)?;
            let u = finf_extend(&f.n, &w)?;
            let parity = finf_parity_condition(&f.n, w.get(&Integer::ZERO).unwrap(), w.get(&f.n).unwrap());
            Ok(json!({
                "n": f.n.to_string(),
                "u": u.as_deref().map(vec_to_json::<Integer>),
                "extends": u.is_some(),
                "relations": relations.len(),
                "parity_condition": parity,
            }))
        }
    }
}
