use clap::Subcommand;
use serde_json::{json, Value};

use cgt_core::exact::IntMatrix;
use cgt_core::matgroups::{
    classify_sl2, congruence_membership, decompose_st, to_torsion_generators, CongruenceFamily, CongruenceKind,
    Sl2Class,
};

use crate::io::{CliError, CliResult, Input};

#[derive(Subcommand, Debug)]
pub enum Sl2 {
    /// Trace type of a matrix in SL_2(Z).
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Word in S, T (and in s, t) evaluating to a matrix in SL_2(Z).
    Decompose {
        #[command(flatten)]
        input: Input,
    },
    /// Membership in a congruence subgroup.
    Congruence {
        /// Gamma, Gamma0 or Gamma1.
        #[arg(long, default_value = "Gamma1")]
        kind: String,
        #[arg(long)]
        level: u64,
        #[command(flatten)]
        input: Input,
    },
}

pub fn run(cmd: &Sl2) -> CliResult<Value> {
    match cmd {
        Sl2::Classify { input } => {
            let g: IntMatrix = input.parse()?;
            let class = classify_sl2(&g)?;
            let mut out = json!({ "class": class.name(), "trace": g.trace().to_string() });
            match class {
                Sl2Class::Elliptic { order } => out["order"] = json!(order),
                Sl2Class::Parabolic { sign } => out["sign"] = json!(sign),
                Sl2Class::Hyperbolic => {}
            }
            Ok(out)
        }
        Sl2::Decompose { input } => {
            let g: IntMatrix = input.parse()?;
            let standard = decompose_st(&g)?;
            let torsion = to_torsion_generators(&standard)?;
            Ok(json!({ "standard": standard, "torsion": torsion }))
        }
        Sl2::Congruence { kind, level, input } => {
            let family: CongruenceFamily = kind
                .parse()
                .map_err(|e: cgt_core::Error| CliError::malformed(e.to_string()))?;
            let kind = CongruenceKind::new(family, *level)?;
            let g: IntMatrix = input.parse()?;
            let member = congruence_membership(&kind, &g)?;
            Ok(json!({ "kind": kind.to_string(), "level": level, "member": member }))
        }
    }
}
