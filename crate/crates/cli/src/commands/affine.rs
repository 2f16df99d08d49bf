use clap::Subcommand;
use serde::Deserialize;
use serde_json::{json, Value};

use cgt_core::affine::{
    classify_subgroup, conj_class_profile, fc_witness, icc_affine_cyclic, invariant_lattice, AffineAutomorphism,
    AffineElement, SubgroupDescriptor,
};
use cgt_core::exact::json::decimal_vec;
use cgt_core::exact::{int, IntMatrix, Integer};
use cgt_core::matgroups::{sample_subgroup_element, SampleGroup, Sampler};

use crate::io::{CliError, CliResult, Input};

/// Pairs sampled by `aut-check --seed`.
const SAMPLED_PAIRS: usize = 100;

#[derive(Subcommand, Debug)]
pub enum Affine {
    /// ICC verdict for Z^2 ⋊ <g>.
    Icc {
        #[command(flatten)]
        input: Input,
    },
    /// Conjugacy class growth: input `{"x": element, "gens": [element, ...]}`.
    Ball {
        #[arg(long, default_value_t = 5)]
        radius: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Smallest invariant lattice: input `{"gens": [matrix, ...], "seeds": [vector, ...]}`.
    Lattice {
        #[command(flatten)]
        input: Input,
    },
    /// Homomorphism check for x -> (L a + ξ - L s L^-1 ξ, L s L^-1): input
    /// `{"l": matrix, "xi": vector, "pairs": [[x, y], ...]}`.
    AutCheck {
        /// Sample the pairs instead of reading them.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        input: Input,
    },
    /// Classification evidence for a subgroup descriptor.
    Classify {
        #[command(flatten)]
        input: Input,
    },
}

#[derive(Deserialize)]
struct BallInput {
    x: AffineElement,
    gens: Vec<AffineElement>,
}

#[derive(Deserialize)]
struct LatticeInput {
    gens: Vec<IntMatrix>,
    #[serde(default, with = "cgt_core::exact::json::decimal_vecs")]
    seeds: Vec<Vec<Integer>>,
}

#[derive(Deserialize)]
struct AutInput {
    l: IntMatrix,
    #[serde(with = "decimal_vec")]
    xi: Vec<Integer>,
    #[serde(default)]
    pairs: Option<Vec<(AffineElement, AffineElement)>>,
}

fn sample_element(n: usize, rng: &mut Sampler) -> CliResult<AffineElement> {
    let a: Vec<Integer> = (0..n).map(|_| int(rng.range_i64(-20, 20))).collect();
    let g = if n == 2 {
        let len = rng.below(9) as usize;
        sample_subgroup_element(&SampleGroup::Full, len, rng.next_u64())?
    } else {
        IntMatrix::identity(n)
    };
    Ok(AffineElement::new(a, g)?)
}

pub fn run(cmd: &Affine) -> CliResult<Value> {
    match cmd {
        Affine::Icc { input } => {
            let g: IntMatrix = input.parse()?;
            let icc = icc_affine_cyclic(&g)?;
            let witness = fc_witness(&g)?;
            Ok(json!({ "icc": icc, "trace": g.trace().to_string(), "fc_witness": witness }))
        }
        Affine::Ball { radius, input } => {
            let b: BallInput = input.parse()?;
            let profile = conj_class_profile(&b.x, &b.gens, *radius)?;
            Ok(json!({ "radius": radius, "count": profile.last(), "profile": profile }))
        }
        Affine::Lattice { input } => {
            let l: LatticeInput = input.parse()?;
            Ok(serde_json::to_value(invariant_lattice(&l.gens, &l.seeds)?)?)
        }
        Affine::AutCheck { seed, input } => {
            let a: AutInput = input.parse()?;
            let phi = AffineAutomorphism::new(a.l, a.xi)?;
            let n = phi.l().rows();
            let pairs = match (a.pairs, seed) {
                (Some(p), _) => p,
                (None, Some(seed)) => {
                    let mut rng = Sampler::new(*seed);
                    (0..SAMPLED_PAIRS)
                        .map(|_| Ok((sample_element(n, &mut rng)?, sample_element(n, &mut rng)?)))
                        .collect::<CliResult<_>>()?
                }
                (None, None) => return Err(CliError::malformed("either \"pairs\" or --seed is required")),
            };
            let inv = phi.inverse();
            let mut failures = 0usize;
            let mut first_failure = None;
            for (i, (x, y)) in pairs.iter().enumerate() {
                let xy = x.try_mul(y)?;
                let ok = phi.apply(&xy)? == phi.apply(x)?.try_mul(&phi.apply(y)?)? && inv.apply(&phi.apply(x)?)? == *x;
                if !ok {
                    failures += 1;
                    first_failure.get_or_insert(i);
                }
            }
            Ok(json!({
                "checked": pairs.len(),
                "holds": failures == 0,
                "failures": failures,
                "first_failure": first_failure,
            }))
        }
        Affine::Classify { input } => {
            let d: SubgroupDescriptor = input.parse()?;
            Ok(serde_json::to_value(classify_subgroup(&d)?)?)
        }
    }
}
