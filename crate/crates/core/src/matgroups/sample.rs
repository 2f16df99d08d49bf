//! Deterministic sampling of group elements.
//!
//! The generator is SplitMix64 (state increment `0x9E3779B97F4A7C15`, output
//! mixers `0xBF58476D1CE4E5B9` and `0x94D049BB133111EB`) seeded directly with
//! the user seed. A product of length `L` over generators `g_0..g_{k-1}`
//! starts from the identity; each step draws `r = next_u64() mod 2k` and
//! multiplies on the right by `g_{r/2}`, inverted when `r` is odd.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;
use serde::{Deserialize, Serialize};

use super::congruence::CongruenceKind;
use super::word::{GenWord, Generator, Letter};
use crate::error::Result;
use crate::exact::{int, IntMatrix};

pub struct Sampler(SplitMix64);

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish value in `0..n` by plain reduction (`n > 0`).
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Value in the inclusive range `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo) as u64 + 1;
        lo + self.below(span) as i64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleGroup {
    /// `SL_2(Z)`, generated by `S` and `T`.
    Full,
    Congruence(CongruenceKind),
}

impl SampleGroup {
    pub fn generators(&self) -> Vec<IntMatrix> {
        match self {
            SampleGroup::Full => vec![Generator::S.matrix(), Generator::T.matrix()],
            SampleGroup::Congruence(k) => k.sampling_generators(),
        }
    }
}

/// Product of `len` generators or inverses drawn by `rng`, following the
/// contract in the module docs.
pub fn sample_product(gens: &[IntMatrix], len: usize, rng: &mut Sampler) -> Result<IntMatrix> {
    let n = gens.first().map_or(2, |g| g.rows());
    let inverses = gens
        .iter()
        .map(IntMatrix::inverse_unimodular)
        .collect::<Result<Vec<_>>>()?;
    let mut acc = IntMatrix::identity(n);
    if gens.is_empty() {
        return Ok(acc);
    }
    let k = gens.len() as u64;
    for _ in 0..len {
        let r = rng.below(2 * k);
        let i = (r / 2) as usize;
        let g = if r.is_multiple_of(2) { &gens[i] } else { &inverses[i] };
        acc = acc.try_mul(g)?;
    }
    Ok(acc)
}

pub fn sample_subgroup_element(group: &SampleGroup, word_length: usize, seed: u64) -> Result<IntMatrix> {
    sample_product(&group.generators(), word_length, &mut Sampler::new(seed))
}

/// Random word of `len` letters over `alphabet`, exponents uniform in
/// `-max_exp..=max_exp` with zero skipped.
pub fn random_word(alphabet: &[Generator], len: usize, max_exp: i64, rng: &mut Sampler) -> GenWord {
    let letters = (0..len)
        .map(|_| {
            let gen = alphabet[rng.below(alphabet.len() as u64) as usize];
            let mut e = rng.range_i64(-max_exp, max_exp - 1);
            if e >= 0 {
                e += 1;
            }
            Letter { gen, exp: int(e) }
        })
        .collect();
    GenWord::new(letters, false)
}

/// Every matrix in `SL_2(Z)` with entries in `-bound..=bound`.
pub fn sl2_box(bound: i64) -> Vec<IntMatrix> {
    let r = -bound..=bound;
    let mut out = vec![];
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    if a * d - b * c == 1 {
                        out.push(IntMatrix::from_i64_rows(&[[a, b], [c, d]]));
                    }
                }
            }
        }
    }
    out
}
