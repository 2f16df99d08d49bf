use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{hnf, int, IntMatrix, Integer, LatticeBasis};
use crate::matgroups::Generator;

/// Index of a sublattice in `Z^n`; only defined at full rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LatticeIndex {
    Finite(Integer),
    NotApplicable,
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(k) => write!(f, "{k}"),
            LatticeIndex::NotApplicable => write!(f, "not-applicable"),
        }
    }
}

impl Serialize for LatticeIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl LatticeIndex {
    pub fn of(l: &LatticeBasis) -> Self {
        l.index().map_or(LatticeIndex::NotApplicable, LatticeIndex::Finite)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantLattice {
    pub lattice: LatticeBasis,
    pub index: LatticeIndex,
}

/// Generators of `SL_n(Z)`: `S`, `T` for `n = 2`, the elementary
/// transvections `I + E_ij` otherwise.
pub fn sl_generators(n: usize) -> Vec<IntMatrix> {
    if n == 2 {
        return vec![Generator::S.matrix(), Generator::T.matrix()];
    }
    let mut out = vec![];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut e = IntMatrix::identity(n);
                e[(i, j)] = int(1);
                out.push(e);
            }
        }
    }
    out
}

/// Whether `g L ⊆ L` for every generator.
pub fn is_invariant(l: &LatticeBasis, gens: &[IntMatrix]) -> bool {
    gens.iter().all(|g| l.rows().iter().all(|b| l.contains(&g.mul_vec(b))))
}

/// The smallest lattice containing `seeds` and stable under `gens` and their
/// inverses.
pub fn invariant_lattice(gens: &[IntMatrix], seeds: &[Vec<Integer>]) -> Result<InvariantLattice> {
    let n = match (gens.first(), seeds.first()) {
        (Some(g), _) => g.require_square()?,
        (None, Some(v)) => v.len(),
        (None, None) => 0,
    };
    let mut moves = Vec::with_capacity(2 * gens.len());
    for g in gens {
        g.require_size(n)?;
        let inv = g.inverse_unimodular()?;
        moves.push(g.clone());
        moves.push(inv);
    }
    if let Some(bad) = seeds.iter().find(|v| v.len() != n) {
        return Err(Error::Shape(format!("seed of length {} in dimension {n}", bad.len())));
    }
    let mut lattice = hnf(n, seeds)?;
    loop {
        let images: Vec<Vec<Integer>> = lattice
            .rows()
            .iter()
            .flat_map(|b| moves.iter().map(move |g| g.mul_vec(b)))
            .filter(|v| !lattice.contains(v))
            .collect();
        if images.is_empty() {
            break;
        }
        let mut rows = lattice.rows().to_vec();
        rows.extend(images);
        lattice = hnf(n, &rows)?;
    }
    let index = LatticeIndex::of(&lattice);
    Ok(InvariantLattice { lattice, index })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int_vec;

    #[test]
    fn examples() {
        let r = invariant_lattice(&sl_generators(2), &[int_vec(&[2, 0])]).unwrap();
        assert_eq!(r.lattice, LatticeBasis::scaled_standard(2, &int(2)));
        assert_eq!(r.index, LatticeIndex::Finite(int(4)));

        let r = invariant_lattice(&sl_generators(3), &[int_vec(&[2, 4, 6])]).unwrap();
        assert_eq!(r.lattice, LatticeBasis::scaled_standard(3, &int(2)));
        assert_eq!(r.index, LatticeIndex::Finite(int(8)));

        let r = invariant_lattice(&[IntMatrix::identity(2)], &[int_vec(&[3, 0])]).unwrap();
        assert_eq!(r.lattice.rows(), &[int_vec(&[3, 0])]);
        assert_eq!(r.index, LatticeIndex::NotApplicable);
        assert_eq!(serde_json::to_string(&r.index).unwrap(), "\"not-applicable\"");

        let r = invariant_lattice(&sl_generators(2), &[]).unwrap();
        assert!(r.lattice.is_zero());
        assert_eq!(r.index, LatticeIndex::NotApplicable);
    }

    #[test]
    fn parabolic_orbit() {
        // <T> acting on (0, 1): T^k (0,1) = (k, 1), closure is all of Z^2
        let t = Generator::T.matrix();
        let r = invariant_lattice(std::slice::from_ref(&t), &[int_vec(&[0, 1])]).unwrap();
        assert_eq!(r.lattice, LatticeBasis::standard(2));
        let r = invariant_lattice(&[t], &[int_vec(&[0, 3])]).unwrap();
        assert_eq!(r.index, LatticeIndex::Finite(int(9)));
    }

    #[test]
    fn rejects_bad_input() {
        let two = IntMatrix::from_i64_rows(&[[2, 0], [0, 1]]);
        assert!(invariant_lattice(&[two], &[int_vec(&[1, 0])]).is_err());
        assert!(invariant_lattice(&sl_generators(2), &[int_vec(&[1, 0, 0])]).is_err());
        assert!(invariant_lattice(&[IntMatrix::identity(2), IntMatrix::identity(3)], &[]).is_err());
    }

    #[test]
    fn generators_are_unimodular() {
        for n in 2..=4 {
            for g in sl_generators(n) {
                assert_eq!(g.det().unwrap(), int(1));
            }
        }
        assert_eq!(sl_generators(3).len(), 6);
    }
}
