use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::element::AffineElement;
use crate::error::{Error, Result};
use crate::exact::json::decimal_vec;
use crate::exact::scalar::abs;
use crate::exact::{fixed_sublattice, int, IntMatrix, Integer};
use crate::matgroups::{order_of, Order};

/// A primitive `v` with `g v = sign * v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FcWitness {
    #[serde(with = "decimal_vec")]
    pub v: Vec<Integer>,
    pub sign: i8,
}

/// A nonzero vector fixed by `g` up to sign, preferring sign `+1`. Such a
/// vector `v` makes the conjugacy class of the translation `(v, I)` in
/// `Z^2 ⋊ <g, -I>` finite.
pub fn fc_witness(g: &IntMatrix) -> Result<Option<FcWitness>> {
    g.require_size(2)?;
    g.require_det(1)?;
    for sign in [1, -1] {
        let lattice = fixed_sublattice(g, sign)?;
        if let Some(v) = lattice.rows().first() {
            return Ok(Some(FcWitness { v: v.clone(), sign }));
        }
    }
    Ok(None)
}

/// Whether `Z^2 ⋊ <g, -I>` is ICC, for `g` of infinite order: true exactly
/// when `g` has no eigenvector with eigenvalue `±1`, i.e. `|tr g| > 2`.
pub fn icc_affine_cyclic(g: &IntMatrix) -> Result<bool> {
    g.require_size(2)?;
    g.require_det(1)?;
    if let Order::Finite(k) = order_of(g)? {
        return Err(Error::FiniteOrder(k));
    }
    let icc = fc_witness(g)?.is_none();
    assert_eq!(
        icc,
        abs(&g.trace()) > int(2),
        "fixed-vector and trace criteria disagree on {g}"
    );
    Ok(icc)
}

/// Sizes of the balls `{w x w^-1 : |w| <= r}` for `r = 0..=radius`, where
/// words run over `gens` and their inverses.
pub fn conj_class_profile(x: &AffineElement, gens: &[AffineElement], radius: usize) -> Result<Vec<usize>> {
    if let Some(bad) = gens.iter().find(|h| h.dim() != x.dim()) {
        return Err(Error::Shape(format!(
            "generator of dimension {} for an element of dimension {}",
            bad.dim(),
            x.dim()
        )));
    }
    let moves: Vec<(AffineElement, AffineElement)> = gens
        .iter()
        .flat_map(|h| {
            let inv = h.inverse();
            [(h.clone(), inv.clone()), (inv, h.clone())]
        })
        .collect();
    let mut seen: HashSet<AffineElement> = HashSet::from([x.clone()]);
    let mut frontier = vec![x.clone()];
    let mut profile = vec![1];
    for _ in 0..radius {
        let mut next = vec![];
        for y in &frontier {
            for (h, h_inv) in &moves {
                let z = h.mul(y).mul(h_inv);
                if seen.insert(z.clone()) {
                    next.push(z);
                }
            }
        }
        frontier = next;
        profile.push(seen.len());
    }
    Ok(profile)
}

pub fn conj_class_ball(x: &AffineElement, gens: &[AffineElement], radius: usize) -> Result<usize> {
    Ok(*conj_class_profile(x, gens, radius)?.last().unwrap())
}
