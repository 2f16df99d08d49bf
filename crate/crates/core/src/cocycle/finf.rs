//! The free subgroup `F∞ = <b^k a b^-k>` of `SL_2(Z)` with
//! `a = [[1,2],[0,1]]`, `b = [[1,0],[2,1]]`, and the extension problem for
//! cocycles on it to `<F∞, b^n>`.
//!
//! If `c'` extends `c` and `u = c'(b^n)`, conjugating `g_k = b^k a b^-k` by
//! `b^n` gives `c_{k+n} = b^n c_k + (I - g_{k+n}) u` for every `k`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::json::{decimal_vec, decimal_vecs};
use crate::exact::scalar::is_even;
use crate::exact::{int, solve_integer, IntMatrix, Integer};

pub fn finf_generator(k: &Integer) -> IntMatrix {
    let four_k = k * int(4);
    IntMatrix::new(2, 2, vec![int(1) - &four_k, int(2), -(k * k * int(8)), int(1) + four_k]).unwrap()
}

/// `b^n = [[1,0],[2n,1]]`.
pub fn b_power(n: &Integer) -> IntMatrix {
    IntMatrix::new(2, 2, vec![int(1), int(0), n * int(2), int(1)]).unwrap()
}

/// `I - g_n = [[4n, -2], [8n^2, -4n]]`, singular for every `n`.
pub fn finf_coefficient_matrix(n: &Integer) -> IntMatrix {
    IntMatrix::identity(2).try_sub(&finf_generator(n)).unwrap()
}

/// Cocycle values `k -> (x_k, y_k)` on a finite set of indices. JSON form:
/// a list of `[k, x_k, y_k]` triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinfWindow {
    values: BTreeMap<Integer, Vec<Integer>>,
}

impl FinfWindow {
    /// Rejects duplicate indices and values that are not pairs.
    pub fn new(entries: impl IntoIterator<Item = (Integer, Vec<Integer>)>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (k, v) in entries {
            if v.len() != 2 {
                return Err(Error::MalformedWindow(format!(
                    "value at k = {k} has length {}",
                    v.len()
                )));
            }
            if values.insert(k.clone(), v).is_some() {
                return Err(Error::MalformedWindow(format!("index {k} appears twice")));
            }
        }
        Ok(FinfWindow { values })
    }

    /// Values `f(k)` for `k` in `lo..=hi`.
    pub fn from_fn(lo: i64, hi: i64, mut f: impl FnMut(i64) -> (i64, i64)) -> Self {
        FinfWindow {
            values: (lo..=hi)
                .map(|k| {
                    let (x, y) = f(k);
                    (int(k), vec![int(x), int(y)])
                })
                .collect(),
        }
    }

    pub fn get(&self, k: &Integer) -> Option<&Vec<Integer>> {
        self.values.get(k)
    }

    pub fn indices(&self) -> impl Iterator<Item = &Integer> {
        self.values.keys()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Indices `k` with both `k` and `k + n` present.
    pub fn relation_indices(&self, n: &Integer) -> Vec<Integer> {
        self.values
            .keys()
            .filter(|k| self.values.contains_key(&(*k + n)))
            .cloned()
            .collect()
    }

    fn validate(&self, n: &Integer) -> Result<()> {
        if *n == Integer::ZERO {
            return Err(Error::MalformedWindow("n must be nonzero".into()));
        }
        for needed in [Integer::ZERO, n.clone()] {
            if !self.values.contains_key(&needed) {
                return Err(Error::MalformedWindow(format!("window must contain index {needed}")));
            }
        }
        let lo = self.values.keys().next().unwrap();
        let hi = self.values.keys().next_back().unwrap();
        for k in self.values.keys() {
            let shifted = k + n;
            if &shifted >= lo && &shifted <= hi && !self.values.contains_key(&shifted) {
                return Err(Error::MalformedWindow(format!(
                    "window has a gap at {shifted} (shift of {k} by {n})"
                )));
            }
        }
        Ok(())
    }
}

impl Serialize for FinfWindow {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let triples: Vec<Vec<Integer>> = self
            .values
            .iter()
            .map(|(k, v)| vec![k.clone(), v[0].clone(), v[1].clone()])
            .collect();
        decimal_vecs::serialize(&triples, s)
    }
}

impl<'de> Deserialize<'de> for FinfWindow {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let triples: Vec<Vec<Integer>> = decimal_vecs::deserialize(d)?;
        let entries = triples
            .into_iter()
            .map(|t| match <[Integer; 3]>::try_from(t) {
                Ok([k, x, y]) => Ok((k, vec![x, y])),
                Err(t) => Err(D::Error::custom(format!(
                    "window entry of length {}, expected [k, x, y]",
                    t.len()
                ))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        FinfWindow::new(entries).map_err(D::Error::custom)
    }
}

/// One instantiated relation `(I - g_{k+n}) u = c_{k+n} - b^n c_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FinfRelation {
    #[serde(with = "crate::exact::json::decimal")]
    pub k: Integer,
    pub coefficient: IntMatrix,
    #[serde(with = "decimal_vec")]
    pub rhs: Vec<Integer>,
}

impl FinfRelation {
    pub fn holds_for(&self, u: &[Integer]) -> bool {
        self.coefficient.mul_vec(u) == self.rhs
    }
}

pub fn finf_relations(n: &Integer, window: &FinfWindow) -> Result<Vec<FinfRelation>> {
    window.validate(n)?;
    let bn = b_power(n);
    Ok(window
        .relation_indices(n)
        .into_iter()
        .map(|k| {
            let kn = &k + n;
            let ck = &window.values[&k];
            let ckn = &window.values[&kn];
            let rhs = ckn.iter().zip(bn.mul_vec(ck)).map(|(a, b)| a - b).collect();
            FinfRelation {
                k,
                coefficient: finf_coefficient_matrix(&kn),
                rhs,
            }
        })
        .collect())
}

/// Some `u = c'(b^n)` satisfying every relation instantiable in the window,
/// or `None` when the stacked system has no integer solution.
pub fn finf_extend(n: &Integer, window: &FinfWindow) -> Result<Option<Vec<Integer>>> {
    let relations = finf_relations(n, window)?;
    let rows: Vec<Vec<Integer>> = relations.iter().flat_map(|r| r.coefficient.to_rows()).collect();
    let rhs: Vec<Integer> = relations.iter().flat_map(|r| r.rhs.clone()).collect();
    let u = solve_integer(&IntMatrix::from_rows(rows)?, &rhs)?;
    debug_assert!(u.as_ref().is_none_or(|u| relations.iter().all(|r| r.holds_for(u))));
    Ok(u)
}

/// The necessary condition from the `k = 0` relation alone:
/// `x_n - x_0` and `y_n - 2n x_0 - y_0` are both even.
pub fn finf_parity_condition(n: &Integer, c0: &[Integer], cn: &[Integer]) -> bool {
    is_even(&(&cn[0] - &c0[0])) && is_even(&(&cn[1] - n * int(2) * &c0[0] - &c0[1]))
}
