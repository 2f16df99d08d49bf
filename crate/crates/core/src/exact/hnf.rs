//! Row-style Hermite normal form and lattice bases.
//!
//! Convention: upper echelon, every pivot positive, entries above a pivot
//! reduced into `[0, pivot)`, zero rows dropped. Two generating sets of the
//! same lattice produce identical bases.

use super::matrix::IntMatrix;
use super::scalar::{abs, floor_div, is_negative, Integer, Scalar};
use crate::error::{Error, Result};

/// A sublattice of `Z^n` stored as its Hermite basis. The zero lattice has no
/// rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeBasis {
    dim: usize,
    rows: Vec<Vec<Integer>>,
}

impl LatticeBasis {
    pub fn zero(dim: usize) -> Self {
        LatticeBasis { dim, rows: vec![] }
    }

    /// The full lattice `Z^n`.
    pub fn standard(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { Integer::ONE } else { Integer::ZERO })
                    .collect()
            })
            .collect();
        LatticeBasis { dim, rows }
    }

    /// `k * Z^n`.
    pub fn scaled_standard(dim: usize, k: &Integer) -> Self {
        if k.is_zero() {
            return Self::zero(dim);
        }
        let k = abs(k);
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| if i == j { k.clone() } else { Integer::ZERO })
                    .collect()
            })
            .collect();
        LatticeBasis { dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// (column, value) of each pivot, top to bottom.
    pub fn pivots(&self) -> Vec<(usize, Integer)> {
        self.rows
            .iter()
            .map(|r| {
                let c = r.iter().position(|x| !x.is_zero()).expect("zero row in basis");
                (c, r[c].clone())
            })
            .collect()
    }

    /// Index in `Z^n` (product of pivots) for a full-rank lattice.
    pub fn index(&self) -> Option<Integer> {
        if !self.is_full_rank() {
            return None;
        }
        Some(self.pivots().into_iter().fold(Integer::ONE, |acc, (_, p)| acc * p))
    }

    /// Integer coordinates of `v` in this basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[Integer]) -> Option<Vec<Integer>> {
        if v.len() != self.dim {
            return None;
        }
        let mut residual = v.to_vec();
        let mut coords = Vec::with_capacity(self.rows.len());
        for (row, (c, p)) in self.rows.iter().zip(self.pivots()) {
            // Echelon form: nothing left of the pivot may survive.
            if residual[..c].iter().any(|x| !x.is_zero()) {
                return None;
            }
            let q = floor_div(&residual[c], &p);
            if &q * &p != residual[c] {
                return None;
            }
            for (r, b) in residual.iter_mut().zip(row) {
                *r = &*r - &q * b;
            }
            coords.push(q);
        }
        residual.iter().all(Scalar::is_zero).then_some(coords)
    }

    pub fn contains(&self, v: &[Integer]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Whether every basis vector of `other` lies in `self`.
    pub fn contains_lattice(&self, other: &LatticeBasis) -> bool {
        other.dim == self.dim && other.rows.iter().all(|r| self.contains(r))
    }
}

/// JSON form `{"dim": n, "basis": [[...], ...]}`. Reading accepts any
/// generating set and canonicalizes it.
impl serde::Serialize for LatticeBasis {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LatticeBasis", 2)?;
        st.serialize_field("dim", &self.dim)?;
        let basis: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        st.serialize_field("basis", &basis)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for LatticeBasis {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            dim: usize,
            #[serde(with = "super::json::decimal_vecs")]
            basis: Vec<Vec<Integer>>,
        }
        let raw = Raw::deserialize(d)?;
        hnf(raw.dim, &raw.basis).map_err(serde::de::Error::custom)
    }
}

/// Hermite basis of the lattice generated by `rows` in `Z^dim`.
pub fn hnf(dim: usize, rows: &[Vec<Integer>]) -> Result<LatticeBasis> {
    if let Some(bad) = rows.iter().find(|r| r.len() != dim) {
        return Err(Error::Shape(format!(
            "vector of length {} in ambient dimension {dim}",
            bad.len()
        )));
    }
    let (h, _) = echelon(rows.to_vec(), dim, false);
    Ok(LatticeBasis {
        dim,
        rows: h.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect(),
    })
}

/// Hermite form of the rows of `m` together with a unimodular `u` such that
/// `u * m = h`. Zero rows of `h` are kept at the bottom.
pub fn hnf_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (h, u) = echelon(m.to_rows(), m.cols(), true);
    let u = u.expect("transform requested");
    let h = if h.is_empty() {
        IntMatrix::zeros(0, m.cols())
    } else {
        IntMatrix::from_rows(h).expect("rectangular")
    };
    let u = if u.is_empty() {
        IntMatrix::zeros(0, 0)
    } else {
        IntMatrix::from_rows(u).expect("rectangular")
    };
    (h, u)
}

fn row_axpy(target: &mut [Integer], q: &Integer, source: &[Integer]) {
    // target -= q * source
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t = &*t - q * s;
        }
    }
}

fn echelon(mut a: Vec<Vec<Integer>>, cols: usize, track: bool) -> (Vec<Vec<Integer>>, Option<Vec<Vec<Integer>>>) {
    let m = a.len();
    let mut u: Option<Vec<Vec<Integer>>> = track.then(|| {
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| if i == j { Integer::ONE } else { Integer::ZERO })
                    .collect()
            })
            .collect()
    });
    let mut r = 0;
    for col in 0..cols {
        if r == m {
            break;
        }
        // Euclid on column `col` among rows r.., keeping the smallest entry in row r.
        while let Some(k) = (r..m)
            .filter(|&i| !a[i][col].is_zero())
            .min_by_key(|&i| abs(&a[i][col]))
        {
            a.swap(r, k);
            if let Some(u) = u.as_mut() {
                u.swap(r, k);
            }
            let mut done = true;
            for i in r + 1..m {
                if a[i][col].is_zero() {
                    continue;
                }
                let q = floor_div(&a[i][col], &a[r][col]);
                let (top, bottom) = a.split_at_mut(i);
                row_axpy(&mut bottom[0], &q, &top[r]);
                if let Some(u) = u.as_mut() {
                    let (top, bottom) = u.split_at_mut(i);
                    row_axpy(&mut bottom[0], &q, &top[r]);
                }
                if !a[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if a[r][col].is_zero() {
            continue;
        }
        if is_negative(&a[r][col]) {
            for x in a[r].iter_mut() {
                *x = -x.clone();
            }
            if let Some(u) = u.as_mut() {
                for x in u[r].iter_mut() {
                    *x = -x.clone();
                }
            }
        }
        for i in 0..r {
            let q = floor_div(&a[i][col], &a[r][col]);
            if q.is_zero() {
                continue;
            }
            let (top, bottom) = a.split_at_mut(r);
            row_axpy(&mut top[i], &q, &bottom[0]);
            if let Some(u) = u.as_mut() {
                let (top, bottom) = u.split_at_mut(r);
                row_axpy(&mut top[i], &q, &bottom[0]);
            }
        }
        r += 1;
    }
    (a, u)
}

/// Integer kernel `{x in Z^n : m x = 0}` as a Hermite basis. The result is
/// saturated: it is the full kernel lattice, not a finite-index sublattice.
pub fn integer_kernel(m: &IntMatrix) -> LatticeBasis {
    let n = m.cols();
    let (h, u) = hnf_with_transform(&m.transpose());
    let kernel: Vec<Vec<Integer>> = (0..h.rows())
        .filter(|&i| h.row(i).iter().all(Scalar::is_zero))
        .map(|i| u.row(i).to_vec())
        .collect();
    hnf(n, &kernel).expect("kernel vectors have ambient dimension")
}
