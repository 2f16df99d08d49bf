//! Smith normal form with unimodular transforms.

use super::matrix::IntMatrix;
use super::scalar::{abs, floor_div, int, is_negative, Integer};

/// `u * m * v = d` with `u`, `v` unimodular and `d` diagonal, nonnegative,
/// each diagonal entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<Integer> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }

    /// `U M V = D` exactly, `D` diagonal with a nonnegative divisibility
    /// chain, and `U`, `V` unimodular.
    pub fn holds_for(&self, m: &IntMatrix) -> bool {
        let diag = self.diagonal();
        let off_diagonal_zero =
            (0..self.d.rows()).all(|i| (0..self.d.cols()).all(|j| i == j || self.d[(i, j)].is_zero()));
        let chain = diag.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                (&w[1] % &w[0]).is_zero()
            }
        });
        let unimodular = |x: &IntMatrix| x.det().map(|d| d == int(1) || d == int(-1)).unwrap_or(false);
        off_diagonal_zero
            && chain
            && diag.iter().all(|d| *d >= Integer::ZERO)
            && unimodular(&self.u)
            && unimodular(&self.v)
            && self.u.try_mul(m).and_then(|um| um.try_mul(&self.v)).ok().as_ref() == Some(&self.d)
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

pub fn snf(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| abs(&a[(i, j)]) < abs(&a[(bi, bj)])) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { u, d: a, v };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = floor_div(&a[(i, t)], &a[(t, t)]);
                row_sub(&mut a, i, t, &q);
                row_sub(&mut u, i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = floor_div(&a[(t, j)], &a[(t, t)]);
                col_sub(&mut a, j, t, &q);
                col_sub(&mut v, j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and start over
            let p = a[(t, t)].clone();
            let offending =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !(floor_div(&a[(i, j)], &p) * &p == a[(i, j)])));
            match offending {
                Some(i) => {
                    row_sub(&mut a, t, i, &Integer::NEG_ONE);
                    row_sub(&mut u, t, i, &Integer::NEG_ONE);
                }
                None => break,
            }
        }
        if is_negative(&a[(t, t)]) {
            negate_row(&mut a, t);
            negate_row(&mut u, t);
        }
    }
    let s = SmithForm { u, d: a, v };
    debug_assert!(s.holds_for(m), "Smith form self-check failed");
    s
}

// row_i -= q * row_k
fn row_sub(m: &mut IntMatrix, i: usize, k: usize, q: &Integer) {
    for j in 0..m.cols() {
        if m[(k, j)].is_zero() {
            continue;
        }
        let d = q * &m[(k, j)];
        m[(i, j)] = &m[(i, j)] - d;
    }
}

// col_j -= q * col_k
fn col_sub(m: &mut IntMatrix, j: usize, k: usize, q: &Integer) {
    for i in 0..m.rows() {
        if m[(i, k)].is_zero() {
            continue;
        }
        let d = q * &m[(i, k)];
        m[(i, j)] = &m[(i, j)] - d;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for j in 0..m.cols() {
        m[(i, j)] = -m[(i, j)].clone();
    }
}
