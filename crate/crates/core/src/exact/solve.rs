use super::hnf::{integer_kernel, LatticeBasis};
use super::matrix::{IntMatrix, RatMatrix};
use super::scalar::{floor_div, Integer, Rational};
use super::snf::snf;
use crate::error::{Error, Result};

/// Some `x` in `Z^n` with `m x = b`, or `None` when no integer solution
/// exists. Solvability is decided through the Smith form.
pub fn solve_integer(m: &IntMatrix, b: &[Integer]) -> Result<Option<Vec<Integer>>> {
    if b.len() != m.rows() {
        return Err(Error::Shape(format!(
            "right-hand side of length {} for a {}x{} system",
            b.len(),
            m.rows(),
            m.cols()
        )));
    }
    let s = snf(m);
    let c = s.u.mul_vec(b);
    let diag = s.diagonal();
    let mut y = vec![Integer::ZERO; m.cols()];
    for (i, ci) in c.iter().enumerate() {
        match diag.get(i) {
            Some(d) if !d.is_zero() => {
                let q = floor_div(ci, d);
                if &q * d != *ci {
                    return Ok(None);
                }
                y[i] = q;
            }
            _ => {
                if !ci.is_zero() {
                    return Ok(None);
                }
            }
        }
    }
    let x = s.v.mul_vec(&y);
    debug_assert_eq!(m.mul_vec(&x), b);
    Ok(Some(x))
}

/// Outcome of a linear solve over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalSolution {
    Unique(Vec<Rational>),
    /// Solvable with a kernel of the given dimension; `particular` is the
    /// solution with all free variables set to zero.
    Underdetermined {
        particular: Vec<Rational>,
        nullity: usize,
    },
    Inconsistent,
}

pub fn solve_rational(m: &RatMatrix, b: &[Rational]) -> Result<RationalSolution> {
    if b.len() != m.rows() {
        return Err(Error::Shape(format!(
            "right-hand side of length {} for a {}x{} system",
            b.len(),
            m.rows(),
            m.cols()
        )));
    }
    let (rows, cols) = (m.rows(), m.cols());
    // augmented reduced row echelon form
    let mut a: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let mut pivots = vec![];
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][col].clone();
        for x in a[r].iter_mut() {
            *x = &*x / &piv;
        }
        for i in 0..rows {
            if i == r || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            let (pivot_row, row) = if i < r {
                let (lo, hi) = a.split_at_mut(r);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = a.split_at_mut(i);
                (&lo[r], &mut hi[0])
            };
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = &*x - &f * p;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(RationalSolution::Inconsistent);
    }
    let mut x = vec![Rational::ZERO; cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i][cols].clone();
    }
    if pivots.len() == cols {
        Ok(RationalSolution::Unique(x))
    } else {
        Ok(RationalSolution::Underdetermined {
            particular: x,
            nullity: cols - pivots.len(),
        })
    }
}

/// `{v in Z^n : g v = sign * v}`, the integer kernel of `g - sign * I`.
pub fn fixed_sublattice(g: &IntMatrix, sign: i8) -> Result<LatticeBasis> {
    let n = g.require_square()?;
    if sign != 1 && sign != -1 {
        return Err(Error::Invalid(format!("sign must be +1 or -1, got {sign}")));
    }
    let shifted = g.try_sub(&IntMatrix::scalar(n, Integer::from(sign)))?;
    Ok(integer_kernel(&shifted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, int_vec, rat};

    #[test]
    fn parity_obstruction_and_solvable_rhs() {
        let m = IntMatrix::from_i64_rows(&[[4, -2], [8, -4]]);
        assert_eq!(solve_integer(&m, &int_vec(&[1, 2])).unwrap(), None);
        let x = solve_integer(&m, &int_vec(&[2, 4])).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), int_vec(&[2, 4]));
        // rank-deficient but consistent over Q, inconsistent second row
        assert_eq!(solve_integer(&m, &int_vec(&[2, 5])).unwrap(), None);
    }

    #[test]
    fn identity_returns_rhs() {
        let b = int_vec(&[7, -3, 11]);
        assert_eq!(solve_integer(&IntMatrix::identity(3), &b).unwrap(), Some(b.clone()));
        assert!(solve_integer(&IntMatrix::identity(3), &b[..2]).is_err());
    }

    #[test]
    fn rational_outcomes() {
        let m = RatMatrix::from_i64_rows(&[[0, -1], [-1, -1]]);
        assert_eq!(
            solve_rational(&m, &[rat(1, 1), rat(0, 1)]).unwrap(),
            RationalSolution::Unique(vec![rat(1, 1), rat(-1, 1)])
        );
        let s = RatMatrix::from_i64_rows(&[[1, 2], [2, 4]]);
        assert_eq!(
            solve_rational(&s, &[rat(1, 1), rat(3, 1)]).unwrap(),
            RationalSolution::Inconsistent
        );
        assert!(matches!(
            solve_rational(&s, &[rat(1, 1), rat(2, 1)]).unwrap(),
            RationalSolution::Underdetermined { nullity: 1, .. }
        ));
        let tall = RatMatrix::from_i64_rows(&[[0, -1], [0, 0], [0, 0], [-2, 0]]);
        assert_eq!(
            solve_rational(&tall, &[rat(0, 1), rat(0, 1), rat(0, 1), rat(-1, 1)]).unwrap(),
            RationalSolution::Unique(vec![rat(1, 2), rat(0, 1)])
        );
    }

    #[test]
    fn fixed_sublattice_examples() {
        let t = IntMatrix::from_i64_rows(&[[1, 1], [0, 1]]);
        assert_eq!(fixed_sublattice(&t, 1).unwrap().rows(), &[int_vec(&[1, 0])]);
        let h = IntMatrix::from_i64_rows(&[[2, 1], [1, 1]]);
        assert!(fixed_sublattice(&h, 1).unwrap().is_zero());
        let p = IntMatrix::from_i64_rows(&[[-1, 1], [0, -1]]);
        assert_eq!(fixed_sublattice(&p, -1).unwrap().rows(), &[int_vec(&[1, 0])]);
        assert!(fixed_sublattice(&p, 1).unwrap().is_zero());
        assert_eq!(
            fixed_sublattice(&IntMatrix::identity(2), 1).unwrap().index(),
            Some(int(1))
        );
        assert!(fixed_sublattice(&t, 0).is_err());
    }
}
