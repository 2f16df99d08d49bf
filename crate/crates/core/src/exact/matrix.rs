use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use super::scalar::{Integer, Rational, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact scalar type.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

pub type IntMatrix = Matrix<Integer>;
pub type RatMatrix = Matrix<Rational>;

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, entries: Vec<T>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows<const C: usize>(rows: &[[i64; C]]) -> Self {
        Matrix {
            rows: rows.len(),
            cols: C,
            entries: rows.iter().flatten().map(|&v| T::from_i64(v)).collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn scalar(n: usize, c: T) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { c.clone() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Submatrix on the half-open row and column ranges.
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols.min(i)).all(|j| self[(i, j)].is_zero()))
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = &self[(i, k)];
                    if a.is_zero() {
                        continue;
                    }
                    acc = acc + a.clone() * other[(k, j)].clone();
                }
                out.push(acc);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: other.cols,
            entries: out,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn try_mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!(
                "cannot apply a {}x{} matrix to a vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    /// Matrix-vector product; panics on a length mismatch.
    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        self.try_mul_vec(v).expect("matrix-vector shape mismatch")
    }

    pub fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    pub fn require_size(&self, n: usize) -> Result<()> {
        if self.rows != n || self.cols != n {
            return Err(Error::WrongSize {
                expected: n,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<T> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.entries.clone();
        let mut sign_flip = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                    return Ok(T::zero());
                };
                for j in 0..n {
                    a.swap(k * n + j, p * n + j);
                }
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[i * n + j].clone() * a[k * n + k].clone() - a[i * n + k].clone() * a[k * n + j].clone();
                    a[i * n + j] = v.exact_div(&prev);
                }
            }
            prev = a[k * n + k].clone();
        }
        let d = a[n * n - 1].clone();
        Ok(if sign_flip { -d } else { d })
    }

    /// `self^e` for `e >= 0` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Result<Self> {
        let n = self.require_square()?;
        let mut base = self.clone();
        let mut acc = Self::identity(n);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }
}

impl<T: Scalar> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.entries[i * self.cols + j]
    }
}

impl<T: Scalar> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.entries[i * self.cols + j]
    }
}

/// Matrix product; panics on mismatched shapes (use [`Matrix::try_mul`] for
/// untrusted input).
impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, v) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl IntMatrix {
    pub fn to_rational(&self) -> RatMatrix {
        self.map(|a| Rational::from(a.clone()))
    }

    /// Inverse of a matrix with determinant ±1; the result is integral.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        let n = self.require_square()?;
        if n == 2 {
            let d = self.det()?;
            if d != Integer::ONE && d != Integer::NEG_ONE {
                return Err(Error::Determinant {
                    det: d.to_string(),
                    expected: "±1".into(),
                });
            }
            // adjugate times det (det = ±1 is its own inverse)
            let (a, b, c, e) = (&self[(0, 0)], &self[(0, 1)], &self[(1, 0)], &self[(1, 1)]);
            return Ok(Matrix {
                rows: 2,
                cols: 2,
                entries: vec![e * &d, -(b * &d), -(c * &d), a * &d],
            });
        }
        let inv = self.to_rational().inverse()?;
        inv.to_integer().ok_or_else(|| Error::Determinant {
            det: self.det().map(|d| d.to_string()).unwrap_or_default(),
            expected: "±1".into(),
        })
    }

    pub fn require_det(&self, expected: i64) -> Result<()> {
        self.require_square()?;
        let d = self.det()?;
        if d != Integer::from(expected) {
            return Err(Error::Determinant {
                det: d.to_string(),
                expected: expected.to_string(),
            });
        }
        Ok(())
    }

    pub fn require_unimodular(&self) -> Result<()> {
        self.require_square()?;
        let d = self.det()?;
        if d != Integer::ONE && d != Integer::NEG_ONE {
            return Err(Error::Determinant {
                det: d.to_string(),
                expected: "±1".into(),
            });
        }
        Ok(())
    }
}

impl RatMatrix {
    pub fn to_integer(&self) -> Option<IntMatrix> {
        let entries = self
            .entries
            .iter()
            .map(super::scalar::rational_to_integer)
            .collect::<Option<Vec<_>>>()?;
        Some(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Gauss-Jordan inverse over the rationals.
    pub fn inverse(&self) -> Result<RatMatrix> {
        let n = self.require_square()?;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let Some(p) = (col..n).find(|&i| !a[(i, col)].is_zero()) else {
                return Err(Error::Singular);
            };
            a.swap_rows(col, p);
            inv.swap_rows(col, p);
            let piv = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] / &piv;
                inv[(col, j)] = &inv[(col, j)] / &piv;
            }
            for i in 0..n {
                if i == col || a[(i, col)].is_zero() {
                    continue;
                }
                let f = a[(i, col)].clone();
                for j in 0..n {
                    let da = &f * &a[(col, j)];
                    let di = &f * &inv[(col, j)];
                    a[(i, j)] = &a[(i, j)] - da;
                    inv[(i, j)] = &inv[(i, j)] - di;
                }
            }
        }
        Ok(inv)
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let Some(p) = (rank..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(rank, p);
            for i in rank + 1..a.rows {
                if a[(i, col)].is_zero() {
                    continue;
                }
                let f = &a[(i, col)] / &a[(rank, col)];
                for j in col..a.cols {
                    let d = &f * &a[(rank, j)];
                    a[(i, j)] = &a[(i, j)] - d;
                }
            }
            rank += 1;
        }
        rank
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(i * self.cols + j, k * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + j, i * self.cols + k);
        }
    }
}
