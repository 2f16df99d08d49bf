use serde::{Deserialize, Serialize};

use super::perm::Perm;
use crate::error::{Error, Result};
use crate::exact::json::decimal;
use crate::exact::scalar::{denominator, lcm};
use crate::exact::{int, Integer, RatMatrix, Rational, Scalar};

/// `g = A p_σ B` with `A`, `B` invertible upper triangular over `Q`.
///
/// The factorization is normalized so that `B` is unipotent and
/// `B[σ-pivot(i)][σ-pivot(j)] = 0` whenever `j > i` (the unique normal form
/// in the double coset); in particular upper triangular `g` gives `A = g`,
/// `B = I`, and `g = p_σ` gives `A = B = I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruhatFactorization {
    pub a: RatMatrix,
    pub sigma: Perm,
    pub b: RatMatrix,
    #[serde(with = "decimal")]
    pub det_a: Rational,
    #[serde(with = "decimal")]
    pub det_b: Rational,
}

impl BruhatFactorization {
    pub fn product(&self) -> RatMatrix {
        &(&self.a * &self.sigma.rat_matrix()) * &self.b
    }

    /// Whether this is a valid factorization of `g`.
    pub fn holds_for(&self, g: &RatMatrix) -> bool {
        self.a.is_upper_triangular()
            && self.b.is_upper_triangular()
            && !self.det_a.is_zero()
            && !self.det_b.is_zero()
            && self.a.det().ok().as_ref() == Some(&self.det_a)
            && self.b.det().ok().as_ref() == Some(&self.det_b)
            && self.product() == *g
    }
}

fn require_invertible_3x3(g: &RatMatrix) -> Result<()> {
    g.require_size(3)?;
    if g.det()?.is_zero() {
        return Err(Error::Singular);
    }
    Ok(())
}

/// Entries beyond this bound leave the `i128` fast path.
const FAST_BOUND: i64 = 1 << 40;

fn rank_small<T: Scalar>(m: &[[T; 3]; 3], rows: std::ops::Range<usize>, cols: usize) -> usize {
    let rs: Vec<usize> = rows.collect();
    let minor2 = |r0: usize, r1: usize, c0: usize, c1: usize| {
        m[r0][c0].clone() * m[r1][c1].clone() - m[r0][c1].clone() * m[r1][c0].clone()
    };
    if rs.len() == 3 && cols == 3 {
        let det = m[0][0].clone() * minor2(1, 2, 1, 2) - m[0][1].clone() * minor2(1, 2, 0, 2)
            + m[0][2].clone() * minor2(1, 2, 0, 1);
        if !det.is_zero() {
            return 3;
        }
    }
    for (a, &r0) in rs.iter().enumerate() {
        for &r1 in &rs[a + 1..] {
            for c0 in 0..cols {
                for c1 in c0 + 1..cols {
                    if !minor2(r0, r1, c0, c1).is_zero() {
                        return 2;
                    }
                }
            }
        }
    }
    usize::from(rs.iter().any(|&r| (0..cols).any(|c| !m[r][c].is_zero())))
}

/// `σ` from the ranks `r(i, j)` of the southwest submatrices
/// `g[i.., ..j]`, which equal those of `p_σ`.
fn cell_from_ranks(rank: impl Fn(usize, usize) -> usize) -> Option<Perm> {
    let r = |i: usize, j: usize| if i == 3 || j == 0 { 0 } else { rank(i, j) };
    let mut cols = [usize::MAX; 3];
    for (k, col) in cols.iter_mut().enumerate() {
        for j in 1..=3 {
            if r(k, j) + r(k + 1, j - 1) == r(k + 1, j) + r(k, j - 1) + 1 {
                *col = j - 1;
            }
        }
    }
    Perm::from_columns(cols)
}

/// Bruhat cell of an integer matrix, or `None` if it is singular or has an
/// entry of absolute value at least `2^40`.
pub fn cell_of_i64(m: &[[i64; 3]; 3]) -> Option<Perm> {
    if m.iter().flatten().any(|v| v.unsigned_abs() >= FAST_BOUND as u64) {
        return None;
    }
    let w: [[I128; 3]; 3] = m.map(|row| row.map(|v| I128(v.into())));
    if rank_small(&w, 0..3, 3) < 3 {
        return None;
    }
    cell_from_ranks(|i, j| rank_small(&w, i..3, j))
}

/// The `σ` with `g ∈ B p_σ B`, from the rank profile of the southwest
/// submatrices.
pub fn cell_of(g: &RatMatrix) -> Result<Perm> {
    require_invertible_3x3(g)?;
    let l = g.entries().iter().fold(int(1), |acc, x| lcm(&acc, &denominator(x)));
    let scaled: Vec<Integer> = g
        .entries()
        .iter()
        .map(|x| x.numerator() * (&l / denominator(x)))
        .collect();
    let small: Option<Vec<i64>> = scaled.iter().map(|v| i64::try_from(v).ok()).collect();
    if let Some(v) = small {
        if let Some(p) = cell_of_i64(&[[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]]) {
            return Ok(p);
        }
    }
    let m: [[Rational; 3]; 3] = std::array::from_fn(|i| std::array::from_fn(|j| g[(i, j)].clone()));
    cell_from_ranks(|i, j| rank_small(&m, i..3, j)).ok_or(Error::Singular)
}

/// Bruhat factorization by upward row operations: rows are processed bottom
/// to top, each is cleared at the pivot columns of the rows below it (left
/// to right), and its leftmost remaining entry becomes its pivot.
pub fn bruhat_decompose(g: &RatMatrix) -> Result<BruhatFactorization> {
    require_invertible_3x3(g)?;
    let mut r = g.clone();
    let mut owner: [Option<usize>; 3] = [None; 3];
    let mut cols = [0usize; 3];
    for i in (0..3).rev() {
        let mut lead = None;
        for c in 0..3 {
            if r[(i, c)].is_zero() {
                continue;
            }
            match owner[c] {
                Some(j) => {
                    let f = &r[(i, c)] / &r[(j, c)];
                    for k in c..3 {
                        let d = &f * &r[(j, k)];
                        r[(i, k)] = &r[(i, k)] - d;
                    }
                }
                None if lead.is_none() => lead = Some(c),
                None => {}
            }
        }
        let c = lead.ok_or(Error::Singular)?;
        owner[c] = Some(i);
        cols[i] = c;
    }
    let sigma = Perm::from_columns(cols).ok_or(Error::Singular)?;
    for (i, s) in sigma.signs().into_iter().enumerate() {
        let f = Rational::from(s) / &r[(i, cols[i])];
        for k in 0..3 {
            r[(i, k)] = &r[(i, k)] * &f;
        }
    }
    let b = &sigma.rat_matrix().transpose() * &r;
    let a = g * &r.inverse()?;
    let f = BruhatFactorization {
        det_a: a.det()?,
        det_b: b.det()?,
        a,
        sigma,
        b,
    };
    debug_assert!(f.holds_for(g));
    debug_assert_eq!(cell_of(g).ok(), Some(sigma));
    Ok(f)
}

/// `i128` with the [`Scalar`] operations the rank code needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct I128(i128);

impl std::fmt::Display for I128 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl std::ops::Add for I128 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        I128(self.0 + o.0)
    }
}

impl std::ops::Sub for I128 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        I128(self.0 - o.0)
    }
}

impl std::ops::Mul for I128 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        I128(self.0 * o.0)
    }
}

impl std::ops::Neg for I128 {
    type Output = Self;
    fn neg(self) -> Self {
        I128(-self.0)
    }
}

impl Scalar for I128 {
    fn zero() -> Self {
        I128(0)
    }
    fn one() -> Self {
        I128(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn from_i64(v: i64) -> Self {
        I128(v.into())
    }
    fn exact_div(&self, other: &Self) -> Self {
        I128(self.0 / other.0)
    }
    fn parse_decimal(s: &str) -> Result<Self> {
        s.trim()
            .parse()
            .map(I128)
            .map_err(|_| Error::Parse(format!("'{s}' is not a decimal integer")))
    }
}
