//! The factorization identities behind the maximality of the upper
//! triangular subgroup `H(Z)` in `SL_3(Z)`, and exhaustive checks of them.
//!
//! Upper triangular matrices are written `[[x, y, z], [0, a, b], [0, 0, c]]`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::decompose::{bruhat_decompose, cell_of, cell_of_i64};
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::exact::scalar::denominator;
use crate::exact::{int, IntMatrix, Integer, RatMatrix, Rational};
use crate::matgroups::Sampler;

pub fn upper(x: &Rational, y: &Rational, z: &Rational, a: &Rational, b: &Rational, c: &Rational) -> RatMatrix {
    let o = Rational::ZERO;
    RatMatrix::from_rows(vec![
        vec![x.clone(), y.clone(), z.clone()],
        vec![o.clone(), a.clone(), b.clone()],
        vec![o.clone(), o, c.clone()],
    ])
    .unwrap()
}

/// Whether `g` is an invertible upper triangular 3x3 matrix.
pub fn in_borel(g: &RatMatrix) -> bool {
    g.rows() == 3 && g.cols() == 3 && g.is_upper_triangular() && (0..3).all(|i| !g[(i, i)].is_zero())
}

fn require_borel(g: &RatMatrix) -> Result<()> {
    g.require_size(3)?;
    if !in_borel(g) {
        return Err(Error::Invalid(format!("{g} is not invertible upper triangular")));
    }
    Ok(())
}

/// `p g p` for the table entry `p`.
pub fn conjugate(p: Perm, g: &RatMatrix) -> RatMatrix {
    let m = p.rat_matrix();
    &(&m * g) * &m
}

/// `(A^-1, B)` with `p_(13) g p_(13) = A p_(123) B` for
/// `g = [[x, y, 0], [0, a, b], [0, 0, c]]`, `by ≠ 0`:
/// `A^-1 = [[-by/(ac), -y/a, 1], [0, 1, 0], [0, 0, 1]]`,
/// `B = [[b, a, 0], [0, y, -x], [0, 0, -x]]`.
pub fn fact3_display(
    x: &Rational,
    y: &Rational,
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<(RatMatrix, RatMatrix)> {
    let zero = Rational::ZERO;
    require_borel(&upper(x, y, &zero, a, b, c))?;
    if b.is_zero() || y.is_zero() {
        return Err(Error::OutOfCase("the display needs by ≠ 0".into()));
    }
    let one = Rational::ONE;
    let a_inv = upper(&(-(b * y) / (a * c)), &(-y / a), &one, &one, &zero, &one);
    let bm = upper(b, a, &zero, y, &-x.clone(), &-x.clone());
    Ok((a_inv, bm))
}

/// `(A^-1, σ, B)` with `p_(132) g p_(132) = A p_σ B` for
/// `g = [[x, y, z], [0, a, b], [0, 0, c]]`: `σ = (123)` when `z = 0`, else
/// `σ = (13)`.
pub fn fact4_display(
    x: &Rational,
    y: &Rational,
    z: &Rational,
    a: &Rational,
    b: &Rational,
    c: &Rational,
) -> Result<(RatMatrix, Perm, RatMatrix)> {
    require_borel(&upper(x, y, z, a, b, c))?;
    let (zero, one) = (Rational::ZERO, Rational::ONE);
    let bc = -b.clone() / c;
    if z.is_zero() {
        let a_inv = upper(&one, &bc, &zero, &one, &zero, &one);
        Ok((a_inv, Perm::P123, upper(c, &zero, &zero, x, y, a)))
    } else {
        let a_inv = upper(&one, &bc, &zero, &one, &(-c.clone() / z), &one);
        let bm = upper(z, x, y, &(-(c * x) / z), &(-(c * y) / z), &-a.clone());
        Ok((a_inv, Perm::P13, bm))
    }
}

/// Rebalances `g = A p_(123) B` to `g = A' p_(123) B'` with `B'` unipotent
/// and `B'_12 = 0`: for `B = [[x', y', z'], [0, a', b'], [0, 0, w']]`,
/// `A' = A [[w', 0, 0], [0, x', y'], [0, 0, a']]` and
/// `B' = [[1, 0, (z' - y'b'/a')/x'], [0, 1, b'/a'], [0, 0, 1]]`.
pub fn case3_rebalance(a: &RatMatrix, b: &RatMatrix) -> Result<(RatMatrix, RatMatrix)> {
    require_borel(a)?;
    require_borel(b)?;
    let (xp, yp, zp) = (&b[(0, 0)], &b[(0, 1)], &b[(0, 2)]);
    let (ap, bp, wp) = (&b[(1, 1)], &b[(1, 2)], &b[(2, 2)]);
    let (zero, one) = (Rational::ZERO, Rational::ONE);
    let m = upper(wp, &zero, &zero, xp, yp, ap);
    let ba = bp / ap;
    let b13 = (zp - yp * &ba) / xp;
    Ok((a * &m, upper(&one, &zero, &b13, &one, &ba, &one)))
}

/// `(A, B')` with `g = A p_(123) B'` and `B'_12 = 0`.
pub fn case3_normalize(g: &RatMatrix) -> Result<(RatMatrix, RatMatrix)> {
    let f = bruhat_decompose(g)?;
    if f.sigma != Perm::P123 {
        return Err(Error::WrongCell {
            found: f.sigma.to_string(),
            expected: Perm::P123.to_string(),
        });
    }
    case3_rebalance(&f.a, &f.b)
}

/// `X = [[1, n, m - m'], [0, 1, n'], [0, 0, 1]]` for `e = m/n`, `b = m'/n'`
/// in lowest terms with positive denominators. With
/// `B = [[1, b, c], [0, 1, e], [0, 0, 1]]`, `BXB^-1` has zero `(1,3)` entry
/// and nonzero `(1,2)`, `(2,3)` entries.
pub fn case4_witness(b: &Rational, e: &Rational) -> Result<IntMatrix> {
    if b.is_zero() || e.is_zero() {
        return Err(Error::OutOfCase("b and e must be nonzero".into()));
    }
    let (m, n) = (e.numerator().clone(), denominator(e));
    let (mp, np) = (b.numerator().clone(), denominator(b));
    IntMatrix::new(
        3,
        3,
        vec![int(1), n, m - mp, int(0), int(1), np, int(0), int(0), int(1)],
    )
}

/// `B X B^-1` for `B = [[1, b, c], [0, 1, e], [0, 0, 1]]`.
pub fn case4_conjugate(b: &Rational, e: &Rational, c: &Rational, x: &IntMatrix) -> Result<RatMatrix> {
    let one = Rational::ONE;
    let bm = upper(&one, b, c, &one, e, &one);
    Ok(&(&bm * &x.to_rational()) * &bm.inverse()?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Fact {
    One,
    Two,
    Three,
    Four,
}

impl Fact {
    pub fn from_id(id: u8) -> Result<Fact> {
        match id {
            1 => Ok(Fact::One),
            2 => Ok(Fact::Two),
            3 => Ok(Fact::Three),
            4 => Ok(Fact::Four),
            _ => Err(Error::Invalid(format!("unknown fact {id}, expected 1 to 4"))),
        }
    }

    pub fn id(self) -> u8 {
        match self {
            Fact::One => 1,
            Fact::Two => 2,
            Fact::Three => 3,
            Fact::Four => 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum FactParams {
    /// One element of `H(Q)` (facts 3 and 4).
    Matrix { g: RatMatrix },
    /// Every element of `H(Q)` whose entries are `p/q` with `|p| <= bound`,
    /// `1 <= q <= bound` (facts 3 and 4).
    Grid { bound: u32 },
    /// Seeded words over the generators of `H(Z)` and the relevant `p_σ`
    /// (facts 1 and 2).
    Words { count: usize, len: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactReport {
    pub fact: u8,
    pub holds: bool,
    pub checked: u64,
    /// How many conjugates landed in each cell (facts 3, 4) or how many
    /// words were in `K(Z)_i` (facts 1, 2).
    pub tally: BTreeMap<String, u64>,
    pub counterexample: Option<RatMatrix>,
}

/// Generators of `H(Z)`: the elementary unipotents and two sign diagonals.
pub fn borel_z_generators() -> Vec<IntMatrix> {
    vec![
        IntMatrix::from_i64_rows(&[[1, 1, 0], [0, 1, 0], [0, 0, 1]]),
        IntMatrix::from_i64_rows(&[[1, 0, 1], [0, 1, 0], [0, 0, 1]]),
        IntMatrix::from_i64_rows(&[[1, 0, 0], [0, 1, 1], [0, 0, 1]]),
        IntMatrix::from_i64_rows(&[[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
        IntMatrix::from_i64_rows(&[[1, 0, 0], [0, -1, 0], [0, 0, -1]]),
    ]
}

/// Membership in `K(Z)_1` (`g31 = g32 = 0`) or `K(Z)_2` (`g21 = g31 = 0`)
/// for `g` in `SL_3(Z)`.
pub fn in_k(which: u8, g: &IntMatrix) -> bool {
    let zeros: [(usize, usize); 2] = if which == 1 { [(2, 0), (2, 1)] } else { [(1, 0), (2, 0)] };
    g.rows() == 3 && g.cols() == 3 && zeros.iter().all(|&ij| g[ij] == Integer::ZERO) && g.det().ok() == Some(int(1))
}

fn check_words(fact: Fact, count: usize, len: usize, seed: u64) -> Result<FactReport> {
    let (which, p) = match fact {
        Fact::One => (1, Perm::P12),
        Fact::Two => (2, Perm::P23),
        _ => unreachable!(),
    };
    let mut gens = borel_z_generators();
    gens.push(p.matrix());
    let inverses: Vec<IntMatrix> = gens.iter().map(|g| g.inverse_unimodular()).collect::<Result<_>>()?;
    let mut rng = Sampler::new(seed);
    let mut tally = BTreeMap::new();
    let mut counterexample = None;
    for _ in 0..count {
        let mut w = IntMatrix::identity(3);
        for _ in 0..len {
            let r = rng.below(2 * gens.len() as u64) as usize;
            let h = if r.is_multiple_of(2) {
                &gens[r / 2]
            } else {
                &inverses[r / 2]
            };
            w = &w * h;
        }
        let inside = in_k(which, &w);
        *tally
            .entry(if inside { "in_k" } else { "outside_k" }.to_string())
            .or_insert(0) += 1;
        if !inside && counterexample.is_none() {
            counterexample = Some(w.to_rational());
        }
    }
    // the generated group reaches the lower block: p E p^-1 is a lower unipotent
    let e = if which == 1 { &gens[0] } else { &gens[2] };
    let lower = &(&p.matrix() * e) * &p.matrix().inverse_unimodular()?;
    let reaches = in_k(which, &lower) && !lower.is_upper_triangular();
    *tally.entry("lower_unipotent_reached".to_string()).or_insert(0) += u64::from(reaches);
    Ok(FactReport {
        fact: fact.id(),
        holds: counterexample.is_none() && reaches,
        checked: count as u64,
        tally,
        counterexample,
    })
}

/// Whether the statement of fact 3 or 4 holds for one `g` in `H(Q)`, and the
/// cell of the conjugate.
pub fn fact_holds_for(fact: Fact, g: &RatMatrix) -> Result<(bool, Perm)> {
    require_borel(g)?;
    let p = conjugator(fact)?;
    let cell = cell_of(&conjugate(p, g))?;
    Ok((
        predicate(
            fact,
            g[(0, 1)].is_zero(),
            g[(1, 2)].is_zero(),
            g[(0, 2)].is_zero(),
            cell,
        ),
        cell,
    ))
}

fn conjugator(fact: Fact) -> Result<Perm> {
    match fact {
        Fact::Three => Ok(Perm::P13),
        Fact::Four => Ok(Perm::P132),
        _ => Err(Error::Invalid("facts 1 and 2 are checked on words".into())),
    }
}

fn predicate(fact: Fact, g12_zero: bool, g23_zero: bool, g13_zero: bool, cell: Perm) -> bool {
    match fact {
        Fact::Three => (cell == Perm::P123) == (!g12_zero && !g23_zero && g13_zero),
        _ => (cell == Perm::P123) == g13_zero && (cell == Perm::P13) == !g13_zero,
    }
}

/// The rationals `p/q` with `|p| <= bound`, `1 <= q <= bound`, each once.
pub fn grid_values(bound: u32) -> Vec<Rational> {
    let b = i64::from(bound);
    let mut out: Vec<Rational> = (1..=b)
        .flat_map(|q| (-b..=b).map(move |p| Rational::from_parts_signed(int(p), int(q))))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Signed permutation conjugation `p g p` on integer entries.
fn conjugate_i64(p: Perm, g: &[[i64; 3]; 3]) -> [[i64; 3]; 3] {
    let (cols, signs) = (p.columns(), p.signs());
    // (p g)[i][k] = s_i g[c_i][k]; (h p)[i][j] = h[i][r_j] t_j, where row r_j of p has its entry in column j
    let mut rows_of = [0usize; 3];
    for (i, &c) in cols.iter().enumerate() {
        rows_of[c] = i;
    }
    std::array::from_fn(|i| std::array::from_fn(|j| signs[i] * g[cols[i]][rows_of[j]] * signs[rows_of[j]]))
}

fn check_grid(fact: Fact, bound: u32) -> Result<FactReport> {
    let p = conjugator(fact)?;
    if bound == 0 || bound > 12 {
        return Err(Error::Invalid(format!("grid bound {bound} outside 1..=12")));
    }
    let values = grid_values(bound);
    let l = (1..=i64::from(bound)).fold(int(1), |acc, q| crate::exact::scalar::lcm(&acc, &int(q)));
    let scaled: Vec<i64> = values
        .iter()
        .map(|v| i64::try_from(&(v.numerator() * (&l / denominator(v)))).unwrap())
        .collect();
    let nonzero: Vec<usize> = (0..values.len()).filter(|&i| scaled[i] != 0).collect();
    let all: Vec<usize> = (0..values.len()).collect();
    let mut tally: BTreeMap<String, u64> = BTreeMap::new();
    let mut counts = [0u64; 6];
    let mut checked = 0u64;
    let mut counterexample = None;
    for &x in &nonzero {
        for &a in &nonzero {
            for &c in &nonzero {
                for &y in &all {
                    for &b in &all {
                        for &z in &all {
                            let g = [
                                [scaled[x], scaled[y], scaled[z]],
                                [0, scaled[a], scaled[b]],
                                [0, 0, scaled[c]],
                            ];
                            let cell = cell_of_i64(&conjugate_i64(p, &g)).ok_or(Error::Singular)?;
                            counts[cell as usize] += 1;
                            checked += 1;
                            if !predicate(fact, g[0][1] == 0, g[1][2] == 0, g[0][2] == 0, cell)
                                && counterexample.is_none()
                            {
                                let v = |i: usize| &values[i];
                                counterexample = Some(upper(v(x), v(y), v(z), v(a), v(b), v(c)));
                            }
                        }
                    }
                }
            }
        }
    }
    for perm in super::perm::ALL_PERMS {
        if counts[perm as usize] > 0 {
            tally.insert(perm.to_string(), counts[perm as usize]);
        }
    }
    Ok(FactReport {
        fact: fact.id(),
        holds: counterexample.is_none(),
        checked,
        tally,
        counterexample,
    })
}

pub fn fact_check(fact: Fact, params: &FactParams) -> Result<FactReport> {
    match (fact, params) {
        (Fact::One | Fact::Two, FactParams::Words { count, len, seed }) => check_words(fact, *count, *len, *seed),
        (Fact::Three | Fact::Four, FactParams::Grid { bound }) => check_grid(fact, *bound),
        (Fact::Three | Fact::Four, FactParams::Matrix { g }) => {
            let (holds, cell) = fact_holds_for(fact, g)?;
            Ok(FactReport {
                fact: fact.id(),
                holds,
                checked: 1,
                tally: BTreeMap::from([(cell.to_string(), 1)]),
                counterexample: (!holds).then(|| g.clone()),
            })
        }
        _ => Err(Error::Invalid(format!(
            "fact {} is checked on {}",
            fact.id(),
            if matches!(fact, Fact::One | Fact::Two) {
                "words"
            } else {
                "a matrix or a grid"
            }
        ))),
    }
}
