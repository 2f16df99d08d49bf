//! Words in the generators of `SL_2(Z)`.
//!
//! Two alphabets are used:
//!
//! * `S = [[0,-1],[1,0]]`, `T = [[1,1],[0,1]]` (Euclidean reduction),
//! * `s = [[0,1],[-1,0]]` (order 4) and `t = [[0,-1],[1,1]]` (order 6), with
//!   `s = S^-1` and `t = S T`, so `T = s t` and `S = s^-1`.
//!
//! A word carries a separate central factor `(-I)^central`. Canonical form:
//! adjacent letters use different generators, `S` only appears to the first
//! power, `s` to `±1`, `t` to `±1, ±2`, `T` to any nonzero power; `S^2 = s^2 =
//! t^3 = -I` is absorbed into the central flag.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::json::decimal;
use crate::exact::scalar::{mod_floor, round_div};
use crate::exact::{int, IntMatrix, Integer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    #[serde(rename = "S")]
    S,
    #[serde(rename = "T")]
    T,
    /// `s = [[0,1],[-1,0]]`, order 4.
    #[serde(rename = "s")]
    Order4,
    /// `t = [[0,-1],[1,1]]`, order 6.
    #[serde(rename = "t")]
    Order6,
}

impl Generator {
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_i64_rows(match self {
            Generator::S => &[[0, -1], [1, 0]],
            Generator::T => &[[1, 1], [0, 1]],
            Generator::Order4 => &[[0, 1], [-1, 0]],
            Generator::Order6 => &[[0, -1], [1, 1]],
        })
    }

    pub fn symbol(&self) -> &'static str {
        match self {
            Generator::S => "S",
            Generator::T => "T",
            Generator::Order4 => "s",
            Generator::Order6 => "t",
        }
    }

    fn order(&self) -> Option<u32> {
        match self {
            Generator::S | Generator::Order4 => Some(4),
            Generator::Order6 => Some(6),
            Generator::T => None,
        }
    }

    pub fn power(&self, e: &Integer) -> IntMatrix {
        match self.order() {
            None => IntMatrix::new(2, 2, vec![int(1), e.clone(), int(0), int(1)]).unwrap(),
            Some(k) => {
                let r: u64 = mod_floor(e, &int(k as i64)).try_into().unwrap();
                self.matrix().pow(r).unwrap()
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub gen: Generator,
    #[serde(with = "decimal")]
    pub exp: Integer,
}

impl Letter {
    pub fn new(gen: Generator, exp: i64) -> Self {
        Letter { gen, exp: int(exp) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct GenWord {
    #[serde(rename = "word")]
    pub letters: Vec<Letter>,
    /// Whether the word is multiplied by `-I`.
    #[serde(with = "central_flag")]
    pub central: bool,
}

mod central_flag {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &bool, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(u8::from(*v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<bool, D::Error> {
        match u8::deserialize(d)? {
            0 => Ok(false),
            1 => Ok(true),
            v => Err(D::Error::custom(format!("central must be 0 or 1, got {v}"))),
        }
    }
}

impl GenWord {
    pub fn new(letters: Vec<Letter>, central: bool) -> Self {
        GenWord { letters, central }
    }

    pub fn from_pairs(pairs: &[(Generator, i64)]) -> Self {
        GenWord {
            letters: pairs.iter().map(|&(g, e)| Letter::new(g, e)).collect(),
            central: false,
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty() && !self.central
    }

    pub fn eval(&self) -> IntMatrix {
        let mut acc = IntMatrix::identity(2);
        for l in &self.letters {
            acc = &acc * &l.gen.power(&l.exp);
        }
        if self.central {
            acc = acc.neg();
        }
        acc
    }

    pub fn inverse(&self) -> GenWord {
        GenWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    gen: l.gen,
                    exp: -l.exp.clone(),
                })
                .collect(),
            central: self.central,
        }
    }

    /// Canonical form described in the module docs; evaluates to the same
    /// matrix.
    pub fn canonical(&self) -> GenWord {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.letters.len());
        let mut central = self.central;
        for l in &self.letters {
            let mut exp = l.exp.clone();
            if let Some(top) = stack.last() {
                if top.gen == l.gen {
                    exp = &top.exp + &exp;
                    stack.pop();
                }
            }
            let (reduced, flip) = normalize(l.gen, &exp);
            central ^= flip;
            if let Some(e) = reduced {
                stack.push(Letter { gen: l.gen, exp: e });
            }
        }
        GenWord {
            letters: stack,
            central,
        }
    }

    /// Whether every letter belongs to the given pair of generators.
    pub fn uses_only(&self, gens: &[Generator]) -> bool {
        self.letters.iter().all(|l| gens.contains(&l.gen))
    }
}

impl std::fmt::Display for GenWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.letters.is_empty() {
            write!(f, "e")?;
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            if l.exp == int(1) {
                write!(f, "{}", l.gen.symbol())?;
            } else {
                write!(f, "{}^{}", l.gen.symbol(), l.exp)?;
            }
        }
        if self.central {
            write!(f, "·(-I)")?;
        }
        Ok(())
    }
}

/// Reduced exponent (if the letter survives) and whether `-I` was split off.
fn normalize(gen: Generator, e: &Integer) -> (Option<Integer>, bool) {
    match gen {
        Generator::T => ((*e != Integer::ZERO).then(|| e.clone()), false),
        Generator::S => match residue(e, 4) {
            0 => (None, false),
            1 => (Some(int(1)), false),
            2 => (None, true),
            _ => (Some(int(1)), true),
        },
        Generator::Order4 => match residue(e, 4) {
            0 => (None, false),
            1 => (Some(int(1)), false),
            2 => (None, true),
            _ => (Some(int(-1)), false),
        },
        Generator::Order6 => match residue(e, 6) {
            0 => (None, false),
            1 => (Some(int(1)), false),
            2 => (Some(int(2)), false),
            3 => (None, true),
            4 => (Some(int(-2)), false),
            _ => (Some(int(-1)), false),
        },
    }
}

fn residue(e: &Integer, m: i64) -> u8 {
    let r: i64 = mod_floor(e, &int(m)).try_into().unwrap();
    r as u8
}

/// Word over `{S, T}` for `g` in `SL_2(Z)`, by Euclidean reduction of the
/// first column.
///
/// While the lower-left entry `c` is nonzero, pick `q` = nearest integer to
/// `a / c` (ties rounded up) and replace `g` by `S T^-q g`; this makes the new
/// lower-left entry `a - q c`, of absolute value at most `|c| / 2`. Since
/// `g = T^q S^-1 g'` and `S^-1 = S (-I)`, the word is the sequence of
/// `T^q S` letters followed by the final `±T^m`.
pub fn decompose_st(g: &IntMatrix) -> Result<GenWord> {
    g.require_size(2)?;
    g.require_det(1)?;
    let s_inv = Generator::S.power(&int(-1));
    let mut cur = g.clone();
    let mut letters = vec![];
    let mut central = false;
    while cur[(1, 0)] != Integer::ZERO {
        let q = round_div(&cur[(0, 0)], &cur[(1, 0)]);
        let step = &s_inv.neg() * &Generator::T.power(&-q.clone());
        cur = &step * &cur;
        letters.push(Letter {
            gen: Generator::T,
            exp: q,
        });
        letters.push(Letter::new(Generator::S, 1));
        central = !central;
    }
    // upper triangular with determinant 1: ±[[1, m], [0, 1]]
    let eps = cur[(0, 0)].clone();
    if eps == int(-1) {
        central = !central;
    }
    letters.push(Letter {
        gen: Generator::T,
        exp: &eps * &cur[(0, 1)],
    });
    let word = GenWord { letters, central }.canonical();
    debug_assert_eq!(&word.eval(), g);
    Ok(word)
}

/// Rewrite a word over `{S, T}` in the generators `s`, `t` using `S = s^-1`
/// and `T = s t`. Letters already in `{s, t}` pass through unchanged.
pub fn to_torsion_generators(w: &GenWord) -> Result<GenWord> {
    let mut out = vec![];
    for l in &w.letters {
        match l.gen {
            Generator::S => out.push(Letter {
                gen: Generator::Order4,
                exp: -l.exp.clone(),
            }),
            Generator::T => {
                let k: i64 = (&l.exp)
                    .try_into()
                    .map_err(|_| Error::Invalid(format!("T exponent {} too large to expand", l.exp)))?;
                let block = if k > 0 {
                    [Letter::new(Generator::Order4, 1), Letter::new(Generator::Order6, 1)]
                } else {
                    [Letter::new(Generator::Order6, -1), Letter::new(Generator::Order4, -1)]
                };
                for _ in 0..k.unsigned_abs() {
                    out.extend(block.iter().cloned());
                }
            }
            Generator::Order4 | Generator::Order6 => out.push(l.clone()),
        }
    }
    Ok(GenWord {
        letters: out,
        central: w.central,
    }
    .canonical())
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn m(rows: [[i64; 2]; 2]) -> IntMatrix {
        IntMatrix::from_i64_rows(&rows)
    }

    #[test]
    fn generator_relations() {
        assert_eq!(Order4.matrix(), S.power(&int(-1)));
        assert_eq!(Order6.matrix(), &S.matrix() * &T.matrix());
        assert!(Order4.power(&int(2)).neg().is_identity());
        assert!(Order6.power(&int(3)).neg().is_identity());
        assert_eq!(T.power(&int(-7)), m([[1, -7], [0, 1]]));
    }

    #[test]
    fn decompose_examples() {
        let w = decompose_st(&m([[1, 1], [0, 1]])).unwrap();
        assert_eq!(w, GenWord::from_pairs(&[(T, 1)]));
        let w = decompose_st(&m([[0, -1], [1, 0]])).unwrap();
        assert_eq!(w, GenWord::from_pairs(&[(S, 1)]));
        // [[1,0],[1,1]] = S T^-1 S^-1; the reduction produces T S T
        let g = m([[1, 0], [1, 1]]);
        let w = decompose_st(&g).unwrap();
        assert_eq!(w.eval(), g);
        let alt = GenWord::from_pairs(&[(S, 1), (T, -1), (S, -1)]);
        assert_eq!(alt.eval(), g);
        assert_eq!(w, GenWord::from_pairs(&[(T, 1), (S, 1), (T, 1)]));
        let w = decompose_st(&m([[-1, 0], [0, -1]])).unwrap();
        assert_eq!(w, GenWord::new(vec![], true));
        assert!(decompose_st(&m([[2, 1], [1, 0]])).is_err());
    }

    #[test]
    fn decompose_handles_huge_entries() {
        // a product whose entries exceed 64 bits
        let mut g = IntMatrix::identity(2);
        for _ in 0..60 {
            g = &g * &m([[2, 1], [1, 1]]);
        }
        assert!(g[(0, 0)] > int(i64::MAX));
        let w = decompose_st(&g).unwrap();
        assert_eq!(w.eval(), g);
    }

    #[test]
    fn canonical_form() {
        let w = GenWord::from_pairs(&[(S, 3), (T, 0), (S, 1), (T, 2), (T, -2), (Order6, 4)]);
        let c = w.canonical();
        assert_eq!(c.eval(), w.eval());
        assert_eq!(c.letters, vec![Letter::new(Order6, -2)]);
        assert!(!c.central);
        for l in &c.letters {
            if l.gen == S {
                assert_eq!(l.exp, int(1));
            }
        }
    }

    #[test]
    fn torsion_generator_conversion() {
        let w = to_torsion_generators(&GenWord::from_pairs(&[(T, 1)])).unwrap();
        assert_eq!(w, GenWord::from_pairs(&[(Order4, 1), (Order6, 1)]));
        let w = to_torsion_generators(&GenWord::from_pairs(&[(S, 1)])).unwrap();
        assert_eq!(w, GenWord::from_pairs(&[(Order4, -1)]));
        let w = to_torsion_generators(&GenWord::default()).unwrap();
        assert!(w.is_empty());
        let long = GenWord::from_pairs(&[(T, -3), (S, 1), (T, 5), (S, 1), (T, 2)]);
        let p = to_torsion_generators(&long).unwrap();
        assert!(p.uses_only(&[Order4, Order6]));
        assert_eq!(p.eval(), long.eval());
    }

    #[test]
    fn json_shape() {
        let w = GenWord::new(vec![Letter::new(T, -2), Letter::new(S, 1)], true);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(
            s,
            r#"{"word":[{"gen":"T","exp":"-2"},{"gen":"S","exp":"1"}],"central":1}"#
        );
        let back: GenWord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
        let lenient: GenWord = serde_json::from_str(r#"{"word":[{"gen":"t","exp":2}],"central":0}"#).unwrap();
        assert_eq!(lenient, GenWord::from_pairs(&[(Order6, 2)]));
    }
}
