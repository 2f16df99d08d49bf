use serde::{Deserialize, Serialize};

use super::spec::{CoboundaryWitness, CocycleSpec, Token};
use crate::error::{Error, Result};
use crate::exact::json::decimal_vec;
use crate::exact::scalar::{floor_div, is_even, to_rational};
use crate::exact::{int, IntMatrix, Integer, Rational};
use crate::matgroups::{CongruenceKind, GenWord, Generator};

/// Values `(c(s), ξ)` of the unique cocycle on `SL_2(Z) = <s, t>` with the
/// given `c(t) = (x, y)`: `c(s) = (-x - 2y, x)` and `ξ = (-y, x + y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullCoboundary {
    #[serde(with = "decimal_vec")]
    pub c_s: Vec<Integer>,
    pub witness: CoboundaryWitness,
}

pub fn solve_full_coboundary(c_t: &[Integer]) -> Result<FullCoboundary> {
    let [x, y] = c_t else {
        return Err(Error::Shape(format!("c(t) of length {}, expected 2", c_t.len())));
    };
    let c_s = vec![-x.clone() - y * int(2), x.clone()];
    let xi = [-y.clone(), x + y];
    Ok(FullCoboundary {
        c_s,
        witness: CoboundaryWitness::from_integers(&xi),
    })
}

/// The cocycle on `<s, t>` with the given `c(t)`, carrying the relators
/// `s^4` and `s^2 t^-3`.
pub fn full_group_spec(c_t: &[Integer]) -> Result<CocycleSpec> {
    let solved = solve_full_coboundary(c_t)?;
    CocycleSpec::new(
        vec![Generator::Order4.matrix(), Generator::Order6.matrix()],
        vec![solved.c_s, c_t.to_vec()],
    )?
    .with_names(vec!["s".into(), "t".into()])?
    .with_relators(vec![
        vec![Token::named("s", 4)],
        vec![Token::named("s", 2), Token::named("t", -3)],
    ])
}

/// Tokens for a word over `{s, t}`, naming the generators as in
/// [`full_group_spec`].
pub fn st_tokens(w: &GenWord) -> Result<Vec<Token>> {
    w.letters
        .iter()
        .map(|l| {
            let exp: i64 = (&l.exp)
                .try_into()
                .map_err(|_| Error::Invalid(format!("exponent {} out of range", l.exp)))?;
            match l.gen {
                Generator::Order4 => Ok(Token::named("s", exp)),
                Generator::Order6 => Ok(Token::named("t", exp)),
                other => Err(Error::UnknownGenerator(other.symbol().to_string())),
            }
        })
        .collect()
}

fn require_sl2(g: &IntMatrix) -> Result<()> {
    g.require_size(2)?;
    g.require_det(1)
}

/// `((1 - g11) / N, -g21 / N)` for `g` in `Γ1(N)`.
pub fn gamma1_cocycle(level: u64, g: &IntMatrix) -> Result<Vec<Integer>> {
    let kind = CongruenceKind::gamma1(level)?;
    if !kind.contains(g)? {
        return Err(Error::NotMember(format!("{g} is not in {kind}")));
    }
    let n = int(level as i64);
    Ok(vec![
        floor_div(&(int(1) - &g[(0, 0)]), &n),
        floor_div(&-g[(1, 0)].clone(), &n),
    ])
}

/// The `Γ1(N)` cocycle on the sampling generators `T`, `[[1,0],[N,1]]`.
pub fn gamma1_spec(level: u64) -> Result<CocycleSpec> {
    let gens = CongruenceKind::gamma1(level)?.sampling_generators();
    let values = gens.iter().map(|g| gamma1_cocycle(level, g)).collect::<Result<_>>()?;
    CocycleSpec::new(gens, values)
}

/// Whether `ξ - s ξ` is integral for `ξ = (1/N, 0)`.
pub fn gamma1_obstruction(level: u64, s: &IntMatrix) -> Result<bool> {
    CongruenceKind::gamma1(level)?;
    require_sl2(s)?;
    let xi = CoboundaryWitness::new(vec![Rational::from_parts(int(1), level.into()), Rational::ZERO]);
    Ok(xi.coboundary_at(s).iter().all(|v| v.denominator().is_one()))
}

/// `(I - g)(m, n) / 2` when it is integral.
pub fn central_cocycle(m: &Integer, n: &Integer, g: &IntMatrix) -> Result<Option<Vec<Integer>>> {
    require_sl2(g)?;
    let shifted = IntMatrix::identity(2).try_sub(g)?;
    let v = shifted.mul_vec(&[m.clone(), n.clone()]);
    if v.iter().all(is_even) {
        Ok(Some(v.iter().map(|x| floor_div(x, &int(2))).collect()))
    } else {
        Ok(None)
    }
}

/// Parity class of `c(-I) = (m, n)` and the subgroup on which
/// `(I - g) c(-I) / 2` is integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ParityCase {
    pub id: u8,
}

impl ParityCase {
    pub fn accepts(&self, g: &IntMatrix) -> bool {
        let odd = |i: usize, j: usize| !is_even(&g[(i, j)]);
        let odd_sum = |i: usize| !is_even(&(&g[(i, 0)] + &g[(i, 1)]));
        match self.id {
            1 => true,
            2 => odd(0, 0) && !odd(1, 0),
            3 => !odd(0, 1) && odd(1, 1),
            _ => odd_sum(0) && odd_sum(1),
        }
    }

    pub fn description(&self) -> &'static str {
        match self.id {
            1 => "all g",
            2 => "g11 odd and g21 even",
            3 => "g12 even and g22 odd",
            _ => "g11+g12 odd and g21+g22 odd",
        }
    }
}

pub fn parity_domain(m: &Integer, n: &Integer) -> ParityCase {
    let id = match (is_even(m), is_even(n)) {
        (true, true) => 1,
        (false, true) => 2,
        (true, false) => 3,
        (false, false) => 4,
    };
    ParityCase { id }
}

/// `ξ` realizing a case 1 central cocycle: `c(g) = ξ - g ξ` with
/// `ξ = (m, n) / 2`.
pub fn central_witness(m: &Integer, n: &Integer) -> CoboundaryWitness {
    let half = |v: &Integer| to_rational(v) / Rational::from(2);
    CoboundaryWitness::new(vec![half(m), half(n)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::verify_relations;
    use crate::exact::{int_vec, rat};

    fn m(rows: [[i64; 2]; 2]) -> IntMatrix {
        IntMatrix::from_i64_rows(&rows)
    }

    #[test]
    fn full_coboundary_examples() {
        let r = solve_full_coboundary(&int_vec(&[1, 0])).unwrap();
        assert_eq!(r.c_s, int_vec(&[-1, 1]));
        assert_eq!(r.witness.xi, vec![rat(0, 1), rat(1, 1)]);
        let r = solve_full_coboundary(&int_vec(&[0, 0])).unwrap();
        assert_eq!(r.c_s, int_vec(&[0, 0]));
        let r = solve_full_coboundary(&int_vec(&[0, 1])).unwrap();
        assert_eq!(r.c_s, int_vec(&[-2, 0]));
        assert_eq!(r.witness.xi, vec![rat(-1, 1), rat(1, 1)]);
        assert!(r.witness.integral);
        let t = Generator::Order6.matrix();
        assert_eq!(r.witness.coboundary_at(&t), vec![rat(0, 1), rat(1, 1)]);
    }

    #[test]
    fn full_group_relators() {
        for (x, y) in [(0, 0), (1, 0), (0, 1), (-7, 12)] {
            let spec = full_group_spec(&int_vec(&[x, y])).unwrap();
            assert!(verify_relations(&spec).unwrap());
        }
        // c(s) = (1,0), c(t) = 0 violates s^2 = t^3
        let spec = CocycleSpec::new(
            vec![Generator::Order4.matrix(), Generator::Order6.matrix()],
            vec![int_vec(&[1, 0]), int_vec(&[0, 0])],
        )
        .unwrap()
        .with_names(vec!["s".into(), "t".into()])
        .unwrap()
        .with_relators(vec![vec![Token::named("s", 2), Token::named("t", -3)]])
        .unwrap();
        assert!(!verify_relations(&spec).unwrap());
        assert_eq!(spec.eval(&[Token::named("s", 2)]).unwrap(), int_vec(&[1, -1]));
    }

    #[test]
    fn st_tokens_follow_names() {
        let spec = full_group_spec(&int_vec(&[3, -1])).unwrap();
        let w = GenWord::from_pairs(&[(Generator::Order6, 2), (Generator::Order4, -1)]);
        let toks = st_tokens(&w).unwrap();
        assert_eq!(spec.word_matrix(&toks).unwrap(), w.eval());
        assert!(st_tokens(&GenWord::from_pairs(&[(Generator::T, 1)])).is_err());
    }

    #[test]
    fn gamma1_examples() {
        assert_eq!(gamma1_cocycle(2, &m([[1, 0], [2, 1]])).unwrap(), int_vec(&[0, -1]));
        assert_eq!(gamma1_cocycle(5, &IntMatrix::identity(2)).unwrap(), int_vec(&[0, 0]));
        assert_eq!(gamma1_cocycle(3, &m([[1, 1], [0, 1]])).unwrap(), int_vec(&[0, 0]));
        assert_eq!(gamma1_cocycle(3, &m([[4, 1], [-9, -2]])).unwrap(), int_vec(&[-1, 3]));
        assert!(matches!(
            gamma1_cocycle(2, &m([[0, 1], [-1, 0]])),
            Err(Error::NotMember(_))
        ));
        assert!(gamma1_cocycle(0, &IntMatrix::identity(2)).is_err());
    }

    #[test]
    fn gamma1_spec_is_coboundary_over_q() {
        let w = crate::cocycle::coboundary_witness(&gamma1_spec(4).unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(w.xi, vec![rat(1, 4), rat(0, 1)]);
    }

    #[test]
    fn obstruction_examples() {
        assert!(!gamma1_obstruction(2, &m([[0, 1], [-1, 0]])).unwrap());
        assert!(gamma1_obstruction(2, &m([[1, 0], [2, 1]])).unwrap());
        assert!(gamma1_obstruction(1, &m([[2, 1], [1, 1]])).unwrap());
        assert!(gamma1_obstruction(2, &m([[2, 0], [0, 1]])).is_err());
    }

    #[test]
    fn central_examples() {
        let t = m([[1, 1], [0, 1]]);
        let s = m([[0, -1], [1, 0]]);
        assert_eq!(central_cocycle(&int(1), &int(0), &t).unwrap(), Some(int_vec(&[0, 0])));
        assert_eq!(central_cocycle(&int(1), &int(0), &s).unwrap(), None);
        assert_eq!(central_cocycle(&int(2), &int(0), &s).unwrap(), Some(int_vec(&[1, -1])));
        let w = central_witness(&int(2), &int(0));
        assert_eq!(w.xi, vec![rat(1, 1), rat(0, 1)]);
        assert_eq!(w.coboundary_at(&s), vec![rat(1, 1), rat(-1, 1)]);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(parity_domain(&int(2), &int(0)).id, 1);
        let c2 = parity_domain(&int(1), &int(0));
        assert_eq!(c2.id, 2);
        assert!(c2.accepts(&m([[1, 1], [0, 1]])));
        assert!(!c2.accepts(&m([[0, -1], [1, 0]])));
        assert_eq!(parity_domain(&int(0), &int(-3)).id, 3);
        let c4 = parity_domain(&int(1), &int(1));
        assert_eq!(c4.id, 4);
        assert!(!c4.accepts(&m([[0, -1], [1, 1]])));
        assert!(!c4.accepts(&m([[1, 0], [1, 1]])));
        // found by enumerating SL_2(Z) entries in [-3, 3]
        assert!(c4.accepts(&m([[0, 1], [-1, 0]])));
        assert!(c4.accepts(&IntMatrix::identity(2)));
    }
}
