use serde::{Deserialize, Serialize};

use crate::affine::AffineElement;
use crate::error::{Error, Result};
use crate::exact::json::{decimal_vec, decimal_vecs};
use crate::exact::scalar::to_rational;
use crate::exact::{IntMatrix, Integer, RatMatrix, Rational, RationalSolution};

/// Reference to a generator of a [`CocycleSpec`], by position or by name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GenRef {
    Index(usize),
    Name(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Token {
    pub gen: GenRef,
    #[serde(default = "one")]
    pub exp: i64,
}

fn one() -> i64 {
    1
}

impl Token {
    pub fn new(index: usize, exp: i64) -> Self {
        Token {
            gen: GenRef::Index(index),
            exp,
        }
    }

    pub fn named(name: &str, exp: i64) -> Self {
        Token {
            gen: GenRef::Name(name.to_string()),
            exp,
        }
    }
}

pub type Word = Vec<Token>;

/// A cocycle `c` on the subgroup generated by `generators`, given by its
/// values on them. Evaluation follows `c(gh) = c(g) + g c(h)` and
/// `c(g^-1) = -g^-1 c(g)`, i.e. the translation part of the corresponding
/// product in `Z^2 ⋊ SL_2(Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct CocycleSpec {
    generators: Vec<IntMatrix>,
    #[serde(with = "decimal_vecs")]
    values: Vec<Vec<Integer>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    relators: Vec<Word>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
    #[serde(skip)]
    pairs: Vec<(AffineElement, AffineElement)>,
}

#[derive(Deserialize)]
struct RawSpec {
    generators: Vec<IntMatrix>,
    #[serde(with = "decimal_vecs")]
    values: Vec<Vec<Integer>>,
    #[serde(default)]
    relators: Vec<Word>,
    #[serde(default)]
    names: Option<Vec<String>>,
}

impl TryFrom<RawSpec> for CocycleSpec {
    type Error = Error;

    fn try_from(r: RawSpec) -> Result<Self> {
        let mut spec = CocycleSpec::new(r.generators, r.values)?;
        if let Some(names) = r.names {
            spec = spec.with_names(names)?;
        }
        spec.with_relators(r.relators)
    }
}

/// A solution `ξ` of `c(g) = ξ - g ξ` on the generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoboundaryWitness {
    #[serde(with = "decimal_vec")]
    pub xi: Vec<Rational>,
    pub integral: bool,
}

impl CoboundaryWitness {
    pub fn new(xi: Vec<Rational>) -> Self {
        let integral = xi.iter().all(|x| x.denominator().is_one());
        CoboundaryWitness { xi, integral }
    }

    pub fn from_integers(xi: &[Integer]) -> Self {
        CoboundaryWitness::new(xi.iter().map(to_rational).collect())
    }

    /// `ξ - g ξ`.
    pub fn coboundary_at(&self, g: &IntMatrix) -> Vec<Rational> {
        let gx = g.to_rational().mul_vec(&self.xi);
        self.xi.iter().zip(gx).map(|(a, b)| a - b).collect()
    }
}

impl CocycleSpec {
    pub fn new(generators: Vec<IntMatrix>, values: Vec<Vec<Integer>>) -> Result<Self> {
        if generators.len() != values.len() {
            return Err(Error::Descriptor(format!(
                "{} generators but {} values",
                generators.len(),
                values.len()
            )));
        }
        let mut pairs = Vec::with_capacity(generators.len());
        for (g, v) in generators.iter().zip(&values) {
            g.require_size(2)?;
            if v.len() != 2 {
                return Err(Error::Descriptor(format!(
                    "cocycle value of length {}, expected 2",
                    v.len()
                )));
            }
            let x = AffineElement::new(v.clone(), g.clone())?;
            let inv = x.inverse();
            pairs.push((x, inv));
        }
        Ok(CocycleSpec {
            generators,
            values,
            relators: vec![],
            names: None,
            pairs,
        })
    }

    pub fn with_relators(mut self, relators: Vec<Word>) -> Result<Self> {
        self.relators = relators;
        self.check_words()?;
        Ok(self)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.generators.len() {
            return Err(Error::Descriptor(format!(
                "{} names for {} generators",
                names.len(),
                self.generators.len()
            )));
        }
        self.names = Some(names);
        self.check_words()?;
        Ok(self)
    }

    fn check_words(&self) -> Result<()> {
        for w in &self.relators {
            for t in w {
                self.resolve(&t.gen)?;
            }
        }
        Ok(())
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }

    pub fn values(&self) -> &[Vec<Integer>] {
        &self.values
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn resolve(&self, r: &GenRef) -> Result<usize> {
        match r {
            GenRef::Index(i) if *i < self.generators.len() => Ok(*i),
            GenRef::Index(i) => Err(Error::UnknownGenerator(format!("index {i}"))),
            GenRef::Name(n) => self
                .names
                .as_ref()
                .and_then(|names| names.iter().position(|x| x == n))
                .ok_or_else(|| Error::UnknownGenerator(n.clone())),
        }
    }

    /// The pair `(c(w), w)` as an element of `Z^2 ⋊ SL_2(Z)`.
    pub fn eval_element(&self, w: &[Token]) -> Result<AffineElement> {
        let mut acc = AffineElement::identity(2);
        for t in w {
            let (x, inv) = &self.pairs[self.resolve(&t.gen)?];
            let step = match t.exp {
                1 => x.clone(),
                -1 => inv.clone(),
                e if e < 0 => inv.pow(-e),
                e => x.pow(e),
            };
            acc = acc.mul(&step);
        }
        Ok(acc)
    }

    pub fn eval(&self, w: &[Token]) -> Result<Vec<Integer>> {
        Ok(self.eval_element(w)?.into_parts().0)
    }

    pub fn word_matrix(&self, w: &[Token]) -> Result<IntMatrix> {
        Ok(self.eval_element(w)?.into_parts().1)
    }
}

pub fn cocycle_eval(spec: &CocycleSpec, w: &[Token]) -> Result<Vec<Integer>> {
    spec.eval(w)
}

/// Whether the cocycle vanishes on every relator. A relator whose matrix is
/// not the identity is an error.
pub fn verify_relations(spec: &CocycleSpec) -> Result<bool> {
    let mut ok = true;
    for (index, r) in spec.relators.iter().enumerate() {
        let (c, m) = spec.eval_element(r)?.into_parts();
        if !m.is_identity() {
            return Err(Error::RelatorNotIdentity { index });
        }
        ok &= c.iter().all(|x| *x == Integer::ZERO);
    }
    Ok(ok)
}

/// `ξ` with `c(g) = ξ - g ξ` for every generator, or `None` when no rational
/// solution exists.
///
/// A generator without eigenvalue 1 fixes `ξ` on its own; otherwise the
/// stacked system over all generators is solved, and a nontrivial joint
/// kernel is reported as [`Error::Underdetermined`].
pub fn coboundary_witness(spec: &CocycleSpec) -> Result<Option<CoboundaryWitness>> {
    let rational_values: Vec<Vec<Rational>> = spec
        .values
        .iter()
        .map(|v| v.iter().map(to_rational).collect())
        .collect();
    let shifted: Vec<RatMatrix> = spec
        .generators
        .iter()
        .map(|g| IntMatrix::identity(2).try_sub(g).map(|m| m.to_rational()))
        .collect::<Result<_>>()?;
    let xi = match shifted
        .iter()
        .position(|m| m.det().map(|d| d != Rational::ZERO).unwrap_or(false))
    {
        Some(i) => {
            let inv = shifted[i].inverse()?;
            inv.mul_vec(&rational_values[i])
        }
        None => {
            let rows: Vec<Vec<Rational>> = shifted.iter().flat_map(|m| m.to_rows()).collect();
            let rhs: Vec<Rational> = rational_values.iter().flatten().cloned().collect();
            if rows.is_empty() {
                return Err(Error::Underdetermined);
            }
            match crate::exact::solve_rational(&RatMatrix::from_rows(rows)?, &rhs)? {
                RationalSolution::Unique(x) => x,
                RationalSolution::Underdetermined { .. } => return Err(Error::Underdetermined),
                RationalSolution::Inconsistent => return Ok(None),
            }
        }
    };
    let w = CoboundaryWitness::new(xi);
    let consistent = spec
        .generators
        .iter()
        .zip(&rational_values)
        .all(|(g, v)| w.coboundary_at(g) == *v);
    Ok(consistent.then_some(w))
}
