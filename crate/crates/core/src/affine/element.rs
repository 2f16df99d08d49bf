use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::json::decimal_vec;
use crate::exact::{IntMatrix, Integer};

/// An element `(a, g)` of `Z^n ⋊ SL_n(Z)`, multiplied by
/// `(a, g)(b, h) = (a + g b, g h)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawElement")]
pub struct AffineElement {
    #[serde(rename = "a", with = "decimal_vec")]
    translation: Vec<Integer>,
    #[serde(rename = "g")]
    linear: IntMatrix,
}

#[derive(Deserialize)]
struct RawElement {
    #[serde(with = "decimal_vec")]
    a: Vec<Integer>,
    g: IntMatrix,
}

impl TryFrom<RawElement> for AffineElement {
    type Error = Error;

    fn try_from(r: RawElement) -> Result<Self> {
        AffineElement::new(r.a, r.g)
    }
}

impl AffineElement {
    pub fn new(translation: Vec<Integer>, linear: IntMatrix) -> Result<Self> {
        let n = linear.require_square()?;
        if translation.len() != n {
            return Err(Error::Shape(format!(
                "translation of length {} with a {n}x{n} linear part",
                translation.len()
            )));
        }
        linear.require_det(1)?;
        Ok(AffineElement { translation, linear })
    }

    /// Caller guarantees matching dimensions and determinant 1.
    pub(crate) fn from_parts(translation: Vec<Integer>, linear: IntMatrix) -> Self {
        debug_assert_eq!(translation.len(), linear.rows());
        AffineElement { translation, linear }
    }

    pub fn identity(n: usize) -> Self {
        AffineElement::from_parts(vec![Integer::ZERO; n], IntMatrix::identity(n))
    }

    pub fn translation_only(v: Vec<Integer>) -> Self {
        let n = v.len();
        AffineElement::from_parts(v, IntMatrix::identity(n))
    }

    pub fn linear_only(g: IntMatrix) -> Result<Self> {
        let n = g.require_square()?;
        AffineElement::new(vec![Integer::ZERO; n], g)
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn translation(&self) -> &[Integer] {
        &self.translation
    }

    pub fn linear(&self) -> &IntMatrix {
        &self.linear
    }

    pub fn into_parts(self) -> (Vec<Integer>, IntMatrix) {
        (self.translation, self.linear)
    }

    pub fn is_identity(&self) -> bool {
        self.translation.iter().all(|x| *x == Integer::ZERO) && self.linear.is_identity()
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::Shape(format!(
                "affine elements of dimensions {} and {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(self.mul(other))
    }

    /// Panics on a dimension mismatch; see [`AffineElement::try_mul`].
    pub fn mul(&self, other: &Self) -> Self {
        let gb = self.linear.mul_vec(&other.translation);
        let translation = self.translation.iter().zip(gb).map(|(a, b)| a + b).collect();
        AffineElement::from_parts(translation, &self.linear * &other.linear)
    }

    pub fn inverse(&self) -> Self {
        let inv = self.linear.inverse_unimodular().expect("linear part has determinant 1");
        let translation = inv.mul_vec(&self.translation).into_iter().map(|x| -x).collect();
        AffineElement::from_parts(translation, inv)
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = AffineElement::identity(self.dim());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `h self h^-1`.
    pub fn conjugate_by(&self, h: &Self) -> Self {
        h.mul(self).mul(&h.inverse())
    }

    /// `x y x^-1 y^-1`.
    pub fn commutator(x: &Self, y: &Self) -> Self {
        x.mul(y).mul(&x.inverse()).mul(&y.inverse())
    }

    /// Image of a point of `Z^n` under the affine map `v -> g v + a`.
    pub fn apply(&self, v: &[Integer]) -> Vec<Integer> {
        self.linear
            .mul_vec(v)
            .into_iter()
            .zip(&self.translation)
            .map(|(x, a)| x + a)
            .collect()
    }
}

impl fmt::Debug for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.translation.iter().map(ToString::to_string).collect();
        write!(f, "(({}), {:?})", a.join(","), self.linear)
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
