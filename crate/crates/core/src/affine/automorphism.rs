use serde::{Deserialize, Serialize};

use super::element::AffineElement;
use crate::error::{Error, Result};
use crate::exact::json::decimal_vec;
use crate::exact::{IntMatrix, Integer};

/// `φ(a, s) = (L a + ξ - (L s L^-1) ξ, L s L^-1)`: conjugation by the
/// translation `ξ` after the linear automorphism induced by `L`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawAutomorphism")]
pub struct AffineAutomorphism {
    l: IntMatrix,
    #[serde(with = "decimal_vec")]
    xi: Vec<Integer>,
    #[serde(skip)]
    l_inv: IntMatrix,
}

#[derive(Deserialize)]
struct RawAutomorphism {
    l: IntMatrix,
    #[serde(with = "decimal_vec")]
    xi: Vec<Integer>,
}

impl TryFrom<RawAutomorphism> for AffineAutomorphism {
    type Error = Error;

    fn try_from(r: RawAutomorphism) -> Result<Self> {
        AffineAutomorphism::new(r.l, r.xi)
    }
}

impl AffineAutomorphism {
    pub fn new(l: IntMatrix, xi: Vec<Integer>) -> Result<Self> {
        let n = l.require_square()?;
        if xi.len() != n {
            return Err(Error::Shape(format!("ξ of length {} for a {n}x{n} matrix", xi.len())));
        }
        let l_inv = l.inverse_unimodular()?;
        Ok(AffineAutomorphism { l, xi, l_inv })
    }

    pub fn l(&self) -> &IntMatrix {
        &self.l
    }

    pub fn xi(&self) -> &[Integer] {
        &self.xi
    }

    pub fn apply(&self, x: &AffineElement) -> Result<AffineElement> {
        if x.dim() != self.xi.len() {
            return Err(Error::Shape(format!(
                "element of dimension {} for an automorphism of dimension {}",
                x.dim(),
                self.xi.len()
            )));
        }
        let s = &(&self.l * x.linear()) * &self.l_inv;
        let la = self.l.mul_vec(x.translation());
        let s_xi = s.mul_vec(&self.xi);
        let a = la
            .iter()
            .zip(&self.xi)
            .zip(&s_xi)
            .map(|((p, q), r)| p + q - r)
            .collect();
        Ok(AffineElement::from_parts(a, s))
    }

    /// `(L^-1, -L^-1 ξ)`.
    pub fn inverse(&self) -> AffineAutomorphism {
        let xi = self.l_inv.mul_vec(&self.xi).into_iter().map(|v| -v).collect();
        AffineAutomorphism {
            l: self.l_inv.clone(),
            xi,
            l_inv: self.l.clone(),
        }
    }
}
