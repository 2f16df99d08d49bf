use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::scalar::mod_floor;
use crate::exact::{int, IntMatrix, Integer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CongruenceFamily {
    /// Principal congruence subgroup `Γ(N)`.
    #[serde(rename = "Gamma")]
    Principal,
    #[serde(rename = "Gamma0")]
    Gamma0,
    #[serde(rename = "Gamma1")]
    Gamma1,
}

impl CongruenceFamily {
    pub fn name(&self) -> &'static str {
        match self {
            CongruenceFamily::Principal => "Gamma",
            CongruenceFamily::Gamma0 => "Gamma0",
            CongruenceFamily::Gamma1 => "Gamma1",
        }
    }
}

impl FromStr for CongruenceFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Gamma" | "gamma" | "Γ" => Ok(CongruenceFamily::Principal),
            "Gamma0" | "gamma0" | "Γ0" | "Γ₀" => Ok(CongruenceFamily::Gamma0),
            "Gamma1" | "gamma1" | "Γ1" | "Γ₁" => Ok(CongruenceFamily::Gamma1),
            _ => Err(Error::Parse(format!("unknown congruence family {s:?}"))),
        }
    }
}

/// A congruence subgroup of `SL_2(Z)` of level `N >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawKind")]
pub struct CongruenceKind {
    pub family: CongruenceFamily,
    pub level: u64,
}

#[derive(Deserialize)]
struct RawKind {
    family: CongruenceFamily,
    level: u64,
}

impl TryFrom<RawKind> for CongruenceKind {
    type Error = Error;

    fn try_from(r: RawKind) -> Result<Self> {
        CongruenceKind::new(r.family, r.level)
    }
}

impl CongruenceKind {
    pub fn new(family: CongruenceFamily, level: u64) -> Result<Self> {
        if level == 0 {
            return Err(Error::Invalid("congruence level must be at least 1".into()));
        }
        Ok(CongruenceKind { family, level })
    }

    pub fn principal(level: u64) -> Result<Self> {
        Self::new(CongruenceFamily::Principal, level)
    }

    pub fn gamma0(level: u64) -> Result<Self> {
        Self::new(CongruenceFamily::Gamma0, level)
    }

    pub fn gamma1(level: u64) -> Result<Self> {
        Self::new(CongruenceFamily::Gamma1, level)
    }

    /// Generators used for sampling. They lie in the subgroup but need not
    /// generate all of it.
    pub fn sampling_generators(&self) -> Vec<IntMatrix> {
        let n = self.level as i64;
        let upper = |k: i64| IntMatrix::from_i64_rows(&[[1, k], [0, 1]]);
        let lower = |k: i64| IntMatrix::from_i64_rows(&[[1, 0], [k, 1]]);
        match self.family {
            CongruenceFamily::Principal => vec![upper(n), lower(n)],
            CongruenceFamily::Gamma1 => vec![upper(1), lower(n)],
            CongruenceFamily::Gamma0 => vec![upper(1), lower(n), IntMatrix::scalar(2, int(-1))],
        }
    }

    pub fn contains(&self, g: &IntMatrix) -> Result<bool> {
        congruence_membership(self, g)
    }
}

impl fmt::Display for CongruenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family.name(), self.level)
    }
}

pub fn congruence_membership(kind: &CongruenceKind, g: &IntMatrix) -> Result<bool> {
    g.require_size(2)?;
    g.require_det(1)?;
    let n = int(kind.level as i64);
    let is = |e: &Integer, r: i64| mod_floor(e, &n) == mod_floor(&int(r), &n);
    let (a, b, c, d) = (&g[(0, 0)], &g[(0, 1)], &g[(1, 0)], &g[(1, 1)]);
    Ok(match kind.family {
        CongruenceFamily::Principal => is(a, 1) && is(b, 0) && is(c, 0) && is(d, 1),
        CongruenceFamily::Gamma1 => is(a, 1) && is(c, 0) && is(d, 1),
        CongruenceFamily::Gamma0 => is(c, 0),
    })
}
