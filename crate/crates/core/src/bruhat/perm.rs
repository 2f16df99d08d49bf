use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::{IntMatrix, RatMatrix};

/// An element of `Sym(3)`, represented by a fixed signed permutation matrix
/// `p_σ` of determinant 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Perm {
    Id,
    P12,
    P13,
    P23,
    P123,
    P132,
}

pub const ALL_PERMS: [Perm; 6] = [Perm::Id, Perm::P12, Perm::P13, Perm::P23, Perm::P123, Perm::P132];

impl Perm {
    pub fn name(self) -> &'static str {
        match self {
            Perm::Id => "id",
            Perm::P12 => "(12)",
            Perm::P13 => "(13)",
            Perm::P23 => "(23)",
            Perm::P123 => "(123)",
            Perm::P132 => "(132)",
        }
    }

    pub fn signed_rows(self) -> [[i64; 3]; 3] {
        match self {
            Perm::Id => [[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            Perm::P12 => [[0, 1, 0], [1, 0, 0], [0, 0, -1]],
            Perm::P13 => [[0, 0, -1], [0, 1, 0], [1, 0, 0]],
            Perm::P23 => [[1, 0, 0], [0, 0, -1], [0, 1, 0]],
            Perm::P123 => [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
            Perm::P132 => [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        }
    }

    pub fn matrix(self) -> IntMatrix {
        IntMatrix::from_i64_rows(&self.signed_rows())
    }

    pub fn rat_matrix(self) -> RatMatrix {
        RatMatrix::from_i64_rows(&self.signed_rows())
    }

    /// Column of the nonzero entry in each row of `p_σ`.
    pub fn columns(self) -> [usize; 3] {
        self.signed_rows().map(|row| row.iter().position(|&v| v != 0).unwrap())
    }

    /// The nonzero entry in each row of `p_σ`.
    pub fn signs(self) -> [i64; 3] {
        self.signed_rows().map(|row| row.into_iter().find(|&v| v != 0).unwrap())
    }

    pub fn from_columns(cols: [usize; 3]) -> Option<Perm> {
        ALL_PERMS.into_iter().find(|p| p.columns() == cols)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.trim_start_matches('p').trim_start_matches('_');
        match t {
            "id" | "e" | "()" => Ok(Perm::Id),
            "(12)" | "12" => Ok(Perm::P12),
            "(13)" | "13" => Ok(Perm::P13),
            "(23)" | "23" => Ok(Perm::P23),
            "(123)" | "123" => Ok(Perm::P123),
            "(132)" | "132" => Ok(Perm::P132),
            _ => Err(Error::Parse(format!("unknown permutation '{s}'"))),
        }
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
