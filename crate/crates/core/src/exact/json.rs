//! JSON representation shared by every module.
//!
//! Matrices are `{"rows": n, "cols": m, "entries": [["1", "0"], ...]}` with
//! scalar entries as decimal strings (`"p/q"` for rationals). Reading also
//! accepts a bare nested array and plain JSON integers.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::Matrix;
use super::scalar::Scalar;

#[derive(Deserialize)]
#[serde(untagged)]
enum NumRepr {
    Str(String),
    Int(i64),
}

impl NumRepr {
    fn parse<T: Scalar>(&self) -> crate::error::Result<T> {
        match self {
            NumRepr::Str(s) => T::parse_decimal(s),
            NumRepr::Int(v) => Ok(T::from_i64(*v)),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixRepr {
    Full {
        rows: usize,
        cols: usize,
        entries: Vec<Vec<NumRepr>>,
    },
    Bare(Vec<Vec<NumRepr>>),
}

#[derive(Serialize)]
struct MatrixOut {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

impl<T: Scalar> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixOut {
            rows: self.rows(),
            cols: self.cols(),
            entries: (0..self.rows())
                .map(|i| self.row(i).iter().map(ToString::to_string).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, T: Scalar> Deserialize<'de> for Matrix<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (declared, entries) = match MatrixRepr::deserialize(d)? {
            MatrixRepr::Full { rows, cols, entries } => (Some((rows, cols)), entries),
            MatrixRepr::Bare(entries) => (None, entries),
        };
        let parsed = entries
            .iter()
            .map(|r| r.iter().map(NumRepr::parse::<T>).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        let m = Matrix::from_rows(parsed).map_err(D::Error::custom)?;
        if let Some((rows, cols)) = declared {
            // an empty entry list carries no column count of its own
            let m = if rows == 0 || cols == 0 {
                Matrix::zeros(rows, cols)
            } else {
                m
            };
            if m.rows() != rows || m.cols() != cols {
                return Err(D::Error::custom(format!(
                    "declared {rows}x{cols} but entries are {}x{}",
                    m.rows(),
                    m.cols()
                )));
            }
            return Ok(m);
        }
        Ok(m)
    }
}

/// `#[serde(with = "decimal")]` for a single scalar.
pub mod decimal {
    use super::*;

    pub fn serialize<T: Scalar, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<T, D::Error> {
        NumRepr::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

/// `#[serde(with = "decimal_vec")]` for a vector of scalars.
pub mod decimal_vec {
    use super::*;

    pub fn serialize<T: Scalar, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<Vec<T>, D::Error> {
        Vec::<NumRepr>::deserialize(d)?
            .iter()
            .map(|x| x.parse().map_err(D::Error::custom))
            .collect()
    }
}

/// `#[serde(with = "decimal_vecs")]` for a list of vectors.
pub mod decimal_vecs {
    use super::*;

    pub fn serialize<T: Scalar, S: Serializer>(v: &[Vec<T>], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()))
    }

    pub fn deserialize<'de, T: Scalar, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<T>>, D::Error> {
        Vec::<Vec<NumRepr>>::deserialize(d)?
            .iter()
            .map(|r| r.iter().map(|x| x.parse().map_err(D::Error::custom)).collect())
            .collect()
    }
}

/// Decimal-string rendering of a vector, for hand-built JSON documents.
pub fn vec_to_json<T: Scalar>(v: &[T]) -> serde_json::Value {
    serde_json::Value::Array(v.iter().map(|x| serde_json::Value::String(x.to_string())).collect())
}
