//! Exact scalars, dense matrices and the integer canonical forms (Hermite,
//! Smith) that the group-theoretic modules are built on.

pub mod hnf;
pub mod json;
pub mod matrix;
pub mod scalar;
pub mod snf;
pub mod solve;

pub use hnf::{hnf, hnf_with_transform, integer_kernel, LatticeBasis};
pub use matrix::{IntMatrix, Matrix, RatMatrix};
pub use scalar::{int, int_vec, rat, Integer, Rational, Scalar};
pub use snf::{snf, SmithForm};
pub use solve::{fixed_sublattice, solve_integer, solve_rational, RationalSolution};
