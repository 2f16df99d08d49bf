//! Bruhat decomposition of `GL_3(Q)` with respect to the upper triangular
//! matrices, and the cell computations used to show that `H(Z)` is a
//! maximal subgroup with the Haagerup property in `SL_3(Z)`.

pub mod decompose;
pub mod facts;
pub mod perm;

pub use decompose::{bruhat_decompose, cell_of, cell_of_i64, BruhatFactorization};
pub use facts::{
    borel_z_generators, case3_normalize, case3_rebalance, case4_conjugate, case4_witness, conjugate, fact3_display,
    fact4_display, fact_check, fact_holds_for, grid_values, in_borel, in_k, upper, Fact, FactParams, FactReport,
};
pub use perm::{Perm, ALL_PERMS};
