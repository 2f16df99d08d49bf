//! Exact computational group theory for `Z^n ⋊ SL_n(Z)` and its subgroups.
//!
//! * [`exact`]: arbitrary-precision scalars, matrices, Hermite and Smith forms.
//! * [`matgroups`]: `SL_2(Z)` classification, generator words, congruence subgroups.
//! * [`cocycle`]: `Z^2`-valued 1-cocycles, coboundary witnesses and extension obstructions.
//! * [`affine`]: affine group arithmetic, ICC analysis, invariant lattices, automorphisms.
//! * [`bruhat`]: Bruhat cells and factorizations in `GL_3(Q)`.

pub mod affine;
pub mod bruhat;
pub mod cocycle;
pub mod error;
pub mod exact;
pub mod matgroups;

pub use error::{Error, Result};
