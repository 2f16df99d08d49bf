pub mod automorphism;
pub mod classify;
pub mod element;
pub mod icc;
pub mod lattice;

pub use automorphism::AffineAutomorphism;
pub use classify::{classify_subgroup, finite_closure, Case, Check, ClassificationReport, SubgroupDescriptor, Verdict};
pub use element::AffineElement;
pub use icc::{conj_class_ball, conj_class_profile, fc_witness, icc_affine_cyclic, FcWitness};
pub use lattice::{invariant_lattice, is_invariant, sl_generators, InvariantLattice, LatticeIndex};
