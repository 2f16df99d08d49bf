//! `Z^2`-valued 1-cocycles on subgroups of `SL_2(Z)` acting on `Z^2`.

pub mod families;
pub mod finf;
pub mod spec;

pub use families::{
    central_cocycle, central_witness, full_group_spec, gamma1_cocycle, gamma1_obstruction, gamma1_spec, parity_domain,
    solve_full_coboundary, st_tokens, FullCoboundary, ParityCase,
};
pub use finf::{
    b_power, finf_coefficient_matrix, finf_extend, finf_generator, finf_parity_condition, finf_relations, FinfRelation,
    FinfWindow,
};
pub use spec::{
    coboundary_witness, cocycle_eval, verify_relations, CoboundaryWitness, CocycleSpec, GenRef, Token, Word,
};
