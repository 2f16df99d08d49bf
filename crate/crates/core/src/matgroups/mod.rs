//! Elements of `SL_2(Z)` and `SL_3(Z)`: trace classification, torsion,
//! generator words, congruence subgroups and seeded sampling.

pub mod classify;
pub mod congruence;
pub mod sample;
pub mod word;

pub use classify::{classify_sl2, order_of, order_of_with_cap, Order, Sl2Class, DEFAULT_ORDER_CAP, SL2_ORDER_BOUND};
pub use congruence::{congruence_membership, CongruenceFamily, CongruenceKind};
pub use sample::{random_word, sample_product, sample_subgroup_element, sl2_box, SampleGroup, Sampler};
pub use word::{decompose_st, to_torsion_generators, GenWord, Generator, Letter};
