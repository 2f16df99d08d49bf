pub mod affine;
pub mod bruhat;
pub mod cocycle;
pub mod lin;
pub mod sl2;
