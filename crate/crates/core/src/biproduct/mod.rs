//! Radford biproducts of the Yetter-Drinfel'd families: construction,
//! named elements, coinvariants, character reconstruction, the group-like
//! lattice, and the explicit sign-pair isomorphism.

pub mod build;
pub mod lattice;
pub mod ops;

pub use build::{biproduct_presentation, build_biproduct, monomial_index, Biproduct};
pub use lattice::{dual_lattice, grouplike_lattice, DualLattice, GroupLikeLattice, GroupTable};
pub use ops::{
    a_image, characters_of, coinvariants, explicit_iso_to_negative, h_span, invariant_subalgebra,
    monomial_exponents, psi_ops, quotient_by_h, quotient_iso_check, reconstruct_chi, u_span,
};
