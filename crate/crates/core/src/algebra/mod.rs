//! Generic machinery for finite-dimensional algebras, coalgebras, and
//! Hopf algebras over `K`: structure constants, presentations and
//! straightening, axiom checkers, antipodes, characters, group-like
//! elements, quotient coalgebras, and morphism verification.

pub mod antipode;
pub mod character;
pub mod check;
pub mod grouplike;
pub mod io;
pub mod morphism;
pub mod presentation;
pub mod quotient;
pub mod structure;

pub use antipode::{compute_antipode, convolution_unit, convolve, element_order};
pub use character::{
    characters, convolve_characters, counit_character, is_central_character, kth_roots, Character,
};
pub use check::{check_bialgebra, check_hopf, AxiomReport, CheckEntry};
pub use grouplike::{central_group_likes, group_likes, simultaneous_eigenspaces};
pub use morphism::{
    algebra_map_failure, coalgebra_map_failure, compose, is_hopf_iso, psi_automorphism,
    MorphismMat,
};
pub use presentation::{
    Generator, Presentation, ReduceOrder, StraightenedAlgebra, Word, WordPoly,
};
pub use quotient::{hopf_subalgebra_failure, normal_hopf_subalgebra_check, quotient_coalgebra, QuotientCoalgebra};
pub use structure::{group_algebra, AlgebraData, CoalgebraData, ComultRow, HopfData};
