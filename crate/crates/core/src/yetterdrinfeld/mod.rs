//! The two families of Yetter-Drinfel'd Hopf algebras over the Klein
//! four-group: construction, axiom verification, and the exhaustive
//! isomorphism search.

pub mod axioms;
pub mod family;
pub mod iso;
pub mod klein;

pub use axioms::verify_yd_axioms;
pub use family::{
    action_from_coaction, build, build_family1, build_family2, coaction_from_action,
    YdHopfAlgebra,
};
pub use iso::{degree6_check, yd_iso_search, SearchMode};
pub use klein::{Bicharacter, KleinGroup};
