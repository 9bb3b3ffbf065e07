//! Exact-arithmetic engine for two families of Yetter-Drinfel'd Hopf
//! algebras over the Klein four-group and their Radford biproducts.
//!
//! The crate constructs the eight-dimensional braided Hopf algebras
//! `A_zeta` (one commutative family, one noncommutative, each indexed by
//! a fourth root of unity `zeta`), builds the thirty-two-dimensional
//! ordinary Hopf algebras `B_zeta = A_zeta * K[Z2 x Z2]`, verifies every
//! structural axiom exactly, and decides which members of each family are
//! isomorphic. For non-isomorphic biproduct pairs the decision is backed
//! by a step-by-step machine-checked case analysis recorded in a
//! serializable certificate.
//!
//! All arithmetic happens in the cyclotomic field `Q(w)` with `w^4 = -1`;
//! there is no floating point and every reported identity is exact.

pub mod algebra;
pub mod biproduct;
pub mod exact;
pub mod proofreplay;
pub mod yetterdrinfeld;

use thiserror::Error;

/// Errors from the scalar and linear-algebra layer.
#[derive(Debug, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse scalar: {0:?}")]
    Parse(String),
    #[error("shape mismatch: {what}")]
    Shape { what: String },
    #[error("matrix is singular")]
    Singular,
    #[error("membership violation: {what}")]
    Membership { what: String },
}

/// Errors from the generic algebra machinery.
#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("rewriting diverged after {steps} steps on word {word:?}")]
    Divergence { steps: usize, word: String },
    #[error("straightening produced {got} normal monomials, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("bialgebra has no antipode: convolution identity is not invertible")]
    NoAntipode,
    #[error("character search: no candidate root solves {relation} (candidate set may be incomplete)")]
    CandidateSetIncomplete { relation: String },
    #[error("simultaneous eigenspace of dimension {dim} exceeds the solver bound 6")]
    EigenspaceTooLarge { dim: usize },
    #[error("eigenspace is not aligned with the distinguished basis; group-like solver does not apply")]
    EigenspaceNotAligned,
    #[error("group-like solver cannot resolve a support pattern (residual solution space of dimension {dim})")]
    SolverIndeterminate { dim: usize },
    #[error("operator is not diagonalizable over the expected roots of unity")]
    NotDiagonalizable,
    #[error("not a Hopf subalgebra: {reason}")]
    NotAHopfSubalgebra { reason: String },
    #[error("the induced ideal is not a coideal")]
    NotACoideal,
    #[error("element order exceeds bound {bound}")]
    OrderExceedsBound { bound: u32 },
    #[error("character reconstruction failed: {reason}")]
    ReconstructionFailed { reason: String },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Errors specific to the Yetter-Drinfel'd constructions.
#[derive(Debug, Error)]
pub enum YdError {
    #[error("parameter is not a fourth root of unity")]
    InvalidRoot,
    #[error("bicharacter is degenerate")]
    DegenerateBicharacter,
    #[error("degree-6 relation is only stated for {expected}")]
    WrongCase { expected: String },
    #[error("construction failed an axiom: {report}")]
    AxiomFailure { report: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Errors from the biproduct constructions.
#[derive(Debug, Error)]
pub enum BiproductError {
    #[error("unexpected group structure: {what}")]
    UnexpectedGroup { what: String },
    #[error("character reconstruction: {what}")]
    Reconstruction { what: String },
    #[error("generator images violate the defining relations: {what}")]
    RelationViolation { what: String },
    #[error("biproducts do not form a sign pair")]
    NotASignPair,
    #[error(transparent)]
    Yd(#[from] YdError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Errors from the classification replay.
#[derive(Debug, Error)]
pub enum ReplayError {
    #[error("replay step {step} failed: {claim}")]
    StepFailed { step: String, claim: String },
    #[error("unexpected group structure: {what}")]
    UnexpectedGroup { what: String },
    #[error(transparent)]
    Yd(#[from] YdError),
    #[error(transparent)]
    Biproduct(#[from] BiproductError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
