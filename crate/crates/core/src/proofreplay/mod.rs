//! Mechanical replay of the classification results, with certificates.

pub mod replay;
pub mod trace;

pub use replay::{
    classification_matrix, classify_built, classify_pair, replay_nonisomorphism, Cell,
    ClassificationMatrix, Level,
};
pub use trace::{CaseStep, CaseTrace, Verdict, VerdictDump};
