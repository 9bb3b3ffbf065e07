//! Machine-readable certificates for the classification: each
//! non-isomorphism verdict carries an ordered list of replayed deduction
//! steps, every one re-verified in the producing run and stamped with a
//! digest of its intermediate data.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::exact::{Cyclo, Mat};

/// One verified deduction step.
#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct CaseStep {
    /// Step id, `S0`..`S9`.
    pub id: String,
    /// Stable label of the fact the step replays.
    pub anchor: String,
    /// What was computed and what it establishes.
    pub claim: String,
    /// Result of the in-run verification.
    pub verified: bool,
    /// Portions relied on by citation rather than machine verification.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cited: Option<String>,
    /// Hex digest of the step's intermediate data.
    pub digest: String,
}

/// A complete non-isomorphism certificate.
#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct CaseTrace {
    pub zeta: String,
    pub xi: String,
    pub steps: Vec<CaseStep>,
    pub verdict: String,
}

impl CaseTrace {
    pub fn all_verified(&self) -> bool {
        self.steps.iter().all(|s| s.verified)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }
}

/// Outcome of a classification query.
#[derive(Clone, Debug)]
pub enum Verdict {
    Isomorphic { witness: Mat },
    NotIsomorphic { trace: Box<CaseTrace> },
}

impl Verdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, Verdict::Isomorphic { .. })
    }
}

/// Serializable form of a verdict (witnesses as sparse triples).
#[derive(Serialize, Clone, Debug, PartialEq)]
pub struct VerdictDump {
    pub isomorphic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<(usize, usize, Cyclo)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<CaseTrace>,
}

impl From<&Verdict> for VerdictDump {
    fn from(v: &Verdict) -> Self {
        match v {
            Verdict::Isomorphic { witness } => VerdictDump {
                isomorphic: true,
                witness: Some(crate::algebra::io::mat_to_sparse(witness)),
                trace: None,
            },
            Verdict::NotIsomorphic { trace } => VerdictDump {
                isomorphic: false,
                witness: None,
                trace: Some((**trace).clone()),
            },
        }
    }
}

/// Digest of an ordered list of data fragments.
pub fn digest_parts(parts: &[String]) -> String {
    let mut hasher = Sha256::new();
    for p in parts {
        hasher.update(p.as_bytes());
        hasher.update([0u8]);
    }
    let out = hasher.finalize();
    out.iter().map(|b| format!("{:02x}", b)).collect()
}

/// Canonical string of a vector for digesting.
pub fn digest_vec(v: &[Cyclo]) -> String {
    let parts: Vec<String> = v.iter().map(|c| c.to_strings().join(",")).collect();
    parts.join(";")
}

/// Canonical string of a matrix row list for digesting.
pub fn digest_rows(rows: &[Vec<Cyclo>]) -> String {
    let parts: Vec<String> = rows.iter().map(|r| digest_vec(r)).collect();
    parts.join("|")
}
