//! Structure-constant dump format. One JSON document carries a full Hopf
//! algebra (sparse multiplication triples, comultiplication, counit,
//! antipode, basis names); Yetter-Drinfel'd data adds action and
//! coaction blocks, biproducts add the named-element table. Scalars are
//! four-string arrays `"p/q"` in lowest terms.

use serde::{Deserialize, Serialize};

use super::structure::{AlgebraData, CoalgebraData, HopfData};
use crate::exact::{kvec_zero, Cyclo, KVec, Mat, Tensor3};
use crate::ExactError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct HopfDump {
    pub schema: u32,
    pub dim: usize,
    pub basis_names: Vec<String>,
    pub unit: Vec<Cyclo>,
    /// Sparse multiplication tensor: `(i, j, k, coefficient)`.
    pub mult: Vec<(usize, usize, usize, Cyclo)>,
    /// Per-basis sparse comultiplication triples.
    pub comult: Vec<Vec<(usize, usize, Cyclo)>>,
    pub counit: Vec<Cyclo>,
    /// Sparse antipode entries `(row, col, coefficient)`.
    pub antipode: Vec<(usize, usize, Cyclo)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub yd: Option<YdDump>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub named_elements: Option<Vec<(String, Vec<Cyclo>)>>,
}

/// Action and coaction blocks for Yetter-Drinfel'd fixtures.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct YdDump {
    pub family: u8,
    pub zeta: Cyclo,
    /// One sparse matrix per group element: `(row, col, coefficient)`.
    pub action: Vec<Vec<(usize, usize, Cyclo)>>,
    /// Per basis element: `(group element, component vector)` pairs.
    pub coaction: Vec<Vec<(usize, Vec<Cyclo>)>>,
}

pub fn mat_to_sparse(m: &Mat) -> Vec<(usize, usize, Cyclo)> {
    let mut out = Vec::new();
    for i in 0..m.nrows() {
        for (j, c) in m.row(i).iter().enumerate() {
            if !c.is_zero() {
                out.push((i, j, c.clone()));
            }
        }
    }
    out
}

pub fn mat_from_sparse(rows: usize, cols: usize, entries: &[(usize, usize, Cyclo)]) -> Mat {
    let mut m = Mat::zero(rows, cols);
    for (i, j, c) in entries {
        m[(*i, *j)] = c.clone();
    }
    m
}

pub fn dump_hopf(h: &HopfData, basis_names: &[String]) -> HopfDump {
    let n = h.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, c) in h.algebra.mult.row(i, j) {
                mult.push((i, j, *k, c.clone()));
            }
        }
    }
    HopfDump {
        schema: SCHEMA_VERSION,
        dim: n,
        basis_names: basis_names.to_vec(),
        unit: h.algebra.unit.clone(),
        mult,
        comult: h.coalgebra.comult.clone(),
        counit: h.coalgebra.counit.clone(),
        antipode: mat_to_sparse(&h.antipode),
        yd: None,
        named_elements: None,
    }
}

pub fn load_hopf(d: &HopfDump) -> Result<(HopfData, Vec<String>), ExactError> {
    if d.schema != SCHEMA_VERSION {
        return Err(ExactError::Parse(format!(
            "unsupported schema version {}",
            d.schema
        )));
    }
    let n = d.dim;
    let mut mult = Tensor3::new(n);
    let mut rows: Vec<Vec<(usize, Cyclo)>> = vec![Vec::new(); n * n];
    for (i, j, k, c) in &d.mult {
        rows[i * n + j].push((*k, c.clone()));
    }
    for i in 0..n {
        for j in 0..n {
            mult.set_row(i, j, rows[i * n + j].clone());
        }
    }
    let algebra = AlgebraData {
        dim: n,
        unit: pad(&d.unit, n),
        mult,
    };
    let mut coalgebra = CoalgebraData {
        dim: n,
        counit: pad(&d.counit, n),
        comult: d.comult.clone(),
    };
    coalgebra.normalize();
    let antipode = mat_from_sparse(n, n, &d.antipode);
    Ok((
        HopfData {
            algebra,
            coalgebra,
            antipode,
        },
        d.basis_names.clone(),
    ))
}

fn pad(v: &[Cyclo], n: usize) -> KVec {
    let mut out = kvec_zero(n);
    for (i, c) in v.iter().enumerate() {
        out[i] = c.clone();
    }
    out
}

pub fn to_json(d: &HopfDump) -> String {
    serde_json::to_string_pretty(d).expect("dump serializes")
}

pub fn from_json(s: &str) -> Result<HopfDump, ExactError> {
    serde_json::from_str(s).map_err(|e| ExactError::Parse(e.to_string()))
}
