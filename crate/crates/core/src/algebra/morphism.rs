//! Linear maps between structure-constant algebras and the checks that
//! qualify them as (co)algebra or Hopf algebra morphisms.

use super::character::Character;
use super::structure::HopfData;
use crate::exact::{kvec_unit, KVec, Mat};

/// A morphism candidate: matrix from source basis to target coordinates.
pub type MorphismMat = Mat;

/// `psi_chi = (id (x) chi) . Delta`, an algebra automorphism for every
/// character `chi`.
pub fn psi_automorphism(h: &HopfData, chi: &Character) -> MorphismMat {
    let n = h.dim();
    let mut m = Mat::zero(n, n);
    for b in 0..n {
        for (l, r, c) in &h.coalgebra.comult[b] {
            let w = c * &chi.values[*r];
            m[(*l, b)] += &w;
        }
    }
    m
}

/// Check that `f` is a unital algebra map on all basis pairs.
pub fn algebra_map_failure(f: &Mat, src: &HopfData, tgt: &HopfData) -> Option<String> {
    if f.apply(&src.algebra.unit) != tgt.algebra.unit {
        return Some("unit is not preserved".into());
    }
    let n = src.dim();
    let cols: Vec<KVec> = (0..n).map(|j| f.col(j)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(&src.algebra.mult.row_dense(i, j));
            let rhs = tgt.algebra.mul(&cols[i], &cols[j]);
            if lhs != rhs {
                return Some(format!("product of basis pair ({}, {}) is not preserved", i, j));
            }
        }
    }
    None
}

/// Check that `f` is a counital coalgebra map on all basis elements.
pub fn coalgebra_map_failure(f: &Mat, src: &HopfData, tgt: &HopfData) -> Option<String> {
    let n = src.dim();
    for i in 0..n {
        let through = src.coalgebra.comult_through(f, &kvec_unit(n, i));
        let direct = tgt.coalgebra.comult_dense(&f.col(i));
        if through != direct {
            return Some(format!("coproduct of basis {} is not preserved", i));
        }
        if tgt.coalgebra.counit_of(&f.col(i)) != src.coalgebra.counit[i] {
            return Some(format!("counit of basis {} is not preserved", i));
        }
    }
    None
}

/// Full Hopf-isomorphism verdict with a failure reason. Checks
/// bijectivity, the algebra and coalgebra map laws, unit and counit, and
/// (although it follows from the rest) antipode commutation.
pub fn is_hopf_iso(f: &Mat, src: &HopfData, tgt: &HopfData) -> (bool, Option<String>) {
    if f.nrows() != tgt.dim() || f.ncols() != src.dim() || src.dim() != tgt.dim() {
        return (false, Some("dimension mismatch".into()));
    }
    if f.rank() != src.dim() {
        return (false, Some("matrix is not bijective".into()));
    }
    if let Some(reason) = algebra_map_failure(f, src, tgt) {
        return (false, Some(reason));
    }
    if let Some(reason) = coalgebra_map_failure(f, src, tgt) {
        return (false, Some(reason));
    }
    let fs = f.matmul(&src.antipode);
    let sf = tgt.antipode.matmul(f);
    if fs != sf {
        return (false, Some("antipode does not commute".into()));
    }
    (true, None)
}

/// Compose morphisms (`g` after `f`).
pub fn compose(g: &Mat, f: &Mat) -> Mat {
    g.matmul(f)
}
