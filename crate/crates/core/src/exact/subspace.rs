//! Subspaces of `K^n` in a canonical form: the reduced row echelon basis
//! of a row-stacked spanning set. Two subspaces are equal iff their
//! canonical bases are identical, and residue classes modulo a subspace
//! get deterministic coordinates (the non-pivot columns).

use super::cyclo::Cyclo;
use super::linalg::{kvec_is_zero, KVec, Mat};
use crate::ExactError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<KVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Canonicalize a spanning set.
    pub fn from_rows(ambient: usize, rows: Vec<KVec>) -> Self {
        if rows.is_empty() {
            return Subspace {
                ambient,
                basis: Vec::new(),
                pivots: Vec::new(),
            };
        }
        assert!(rows.iter().all(|r| r.len() == ambient));
        let (r, pivots) = Mat::from_rows(rows).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace::from_rows(ambient, Vec::new())
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_rows(ambient, (0..ambient).map(|i| super::linalg::kvec_unit(ambient, i)).collect())
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[KVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that are not pivots: the deterministic complement.
    pub fn complement_cols(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Residue of `v` after eliminating all pivot coordinates; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[Cyclo]) -> KVec {
        assert_eq!(v.len(), self.ambient);
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                for (o, b) in out.iter_mut().zip(row) {
                    *o -= &(&c * b);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Cyclo]) -> bool {
        kvec_is_zero(&self.reduce(v))
    }

    pub fn contains_all(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Sum of subspaces.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Subspace::from_rows(self.ambient, rows)
    }

    /// Intersection, via the kernel of the stacked reduction operators.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let m = self.reduction_matrix().vstack(&other.reduction_matrix());
        Subspace::from_rows(self.ambient, m.kernel_rows())
    }

    /// The linear operator `v -> reduce(v)` as a matrix, built column by
    /// column from the unit vectors.
    pub fn reduction_matrix(&self) -> Mat {
        let n = self.ambient;
        let mut m = Mat::zero(n, n);
        for j in 0..n {
            let red = self.reduce(&super::linalg::kvec_unit(n, j));
            for i in 0..n {
                m[(i, j)] = red[i].clone();
            }
        }
        m
    }

    /// Coordinates of the residue class of `v` in the deterministic
    /// complement of `sub` inside `whole`. Errors when `sub` is not
    /// contained in `whole` or `v` is outside `whole`.
    pub fn quotient_coords(
        whole: &Subspace,
        sub: &Subspace,
        v: &[Cyclo],
    ) -> Result<KVec, ExactError> {
        if !whole.contains_all(sub) {
            return Err(ExactError::Membership {
                what: "subspace is not contained in the ambient space".into(),
            });
        }
        if !whole.contains(v) {
            return Err(ExactError::Membership {
                what: "vector is outside the ambient space".into(),
            });
        }
        let red = sub.reduce(v);
        Ok(sub
            .complement_cols()
            .into_iter()
            .map(|c| red[c].clone())
            .collect())
    }
}

/// Fixed space of a family of operators: the intersection of the kernels
/// of `op - id`.
pub fn fixed_space(ops: &[Mat]) -> Subspace {
    assert!(!ops.is_empty());
    let n = ops[0].ncols();
    let mut stacked: Option<Mat> = None;
    for op in ops {
        let diff = op.sub(&Mat::identity(n));
        stacked = Some(match stacked {
            None => diff,
            Some(s) => s.vstack(&diff),
        });
    }
    Subspace::from_rows(n, stacked.unwrap().kernel_rows())
}

/// Kernel of an operator `op - lambda * id`.
pub fn eigenspace(op: &Mat, lambda: &Cyclo) -> Subspace {
    let n = op.ncols();
    let shifted = op.sub(&Mat::identity(n).scale(lambda));
    Subspace::from_rows(n, shifted.kernel_rows())
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::linalg::kvec_unit;

    fn c(n: i64) -> Cyclo {
        Cyclo::from_int(n)
    }

    #[test]
    fn quotient_coords_basics() {
        // sub = span(e0 + e1) inside whole = K^3
        let whole = Subspace::full(3);
        let sub = Subspace::from_rows(3, vec![vec![c(1), c(1), c(0)]]);
        // v in sub -> zero
        let q = Subspace::quotient_coords(&whole, &sub, &[c(2), c(2), c(0)]).unwrap();
        assert!(kvec_is_zero(&q));
        // complement basis vector -> unit coordinate
        let q = Subspace::quotient_coords(&whole, &sub, &kvec_unit(3, 1)).unwrap();
        assert_eq!(q, vec![c(1), c(0)]);
        let q = Subspace::quotient_coords(&whole, &sub, &kvec_unit(3, 2)).unwrap();
        assert_eq!(q, vec![c(0), c(1)]);
    }

    #[test]
    fn membership_errors() {
        let whole = Subspace::from_rows(3, vec![vec![c(1), c(0), c(0)]]);
        let sub = Subspace::from_rows(3, vec![vec![c(0), c(1), c(0)]]);
        assert!(Subspace::quotient_coords(&whole, &sub, &kvec_unit(3, 0)).is_err());
    }

    #[test]
    fn sum_and_intersection() {
        let a = Subspace::from_rows(3, vec![vec![c(1), c(0), c(0)], vec![c(0), c(1), c(0)]]);
        let b = Subspace::from_rows(3, vec![vec![c(0), c(1), c(0)], vec![c(0), c(0), c(1)]]);
        assert_eq!(a.sum(&b).dim(), 3);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&kvec_unit(3, 1)));
    }
}
