//! Order-3 structure-constant tensors. Entry `(i, j, k)` is the
//! coefficient of basis vector `k` in the product of basis vectors `i`
//! and `j`. Rows are stored sparsely: most products of monomials expand
//! into very few terms.

use super::cyclo::Cyclo;
use super::linalg::{kvec_zero, KVec};

/// Sparse vector: sorted `(index, coefficient)` pairs, no zero entries.
pub type SparseVec = Vec<(usize, Cyclo)>;

pub fn sparse_from_dense(v: &[Cyclo]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, n: usize) -> KVec {
    let mut out = kvec_zero(n);
    for (i, c) in v {
        out[*i] = c.clone();
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tensor3 {
    n: usize,
    rows: Vec<SparseVec>,
}

impl Tensor3 {
    pub fn new(n: usize) -> Self {
        Tensor3 {
            n,
            rows: vec![Vec::new(); n * n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// The sparse product vector of basis `i` times basis `j`.
    pub fn row(&self, i: usize, j: usize) -> &SparseVec {
        &self.rows[i * self.n + j]
    }

    pub fn set_row(&mut self, i: usize, j: usize, mut row: SparseVec) {
        row.retain(|(_, c)| !c.is_zero());
        row.sort_by_key(|(k, _)| *k);
        self.rows[i * self.n + j] = row;
    }

    pub fn set_row_dense(&mut self, i: usize, j: usize, row: &[Cyclo]) {
        self.set_row(i, j, sparse_from_dense(row));
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Cyclo {
        self.row(i, j)
            .iter()
            .find(|(idx, _)| *idx == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Cyclo::zero)
    }

    pub fn row_dense(&self, i: usize, j: usize) -> KVec {
        sparse_to_dense(self.row(i, j), self.n)
    }

    /// Product of two coordinate vectors in the algebra this tensor
    /// describes.
    pub fn mul_vec(&self, a: &[Cyclo], b: &[Cyclo]) -> KVec {
        let mut out = kvec_zero(self.n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.row(i, j) {
                    out[*k] += &(&xy * c);
                }
            }
        }
        out
    }
}
