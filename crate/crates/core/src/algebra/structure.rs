//! Finite-dimensional algebras, coalgebras, and Hopf algebras as exact
//! structure constants over `K`.

use crate::exact::{
    kvec_unit, kvec_zero, sparse_from_dense, Cyclo, KVec, Mat, SparseVec, Tensor3,
};

/// A unital associative algebra given by its multiplication tensor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraData {
    pub dim: usize,
    pub unit: KVec,
    pub mult: Tensor3,
}

impl AlgebraData {
    pub fn mul(&self, a: &[Cyclo], b: &[Cyclo]) -> KVec {
        self.mult.mul_vec(a, b)
    }

    /// Product of a list of vectors, left to right.
    pub fn product(&self, factors: &[&[Cyclo]]) -> KVec {
        let mut acc = self.unit.clone();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow_vec(&self, a: &[Cyclo], e: u32) -> KVec {
        let mut acc = self.unit.clone();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrix of left multiplication by `a`.
    pub fn left_mult_matrix(&self, a: &[Cyclo]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(a, &kvec_unit(self.dim, j));
            for i in 0..self.dim {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }

    /// Matrix of right multiplication by `a`.
    pub fn right_mult_matrix(&self, a: &[Cyclo]) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(&kvec_unit(self.dim, j), a);
            for i in 0..self.dim {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }
}

/// Sparse comultiplication row: `(left index, right index, coefficient)`
/// triples, sorted, no zeros.
pub type ComultRow = Vec<(usize, usize, Cyclo)>;

/// A coalgebra given by a sparse comultiplication table and the counit
/// functional.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoalgebraData {
    pub dim: usize,
    pub counit: KVec,
    pub comult: Vec<ComultRow>,
}

impl CoalgebraData {
    pub fn normalize(&mut self) {
        for row in &mut self.comult {
            row.retain(|(_, _, c)| !c.is_zero());
            row.sort_by_key(|(l, r, _)| (*l, *r));
        }
    }

    /// Comultiplication of an arbitrary vector, as sorted sparse triples.
    pub fn comult_vec(&self, v: &[Cyclo]) -> ComultRow {
        let mut acc: std::collections::BTreeMap<(usize, usize), Cyclo> =
            std::collections::BTreeMap::new();
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (l, r, c) in &self.comult[i] {
                let e = acc.entry((*l, *r)).or_insert_with(Cyclo::zero);
                *e += &(x * c);
            }
        }
        acc.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((l, r), c)| (l, r, c))
            .collect()
    }

    /// Comultiplication of `v` as a dense vector in `K^(n*n)` with the
    /// row-major pair index `l * dim + r`.
    pub fn comult_dense(&self, v: &[Cyclo]) -> KVec {
        let mut out = kvec_zero(self.dim * self.dim);
        for (l, r, c) in self.comult_vec(v) {
            out[l * self.dim + r] += &c;
        }
        out
    }

    pub fn counit_of(&self, v: &[Cyclo]) -> Cyclo {
        let mut acc = Cyclo::zero();
        for (e, x) in self.counit.iter().zip(v) {
            if !e.is_zero() && !x.is_zero() {
                acc += &(e * x);
            }
        }
        acc
    }

    /// Exact group-likeness test: `Delta(v) = v (x) v` and `eps(v) = 1`.
    pub fn is_group_like(&self, v: &[Cyclo]) -> bool {
        if !self.counit_of(v).is_one() {
            return false;
        }
        let mut expected: ComultRow = Vec::new();
        for (l, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, y) in v.iter().enumerate() {
                if !y.is_zero() {
                    expected.push((l, r, x * y));
                }
            }
        }
        expected.sort_by_key(|(l, r, _)| (*l, *r));
        self.comult_vec(v) == expected
    }

    /// Apply a linear map to both tensor legs of `Delta(v)`; returns the
    /// dense pair-indexed vector of `(f (x) f)(Delta v)` in the target.
    pub fn comult_through(&self, f: &Mat, v: &[Cyclo]) -> KVec {
        let n = f.nrows();
        let mut out = kvec_zero(n * n);
        for (l, r, c) in self.comult_vec(v) {
            let fl = f.col(l);
            let fr = f.col(r);
            for (i, a) in fl.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let ca = &c * a;
                for (j, b) in fr.iter().enumerate() {
                    if !b.is_zero() {
                        out[i * n + j] += &(&ca * b);
                    }
                }
            }
        }
        out
    }
}

/// A Hopf algebra: compatible algebra and coalgebra plus the antipode.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HopfData {
    pub algebra: AlgebraData,
    pub coalgebra: CoalgebraData,
    pub antipode: Mat,
}

impl HopfData {
    pub fn dim(&self) -> usize {
        self.algebra.dim
    }
}

/// Build the group algebra `K[G]` of a finite group from its
/// multiplication table (`table[i][j]` = index of the product, index 0 is
/// the identity).
pub fn group_algebra(table: &[Vec<usize>]) -> HopfData {
    let n = table.len();
    let mut mult = Tensor3::new(n);
    for i in 0..n {
        for j in 0..n {
            mult.set_row(i, j, vec![(table[i][j], Cyclo::one())]);
        }
    }
    let algebra = AlgebraData {
        dim: n,
        unit: kvec_unit(n, 0),
        mult,
    };
    let comult = (0..n).map(|i| vec![(i, i, Cyclo::one())]).collect();
    let coalgebra = CoalgebraData {
        dim: n,
        counit: vec![Cyclo::one(); n],
        comult,
    };
    // antipode sends each group element to its inverse
    let mut antipode = Mat::zero(n, n);
    for i in 0..n {
        let inv = (0..n)
            .find(|&j| table[i][j] == 0)
            .expect("group table has inverses");
        antipode[(inv, i)] = Cyclo::one();
    }
    HopfData {
        algebra,
        coalgebra,
        antipode,
    }
}

/// Dense tensor-square of a sparse comultiplication row (row-major pair
/// index), mostly for tests against `kron`.
pub fn comult_row_dense(row: &ComultRow, dim: usize) -> KVec {
    let mut out = kvec_zero(dim * dim);
    for (l, r, c) in row {
        out[l * dim + r] += c;
    }
    out
}

/// Sparse row of a dense vector (re-export convenience).
pub fn dense_to_sparse(v: &[Cyclo]) -> SparseVec {
    sparse_from_dense(v)
}
