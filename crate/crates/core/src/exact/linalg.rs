//! Dense exact linear algebra over `K`: vectors, matrices, reduced row
//! echelon form, kernels, and Kronecker products.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::cyclo::Cyclo;
use crate::ExactError;

/// A coordinate vector over `K`.
pub type KVec = Vec<Cyclo>;

pub fn kvec_zero(n: usize) -> KVec {
    vec![Cyclo::zero(); n]
}

pub fn kvec_unit(n: usize, i: usize) -> KVec {
    let mut v = kvec_zero(n);
    v[i] = Cyclo::one();
    v
}

pub fn kvec_is_zero(v: &[Cyclo]) -> bool {
    v.iter().all(|c| c.is_zero())
}

pub fn kvec_add(a: &[Cyclo], b: &[Cyclo]) -> KVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn kvec_sub(a: &[Cyclo], b: &[Cyclo]) -> KVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn kvec_scale(a: &[Cyclo], c: &Cyclo) -> KVec {
    a.iter().map(|x| x * c).collect()
}

pub fn kvec_axpy(acc: &mut [Cyclo], c: &Cyclo, v: &[Cyclo]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        *a += &(c * x);
    }
}

/// Deterministic total order on vectors, coefficient-wise over the
/// rational coordinates. Used to sort enumerated element lists so output
/// never depends on search schedule.
pub fn kvec_cmp(a: &[Cyclo], b: &[Cyclo]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        for i in 0..4 {
            match x.coeff(i).cmp(y.coeff(i)) {
                std::cmp::Ordering::Equal => {}
                o => return o,
            }
        }
    }
    a.len().cmp(&b.len())
}

/// A rectangular matrix over `K`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Cyclo>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Cyclo::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Cyclo::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<KVec>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Cyclo] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Cyclo] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[Cyclo]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn col(&self, j: usize) -> KVec {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Cyclo]) -> KVec {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        let mut out = kvec_zero(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let mut acc = Cyclo::zero();
            for (a, x) in row.iter().zip(v) {
                if !a.is_zero() && !x.is_zero() {
                    acc += &(a * x);
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn matmul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Mat::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let p = a * b;
                        out[(i, j)] += &p;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: &Cyclo) -> Mat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = &*a * c;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form with exact pivots; returns the reduced
    /// matrix and the pivot column indices. Pivot choice is the first
    /// nonzero entry in column order, so the result is deterministic.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            let row: KVec = kvec_scale(m.row(r), &inv);
            m.row_mut(r).clone_from_slice(&row);
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    let sub: KVec = m
                        .row(i)
                        .iter()
                        .zip(m.row(r))
                        .map(|(a, b)| a - &(&factor * b))
                        .collect();
                    m.row_mut(i).clone_from_slice(&sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right null space `{v : Mv = 0}`, as rref
    /// rows. Rows are produced in increasing order of their free column.
    pub fn kernel_rows(&self) -> Vec<KVec> {
        let (r, pivots) = self.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = kvec_zero(self.cols);
            v[free] = Cyclo::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(row, free)];
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `M x = b`; `None` when inconsistent. When the solution is not
    /// unique the free coordinates are set to zero (deterministic choice).
    pub fn solve(&self, b: &[Cyclo]) -> Option<KVec> {
        assert_eq!(self.rows, b.len());
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = kvec_zero(self.cols);
        for (row, &c) in pivots.iter().enumerate() {
            x[c] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Mat, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::Shape {
                what: "inverse of non-square matrix".into(),
            });
        }
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Cyclo::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(ExactError::Singular);
        }
        let mut out = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(out)
    }

    /// Kronecker product with the row-major index convention
    /// `(i_a * rows_b + i_b, j_a * cols_b + j_b)`.
    pub fn kron(&self, b: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows * b.rows, self.cols * b.cols);
        for ia in 0..self.rows {
            for ja in 0..self.cols {
                let x = &self[(ia, ja)];
                if x.is_zero() {
                    continue;
                }
                for ib in 0..b.rows {
                    for jb in 0..b.cols {
                        let y = &b[(ib, jb)];
                        if !y.is_zero() {
                            out[(ia * b.rows + ib, ja * b.cols + jb)] = x * y;
                        }
                    }
                }
            }
        }
        out
    }

    /// Apply `a (x) b` to a vector of length `a.cols * b.cols` without
    /// materializing the product matrix.
    pub fn kron_apply(a: &Mat, b: &Mat, v: &[Cyclo]) -> KVec {
        assert_eq!(v.len(), a.cols * b.cols);
        let mut out = kvec_zero(a.rows * b.rows);
        for (idx, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (ja, jb) = (idx / b.cols, idx % b.cols);
            for ia in 0..a.rows {
                let p = &a[(ia, ja)];
                if p.is_zero() {
                    continue;
                }
                let px = p * x;
                for ib in 0..b.rows {
                    let q = &b[(ib, jb)];
                    if !q.is_zero() {
                        out[ia * b.rows + ib] += &(&px * q);
                    }
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Mat {
    type Output = Cyclo;
    fn index(&self, (i, j): (usize, usize)) -> &Cyclo {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Cyclo {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{}, ", self[(i, j)])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> Cyclo {
        Cyclo::from_int(n)
    }

    #[test]
    fn rref_identity() {
        let id = Mat::identity(3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);
    }

    #[test]
    fn rref_rank_one() {
        let m = Mat::from_rows(vec![vec![c(1), c(1)], vec![c(1), c(1)]]);
        let (r, p) = m.rref();
        assert_eq!(r.row(0), &[c(1), c(1)][..]);
        assert!(kvec_is_zero(r.row(1)));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        let z = Mat::zero(3, 3);
        assert_eq!(z.kernel_rows().len(), 3);
        let id = Mat::identity(4);
        assert!(id.kernel_rows().is_empty());
    }

    #[test]
    fn kron_identities() {
        let id2 = Mat::identity(2);
        let id3 = Mat::identity(3);
        assert_eq!(id2.kron(&id3), Mat::identity(6));
        let neg = Mat::identity(1).scale(&-&Cyclo::one());
        assert_eq!(neg.kron(&neg), Mat::identity(1));
    }

    #[test]
    fn kron_apply_matches_kron() {
        let a = Mat::from_rows(vec![vec![c(1), c(2)], vec![c(0), c(3)]]);
        let b = Mat::from_rows(vec![vec![c(2), c(0)], vec![c(1), c(1)]]);
        let v: KVec = (1..=4).map(c).collect();
        assert_eq!(Mat::kron_apply(&a, &b, &v), a.kron(&b).apply(&v));
    }

    #[test]
    fn solve_and_inverse() {
        let m = Mat::from_rows(vec![vec![c(2), c(1)], vec![c(1), c(1)]]);
        let x = m.solve(&[c(3), c(2)]).unwrap();
        assert_eq!(x, vec![c(1), c(1)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), Mat::identity(2));
    }
}
