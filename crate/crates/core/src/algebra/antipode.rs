//! Antipode computation. The antipode is the convolution inverse of the
//! identity map, so instead of solving the full `n^2 x n^2` system we find
//! the first linear dependence among the convolution powers of the
//! identity and read the inverse off that relation; the subalgebra they
//! generate is tiny for the algebras at hand.

use super::structure::{AlgebraData, CoalgebraData};
use crate::exact::{Cyclo, KVec, Mat};
use crate::AlgebraError;

/// Convolution product of two endomorphisms given as matrices:
/// `(f * g)(b) = m((f (x) g)(Delta b))`.
pub fn convolve(alg: &AlgebraData, coa: &CoalgebraData, f: &Mat, g: &Mat) -> Mat {
    let n = alg.dim;
    let mut out = Mat::zero(n, n);
    for b in 0..n {
        let mut col: KVec = vec![Cyclo::zero(); n];
        for (l, r, c) in &coa.comult[b] {
            let term = alg.mul(&f.col(*l), &g.col(*r));
            for (t, acc) in term.iter().zip(col.iter_mut()) {
                *acc += &(c * t);
            }
        }
        for i in 0..n {
            out[(i, b)] = col[i].clone();
        }
    }
    out
}

/// The convolution unit `eta . eps` as a matrix.
pub fn convolution_unit(alg: &AlgebraData, coa: &CoalgebraData) -> Mat {
    let n = alg.dim;
    let mut out = Mat::zero(n, n);
    for b in 0..n {
        for i in 0..n {
            out[(i, b)] = &alg.unit[i] * &coa.counit[b];
        }
    }
    out
}

fn flatten(m: &Mat) -> KVec {
    let n = m.nrows();
    let mut v = Vec::with_capacity(n * n);
    for i in 0..n {
        v.extend_from_slice(m.row(i));
    }
    v
}

/// Solve for the antipode of a bialgebra. Builds convolution powers of
/// the identity until they become linearly dependent; the minimal
/// relation has a nonzero constant term exactly when the identity is
/// convolution invertible, and then yields the inverse.
pub fn compute_antipode(alg: &AlgebraData, coa: &CoalgebraData) -> Result<Mat, AlgebraError> {
    let n = alg.dim;
    let unit = convolution_unit(alg, coa);
    let id = Mat::identity(n);

    let mut powers: Vec<Mat> = vec![unit.clone()];
    // (eliminated flattened row, its coefficients over the powers)
    let mut reduced: Vec<(KVec, KVec)> = Vec::new();

    loop {
        let k = powers.len() - 1;
        let mut row = flatten(&powers[k]);
        let mut combo: KVec = vec![Cyclo::zero(); k + 1];
        combo[k] = Cyclo::one();
        for (r, rc) in reduced.iter_mut() {
            while rc.len() < k + 1 {
                rc.push(Cyclo::zero());
            }
            let lead = r
                .iter()
                .position(|c| !c.is_zero())
                .expect("reduced rows are nonzero");
            let factor = row[lead].clone();
            if factor.is_zero() {
                continue;
            }
            for (a, b) in row.iter_mut().zip(r.iter()) {
                *a -= &(&factor * b);
            }
            for (a, b) in combo.iter_mut().zip(rc.iter()) {
                *a -= &(&factor * b);
            }
        }
        if row.iter().all(|c| c.is_zero()) {
            // dependence: sum_j combo[j] * powers[j] = 0 with combo[k] != 0
            let c0 = combo[0].clone();
            if c0.is_zero() {
                return Err(AlgebraError::NoAntipode);
            }
            // id * s = unit with s = -(1/c0) * sum_{j>=1} combo[j] * powers[j-1]
            let neg_inv = -&c0.inv()?;
            let mut s = Mat::zero(n, n);
            for j in 1..combo.len() {
                if !combo[j].is_zero() {
                    s = s.add(&powers[j - 1].scale(&combo[j]));
                }
            }
            return Ok(s.scale(&neg_inv));
        }
        let lead = row.iter().position(|c| !c.is_zero()).unwrap();
        let inv = row[lead].inv()?;
        let row: KVec = row.iter().map(|c| c * &inv).collect();
        let combo: KVec = combo.iter().map(|c| c * &inv).collect();
        reduced.push((row, combo));
        if powers.len() > n * n + 1 {
            return Err(AlgebraError::NoAntipode);
        }
        let next = convolve(alg, coa, &id, powers.last().unwrap());
        powers.push(next);
    }
}

/// Least `k <= bound` with `x^k = 1`.
pub fn element_order(alg: &AlgebraData, x: &[Cyclo], bound: u32) -> Result<u32, AlgebraError> {
    let mut acc = x.to_vec();
    for k in 1..=bound {
        if acc == alg.unit {
            return Ok(k);
        }
        acc = alg.mul(&acc, x);
    }
    Err(AlgebraError::OrderExceedsBound { bound })
}
